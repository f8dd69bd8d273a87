use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::FamilyRecord;
use crate::classify::{BaseLocusKind, Rationality, ToricLabel};
use crate::cones::FibreLike;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Json,
    Csv,
    Markdown,
}

impl FromStr for ExportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(Self::Json),
            "csv" => Ok(Self::Csv),
            "markdown" | "md" => Ok(Self::Markdown),
            other => Err(Error::UnsupportedFormat(other.to_string())),
        }
    }
}

/// Flat, stable view of a record used by the JSON and CSV writers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExportRow {
    pub z_id: u8,
    pub a: i64,
    pub d: i64,
    pub label: String,
    #[serde(rename = "K4")]
    pub k4: i64,
    #[serde(rename = "K2c2")]
    pub k2c2: i64,
    #[serde(rename = "h0_antiK")]
    pub h0_anti_k: i64,
    pub h12: i64,
    pub h13: i64,
    pub h22: i64,
    pub base_locus: BaseLocusKind,
    pub rationality: Rationality,
    pub toric_label: Option<ToricLabel>,
    pub fibre_like: FibreLike,
    #[serde(rename = "chi_T")]
    pub chi_t: i64,
    /// Exact value when `h0_T_is_exact`, otherwise an upper bound.
    #[serde(rename = "h0_T")]
    pub h0_t: i64,
    #[serde(rename = "h1_T")]
    pub h1_t: i64,
    #[serde(rename = "h0_T_is_exact")]
    pub h0_t_is_exact: bool,
    #[serde(rename = "h1_T_is_exact")]
    pub h1_t_is_exact: bool,
}

impl From<&FamilyRecord> for ExportRow {
    fn from(r: &FamilyRecord) -> Self {
        let t = &r.tangent;
        Self {
            z_id: r.params.z_id,
            a: r.params.a,
            d: r.params.d,
            label: r.label.clone(),
            k4: r.k4,
            k2c2: r.k2c2,
            h0_anti_k: r.h0_anti_k,
            h12: r.hodge.h12,
            h13: r.hodge.h13,
            h22: r.hodge.h22,
            base_locus: r.base_locus.kind,
            rationality: r.rationality,
            toric_label: r.toric_label,
            fibre_like: r.fibre_like,
            chi_t: t.chi,
            h0_t: t.h0_exact.unwrap_or(t.h0_upper),
            h1_t: t.h1_exact.unwrap_or(t.h1_upper),
            h0_t_is_exact: t.h0_exact.is_some(),
            h1_t_is_exact: t.h1_exact.is_some(),
        }
    }
}

/// Serialises `records` in the requested format.
pub fn export(records: &[FamilyRecord], format: ExportFormat) -> Result<Vec<u8>> {
    if records.is_empty() {
        return Err(Error::Domain("nothing to export".into()));
    }
    let rows: Vec<ExportRow> = records.iter().map(ExportRow::from).collect();
    match format {
        ExportFormat::Json => {
            let mut out = serde_json::to_vec_pretty(&rows).map_err(|e| Error::Export(e.to_string()))?;
            out.push(b'\n');
            Ok(out)
        }
        ExportFormat::Csv => {
            let mut w = csv::WriterBuilder::new()
                .terminator(csv::Terminator::Any(b'\n'))
                .from_writer(Vec::new());
            for row in &rows {
                w.serialize(row).map_err(|e| Error::Export(e.to_string()))?;
            }
            w.into_inner().map_err(|e| Error::Export(e.to_string()))
        }
        ExportFormat::Markdown => Ok(markdown(records).into_bytes()),
    }
}

fn markdown(records: &[FamilyRecord]) -> String {
    let mut s = String::new();
    s.push_str("| X^i_{a,d} | K_X^4 | K_X^2·c_2(X) | h^0(-K_X) | h^{1,2} | h^{1,3} | h^{2,2} | Bs(\\|-K_X\\|) | rationality |\n");
    s.push_str("|---|---|---|---|---|---|---|---|---|\n");
    for r in records {
        let bs = match r.base_locus.kind {
            BaseLocusKind::Empty => "∅".to_string(),
            other => other.to_string(),
        };
        let _ = writeln!(
            s,
            "| {} | {} | {} | {} | {} | {} | {} | {} | {} |",
            r.label, r.k4, r.k2c2, r.h0_anti_k, r.hodge.h12, r.hodge.h13, r.hodge.h22, bs, r.rationality
        );
    }
    s
}
