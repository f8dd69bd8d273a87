//! Per-family records plus their verification and export.

mod export;
pub mod golden;
mod verify;

use num_integer::Integer;
use serde::Serialize;

use crate::catalog::{enumerate_families, FamilyParams};
use crate::classify::{
    self, BaseLocusResult, Rationality, TangentBounds, TangentInputs, ToricLabel,
};
use crate::cones::{self, FibreLike};
use crate::error::{Error, Result};
use crate::hodge::{self, FourfoldHodge};
use crate::intersect::{self, K4Term};
use crate::rational::{q, to_integer};

pub use export::{export, ExportFormat, ExportRow};
pub use golden::{Bound, GoldenTables};
pub use verify::{verify_all, verify_all_with, verify_records, Mismatch, VerificationReport};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyRecord {
    pub params: FamilyParams,
    pub label: String,
    pub k4: i64,
    pub k2c2: i64,
    pub h0_anti_k: i64,
    pub hodge: FourfoldHodge,
    pub base_locus: BaseLocusResult,
    pub rationality: Rationality,
    pub toric_label: Option<ToricLabel>,
    pub fibre_like: FibreLike,
    pub tangent: TangentBounds,
    pub ne_generator_count: usize,
    pub nef_ray_count: usize,
    /// gcd of `−K_X · C` over the generators of the cone of curves.
    pub fano_index: i64,
}

/// Knobs for fault injection. The default builds the genuine record.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BuildOptions {
    /// Report `K_X⁴` from the closed form with this summand left out.
    pub k4_omit: Option<K4Term>,
}

pub fn build_record(params: &FamilyParams) -> Result<FamilyRecord> {
    build_record_with(params, &BuildOptions::default())
}

pub fn build_record_with(params: &FamilyParams, opts: &BuildOptions) -> Result<FamilyRecord> {
    let label = params.label();
    assemble(params, opts).map_err(|e| e.in_family(label))
}

fn assemble(params: &FamilyParams, opts: &BuildOptions) -> Result<FamilyRecord> {
    let params = FamilyParams::new(i64::from(params.z_id), params.a, params.d)?;
    let z = params.threefold();

    let inv = intersect::fano4_invariants(&params)?;
    let hodge = hodge::fourfold_hodge(z, params.d)?;

    let chi = classify::chi_tangent(&TangentInputs {
        h0_anti_k: inv.h0_anti_k,
        k4: inv.k4,
        h12: hodge.h12,
        h13: hodge.h13,
        h22: hodge.h22,
    });
    let tangent = classify::tangent_bounds(&params, chi)?;

    let anti_k = cones::anticanonical(&params)?;
    let ne = cones::ne_generator_kinds(&params);
    let nef = cones::nef_rays(&params);
    let mut fano_index = 0i64;
    for &c in &ne {
        let value = to_integer(cones::pair_generator(&anti_k, c), "−K·C")?;
        if value < 1 {
            return Err(Error::Consistency(format!("−K·{c} = {value} is not positive")));
        }
        fano_index = fano_index.gcd(&value);
    }
    if cones::pair_generator(&anti_k, cones::CurveGenerator::F) != q(1) {
        return Err(Error::Consistency("−K·F ≠ 1".into()));
    }
    if (nef.len() == 4) != (ne.len() == 4) {
        return Err(Error::Consistency(format!(
            "{} nef rays against {} curve generators",
            nef.len(),
            ne.len()
        )));
    }

    let k4 = match opts.k4_omit {
        None => inv.k4,
        Some(term) => to_integer(
            intersect::k4_closed_form(z, params.a, params.d, Some(term)),
            "mutated K⁴",
        )?,
    };

    Ok(FamilyRecord {
        label: params.label(),
        params,
        k4,
        k2c2: inv.k2c2,
        h0_anti_k: inv.h0_anti_k,
        hodge,
        base_locus: classify::base_locus(&params),
        rationality: classify::rationality(&params),
        toric_label: classify::toric_label(&params),
        fibre_like: cones::is_fibre_like(&params),
        tangent,
        ne_generator_count: ne.len(),
        nef_ray_count: nef.len(),
        fano_index,
    })
}

/// Records for every family, in enumeration order.
pub fn build_all() -> Result<Vec<FamilyRecord>> {
    enumerate_families().iter().map(build_record).collect()
}
