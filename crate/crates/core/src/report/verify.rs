use std::fmt;

use serde::Serialize;

use super::golden::{Bound, GoldenTables};
use super::{build_record_with, BuildOptions, FamilyRecord};
use crate::catalog::{catalog, enumerate_families, BaseLocus, Rationality3};
use crate::error::Error;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub family: String,
    pub field: String,
    pub expected: String,
    pub computed: String,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} expected {} computed {}",
            self.family, self.field, self.expected, self.computed
        )
    }
}

#[derive(Debug, Clone, Default)]
pub struct VerificationReport {
    /// Families whose every field matched.
    pub passed: usize,
    pub failed: usize,
    pub mismatches: Vec<Mismatch>,
    /// Families whose record could not be built at all.
    pub errors: Vec<(String, Error)>,
}

impl VerificationReport {
    pub fn all_pass(&self) -> bool {
        self.mismatches.is_empty() && self.errors.is_empty()
    }

    fn push(&mut self, family: &str, field: &str, expected: impl ToString, computed: impl ToString) {
        self.mismatches.push(Mismatch {
            family: family.to_string(),
            field: field.to_string(),
            expected: expected.to_string(),
            computed: computed.to_string(),
        });
    }

    fn check<T: PartialEq + ToString>(&mut self, family: &str, field: &str, expected: T, computed: T) {
        if expected != computed {
            self.push(family, field, expected, computed);
        }
    }
}

/// Builds all 28 records and diffs them against the reference tables.
pub fn verify_all() -> VerificationReport {
    verify_all_with(&GoldenTables::reference(), &BuildOptions::default())
}

pub fn verify_all_with(golden: &GoldenTables, opts: &BuildOptions) -> VerificationReport {
    let mut records = Vec::new();
    let mut errors = Vec::new();
    for p in enumerate_families() {
        match build_record_with(&p, opts) {
            Ok(r) => records.push(r),
            Err(e) => errors.push((p.label(), e)),
        }
    }
    let mut report = verify_records(&records, golden);
    report.failed += errors.len();
    report.errors = errors;
    report
}

fn tangent_entry(exact: Option<i64>, upper: i64) -> Bound {
    exact.map_or(Bound::AtMost(upper), Bound::Exact)
}

/// Diffs already-built records against `golden`.
pub fn verify_records(records: &[FamilyRecord], golden: &GoldenTables) -> VerificationReport {
    let mut report = VerificationReport::default();
    check_threefolds(&mut report, golden);

    let expected_labels: Vec<String> = enumerate_families().iter().map(|p| p.label()).collect();
    let t2_labels: Vec<String> = golden.invariants.iter().map(|r| r.label.to_string()).collect();
    let t3_labels: Vec<String> = golden.tangents.iter().map(|r| r.label.to_string()).collect();
    if t2_labels != expected_labels {
        report.push("invariants", "labels", t2_labels.join(" "), expected_labels.join(" "));
    }
    if t3_labels != t2_labels {
        report.push("tangents", "labels", t3_labels.join(" "), t2_labels.join(" "));
    }

    for rec in records {
        let before = report.mismatches.len();
        let fam = rec.label.as_str();

        match golden.invariants.iter().find(|r| r.label == fam) {
            None => report.push(fam, "invariants row", "present", "missing"),
            Some(row) => {
                report.check(fam, "K4", row.k4, rec.k4);
                report.check(fam, "K2c2", row.k2c2, rec.k2c2);
                report.check(fam, "h0_antiK", row.h0_anti_k, rec.h0_anti_k);
                report.check(fam, "h12", row.h12, rec.hodge.h12);
                report.check(fam, "h13", row.h13, rec.hodge.h13);
                report.check(fam, "h22", row.h22, rec.hodge.h22);
                report.check(fam, "base_locus", row.base_locus.to_string(), rec.base_locus.kind.to_string());
                report.check(fam, "rationality", row.rationality.to_string(), rec.rationality.to_string());
            }
        }

        match golden.tangents.iter().find(|r| r.label == fam) {
            None => report.push(fam, "tangents row", "present", "missing"),
            Some(row) => {
                let t = &rec.tangent;
                report.check(fam, "chi_T", row.chi, t.chi);
                report.check(fam, "h0_T", row.h0.to_string(), tangent_entry(t.h0_exact, t.h0_upper).to_string());
                report.check(fam, "h1_T", row.h1.to_string(), tangent_entry(t.h1_exact, t.h1_upper).to_string());
            }
        }

        if report.mismatches.len() == before {
            report.passed += 1;
        } else {
            report.failed += 1;
        }
    }
    report
}

fn check_threefolds(report: &mut VerificationReport, golden: &GoldenTables) {
    if golden.threefolds.len() != catalog().len() {
        report.push("threefolds", "rows", golden.threefolds.len(), catalog().len());
    }
    for (row, z) in golden.threefolds.iter().zip(catalog()) {
        let fam = format!("Z{}", z.id);
        report.check(&fam, "id", row.id, z.id);
        report.check(&fam, "index", row.index, z.index);
        report.check(&fam, "degree", row.degree, z.degree);
        report.check(&fam, "-K^3", row.minus_k3, z.anticanonical_degree());
        report.check(&fam, "h12", row.h12, z.h12);
        report.check(&fam, "h0_T", row.h0_tangent, z.h0_tangent);
        report.check(&fam, "h1_T", row.h1_tangent, z.h1_tangent);
        report.check(&fam, "Bs|H|", row.base_point_of_h, z.base_locus_h == BaseLocus::OneSimplePoint);
        report.check(&fam, "rational", row.rational, z.rational == Rationality3::Rational);
    }
}
