//! Qualitative data per family (base locus of `|−K_X|` and rationality)
//! plus the tangent-sheaf bounds derived from `h⁰(O_Z(d))`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::catalog::{BaseLocus, FamilyParams, FanoThreefold};
use crate::error::{Error, Result};
use crate::rational::{frac, q, to_integer};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BaseLocusKind {
    Empty,
    OnePoint,
    TwoPoints,
}

impl BaseLocusKind {
    /// Point labels as used in the reference table.
    pub fn point_labels(self) -> &'static [&'static str] {
        match self {
            BaseLocusKind::Empty => &[],
            BaseLocusKind::OnePoint => &["Q0"],
            BaseLocusKind::TwoPoints => &["Q1", "Q2"],
        }
    }
}

impl fmt::Display for BaseLocusKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels = self.point_labels();
        if labels.is_empty() {
            f.write_str("empty")
        } else {
            write!(f, "{{{}}}", labels.join(", "))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BaseLocusResult {
    pub kind: BaseLocusKind,
    pub general_member_smooth: bool,
}

/// `|−K_X|` is free whenever `|H|` is. The two exceptions live over `Z₁`,
/// whose `|H|` has one simple base point.
pub fn base_locus(params: &FamilyParams) -> BaseLocusResult {
    let z = params.threefold();
    let kind = match (z.base_locus_h, params.a, params.d) {
        (BaseLocus::Empty, _, _) => BaseLocusKind::Empty,
        (BaseLocus::OneSimplePoint, 0, 1) => BaseLocusKind::OnePoint,
        (BaseLocus::OneSimplePoint, 1, 2) => BaseLocusKind::TwoPoints,
        (BaseLocus::OneSimplePoint, _, _) => BaseLocusKind::Empty,
    };
    BaseLocusResult {
        kind,
        general_member_smooth: true,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Rationality {
    Rational,
    VeryGeneralNotRational,
    Unknown,
    /// Toric, hence also rational.
    Toric,
}

impl Rationality {
    pub fn is_rational(self) -> bool {
        matches!(self, Rationality::Rational | Rationality::Toric)
    }
}

impl fmt::Display for Rationality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rationality::Rational => "rational",
            Rationality::VeryGeneralNotRational => "the very general is not rational",
            Rationality::Unknown => "?",
            Rationality::Toric => "toric",
        })
    }
}

/// Labels in Batyrev's list of toric Fano 4-folds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ToricLabel {
    E1,
    E2,
    E3,
}

pub fn toric_label(params: &FamilyParams) -> Option<ToricLabel> {
    match (params.z_id, params.a, params.d) {
        (7, 0, 1) => Some(ToricLabel::E3),
        (7, 2, 1) => Some(ToricLabel::E2),
        (7, 3, 1) => Some(ToricLabel::E1),
        _ => None,
    }
}

/// `X` is birational to `Z × P¹`, so rationality follows `Z`.
pub fn rationality(params: &FamilyParams) -> Rationality {
    if toric_label(params).is_some() {
        return Rationality::Toric;
    }
    match params.z_id {
        1 | 2 => Rationality::VeryGeneralNotRational,
        3 => Rationality::Unknown,
        _ => Rationality::Rational,
    }
}

/// `h⁰(O_Z(d)) = 1 + 2d/i_Z + dδ/12 · (i_Z² + 3d i_Z + 2d²)`.
pub fn h0_line_bundle(z: &FanoThreefold, d: i64) -> Result<i64> {
    if d < 1 {
        return Err(Error::Domain(format!("d must be positive, got {d}")));
    }
    let (i, delta) = (z.index, z.degree);
    let value = q(1) + frac(2 * d, i) + frac(d * delta, 12) * q(i * i + 3 * d * i + 2 * d * d);
    to_integer(value, &format!("h⁰(O_Z{}({d}))", z.id))
}

/// Everything `χ(T_X)` depends on besides `b₂(X) = 3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TangentInputs {
    pub h0_anti_k: i64,
    pub k4: i64,
    pub h12: i64,
    pub h13: i64,
    pub h22: i64,
}

pub const B2: i64 = 3;

/// Hirzebruch–Riemann–Roch for `T_X` on a Fano 4-fold.
pub fn chi_tangent(inputs: &TangentInputs) -> i64 {
    27 - 5 * inputs.h0_anti_k + inputs.k4 + 3 * B2 - inputs.h12 - inputs.h22 + 3 * inputs.h13
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TangentBounds {
    /// `χ(T_X) = h⁰ − h¹`.
    pub chi: i64,
    /// `h¹(T_Z) + h⁰(O_Z(d)) − 1`, the dimension bound on the Kuranishi base.
    pub kuranishi_bound: i64,
    /// Best known upper bound on `h¹(T_X)`; equal to the exact value when known.
    pub h1_upper: i64,
    pub h1_exact: Option<i64>,
    pub h0_upper: i64,
    pub h0_exact: Option<i64>,
}

impl TangentBounds {
    pub fn is_exact(&self) -> bool {
        self.h1_exact.is_some()
    }
}

/// Upper bounds, and exact values where they are known.
///
/// Over `Z₁..Z₄` the Kuranishi bound is attained. Over `P³` with `d ≤ 2`
/// the 4-fold is rigid. Elsewhere only the inequality is known.
pub fn tangent_bounds(params: &FamilyParams, chi: i64) -> Result<TangentBounds> {
    let z = params.threefold();
    let kuranishi_bound = z.h1_tangent + h0_line_bundle(z, params.d)? - 1;
    let h1_exact = match (params.z_id, params.d) {
        (1..=4, _) => Some(kuranishi_bound),
        (7, 1 | 2) => Some(0),
        _ => None,
    };
    let h1_upper = h1_exact.unwrap_or(kuranishi_bound);
    let h0_upper = chi + h1_upper;
    let h0_exact = h1_exact.map(|h1| chi + h1);

    let bounds = TangentBounds {
        chi,
        kuranishi_bound,
        h1_upper,
        h1_exact,
        h0_upper,
        h0_exact,
    };
    if kuranishi_bound < 0 || h1_upper < 0 || h0_upper < 0 || h1_upper > kuranishi_bound {
        return Err(Error::Integrity(format!("{params}: impossible tangent bounds {bounds:?}")));
    }
    Ok(bounds)
}
