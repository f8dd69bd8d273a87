//! Intersection numbers of the anticanonical class.
//!
//! Two generic formulas do the work: one for a `P¹`-bundle `P(E)` over a
//! 3-fold and one for the blow-up of a 4-fold along a smooth surface. Both
//! take raw intersection numbers. Specialised to `Y = P(O ⊕ O(a))` over `Z`
//! and `X = Bl_S Y` they are checked against the closed forms in `(i_Z, δ,
//! a, d)` and against Riemann–Roch for `−K`.

use serde::Serialize;

use crate::catalog::{FamilyParams, FanoThreefold};
use crate::error::{Error, Result};
use crate::hodge::SurfaceHodge;
use crate::rational::{frac, q, to_integer, Q};

/// Intersection data on a 3-fold `W` carrying a rank-2 bundle `E`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BundleInput {
    /// `K_W³`
    pub kw3: i64,
    /// `K_W · c₁(E)²`
    pub kw_c1_sq: i64,
    /// `K_W · c₂(E)`
    pub kw_c2e: i64,
    /// `K_W · c₂(W)`
    pub kw_c2w: i64,
    /// `χ(O_{P(E)})`
    pub chi_o: i64,
}

impl BundleInput {
    /// `E = O ⊕ O(a)` over a Fano 3-fold: `c₁(E) = aH`, `c₂(E) = 0`,
    /// `K·c₂ = −24`, `χ(O) = 1`.
    pub fn split(z: &FanoThreefold, a: i64) -> Self {
        Self {
            kw3: -z.index.pow(3) * z.degree,
            kw_c1_sq: -z.index * a * a * z.degree,
            kw_c2e: 0,
            kw_c2w: -24,
            chi_o: 1,
        }
    }
}

/// Intersection data of a smooth surface `V` in a 4-fold `W`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BlowupCentreData {
    /// `(K_W|_V)²`
    pub kwv_sq: i64,
    /// `K_V · K_W|_V`
    pub kv_kwv: i64,
    /// `K_V²`
    pub kv_sq: i64,
    /// `c₂(N_{V/W})`
    pub c2_normal: i64,
    /// `χ(O_V)`
    pub chi_ov: i64,
}

impl BlowupCentreData {
    /// The surface `S ≅ A` in `Y`, where `−K_Y|_S = (a + i_Z)H` and
    /// `−K_S = (d − i_Z)H`.
    pub fn surface_in_bundle(z: &FanoThreefold, a: i64, surface: &SurfaceHodge, d: i64) -> Self {
        let (i, delta) = (z.index, z.degree);
        Self {
            kwv_sq: d * delta * (a + i).pow(2),
            kv_kwv: -d * delta * (a + i) * (d - i),
            kv_sq: d * delta * (d - i).pow(2),
            c2_normal: a * d * d * delta,
            chi_ov: surface.chi_structure_sheaf(),
        }
    }

    /// A centre contributing nothing.
    pub fn empty() -> Self {
        Self {
            kwv_sq: 0,
            kv_kwv: 0,
            kv_sq: 0,
            c2_normal: 0,
            chi_ov: 0,
        }
    }
}

/// `K⁴`, `K²·c₂` and `χ(O(−K))` of a 4-fold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct AnticanonicalNumbers {
    pub k4: i64,
    pub k2c2: i64,
    pub chi_anti_k: i64,
}

impl AnticanonicalNumbers {
    fn from_rationals(k4: Q, k2c2: Q, chi: Q, what: &str) -> Result<Self> {
        Ok(Self {
            k4: to_integer(k4, &format!("{what} K⁴"))?,
            k2c2: to_integer(k2c2, &format!("{what} K²·c₂"))?,
            chi_anti_k: to_integer(chi, &format!("{what} χ(−K)"))?,
        })
    }
}

/// Anticanonical numbers of a `P¹`-bundle `P(E)` over a 3-fold `W`.
pub fn bundle_numbers(input: &BundleInput) -> Result<AnticanonicalNumbers> {
    let kw3 = q(input.kw3);
    let c1sq = q(input.kw_c1_sq);
    let c2e = q(input.kw_c2e);
    let c2w = q(input.kw_c2w);

    let k4 = q(-8) * c1sq + q(32) * c2e - q(8) * kw3;
    let k2c2 = q(-2) * c1sq + q(8) * c2e - q(2) * kw3 - q(4) * c2w;
    let chi = q(input.chi_o) + q(6) * c2e - frac(1, 2) * (q(3) * kw3 + q(3) * c1sq)
        - frac(1, 3) * c2w;
    AnticanonicalNumbers::from_rationals(k4, k2c2, chi, "P¹-bundle")
}

/// Anticanonical numbers of the blow-up of `base` along a smooth surface.
pub fn blowup_numbers(base: &AnticanonicalNumbers, centre: &BlowupCentreData) -> Result<AnticanonicalNumbers> {
    let kwv_sq = q(centre.kwv_sq);
    let kv_kwv = q(centre.kv_kwv);
    let kv_sq = q(centre.kv_sq);
    let c2n = q(centre.c2_normal);
    let chi_ov = q(centre.chi_ov);

    let k4 = q(base.k4) - q(3) * kwv_sq - q(2) * kv_kwv + c2n - kv_sq;
    let k2c2 = q(base.k2c2) - q(12) * chi_ov + q(2) * kv_sq - q(2) * kv_kwv - q(2) * c2n;
    let chi = q(base.chi_anti_k) - chi_ov - frac(1, 2) * (kwv_sq + kv_kwv);
    AnticanonicalNumbers::from_rationals(k4, k2c2, chi, "blow-up")
}

/// Riemann–Roch for `−K` on a 4-fold: `χ(O) + (2K⁴ + K²·c₂)/12`.
pub fn riemann_roch_chi(k4: i64, k2c2: i64, chi_o: i64) -> Q {
    q(chi_o) + frac(2 * k4 + k2c2, 12)
}

/// `8δ i_Z (a² + i_Z²)`, the quantity `K_Y⁴` that recurs in every closed form.
fn bundle_term(z: &FanoThreefold, a: i64) -> Q {
    q(8 * z.degree * z.index * (a * a + z.index * z.index))
}

/// Closed forms for `Y = P(O_Z ⊕ O_Z(a))`.
fn bundle_closed_form(z: &FanoThreefold, a: i64) -> Result<AnticanonicalNumbers> {
    let s = bundle_term(z, a) / q(8);
    AnticanonicalNumbers::from_rationals(
        q(8) * s,
        q(2) * s + q(96),
        q(9) + frac(3, 2) * s,
        "Y closed form",
    )
}

/// Anticanonical numbers of `Y`, closed form checked against the bundle formula.
pub fn p1_bundle_invariants(z: &FanoThreefold, a: i64) -> Result<AnticanonicalNumbers> {
    if a < 0 {
        return Err(Error::Domain(format!("a must be non-negative, got {a}")));
    }
    let closed = bundle_closed_form(z, a)?;
    let generic = bundle_numbers(&BundleInput::split(z, a))?;
    if closed != generic {
        return Err(Error::Consistency(format!(
            "Y over Z{} with a = {a}: closed form {closed:?}, bundle formula {generic:?}",
            z.id
        )));
    }
    Ok(closed)
}

/// The five summands of the closed form for `K_X⁴`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum K4Term {
    /// `8δ i_Z (a² + i_Z²)`
    Bundle,
    /// `−3dδ (a + i_Z)²`
    CentreRestriction,
    /// `+2dδ (a + i_Z)(d − i_Z)`
    Cross,
    /// `+ad²δ`
    NormalChern,
    /// `−dδ (d − i_Z)²`
    SurfaceCanonical,
}

impl K4Term {
    pub const ALL: [K4Term; 5] = [
        K4Term::Bundle,
        K4Term::CentreRestriction,
        K4Term::Cross,
        K4Term::NormalChern,
        K4Term::SurfaceCanonical,
    ];
}

/// Each summand of the closed form for `K_X⁴`, evaluated.
pub fn k4_terms(z: &FanoThreefold, a: i64, d: i64) -> [(K4Term, Q); 5] {
    let (i, delta) = (z.index, z.degree);
    [
        (K4Term::Bundle, bundle_term(z, a)),
        (K4Term::CentreRestriction, q(-3 * d * delta * (a + i).pow(2))),
        (K4Term::Cross, q(2 * d * delta * (a + i) * (d - i))),
        (K4Term::NormalChern, q(a * d * d * delta)),
        (K4Term::SurfaceCanonical, q(-d * delta * (d - i).pow(2))),
    ]
}

/// The closed form for `K_X⁴` with one summand optionally left out.
pub fn k4_closed_form(z: &FanoThreefold, a: i64, d: i64, omit: Option<K4Term>) -> Q {
    k4_terms(z, a, d)
        .into_iter()
        .filter(|(t, _)| Some(*t) != omit)
        .map(|(_, v)| v)
        .sum()
}

fn fourfold_closed_form(z: &FanoThreefold, a: i64, d: i64, h02: i64) -> Result<AnticanonicalNumbers> {
    let (i, delta) = (z.index, z.degree);
    let s = bundle_term(z, a) / q(8);
    let k4 = k4_closed_form(z, a, d, None);
    let k2c2 = q(84) + q(2) * s - q(12 * h02) + q(2 * d * delta * (d - i) * (a + d))
        - q(2 * a * d * d * delta);
    let chi = q(8) + frac(3, 2) * s - q(h02)
        - frac(1, 2) * q(d * delta * (a + i) * (a - d + 2 * i));
    AnticanonicalNumbers::from_rationals(k4, k2c2, chi, "X closed form")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct FourfoldInvariants {
    pub k4: i64,
    pub k2c2: i64,
    pub h0_anti_k: i64,
}

/// `K_X⁴`, `K_X²·c₂(X)` and `h⁰(−K_X)` for an admissible family.
///
/// Three routes are evaluated and must agree: the closed forms, the
/// blow-up formula applied to the bundle formula, and Riemann–Roch for
/// `−K_X` with `χ(O_X) = 1`. Since `X` is Fano, `h⁰(−K_X) = χ(−K_X)`.
pub fn fano4_invariants(params: &FamilyParams) -> Result<FourfoldInvariants> {
    FamilyParams::new(i64::from(params.z_id), params.a, params.d)?;
    let z = params.threefold();
    let (a, d) = (params.a, params.d);
    let surface = SurfaceHodge::of(z, d)?;

    let closed = fourfold_closed_form(z, a, d, surface.h02)?;
    let base = p1_bundle_invariants(z, a)?;
    let pipeline = blowup_numbers(&base, &BlowupCentreData::surface_in_bundle(z, a, &surface, d))?;
    if closed != pipeline {
        return Err(Error::Consistency(format!(
            "{params}: closed form {closed:?}, blow-up of bundle {pipeline:?}"
        )));
    }

    let rr = riemann_roch_chi(closed.k4, closed.k2c2, 1);
    if rr != q(closed.chi_anti_k) {
        return Err(Error::Consistency(format!(
            "{params}: χ(−K) = {} but Riemann–Roch gives {rr}",
            closed.chi_anti_k
        )));
    }
    if closed.k4 <= 0 || closed.chi_anti_k <= 0 {
        return Err(Error::Integrity(format!(
            "{params}: K⁴ = {} and h⁰(−K) = {} must be positive",
            closed.k4, closed.chi_anti_k
        )));
    }

    Ok(FourfoldInvariants {
        k4: closed.k4,
        k2c2: closed.k2c2,
        h0_anti_k: closed.chi_anti_k,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;

    fn z(i: usize) -> &'static FanoThreefold {
        &catalog()[i - 1]
    }

    #[test]
    fn bundle_formula_examples() {
        assert_eq!(bundle_numbers(&BundleInput::split(z(7), 0)).unwrap().k4, 512);
        assert_eq!(bundle_numbers(&BundleInput::split(z(6), 2)).unwrap().k4, 624);

        let input = BundleInput {
            kw3: -10,
            kw_c1_sq: 0,
            kw_c2e: 0,
            kw_c2w: -24,
            chi_o: 1,
        };
        assert_eq!(bundle_numbers(&input).unwrap().k2c2, -2 * -10 - 4 * -24);
    }

    #[test]
    fn bundle_formula_rejects_fractional_chi() {
        let input = BundleInput {
            kw3: -1,
            kw_c1_sq: 0,
            kw_c2e: 0,
            kw_c2w: -24,
            chi_o: 1,
        };
        assert!(matches!(bundle_numbers(&input), Err(Error::Integrity(_))));
    }

    #[test]
    fn bundle_invariants() {
        let t = |n: AnticanonicalNumbers| (n.k4, n.k2c2, n.chi_anti_k);
        assert_eq!(t(p1_bundle_invariants(z(7), 0).unwrap()), (512, 224, 105));
        assert_eq!(t(p1_bundle_invariants(z(1), 0).unwrap()), (64, 112, 21));
        assert_eq!(p1_bundle_invariants(z(6), 2).unwrap().k4, 624);
        assert!(p1_bundle_invariants(z(6), -1).is_err());
    }

    #[test]
    fn blowup_examples() {
        let base = p1_bundle_invariants(z(7), 0).unwrap();
        assert_eq!(blowup_numbers(&base, &BlowupCentreData::empty()).unwrap(), base);

        let s = SurfaceHodge::of(z(7), 1).unwrap();
        let x = blowup_numbers(&base, &BlowupCentreData::surface_in_bundle(z(7), 0, &s, 1)).unwrap();
        assert_eq!(x.k4, 431);

        let base = p1_bundle_invariants(z(1), 0).unwrap();
        let s = SurfaceHodge::of(z(1), 1).unwrap();
        let x = blowup_numbers(&base, &BlowupCentreData::surface_in_bundle(z(1), 0, &s, 1)).unwrap();
        assert_eq!((x.k4, x.chi_anti_k), (47, 17));
    }

    #[test]
    fn fourfold_examples() {
        let t = |p: FamilyParams| {
            let f = fano4_invariants(&p).unwrap();
            (f.k4, f.k2c2, f.h0_anti_k)
        };
        assert_eq!(t(FamilyParams::unchecked(7, 0, 1)), (431, 206, 90));
        assert_eq!(t(FamilyParams::unchecked(6, 2, 4)), (160, 148, 40));
        assert_eq!(t(FamilyParams::unchecked(2, 1, 2)), (60, 96, 19));
    }

    #[test]
    fn fourfold_requires_admissible() {
        assert!(fano4_invariants(&FamilyParams::unchecked(7, 4, 1)).is_err());
        assert!(fano4_invariants(&FamilyParams::unchecked(1, 1, 1)).is_err());
    }

    #[test]
    fn riemann_roch_examples() {
        assert_eq!(riemann_roch_chi(431, 206, 1), q(90));
        assert_eq!(riemann_roch_chi(0, 0, 1), q(1));
        assert_eq!(riemann_roch_chi(64, 112, 1), q(21));
        assert_eq!(riemann_roch_chi(1, 0, 0), frac(1, 6));
    }

    #[test]
    fn omitted_term_changes_value() {
        let full = k4_closed_form(z(7), 0, 1, None);
        assert_eq!(full, q(431));
        assert_eq!(k4_closed_form(z(7), 0, 1, Some(K4Term::NormalChern)), full);
        assert_eq!(k4_closed_form(z(7), 0, 1, Some(K4Term::SurfaceCanonical)), q(440));
    }
}
