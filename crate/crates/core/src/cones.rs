//! Divisors and curves on `X^i_{a,d}` modulo numerical equivalence.
//!
//! `N¹(X)` is coordinatised by `(φ*H, Ĝ, E)`. Curves are formal
//! combinations of the four curves `F`, `F̂`, `C_G`, `C_Ĝ`, which span the
//! rank-3 space `N₁(X)` with one relation between them. Everything is exact.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::catalog::FamilyParams;
use crate::error::{Error, Result};
use crate::rational::{q, render, Q};

/// Coordinates over `(φ*H, Ĝ, E)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DivisorClass {
    pub coords: [Q; 3],
    pub context: FamilyParams,
}

impl DivisorClass {
    pub fn new(context: FamilyParams, coords: [Q; 3]) -> Self {
        Self { coords, context }
    }

    pub fn from_ints(context: FamilyParams, alpha: i64, beta: i64, gamma: i64) -> Self {
        Self::new(context, [q(alpha), q(beta), q(gamma)])
    }

    /// `φ*H`
    pub fn pullback_h(context: FamilyParams) -> Self {
        Self::from_ints(context, 1, 0, 0)
    }

    /// `Ĝ`
    pub fn g_hat(context: FamilyParams) -> Self {
        Self::from_ints(context, 0, 1, 0)
    }

    /// `E`, the exceptional divisor of `σ`.
    pub fn e(context: FamilyParams) -> Self {
        Self::from_ints(context, 0, 0, 1)
    }

    /// `G ≡ Ĝ + E − aφ*H`.
    pub fn g(context: FamilyParams) -> Self {
        Self::from_alternate_basis(context, [q(0), q(1), q(0)])
    }

    /// `Ê ≡ dφ*H − E`, the exceptional divisor of `σ̂`.
    pub fn e_hat(context: FamilyParams) -> Self {
        Self::from_alternate_basis(context, [q(0), q(0), q(1)])
    }

    /// Coordinates over the other basis `(φ*H, G, Ê)`:
    /// `αφ*H + βĜ + (β+γ)E ≡ (α + aβ + dγ)φ*H + βG − γÊ`.
    pub fn to_alternate_basis(&self) -> [Q; 3] {
        let [x, y, z] = self.coords;
        let (a, d) = (q(self.context.a), q(self.context.d));
        let beta = y;
        let gamma = z - y;
        [x + a * beta + d * gamma, beta, -gamma]
    }

    /// Inverse of [`DivisorClass::to_alternate_basis`].
    pub fn from_alternate_basis(context: FamilyParams, alt: [Q; 3]) -> Self {
        let [u, v, w] = alt;
        let (a, d) = (q(context.a), q(context.d));
        let beta = v;
        let gamma = -w;
        let alpha = u - a * beta - d * gamma;
        Self::new(context, [alpha, beta, beta + gamma])
    }

    pub fn scale(&self, k: Q) -> Self {
        Self::new(self.context, self.coords.map(|c| c * k))
    }

    fn combine(&self, rhs: &Self, sign: Q) -> Self {
        debug_assert_eq!(self.context, rhs.context);
        let mut coords = self.coords;
        for (c, r) in coords.iter_mut().zip(rhs.coords) {
            *c += sign * r;
        }
        Self::new(self.context, coords)
    }

    pub fn plus(&self, rhs: &Self) -> Self {
        self.combine(rhs, q(1))
    }

    pub fn minus(&self, rhs: &Self) -> Self {
        self.combine(rhs, q(-1))
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| *c == q(0))
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [x, y, z] = self.coords.map(render);
        write!(f, "({x}, {y}, {z})")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum CurveGenerator {
    /// Fibre of `σ` over a point of the centre.
    F,
    /// Fibre of `σ̂`.
    FHat,
    /// Minimal-degree curve inside `G`.
    CG,
    /// Minimal-degree curve inside `Ĝ`.
    CGHat,
}

impl CurveGenerator {
    pub const ALL: [CurveGenerator; 4] = [
        CurveGenerator::F,
        CurveGenerator::FHat,
        CurveGenerator::CG,
        CurveGenerator::CGHat,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CurveGenerator::F => "F",
            CurveGenerator::FHat => "F^",
            CurveGenerator::CG => "C_G",
            CurveGenerator::CGHat => "C_G^",
        }
    }

    fn column(self) -> usize {
        self as usize
    }
}

impl fmt::Display for CurveGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

/// `k·name`, dropping a unit coefficient.
fn times(k: i64, name: &str) -> String {
    if k == 1 {
        name.to_string()
    } else {
        format!("{k}{name}")
    }
}

/// A formal non-negative combination of the named curves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveClass {
    terms: BTreeMap<CurveGenerator, Q>,
    pub context: FamilyParams,
}

impl CurveClass {
    pub fn generator(context: FamilyParams, kind: CurveGenerator) -> Self {
        Self {
            terms: BTreeMap::from([(kind, q(1))]),
            context,
        }
    }

    pub fn combination(
        context: FamilyParams,
        terms: impl IntoIterator<Item = (CurveGenerator, Q)>,
    ) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (g, c) in terms {
            if c < q(0) {
                return Err(Error::Domain(format!(
                    "curve coefficient of {g} is negative ({})",
                    render(c)
                )));
            }
            if c != q(0) {
                *map.entry(g).or_insert(q(0)) += c;
            }
        }
        Ok(Self { terms: map, context })
    }

    /// The single generator this class equals, if it is one.
    pub fn as_generator(&self) -> Option<CurveGenerator> {
        match self.terms.iter().collect::<Vec<_>>().as_slice() {
            [(g, c)] if **c == q(1) => Some(**g),
            _ => None,
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (CurveGenerator, Q)> + '_ {
        self.terms.iter().map(|(&g, &c)| (g, c))
    }
}

impl fmt::Display for CurveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .terms()
            .map(|(g, c)| {
                if c == q(1) {
                    g.to_string()
                } else {
                    format!("{}·{g}", render(c))
                }
            })
            .collect();
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// Rows `φ*H, Ĝ, E`; columns `F, F̂, C_G, C_Ĝ`.
///
/// Forced by `E·F = Ê·F̂ = −1`, `dφ*H ≡ E + Ê`, the disjointness of `G`
/// from `Ĝ` and `E` and of `Ĝ` from `Ê`, the normal bundle
/// `N_Ĝ X ≅ O_Z(−(d − a))`, and `H·C_Z = 1`.
pub fn pairing_matrix(params: &FamilyParams) -> [[Q; 4]; 3] {
    let (a, d) = (params.a, params.d);
    [
        [q(0), q(0), q(1), q(1)],
        [q(1), q(0), q(0), q(a - d)],
        [q(-1), q(1), q(0), q(d)],
    ]
}

fn pair_with_generator(matrix: &[[Q; 4]; 3], div: &DivisorClass, g: CurveGenerator) -> Q {
    (0..3).map(|r| div.coords[r] * matrix[r][g.column()]).sum()
}

/// `D · C`, extended bilinearly.
pub fn pairing(div: &DivisorClass, curve: &CurveClass) -> Result<Q> {
    if div.context != curve.context {
        return Err(Error::ContextMismatch {
            divisor: div.context.label(),
            curve: curve.context.label(),
        });
    }
    let m = pairing_matrix(&div.context);
    Ok(curve.terms().map(|(g, c)| c * pair_with_generator(&m, div, g)).sum())
}

/// `D · g` for a single named curve.
pub fn pair_generator(div: &DivisorClass, g: CurveGenerator) -> Q {
    pair_with_generator(&pairing_matrix(&div.context), div, g)
}

/// `−K_X ≡ (i_Z − a)φ*H + 2Ĝ + E`.
///
/// Checked against `i_Z φ*H + G + Ĝ` and against the expression
/// `(i_Z + a − d)φ*H + 2G + Ê` over the other basis.
pub fn anticanonical(params: &FamilyParams) -> Result<DivisorClass> {
    let i = params.threefold().index;
    let k = DivisorClass::from_ints(*params, i - params.a, 2, 1);

    let via_g = DivisorClass::pullback_h(*params)
        .scale(q(i))
        .plus(&DivisorClass::g(*params))
        .plus(&DivisorClass::g_hat(*params));
    let alt = k.to_alternate_basis();
    let expected_alt = [q(i + params.a - params.d), q(2), q(1)];
    if via_g != k || alt != expected_alt {
        return Err(Error::Consistency(format!(
            "{params}: −K = {k}, i·φ*H + G + Ĝ = {via_g}, alternate coordinates {:?}",
            alt.map(render)
        )));
    }
    Ok(k)
}

/// Generators of the cone of curves.
pub fn ne_generators(params: &FamilyParams) -> Vec<CurveClass> {
    ne_generator_kinds(params)
        .into_iter()
        .map(|g| CurveClass::generator(*params, g))
        .collect()
}

pub fn ne_generator_kinds(params: &FamilyParams) -> Vec<CurveGenerator> {
    use CurveGenerator::*;
    let (a, d) = (params.a, params.d);
    if a == 0 {
        vec![F, FHat, CGHat]
    } else if a < d {
        vec![F, FHat, CG, CGHat]
    } else {
        vec![F, FHat, CG]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum RayLabel {
    R1,
    R2,
    R3,
    R4,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ContractionKind {
    /// The conic bundle `φ: X → Z`.
    FibreType,
    Divisorial,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NefRay {
    pub label: RayLabel,
    pub generator: DivisorClass,
    /// Human-readable name of the generator, e.g. `dG + aÊ`.
    pub name: String,
    /// The NE generators this ray is orthogonal to.
    pub vanishing_face: Vec<CurveGenerator>,
    pub contraction: ContractionKind,
}

/// Extremal rays of the nef cone.
pub fn nef_rays(params: &FamilyParams) -> Vec<NefRay> {
    let p = *params;
    let (a, d) = (params.a, params.d);
    let h = DivisorClass::pullback_h(p);
    let g = DivisorClass::g(p);
    let e_hat = DivisorClass::e_hat(p);

    let mut rays: Vec<(RayLabel, DivisorClass, String)> = vec![(RayLabel::R1, h, "φ*H".into())];
    if a == 0 {
        rays.push((RayLabel::R2, g, "G".into()));
        rays.push((RayLabel::R3, g.plus(&e_hat), "G + Ê".into()));
    } else if a < d {
        rays.push((RayLabel::R2, h.scale(q(a)).plus(&g), format!("{} + G", times(a, "φ*H"))));
        rays.push((RayLabel::R3, g.plus(&e_hat), "G + Ê".into()));
        rays.push((
            RayLabel::R4,
            g.scale(q(d)).plus(&e_hat.scale(q(a))),
            format!("{} + {}", times(d, "G"), times(a, "Ê")),
        ));
    } else {
        rays.push((RayLabel::R2, h.scale(q(a)).plus(&g), format!("{} + G", times(a, "φ*H"))));
        rays.push((RayLabel::R3, DivisorClass::g_hat(p), "Ĝ".into()));
    }

    let curves = ne_generator_kinds(params);
    rays.into_iter()
        .map(|(label, generator, name)| {
            let vanishing_face = curves
                .iter()
                .copied()
                .filter(|&c| pair_generator(&generator, c) == q(0))
                .collect();
            let contraction = if label == RayLabel::R1 {
                ContractionKind::FibreType
            } else {
                ContractionKind::Divisorial
            };
            NefRay {
                label,
                generator,
                name,
                vanishing_face,
                contraction,
            }
        })
        .collect()
}

/// Nef: non-negative on every generator of the cone of curves.
pub fn is_nef(div: &DivisorClass) -> bool {
    ne_generator_kinds(&div.context)
        .into_iter()
        .all(|c| pair_generator(div, c) >= q(0))
}

/// Ample: strictly positive on every generator of the (closed, polyhedral)
/// cone of curves.
pub fn is_ample(div: &DivisorClass) -> bool {
    ne_generator_kinds(&div.context)
        .into_iter()
        .all(|c| pair_generator(div, c) > q(0))
}

/// Whether the construction over `Z_{z_id}` with `(a, d)` is Fano, i.e.
/// `−K_X` is positive on the cone of curves. Admissibility is not assumed.
pub fn is_fano(z_id: i64, a: i64, d: i64) -> Result<bool> {
    let z = crate::catalog::threefold(z_id)?;
    if a < 0 || d < 1 {
        return Err(Error::Domain(format!("need a ≥ 0 and d ≥ 1, got a = {a}, d = {d}")));
    }
    let params = FamilyParams::unchecked(z.id, a, d);
    let positive = is_ample(&anticanonical(&params)?);
    let inequalities = a < z.index && d - a < z.index;
    if positive != inequalities {
        return Err(Error::Consistency(format!(
            "{params}: −K positivity {positive} but index inequalities {inequalities}"
        )));
    }
    Ok(positive)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, serde::Deserialize)]
pub enum FibreLike {
    NotFibreLike,
    Undetermined,
}

/// Only the negative criterion is known: `2a ≠ d` rules fibre-likeness out.
pub fn is_fibre_like(params: &FamilyParams) -> FibreLike {
    if 2 * params.a != params.d {
        FibreLike::NotFibreLike
    } else {
        FibreLike::Undetermined
    }
}

/// Row-reduces a copy of `rows`, returning the echelon form and pivot columns.
fn row_reduce<const N: usize>(rows: &[[Q; N]]) -> (Vec<[Q; N]>, Vec<usize>) {
    let mut m = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..N {
        let Some(p) = (r..m.len()).find(|&i| m[i][col] != q(0)) else {
            continue;
        };
        m.swap(r, p);
        let lead = m[r][col];
        for x in m[r].iter_mut() {
            *x /= lead;
        }
        for i in 0..m.len() {
            if i != r && m[i][col] != q(0) {
                let f = m[i][col];
                let pivot_row = m[r];
                for (x, y) in m[i].iter_mut().zip(pivot_row) {
                    *x -= f * y;
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    (m, pivots)
}

pub fn rank<const N: usize>(rows: &[[Q; N]]) -> usize {
    row_reduce(rows).1.len()
}

/// The linear relation among `F, F̂, C_G, C_Ĝ` in `N₁(X)`, read off as the
/// kernel of the pairing matrix. Normalised so the `C_Ĝ` coefficient is 1.
pub fn curve_relation(params: &FamilyParams) -> Result<[Q; 4]> {
    let m = pairing_matrix(params);
    let (reduced, pivots) = row_reduce(&m);
    if pivots.len() != 3 {
        return Err(Error::Consistency(format!(
            "{params}: pairing matrix has rank {}, expected 3",
            pivots.len()
        )));
    }
    let free = (0..4).find(|c| !pivots.contains(c)).expect("one free column");
    let mut kernel = [q(0); 4];
    kernel[free] = q(1);
    for (row, &pc) in pivots.iter().enumerate() {
        kernel[pc] = -reduced[row][free];
    }
    let norm = kernel[CurveGenerator::CGHat.column()];
    if norm == q(0) {
        return Err(Error::Consistency(format!(
            "{params}: curve relation does not involve C_Ĝ"
        )));
    }
    Ok(kernel.map(|k| k / norm))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::enumerate_families;

    fn p(z: u8, a: i64, d: i64) -> FamilyParams {
        FamilyParams::unchecked(z, a, d)
    }

    #[test]
    fn alternate_basis_examples() {
        let ctx = p(7, 1, 2);
        let i = 4;
        let k = DivisorClass::from_ints(ctx, i - 1, 2, 1);
        assert_eq!(k.to_alternate_basis(), [q(i + 1 - 2), q(2), q(1)]);
        assert_eq!(DivisorClass::pullback_h(ctx).to_alternate_basis(), [q(1), q(0), q(0)]);
        let gh_plus_e = DivisorClass::from_ints(ctx, 0, 1, 1);
        assert_eq!(gh_plus_e.to_alternate_basis(), [q(1), q(1), q(0)]);
    }

    #[test]
    fn basis_relations() {
        for fam in enumerate_families() {
            let h = DivisorClass::pullback_h(fam);
            let g = DivisorClass::g(fam);
            let gh = DivisorClass::g_hat(fam);
            let e = DivisorClass::e(fam);
            let eh = DivisorClass::e_hat(fam);
            let (a, d) = (q(fam.a), q(fam.d));
            assert_eq!(h.scale(d), e.plus(&eh));
            assert_eq!(g.plus(&h.scale(a)), gh.plus(&e));
            assert_eq!(gh.plus(&h.scale(d - a)), g.plus(&eh));
            // dG + aÊ ≡ dĜ + (d − a)E
            assert_eq!(g.scale(d).plus(&eh.scale(a)), gh.scale(d).plus(&e.scale(d - a)));
        }
    }

    #[test]
    fn anticanonical_examples() {
        assert_eq!(anticanonical(&p(7, 3, 1)).unwrap(), DivisorClass::from_ints(p(7, 3, 1), 1, 2, 1));
        assert_eq!(anticanonical(&p(1, 0, 1)).unwrap(), DivisorClass::from_ints(p(1, 0, 1), 2, 2, 1));
        for fam in enumerate_families() {
            let k = anticanonical(&fam).unwrap();
            let f = CurveClass::generator(fam, CurveGenerator::F);
            assert_eq!(pairing(&k, &f).unwrap(), q(1));
        }
    }

    #[test]
    fn pairing_examples() {
        let ctx = p(7, 1, 4);
        let f = CurveClass::generator(ctx, CurveGenerator::F);
        let cgh = CurveClass::generator(ctx, CurveGenerator::CGHat);
        let cg = CurveClass::generator(ctx, CurveGenerator::CG);
        assert_eq!(pairing(&DivisorClass::e(ctx), &f).unwrap(), q(-1));
        assert_eq!(pairing(&DivisorClass::g_hat(ctx), &cgh).unwrap(), q(1 - 4));
        let k = anticanonical(&ctx).unwrap();
        assert_eq!(pairing(&k, &cg).unwrap(), q(4 - 1));

        let mixed = CurveClass::combination(ctx, [(CurveGenerator::F, q(2)), (CurveGenerator::CG, q(1))]).unwrap();
        assert_eq!(pairing(&k, &mixed).unwrap(), q(2 + 3));
    }

    #[test]
    fn pairing_context_mismatch() {
        let d = DivisorClass::e(p(7, 1, 4));
        let c = CurveClass::generator(p(7, 0, 1), CurveGenerator::F);
        assert!(matches!(pairing(&d, &c), Err(Error::ContextMismatch { .. })));
    }

    #[test]
    fn negative_curve_coefficients_rejected() {
        assert!(CurveClass::combination(p(7, 0, 1), [(CurveGenerator::F, q(-1))]).is_err());
    }

    #[test]
    fn ne_generator_cases() {
        use CurveGenerator::*;
        assert_eq!(ne_generator_kinds(&p(7, 0, 3)), vec![F, FHat, CGHat]);
        assert_eq!(ne_generator_kinds(&p(7, 1, 4)), vec![F, FHat, CG, CGHat]);
        assert_eq!(ne_generator_kinds(&p(6, 2, 1)), vec![F, FHat, CG]);
    }

    #[test]
    fn nef_ray_examples() {
        let rays = nef_rays(&p(7, 0, 1));
        let ctx = p(7, 0, 1);
        let gens: Vec<_> = rays.iter().map(|r| r.generator).collect();
        assert_eq!(
            gens,
            vec![
                DivisorClass::pullback_h(ctx),
                DivisorClass::g(ctx),
                DivisorClass::g(ctx).plus(&DivisorClass::e_hat(ctx)),
            ]
        );

        let ctx = p(7, 2, 5);
        let rays = nef_rays(&ctx);
        assert_eq!(rays.len(), 4);
        let r4 = DivisorClass::g(ctx).scale(q(5)).plus(&DivisorClass::e_hat(ctx).scale(q(2)));
        assert!(rays.iter().any(|r| r.generator == r4 && r.label == RayLabel::R4));
        assert_eq!(rays[0].contraction, ContractionKind::FibreType);
        assert!(rays[1..].iter().all(|r| r.contraction == ContractionKind::Divisorial));
    }

    #[test]
    fn fano_examples() {
        assert_eq!(is_fano(6, 2, 4), Ok(true));
        let k = anticanonical(&p(6, 2, 4)).unwrap();
        let min = ne_generator_kinds(&p(6, 2, 4))
            .into_iter()
            .map(|c| pair_generator(&k, c))
            .min()
            .unwrap();
        assert_eq!(min, q(1));
        assert_eq!(pair_generator(&k, CurveGenerator::CG), q(1));
        assert_eq!(is_fano(7, 4, 1), Ok(false));
        assert!(is_fano(7, 0, 0).is_err());
        for fam in enumerate_families() {
            assert_eq!(is_fano(i64::from(fam.z_id), fam.a, fam.d), Ok(true));
        }
    }

    #[test]
    fn fibre_like_examples() {
        assert_eq!(is_fibre_like(&p(7, 1, 2)), FibreLike::Undetermined);
        assert_eq!(is_fibre_like(&p(7, 0, 1)), FibreLike::NotFibreLike);
        assert_eq!(is_fibre_like(&p(6, 2, 4)), FibreLike::Undetermined);
    }

    #[test]
    fn relation_matches_hand_derivation() {
        // C_Ĝ + (d − a)F = C_G + aF̂
        for fam in enumerate_families() {
            let (a, d) = (fam.a, fam.d);
            assert_eq!(curve_relation(&fam).unwrap(), [q(d - a), q(-a), q(-1), q(1)]);
        }
    }

    #[test]
    fn rank_of_small_matrices() {
        assert_eq!(rank(&[[q(1), q(2)], [q(2), q(4)]]), 1);
        assert_eq!(rank(&[[q(0), q(0)], [q(0), q(0)]]), 0);
        assert_eq!(rank(&pairing_matrix(&p(7, 0, 1))), 3);
    }
}
