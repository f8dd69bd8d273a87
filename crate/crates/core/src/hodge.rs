//! Hodge polynomials `e(W)(u, v) = Σ h^{p,q} u^p v^q`. The 4-fold `X` is
//! reached from the bundle `Y = P(O ⊕ O(a))` by blowing up `A ∈ |O_Z(d)|`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

use serde::Serialize;

use crate::catalog::FanoThreefold;
use crate::error::{Error, Result};

/// Sparse two-variable polynomial with non-negative integer coefficients.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct HodgePolynomial {
    coeffs: BTreeMap<(u32, u32), u64>,
}

impl HodgePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_terms([((0, 0), 1)])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ((u32, u32), u64)>) -> Self {
        let mut out = Self::zero();
        for (pq, c) in terms {
            out.add_term(pq, c);
        }
        out
    }

    fn add_term(&mut self, pq: (u32, u32), c: u64) {
        if c != 0 {
            *self.coeffs.entry(pq).or_insert(0) += c;
        }
    }

    /// `h^{p,q}`; zero when absent.
    pub fn coeff(&self, p: u32, q: u32) -> u64 {
        self.coeffs.get(&(p, q)).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), u64)> + '_ {
        self.coeffs.iter().map(|(&pq, &c)| (pq, c))
    }

    pub fn is_symmetric(&self) -> bool {
        self.terms().all(|((p, q), c)| self.coeff(q, p) == c)
    }

    /// Largest `p` or `q` carrying a non-zero coefficient.
    pub fn dimension(&self) -> u32 {
        self.coeffs.keys().map(|&(p, q)| p.max(q)).max().unwrap_or(0)
    }

    /// `b_k = Σ_{p+q=k} h^{p,q}`.
    pub fn betti(&self, k: u32) -> u64 {
        self.terms().filter(|((p, q), _)| p + q == k).map(|(_, c)| c).sum()
    }

    /// Evaluation at `u = v = 1`, i.e. the sum of all Betti numbers.
    pub fn total(&self) -> u64 {
        self.coeffs.values().sum()
    }

    /// The polynomial with its constant term removed.
    fn without_constant(mut self) -> Self {
        self.coeffs.remove(&(0, 0));
        self
    }
}

impl Add for &HodgePolynomial {
    type Output = HodgePolynomial;

    fn add(self, rhs: &HodgePolynomial) -> HodgePolynomial {
        let mut out = self.clone();
        for (pq, c) in rhs.terms() {
            out.add_term(pq, c);
        }
        out
    }
}

impl Mul for &HodgePolynomial {
    type Output = HodgePolynomial;

    fn mul(self, rhs: &HodgePolynomial) -> HodgePolynomial {
        let mut out = HodgePolynomial::zero();
        for ((p1, q1), c1) in self.terms() {
            for ((p2, q2), c2) in rhs.terms() {
                out.add_term((p1 + p2, q1 + q2), c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for HodgePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((p, q), c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mono = match (p, q) {
                (0, 0) => String::new(),
                _ => format!("u^{p}v^{q}"),
            };
            match (c, mono.is_empty()) {
                (_, true) => write!(f, "{c}")?,
                (1, false) => write!(f, "{mono}")?,
                _ => write!(f, "{c}{mono}")?,
            }
        }
        Ok(())
    }
}

/// `e(Pⁿ) = Σ_{i ≤ n} uⁱvⁱ`.
pub fn projective_space(n: u32) -> HodgePolynomial {
    HodgePolynomial::from_terms((0..=n).map(|i| ((i, i), 1)))
}

/// `e(P(E)) = e(W) · e(Pⁿ)` for a `Pⁿ`-bundle over `W`.
pub fn bundle_formula(base: &HodgePolynomial, n: u32) -> HodgePolynomial {
    base * &projective_space(n)
}

/// `e(W̃) = e(W) + e(V) · (e(P^{c−1}) − 1)` for the blow-up of `W` along a
/// smooth centre `V` of codimension `c ≥ 2`.
pub fn blowup_formula(
    ambient: &HodgePolynomial,
    centre: &HodgePolynomial,
    codim: u32,
) -> Result<HodgePolynomial> {
    if codim < 2 {
        return Err(Error::Domain(format!(
            "blow-up centre must have codimension at least 2, got {codim}"
        )));
    }
    let exceptional = centre * &projective_space(codim - 1).without_constant();
    Ok(ambient + &exceptional)
}

/// `e(Z)` for a Fano 3-fold with `ρ = 1`: the diagonal is all ones and the
/// only other entries are `h^{1,2} = h^{2,1}`.
pub fn hodge_of_threefold(z: &FanoThreefold) -> HodgePolynomial {
    let h12 = z.h12 as u64;
    let mut e = projective_space(3);
    e.add_term((1, 2), h12);
    e.add_term((2, 1), h12);
    e
}

fn check_surface_range(z: &FanoThreefold, d: i64) -> Result<()> {
    if d < 1 || d > z.max_d() {
        return Err(Error::Domain(format!(
            "d = {d} outside 1..={} for Z{}",
            z.max_d(),
            z.id
        )));
    }
    Ok(())
}

fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || n < k {
        return 0;
    }
    (0..k).fold(1, |acc, j| acc * (n - j) / (j + 1))
}

/// `h^{0,2}(A) = h³(O_Z(−d))` for a smooth `A ∈ |O_Z(d)|`.
pub fn surface_h02(z: &FanoThreefold, d: i64) -> Result<i64> {
    check_surface_range(z, d)?;
    let i = z.index;
    let h = if d < i {
        0
    } else if d == i {
        1
    } else if i == 3 && d == 4 {
        // Serre duality on the quadric, pushed to P⁴: h⁴(O_{P⁴}(−6)).
        5
    } else if i == 4 {
        binomial(d - 1, 3)
    } else {
        return Err(Error::Domain(format!("no h^{{0,2}} case for Z{} and d = {d}", z.id)));
    };
    Ok(h)
}

/// `h^{1,1}(A) = 10 + 10 h^{0,2}(A) − d (d − i_Z)² δ`, from Noether's formula.
pub fn surface_h11(z: &FanoThreefold, d: i64) -> Result<i64> {
    let h02 = surface_h02(z, d)?;
    let h11 = 10 + 10 * h02 - d * (d - z.index).pow(2) * z.degree;
    if h11 <= 0 {
        return Err(Error::Integrity(format!(
            "h^{{1,1}} of the surface over Z{} with d = {d} is {h11}",
            z.id
        )));
    }
    Ok(h11)
}

/// Hodge numbers of the surface `A`. `h^{0,1}` vanishes by Lefschetz.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SurfaceHodge {
    pub h01: i64,
    pub h02: i64,
    pub h11: i64,
}

impl SurfaceHodge {
    pub fn of(z: &FanoThreefold, d: i64) -> Result<Self> {
        Ok(Self {
            h01: 0,
            h02: surface_h02(z, d)?,
            h11: surface_h11(z, d)?,
        })
    }

    /// `χ(O_A) = 1 − h^{0,1} + h^{0,2}`.
    pub fn chi_structure_sheaf(&self) -> i64 {
        1 - self.h01 + self.h02
    }

    pub fn polynomial(&self) -> HodgePolynomial {
        let (h01, h02) = (self.h01 as u64, self.h02 as u64);
        HodgePolynomial::from_terms([
            ((0, 0), 1),
            ((1, 0), h01),
            ((0, 1), h01),
            ((2, 0), h02),
            ((0, 2), h02),
            ((1, 1), self.h11 as u64),
            ((2, 1), h01),
            ((1, 2), h01),
            ((2, 2), 1),
        ])
    }
}

/// The three Hodge numbers of `X` not forced by `ρ_X = 3` and Fano vanishing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct FourfoldHodge {
    pub h12: i64,
    pub h13: i64,
    pub h22: i64,
}

/// `e(Y) = e(Z) · e(P¹)`.
pub fn bundle_polynomial(z: &FanoThreefold) -> HodgePolynomial {
    bundle_formula(&hodge_of_threefold(z), 1)
}

/// `e(X) = e(Y) + e(A) · uv`, the blow-up of `Y` along `S ≅ A`.
pub fn fourfold_polynomial(z: &FanoThreefold, d: i64) -> Result<HodgePolynomial> {
    let surface = SurfaceHodge::of(z, d)?;
    blowup_formula(&bundle_polynomial(z), &surface.polynomial(), 2)
}

/// `(h^{1,2}, h^{1,3}, h^{2,2})` of `X^i_{a,d}`. These do not depend on `a`.
///
/// Computed twice, once from the closed forms and once by pushing Hodge
/// polynomials through the bundle and blow-up formulas; the two must agree.
pub fn fourfold_hodge(z: &FanoThreefold, d: i64) -> Result<FourfoldHodge> {
    let surface = SurfaceHodge::of(z, d)?;
    let closed = FourfoldHodge {
        h12: z.h12,
        h13: surface.h02,
        h22: 2 + surface.h11,
    };

    let e = fourfold_polynomial(z, d)?;
    let calculus = FourfoldHodge {
        h12: e.coeff(1, 2) as i64,
        h13: e.coeff(1, 3) as i64,
        h22: e.coeff(2, 2) as i64,
    };

    if closed != calculus {
        return Err(Error::Consistency(format!(
            "Hodge numbers of X over Z{} with d = {d}: closed form {closed:?}, polynomial {calculus:?}",
            z.id
        )));
    }
    if !e.is_symmetric() || e.dimension() != 4 || e.betti(2) != 3 {
        return Err(Error::Consistency(format!(
            "e(X) = {e} over Z{} with d = {d} is not the polynomial of a 4-fold with ρ = 3",
            z.id
        )));
    }
    Ok(closed)
}
