//! The seven Fano 3-folds of Picard number one and index at least two, and
//! the admissible triples `(i, a, d)` built on top of them.

use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BaseLocus {
    Empty,
    OneSimplePoint,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Rationality3 {
    Rational,
    NotRational,
}

/// One row of the classification of Fano 3-folds with `ρ = 1`, `i ≥ 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FanoThreefold {
    pub id: u8,
    /// Fano index `i_Z`.
    pub index: i64,
    /// `δ = H³` for the ample generator `H`.
    pub degree: i64,
    pub h12: i64,
    pub h0_tangent: i64,
    pub h1_tangent: i64,
    /// Base locus of `|H|`.
    pub base_locus_h: BaseLocus,
    pub rational: Rationality3,
    pub description: &'static str,
}

impl FanoThreefold {
    /// `−K_Z³ = i_Z³ · δ`.
    pub fn anticanonical_degree(&self) -> i64 {
        self.index.pow(3) * self.degree
    }

    /// `χ(T_Z) = h⁰(T_Z) − h¹(T_Z)`.
    pub fn chi_tangent(&self) -> i64 {
        self.h0_tangent - self.h1_tangent
    }

    /// Largest `d` that can occur in an admissible triple over this 3-fold.
    pub fn max_d(&self) -> i64 {
        2 * self.index - 2
    }
}

const ROWS: [FanoThreefold; 7] = [
    FanoThreefold {
        id: 1,
        index: 2,
        degree: 1,
        h12: 21,
        h0_tangent: 0,
        h1_tangent: 34,
        base_locus_h: BaseLocus::OneSimplePoint,
        rational: Rationality3::NotRational,
        description: "sextic hypersurface in P(1,1,1,2,3)",
    },
    FanoThreefold {
        id: 2,
        index: 2,
        degree: 2,
        h12: 10,
        h0_tangent: 0,
        h1_tangent: 19,
        base_locus_h: BaseLocus::Empty,
        rational: Rationality3::NotRational,
        description: "double cover of P^3 branched along a smooth quartic",
    },
    FanoThreefold {
        id: 3,
        index: 2,
        degree: 3,
        h12: 5,
        h0_tangent: 0,
        h1_tangent: 10,
        base_locus_h: BaseLocus::Empty,
        rational: Rationality3::NotRational,
        description: "smooth cubic in P^4",
    },
    FanoThreefold {
        id: 4,
        index: 2,
        degree: 4,
        h12: 2,
        h0_tangent: 0,
        h1_tangent: 3,
        base_locus_h: BaseLocus::Empty,
        rational: Rationality3::Rational,
        description: "smooth intersection of two quadrics in P^5",
    },
    FanoThreefold {
        id: 5,
        index: 2,
        degree: 5,
        h12: 0,
        h0_tangent: 3,
        h1_tangent: 0,
        base_locus_h: BaseLocus::Empty,
        rational: Rationality3::Rational,
        description: "codimension-3 linear section of Gr(2,5) in P^9",
    },
    FanoThreefold {
        id: 6,
        index: 3,
        degree: 2,
        h12: 0,
        h0_tangent: 10,
        h1_tangent: 0,
        base_locus_h: BaseLocus::Empty,
        rational: Rationality3::Rational,
        description: "smooth quadric in P^4",
    },
    FanoThreefold {
        id: 7,
        index: 4,
        degree: 1,
        h12: 0,
        h0_tangent: 15,
        h1_tangent: 0,
        base_locus_h: BaseLocus::Empty,
        rational: Rationality3::Rational,
        description: "P^3",
    },
];

/// The `−K_Z³` column as printed, kept apart from `index` and `degree` so
/// that the identity `−K³ = i³δ` is a real check.
const ANTICANONICAL_DEGREES: [i64; 7] = [8, 8 * 2, 8 * 3, 8 * 4, 8 * 5, 27 * 2, 64];

fn check_rows(rows: &[FanoThreefold]) -> Result<()> {
    for (pos, (z, &k3)) in rows.iter().zip(ANTICANONICAL_DEGREES.iter()).enumerate() {
        if usize::from(z.id) != pos + 1 {
            return Err(Error::Integrity(format!("row {pos} carries id {}", z.id)));
        }
        if z.anticanonical_degree() != k3 {
            return Err(Error::Integrity(format!(
                "Z{}: i³δ = {} but −K³ = {k3}",
                z.id,
                z.anticanonical_degree()
            )));
        }
        // χ(T_Z) = −½K_Z³ − h^{1,2} − 17
        let chi = k3 / 2 - z.h12 - 17;
        if k3 % 2 != 0 || z.chi_tangent() != chi {
            return Err(Error::Integrity(format!(
                "Z{}: h⁰(T) − h¹(T) = {} but −½K³ − h¹² − 17 = {chi}",
                z.id,
                z.chi_tangent()
            )));
        }
        if (z.base_locus_h == BaseLocus::OneSimplePoint) != (z.id == 1) {
            return Err(Error::Integrity(format!("Z{}: unexpected base locus of |H|", z.id)));
        }
        if z.index < 2 {
            return Err(Error::Integrity(format!("Z{}: index below 2", z.id)));
        }
    }
    Ok(())
}

/// All seven rows, ordered by id. The table's cross-identities are checked
/// the first time it is touched.
pub fn catalog() -> &'static [FanoThreefold] {
    static CHECKED: OnceLock<&'static [FanoThreefold]> = OnceLock::new();
    CHECKED.get_or_init(|| {
        if let Err(e) = check_rows(&ROWS) {
            panic!("embedded 3-fold table is corrupt: {e}");
        }
        &ROWS
    })
}

pub fn threefold(z_id: i64) -> Result<&'static FanoThreefold> {
    if !(1..=7).contains(&z_id) {
        return Err(Error::Domain(format!("z_id must be in 1..=7, got {z_id}")));
    }
    Ok(&catalog()[(z_id - 1) as usize])
}

/// A triple `(i, a, d)` naming the family `X^i_{a,d}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FamilyParams {
    pub z_id: u8,
    pub a: i64,
    pub d: i64,
}

impl FamilyParams {
    /// Builds a triple after checking admissibility.
    pub fn new(z_id: i64, a: i64, d: i64) -> Result<Self> {
        if validate_params(z_id, a, d)? {
            Ok(Self::unchecked(z_id as u8, a, d))
        } else {
            Err(Error::Domain(format!(
                "({z_id}, {a}, {d}) is not an admissible triple"
            )))
        }
    }

    /// Builds a triple without the admissibility check. Used where a
    /// non-admissible pair is itself the object of study (the Fano test).
    pub const fn unchecked(z_id: u8, a: i64, d: i64) -> Self {
        Self { z_id, a, d }
    }

    pub fn threefold(&self) -> &'static FanoThreefold {
        &catalog()[usize::from(self.z_id) - 1]
    }

    pub fn label(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "X^{}_{{{},{}}}", self.z_id, self.a, self.d)
    }
}

/// The four admissibility conditions for `(a, d)` over `Z_{z_id}`:
/// `d ≥ 1`, `a > d` or `0 ≤ a ≤ d/2`, `a ≤ i_Z − 1`, `d − a ≤ i_Z − 1`.
pub fn validate_params(z_id: i64, a: i64, d: i64) -> Result<bool> {
    let z = threefold(z_id)?;
    if a < 0 {
        return Err(Error::Domain(format!("a must be non-negative, got {a}")));
    }
    if d < 1 {
        return Err(Error::Domain(format!("d must be positive, got {d}")));
    }
    let normalized = a > d || 2 * a <= d;
    Ok(normalized && a < z.index && d - a < z.index)
}

/// Every admissible triple, ordered by `(z_id, a, d)`.
pub fn enumerate_families() -> Vec<FamilyParams> {
    let mut out = Vec::new();
    for z in catalog() {
        for a in 0..z.index {
            for d in 1..=z.max_d() {
                if validate_params(i64::from(z.id), a, d) == Ok(true) {
                    out.push(FamilyParams::unchecked(z.id, a, d));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_and_last_rows() {
        let z1 = &catalog()[0];
        assert_eq!(
            (z1.id, z1.index, z1.degree, z1.h12, z1.h0_tangent, z1.h1_tangent),
            (1, 2, 1, 21, 0, 34)
        );
        assert_eq!(z1.base_locus_h, BaseLocus::OneSimplePoint);
        assert_eq!(z1.rational, Rationality3::NotRational);

        let z7 = &catalog()[6];
        assert_eq!(
            (z7.id, z7.index, z7.degree, z7.h12, z7.h0_tangent, z7.h1_tangent),
            (7, 4, 1, 0, 15, 0)
        );
        assert_eq!(z7.base_locus_h, BaseLocus::Empty);
        assert_eq!(z7.rational, Rationality3::Rational);
        assert_eq!(catalog()[5].anticanonical_degree(), 54);
    }

    #[test]
    fn corrupted_rows_are_rejected() {
        let mut rows = ROWS;
        rows[2].h1_tangent += 1;
        assert!(matches!(check_rows(&rows), Err(Error::Integrity(_))));
        let mut rows = ROWS;
        rows[5].degree = 3;
        assert!(check_rows(&rows).is_err());
        let mut rows = ROWS;
        rows[3].base_locus_h = BaseLocus::OneSimplePoint;
        assert!(check_rows(&rows).is_err());
    }

    #[test]
    fn validate_examples() {
        assert_eq!(validate_params(7, 3, 6), Ok(true));
        assert_eq!(validate_params(1, 1, 1), Ok(false));
        assert_eq!(validate_params(6, 3, 1), Ok(false));
    }

    #[test]
    fn validate_rejects_bad_input() {
        assert!(matches!(validate_params(0, 0, 1), Err(Error::Domain(_))));
        assert!(matches!(validate_params(8, 0, 1), Err(Error::Domain(_))));
        assert!(matches!(validate_params(7, -1, 1), Err(Error::Domain(_))));
        assert!(matches!(validate_params(7, 0, 0), Err(Error::Domain(_))));
        assert!(FamilyParams::new(1, 1, 1).is_err());
    }

    #[test]
    fn enumeration_counts() {
        let fams = enumerate_families();
        assert_eq!(fams.len(), 28);
        let counts: Vec<usize> = (1..=7)
            .map(|i| fams.iter().filter(|p| p.z_id == i).count())
            .collect();
        assert_eq!(counts, vec![2, 2, 2, 2, 2, 6, 12]);

        let z6: Vec<(i64, i64)> = fams
            .iter()
            .filter(|p| p.z_id == 6)
            .map(|p| (p.a, p.d))
            .collect();
        assert_eq!(z6, vec![(0, 1), (0, 2), (1, 2), (1, 3), (2, 1), (2, 4)]);
    }

    /// Brute force over a wide grid, written without the crate's filter.
    #[test]
    fn index_two_rows_match_brute_force() {
        for z_id in 1..=5u8 {
            let mut brute = Vec::new();
            for a in 0..=10i64 {
                for d in 1..=10i64 {
                    let ok = (a > d || 2 * a <= d) && a <= 1 && d - a <= 1;
                    if ok {
                        brute.push((a, d));
                    }
                }
            }
            let got: Vec<(i64, i64)> = enumerate_families()
                .into_iter()
                .filter(|p| p.z_id == z_id)
                .map(|p| (p.a, p.d))
                .collect();
            assert_eq!(got, brute);
            assert_eq!(got, vec![(0, 1), (1, 2)]);
        }
    }

    #[test]
    fn labels() {
        assert_eq!(FamilyParams::unchecked(7, 0, 1).label(), "X^7_{0,1}");
        assert_eq!(FamilyParams::unchecked(6, 2, 4).to_string(), "X^6_{2,4}");
    }
}
