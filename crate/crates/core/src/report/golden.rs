//! Published values, transcribed by hand. Nothing here is computed, so the
//! verifier never checks the code against itself.

use crate::classify::{BaseLocusKind, Rationality};

/// A tangent-sheaf entry: either known exactly or only bounded above.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bound {
    Exact(i64),
    AtMost(i64),
}

impl Bound {
    pub fn value(self) -> i64 {
        match self {
            Bound::Exact(v) | Bound::AtMost(v) => v,
        }
    }

    pub fn is_exact(self) -> bool {
        matches!(self, Bound::Exact(_))
    }
}

impl std::fmt::Display for Bound {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Bound::Exact(v) => write!(f, "{v}"),
            Bound::AtMost(v) => write!(f, "<= {v}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThreefoldRow {
    pub id: u8,
    pub index: i64,
    pub degree: i64,
    pub minus_k3: i64,
    pub h12: i64,
    pub h0_tangent: i64,
    pub h1_tangent: i64,
    pub base_point_of_h: bool,
    pub rational: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantRow {
    pub label: &'static str,
    pub k4: i64,
    pub k2c2: i64,
    pub h0_anti_k: i64,
    pub h12: i64,
    pub h13: i64,
    pub h22: i64,
    pub base_locus: BaseLocusKind,
    pub rationality: Rationality,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TangentRow {
    pub label: &'static str,
    pub h0: Bound,
    pub h1: Bound,
    pub chi: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldenTables {
    pub threefolds: Vec<ThreefoldRow>,
    pub invariants: Vec<InvariantRow>,
    pub tangents: Vec<TangentRow>,
}

impl GoldenTables {
    pub fn reference() -> Self {
        Self {
            threefolds: THREEFOLD_ROWS.to_vec(),
            invariants: INVARIANT_ROWS.to_vec(),
            tangents: TANGENT_ROWS.to_vec(),
        }
    }
}

#[allow(clippy::too_many_arguments)]
const fn t1(
    id: u8,
    index: i64,
    degree: i64,
    minus_k3: i64,
    h12: i64,
    h0_tangent: i64,
    h1_tangent: i64,
    base_point_of_h: bool,
    rational: bool,
) -> ThreefoldRow {
    ThreefoldRow { id, index, degree, minus_k3, h12, h0_tangent, h1_tangent, base_point_of_h, rational }
}

#[rustfmt::skip]
const THREEFOLD_ROWS: [ThreefoldRow; 7] = [
    t1(1, 2, 1, 8,      21, 0,  34, true,  false),
    t1(2, 2, 2, 8 * 2,  10, 0,  19, false, false),
    t1(3, 2, 3, 8 * 3,  5,  0,  10, false, false),
    t1(4, 2, 4, 8 * 4,  2,  0,  3,  false, true),
    t1(5, 2, 5, 8 * 5,  0,  3,  0,  false, true),
    t1(6, 3, 2, 27 * 2, 0,  10, 0,  false, true),
    t1(7, 4, 1, 64,     0,  15, 0,  false, true),
];

use BaseLocusKind::{Empty as NONE, OnePoint as Q0, TwoPoints as Q1Q2};
use Rationality::{Rational as RAT, Toric as TORIC, Unknown as UNKNOWN, VeryGeneralNotRational as NOTRAT};

#[allow(clippy::too_many_arguments)]
const fn t2(
    label: &'static str,
    k4: i64,
    k2c2: i64,
    h0_anti_k: i64,
    h12: i64,
    h13: i64,
    h22: i64,
    base_locus: BaseLocusKind,
    rationality: Rationality,
) -> InvariantRow {
    InvariantRow { label, k4, k2c2, h0_anti_k, h12, h13, h22, base_locus, rationality }
}

#[rustfmt::skip]
const INVARIANT_ROWS: [InvariantRow; 28] = [
    t2("X^1_{0,1}", 47,  98,  17,  21, 0,  11, Q0,   NOTRAT),
    t2("X^1_{1,2}", 30,  84,  13,  21, 1,  22, Q1Q2, NOTRAT),
    t2("X^2_{0,1}", 94,  112, 26,  10, 0,  10, NONE, NOTRAT),
    t2("X^2_{1,2}", 60,  96,  19,  10, 1,  22, NONE, NOTRAT),
    t2("X^3_{0,1}", 141, 126, 35,  5,  0,  9,  NONE, UNKNOWN),
    t2("X^3_{1,2}", 90,  108, 25,  5,  1,  22, NONE, UNKNOWN),
    t2("X^4_{0,1}", 188, 140, 44,  2,  0,  8,  NONE, RAT),
    t2("X^4_{1,2}", 120, 120, 31,  2,  1,  22, NONE, RAT),
    t2("X^5_{0,1}", 235, 154, 53,  0,  0,  7,  NONE, RAT),
    t2("X^5_{1,2}", 150, 132, 37,  0,  1,  22, NONE, RAT),
    t2("X^6_{0,1}", 346, 184, 74,  0,  0,  4,  NONE, RAT),
    t2("X^6_{0,2}", 296, 176, 65,  0,  0,  8,  NONE, RAT),
    t2("X^6_{1,2}", 260, 164, 58,  0,  0,  8,  NONE, RAT),
    t2("X^6_{1,3}", 210, 156, 49,  0,  1,  22, NONE, RAT),
    t2("X^6_{2,1}", 430, 208, 90,  0,  0,  4,  NONE, RAT),
    t2("X^6_{2,4}", 160, 148, 40,  0,  5,  54, NONE, RAT),
    t2("X^7_{0,1}", 431, 206, 90,  0,  0,  3,  NONE, TORIC),
    t2("X^7_{0,2}", 376, 196, 80,  0,  0,  4,  NONE, RAT),
    t2("X^7_{0,3}", 341, 194, 74,  0,  0,  9,  NONE, RAT),
    t2("X^7_{1,2}", 350, 188, 75,  0,  0,  4,  NONE, RAT),
    t2("X^7_{1,3}", 295, 178, 65,  0,  0,  9,  NONE, RAT),
    t2("X^7_{1,4}", 260, 176, 59,  0,  1,  22, NONE, RAT),
    t2("X^7_{2,1}", 489, 222, 101, 0,  0,  3,  NONE, TORIC),
    t2("X^7_{2,4}", 240, 168, 55,  0,  1,  22, NONE, RAT),
    t2("X^7_{2,5}", 205, 166, 49,  0,  4,  47, NONE, RAT),
    t2("X^7_{3,1}", 605, 254, 123, 0,  0,  3,  NONE, TORIC),
    t2("X^7_{3,2}", 454, 220, 95,  0,  0,  4,  NONE, RAT),
    t2("X^7_{3,6}", 170, 164, 43,  0,  10, 88, NONE, RAT),
];

use Bound::{AtMost as LE, Exact as EQ};

const fn t3(label: &'static str, h0: Bound, h1: Bound, chi: i64) -> TangentRow {
    TangentRow { label, h0, h1, chi }
}

#[rustfmt::skip]
const TANGENT_ROWS: [TangentRow; 28] = [
    t3("X^1_{0,1}", EQ(2),  EQ(36), -34),
    t3("X^1_{1,2}", EQ(1),  EQ(40), -39),
    t3("X^2_{0,1}", EQ(2),  EQ(22), -20),
    t3("X^2_{1,2}", EQ(1),  EQ(29), -28),
    t3("X^3_{0,1}", EQ(2),  EQ(14), -12),
    t3("X^3_{1,2}", EQ(1),  EQ(24), -23),
    t3("X^4_{0,1}", EQ(2),  EQ(8),  -6),
    t3("X^4_{1,2}", EQ(1),  EQ(21), -20),
    t3("X^5_{0,1}", LE(5),  LE(6),  -1),
    t3("X^5_{1,2}", LE(4),  LE(22), -18),
    t3("X^6_{0,1}", LE(12), LE(4),  8),
    t3("X^6_{0,2}", LE(12), LE(13), -1),
    t3("X^6_{1,2}", LE(11), LE(13), -2),
    t3("X^6_{1,3}", LE(11), LE(29), -18),
    t3("X^6_{2,1}", LE(16), LE(4),  12),
    t3("X^6_{2,4}", LE(11), LE(54), -43),
    t3("X^7_{0,1}", EQ(14), EQ(0),  14),
    t3("X^7_{0,2}", EQ(8),  EQ(0),  8),
    t3("X^7_{0,3}", LE(17), LE(19), -2),
    t3("X^7_{1,2}", EQ(7),  EQ(0),  7),
    t3("X^7_{1,3}", LE(16), LE(19), -3),
    t3("X^7_{1,4}", LE(16), LE(34), -18),
    t3("X^7_{2,1}", EQ(17), EQ(0),  17),
    t3("X^7_{2,4}", LE(16), LE(34), -18),
    t3("X^7_{2,5}", LE(16), LE(55), -39),
    t3("X^7_{3,1}", EQ(23), EQ(0),  23),
    t3("X^7_{3,2}", EQ(11), EQ(0),  11),
    t3("X^7_{3,6}", LE(16), LE(83), -67),
];
