//! Invariants of a few small knots and links, for tests, examples and
//! benchmarks.  Khovanov polynomials are over `Q` unless stated otherwise;
//! HOMFLYPT polynomials use the skein convention
//! `a P(L+) − a^{-1} P(L−) = z P(L0)`.

use crate::classical::{AlexPoly, HomflyPoly};
use crate::equivlee::PeriodicLinkData;
use crate::laurent::{BiLaurent, QLaurent};

fn parse(s: &str) -> BiLaurent {
    s.parse().expect("fixture polynomial")
}

/// A knot fixture: Khovanov polynomial and s-invariant.
#[derive(Clone, Debug)]
pub struct KnotFixture {
    pub name: &'static str,
    pub khp: BiLaurent,
    pub s: i64,
    pub char_r: u64,
}

pub fn unknot() -> KnotFixture {
    KnotFixture {
        name: "0_1",
        khp: BiLaurent::lee_pair(0),
        s: 0,
        char_r: 0,
    }
}

/// Right-handed trefoil.
pub fn trefoil() -> KnotFixture {
    KnotFixture {
        name: "3_1",
        khp: parse("q + q^3 + t^2*q^5 + t^3*q^9"),
        s: 2,
        char_r: 0,
    }
}

pub fn figure_eight() -> KnotFixture {
    KnotFixture {
        name: "4_1",
        khp: parse("t^-2*q^-5 + t^-1*q^-1 + q^-1 + q + t*q + t^2*q^5"),
        s: 0,
        char_r: 0,
    }
}

/// Torus knot `T(2, k)` for odd `k ≥ 3`.
pub fn torus_2(k: i64) -> KnotFixture {
    assert!(k >= 3 && k % 2 == 1);
    let s = k - 1;
    let mut khp = BiLaurent::lee_pair(s);
    for i in 1..=(k - 1) / 2 {
        khp += &(&BiLaurent::block(2, 1) * &BiLaurent::monomial(2 * i, k + 4 * i - 2, 1));
    }
    KnotFixture {
        name: match k {
            3 => "T(2,3)",
            5 => "T(2,5)",
            7 => "T(2,7)",
            _ => "T(2,k)",
        },
        khp,
        s,
        char_r: 0,
    }
}

/// The knot 15n135221 over `F_3`: Khovanov homology table as
/// `(t, q, rank)`, with `s = 0`.
pub fn knot_15n135221() -> KnotFixture {
    #[rustfmt::skip]
    const TABLE: [(i64, i64, i64); 35] = [
        (-7, -15, 1), (-6, -13, 3), (-6, -11, 1), (-5, -11, 5), (-5, -9, 3),
        (-4, -9, 7), (-4, -7, 5), (-3, -9, 1), (-3, -7, 8), (-3, -5, 7),
        (-2, -7, 3), (-2, -5, 9), (-2, -3, 8), (-1, -5, 5), (-1, -3, 10),
        (-1, -1, 8), (0, -3, 7), (0, -1, 11), (0, 1, 8), (1, -1, 8),
        (1, 1, 10), (1, 3, 5), (2, 1, 8), (2, 3, 9), (2, 5, 3),
        (3, 3, 7), (3, 5, 8), (3, 7, 1), (4, 5, 5), (4, 7, 7),
        (5, 7, 3), (5, 9, 5), (6, 9, 1), (6, 11, 3), (7, 13, 1),
    ];
    KnotFixture {
        name: "15n135221",
        khp: BiLaurent::from_terms(TABLE),
        s: 0,
        char_r: 3,
    }
}

/// Candidate `S_01` for 15n135221 at `p = 5`: the block polynomial
/// reduced mod 4.  The table's rank 7 at `(0, -3)` forces the coefficient
/// 3 of `q^-3`.
pub fn s01_15n135221() -> BiLaurent {
    parse(
        "t^-7*q^-15 + 3*t^-6*q^-13 + t^-5*q^-11 + 3*t^-4*q^-9 + t^-3*q^-9 + 3*t^-2*q^-7 \
         + t^-1*q^-5 + 3*t^-1*q^-3 + 3*q^-3 + q^-1 + 3*t*q + t^2*q^3 + 3*t^3*q^3 + t^4*q^5 \
         + 3*t^5*q^7 + t^6*q^9",
    )
}

/// `S_01` with coefficient 1 at `q^-3`, as it appears in the commonly
/// quoted decomposition; together with [`s11_15n135221`] it does not
/// reproduce the homology table (ranks 5 and 8 instead of 7 and 10 at
/// `(0, -3)` and `(1, 1)`).
pub fn s01_15n135221_printed() -> BiLaurent {
    &s01_15n135221() - &BiLaurent::monomial(0, -3, 2)
}

/// The Khovanov polynomial assembled from the printed decomposition.
pub fn khp_15n135221_printed() -> BiLaurent {
    let blocks = &s01_15n135221_printed() + &s11_15n135221().scale_i64(4);
    &BiLaurent::lee_pair(0) + &(&BiLaurent::block(2, 1) * &blocks)
}

/// Candidate `S_11` for 15n135221 at `p = 5`.
pub fn s11_15n135221() -> BiLaurent {
    parse(
        "t^-5*q^-11 + t^-4*q^-9 + 2*t^-3*q^-7 + 2*t^-2*q^-5 + t^-1*q^-5 + t^-1*q^-3 \
         + 2*t*q^-1 + q^-3 + q^-1 + 2*t^2*q + t^3*q^3 + t^4*q^5",
    )
}

/// Borromean rings with the 3-periodic symmetry cycling the components.
pub fn borromean() -> (BiLaurent, PeriodicLinkData) {
    let khp = parse(
        "t^-3*q^-7 + 2*t^-2*q^-5 + t^-2*q^-3 + 2*t^-1*q^-1 + 4*q^-1 + 4*q + 2*t*q \
         + t^2*q^3 + 2*t^2*q^5 + t^3*q^7",
    );
    (khp, PeriodicLinkData::cyclic_unlinked(3))
}

/// Two-component unlink with the trivial action of `Z_m`.
pub fn unlink2(m: u64) -> (BiLaurent, PeriodicLinkData) {
    let mut data = PeriodicLinkData::cyclic_unlinked(2);
    data.permutation = vec![0, 1];
    data.period = m;
    data.pair_offsets.insert("++".into(), 1);
    data.pair_offsets.insert("+-".into(), -1);
    (parse("q^-2 + 2 + q^2"), data)
}

pub fn alexander_trefoil() -> AlexPoly {
    QLaurent::from_coeffs(-1, &[1, -1, 1])
}

pub fn homflypt_trefoil() -> HomflyPoly {
    HomflyPoly::from_triples([(-4, 0, -1), (-2, 0, 2), (-2, 2, 1)])
}

pub fn homflypt_torus_2_5() -> HomflyPoly {
    HomflyPoly::from_triples([(-4, 4, 1), (-4, 2, 4), (-4, 0, 3), (-6, 2, -1), (-6, 0, -2)])
}

pub fn homflypt_torus_2_7() -> HomflyPoly {
    HomflyPoly::from_triples([
        (-6, 6, 1),
        (-6, 4, 6),
        (-6, 2, 10),
        (-6, 0, 4),
        (-8, 4, -1),
        (-8, 2, -4),
        (-8, 0, -3),
    ])
}
