mod support;

use khperiod::classical::{
    homflypt_check, l_q, murasugi_check, naik_multiplicity_check, sk_ratio, HomflyConvention,
    HomflyPoly, TorsionDecomp,
};
use khperiod::{fixtures, QLaurent};
use num_rational::BigRational;
use proptest::prelude::*;
use support::murasugi::feasible_l;

fn homfly() -> impl Strategy<Value = HomflyPoly> {
    prop::collection::vec((-4i64..=4, 0i64..=3, -3i64..=3), 0..6).prop_map(|terms| {
        HomflyPoly::from_triples(terms.into_iter().map(|(a, z, c)| (2 * a, 2 * z, c)))
    })
}

fn alex() -> impl Strategy<Value = (i64, Vec<i64>)> {
    (-3i64..=3, prop::collection::vec(-3i64..=3, 1..6)).prop_filter("nonzero ends", |(_, v)| {
        v[0] != 0 && *v.last().unwrap() != 0
    })
}

proptest! {
    #[test]
    fn homflypt_mirror_invariance(poly in homfly(), p in prop::sample::select(vec![3u64, 5, 7])) {
        for conv in [HomflyConvention::Skein, HomflyConvention::Przytycki] {
            let a = homflypt_check(&poly, p, conv);
            let b = homflypt_check(&poly.mirror(), p, conv);
            match (a, b) {
                (Ok(a), Ok(b)) => prop_assert_eq!(a.passes, b.passes),
                (a, b) => prop_assert_eq!(a.is_err(), b.is_err()),
            }
        }
    }

    #[test]
    fn murasugi_matches_shift_scan(
        (lo, coeffs) in alex(),
        (lo0, coeffs0) in prop::sample::select(vec![(0i64, vec![1i64]), (-1, vec![1, -1, 1]), (0, vec![1, -1])]),
        p in prop::sample::select(vec![2u64, 3, 5]),
        shift in -3i64..=3,
        negate in any::<bool>(),
    ) {
        let delta = QLaurent::from_coeffs(lo, &coeffs);
        let delta0 = QLaurent::from_coeffs(lo0, &coeffs0);
        let got = murasugi_check(&delta, &delta0, p, 6);
        prop_assert_eq!(&got.feasible, &feasible_l((lo, &coeffs), (lo0, &coeffs0), p, 6));
        // units do not change the answer
        let sign = if negate { -1 } else { 1 };
        let unit = QLaurent::monomial(shift, sign);
        let moved = murasugi_check(&(&delta * &unit), &(&delta0 * &unit), p, 6);
        prop_assert_eq!(got.feasible, moved.feasible);
        prop_assert_eq!(got.quotient_divides, moved.quotient_divides);
    }

    #[test]
    fn sk_at_two_is_the_determinant((lo, coeffs) in alex()) {
        let delta = QLaurent::from_coeffs(lo, &coeffs);
        let at_minus_one: i64 = coeffs.iter().enumerate().map(|(i, c)| if i % 2 == 0 { *c } else { -c }).sum();
        let one = QLaurent::monomial(0, 1);
        let s = sk_ratio(&delta, &one, 2).unwrap();
        prop_assert_eq!(s, BigRational::from_integer(at_minus_one.abs().into()));
    }

    #[test]
    fn naik_monotone(mults in prop::collection::vec(0u64..=4, 3), p in prop::sample::select(vec![3u64, 5, 7])) {
        let primes: Vec<u64> = [2u64, 11, 13].into_iter().filter(|&q| q != p).collect();
        let mut h = TorsionDecomp::new();
        for (&q, &m) in primes.iter().zip(&mults) {
            h = h.with(q, 1, m);
        }
        let trivial = TorsionDecomp::new();
        if naik_multiplicity_check(&h, &trivial, p).unwrap().passes {
            let mut bigger = TorsionDecomp::new();
            for (&(q, i), &m) in &h.parts {
                bigger = bigger.with(q, i, m * 2 * l_q(q, p));
            }
            prop_assert!(naik_multiplicity_check(&bigger, &trivial, p).unwrap().passes);
        }
    }
}

#[test]
fn trefoil_alexander() {
    let one = QLaurent::monomial(0, 1);
    let d = fixtures::alexander_trefoil();
    assert_eq!(murasugi_check(&d, &one, 3, 10).feasible, vec![2]);
    assert!(murasugi_check(&d, &one, 5, 10).feasible.is_empty());
    assert_eq!(feasible_l((-1, &[1, -1, 1]), (0, &[1]), 3, 10), vec![2]);
    assert!(feasible_l((-1, &[1, -1, 1]), (0, &[1]), 5, 10).is_empty());
}

#[test]
fn torus_homflypt() {
    let skein = HomflyConvention::Skein;
    assert!(
        homflypt_check(&fixtures::homflypt_torus_2_5(), 5, skein)
            .unwrap()
            .passes
    );
    assert!(
        homflypt_check(&fixtures::homflypt_torus_2_7(), 7, skein)
            .unwrap()
            .passes
    );
    assert!(
        !homflypt_check(&fixtures::homflypt_trefoil(), 5, skein)
            .unwrap()
            .passes
    );
}
