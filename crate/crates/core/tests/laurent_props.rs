use std::collections::BTreeMap;

use khperiod::{BiLaurent, QLaurent};
use num_bigint::BigInt;
use proptest::prelude::*;

fn bi() -> impl Strategy<Value = BiLaurent> {
    prop::collection::vec((-3i64..=3, -6i64..=6, -3i64..=3), 0..6).prop_map(BiLaurent::from_terms)
}

fn uni() -> impl Strategy<Value = QLaurent> {
    prop::collection::vec((-12i64..=12, -4i64..=4), 0..8).prop_map(QLaurent::from_terms)
}

/// Residues of exponents modulo `2N`, computed with plain integers.
fn reduce_by_hand(x: &QLaurent, n: u64) -> BTreeMap<u64, i64> {
    let mut out = BTreeMap::new();
    for (e, c) in x.terms() {
        let c: i64 = c.try_into().unwrap();
        *out.entry(e.rem_euclid(2 * n as i64) as u64).or_insert(0) += c;
    }
    out.retain(|_, c| *c != 0);
    out
}

proptest! {
    #[test]
    fn ring_axioms(a in bi(), b in bi(), c in bi()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &BiLaurent::one(), a.clone());
    }

    #[test]
    fn text_round_trip(a in bi(), x in uni()) {
        let back: BiLaurent = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
        let back: QLaurent = x.to_string().parse().unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn evaluation_is_multiplicative(a in bi(), b in bi()) {
        prop_assert_eq!((&a * &b).eval_t_minus1(), &a.eval_t_minus1() * &b.eval_t_minus1());
        prop_assert_eq!((&a + &b).eval_t_minus1(), &a.eval_t_minus1() + &b.eval_t_minus1());
    }

    #[test]
    fn reduction_matches_direct_computation(x in uni(), n in 1u64..=9) {
        let r = x.reduce_mod(n);
        let got: BTreeMap<u64, i64> = r.terms().map(|(e, c)| (e, c.try_into().unwrap())).collect();
        prop_assert_eq!(got, reduce_by_hand(&x, n));
    }

    #[test]
    fn reduction_is_a_homomorphism(x in uni(), y in uni(), n in 1u64..=9) {
        prop_assert_eq!((&x + &y).reduce_mod(n), &x.reduce_mod(n) + &y.reduce_mod(n));
        prop_assert_eq!((&x * &y).reduce_mod(n), &x.reduce_mod(n) * &y.reduce_mod(n));
        prop_assert_eq!(x.shift(2 * n as i64).reduce_mod(n), x.reduce_mod(n));
    }

    #[test]
    fn mirror_laws(x in uni(), n in 1u64..=9) {
        prop_assert_eq!(x.mirror().mirror(), x.clone());
        prop_assert_eq!(x.mirror().reduce_mod(n), x.reduce_mod(n).mirror());
    }

    #[test]
    fn block_division_inverts_multiplication(a in prop::collection::vec((-3i64..=3, -6i64..=6, 0i64..=3), 0..6), c in 1i64..=2) {
        let s = BiLaurent::from_terms(a);
        let x = &s * &BiLaurent::block(c, 1);
        prop_assert_eq!(x.div_block_nonneg(2 * c), Some(s));
    }
}

#[test]
fn scalar_division() {
    let x: BiLaurent = "4*t*q^3 - 8*q".parse().unwrap();
    assert_eq!(
        x.div_exact_scalar(&BigInt::from(4)).unwrap(),
        "t*q^3 - 2*q".parse().unwrap()
    );
    assert!(x.div_exact_scalar(&BigInt::from(3)).is_err());
}
