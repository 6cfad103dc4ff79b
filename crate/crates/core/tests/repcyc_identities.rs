mod support;

use khperiod::repcyc::{reduce_coset, restriction_mult, CyclotomicCoset};
use support::cosets::{characteristics, run_suite};

#[test]
fn coset_identities_up_to_200() {
    let counts = run_suite(200, 50).unwrap();
    assert_eq!(counts.totient_sums, 200);
    assert!(counts.partitions > 2000);
    assert!(counts.single_cosets > 0);
}

#[test]
fn restriction_to_subgroups() {
    for (p, n) in [(3u64, 2u32), (5, 2), (3, 3), (7, 1)] {
        let m = p.pow(n);
        for r in characteristics(m, 50) {
            for a in 0..m {
                let chi = CyclotomicCoset::of(m, r, a).unwrap();
                let t = (0..=n)
                    .rev()
                    .find(|&t| chi.d.is_multiple_of(p.pow(t)))
                    .unwrap();
                for s in 0..=n {
                    let res = restriction_mult(&chi, p, s).unwrap();
                    assert_eq!(res.trivial, s <= t);
                    assert_eq!(res.alpha * res.target.dim(), chi.dim());
                    if res.trivial {
                        assert_eq!(res.target.elements, vec![0]);
                    }
                }
                let reduced = reduce_coset(&chi, p).unwrap();
                assert_eq!(reduced.m, m / chi.d);
                assert_eq!(reduced.dim(), chi.dim());
            }
        }
    }
}
