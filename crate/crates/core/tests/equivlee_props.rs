use khperiod::equivlee::{elee_poly, elee_ranks, enumerate_orbits, free_parts};
use khperiod::repcyc::{divisors, rep_dimension};
use khperiod::{fixtures, BiLaurent, HomDegreeConvention, PeriodicLinkData};
use proptest::prelude::*;

fn cyclic(k: usize, period: u64, shift: usize, linking: Vec<Vec<i64>>) -> PeriodicLinkData {
    PeriodicLinkData {
        components: k,
        period,
        permutation: (0..k).map(|i| (i + shift) % k).collect(),
        linking,
        pair_offsets: Default::default(),
    }
}

fn circulant(k: usize, vals: &[i64]) -> Vec<Vec<i64>> {
    let mut lk = vec![vec![0; k]; k];
    for i in 0..k {
        for j in 0..k {
            if i != j {
                let d = (j + k - i) % k;
                lk[i][j] = vals[d.min(k - d) - 1];
            }
        }
    }
    lk
}

proptest! {
    #[test]
    fn orbit_structure(k in 1usize..=5, vals in prop::collection::vec(-3i64..=3, 3)) {
        let data = cyclic(k, k as u64, 1, circulant(k, &vals));
        let orbits = enumerate_orbits(&data, HomDegreeConvention::default()).unwrap();
        let total: u64 = orbits.iter().map(|o| o.orbit_size).sum();
        prop_assert_eq!(total, 1u64 << k);
        for o in &orbits {
            prop_assert_eq!(o.orbit_size * o.isotropy_d, data.period);
            prop_assert_eq!(o.members.len() as u64, o.orbit_size);
        }
        // ranks already count dimensions, so over Q they add up to 2^k
        let mut sum = 0;
        for d in divisors(data.period) {
            let ranks = elee_ranks(&data, d, 0, HomDegreeConvention::default()).unwrap();
            let dim = rep_dimension(data.period, d, 0).unwrap();
            prop_assert!(ranks.values().all(|r| r % dim == 0));
            sum += ranks.values().sum::<u64>();
        }
        prop_assert_eq!(sum, 1u64 << k);
    }

    #[test]
    fn relabelling_invariance(k in 2usize..=4, vals in prop::collection::vec(-3i64..=3, 2)) {
        let data = cyclic(k, k as u64, 1, circulant(k, &vals));
        // the reverse rotation generates the same group action
        let inverse = cyclic(k, k as u64, k - 1, circulant(k, &vals));
        for d in divisors(data.period) {
            let a = elee_ranks(&data, d, 0, HomDegreeConvention::default()).unwrap();
            let b = elee_ranks(&inverse, d, 0, HomDegreeConvention::default()).unwrap();
            prop_assert_eq!(a, b);
        }
    }
}

#[test]
fn knots_have_rank_two_in_degree_zero() {
    for m in [2u64, 3, 5, 9, 25] {
        let data = PeriodicLinkData::knot(m);
        for d in divisors(m) {
            let ranks = elee_ranks(&data, d, 0, HomDegreeConvention::default()).unwrap();
            if d == m {
                assert_eq!(ranks.into_iter().collect::<Vec<_>>(), vec![(0, 2)]);
            } else {
                assert!(ranks.is_empty());
            }
        }
    }
}

#[test]
fn borromean_rings() {
    let (_, data) = fixtures::borromean();
    let want: BiLaurent = "2*q + 2*q^-1".parse().unwrap();
    assert_eq!(
        elee_poly(&data, 3, 0, HomDegreeConvention::default()).unwrap(),
        want
    );
    assert_eq!(
        elee_poly(&data, 1, 0, HomDegreeConvention::default()).unwrap(),
        want
    );
    let parts = free_parts(&data, 3, 1, 0, HomDegreeConvention::default()).unwrap();
    assert_eq!(parts, vec![want, "q + q^-1".parse().unwrap()]);
}
