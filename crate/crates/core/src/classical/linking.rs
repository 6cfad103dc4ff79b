use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;

use crate::equivlee::PeriodicLinkData;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinkingResult {
    pub passes: bool,
    /// `"trivial"`, `"free"` or `"mixed"`, from the fixed components of the action.
    pub rule: &'static str,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub violations: Vec<String>,
}

fn check_multiplicities(
    label: &str,
    values: impl IntoIterator<Item = i64>,
    p: u64,
    violations: &mut Vec<String>,
) {
    let mut counts: BTreeMap<i64, u64> = BTreeMap::new();
    for v in values {
        *counts.entry(v).or_insert(0) += 1;
    }
    for (v, count) in counts {
        if count % p != 0 {
            violations.push(format!("{label}: value {v} occurs {count} times"));
        }
    }
}

/// Linking-number obstruction for a `p`-periodic link whose action on
/// components is given by `data.permutation`.
///
/// Fixed components must link each other a multiple of `p` times.  For a
/// fixed component, its linking numbers with the moved components, and the
/// linking numbers among moved components, must each take every value a
/// multiple of `p` times (pairs swapped by the action are exempt).  With no
/// fixed components this is the free-action rule; with all components fixed
/// it is the trivial-action rule.
pub fn linking_obstruction(data: &PeriodicLinkData, p: u64) -> LinkingResult {
    let k = data.components;
    let pi = &data.permutation;
    let fixed: Vec<usize> = (0..k).filter(|&i| pi[i] == i).collect();
    let moved: Vec<usize> = (0..k).filter(|&i| pi[i] != i).collect();
    let rule = if moved.is_empty() {
        "trivial"
    } else if fixed.is_empty() {
        "free"
    } else {
        "mixed"
    };
    let lk = &data.linking;
    let mut violations = Vec::new();
    for (a, &i) in fixed.iter().enumerate() {
        for &j in &fixed[a + 1..] {
            if lk[i][j].rem_euclid(p as i64) != 0 {
                violations.push(format!(
                    "lk({i},{j}) = {} is not divisible by {p}",
                    lk[i][j]
                ));
            }
        }
    }
    for &i in &fixed {
        check_multiplicities(
            &format!("component {i} against moved components"),
            moved.iter().map(|&j| lk[i][j]),
            p,
            &mut violations,
        );
    }
    let mut pairs = Vec::new();
    for (a, &i) in moved.iter().enumerate() {
        for &j in &moved[a + 1..] {
            if !(pi[i] == j && pi[j] == i) {
                pairs.push(lk[i][j]);
            }
        }
    }
    check_multiplicities("moved components", pairs, p, &mut violations);
    LinkingResult {
        passes: violations.is_empty(),
        rule,
        violations,
    }
}

/// Whether the determinant of a quotient link divides that of the link
/// (0 divides only 0).
pub fn det_divisibility(det_l: &BigInt, det_quotient: &BigInt) -> bool {
    if det_quotient.is_zero() {
        det_l.is_zero()
    } else {
        det_l.is_multiple_of(det_quotient)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trivial_pair(lk: i64) -> PeriodicLinkData {
        PeriodicLinkData {
            components: 2,
            period: 5,
            permutation: vec![0, 1],
            linking: vec![vec![0, lk], vec![lk, 0]],
            pair_offsets: Default::default(),
        }
    }

    #[test]
    fn trivial_action() {
        let ok = linking_obstruction(&trivial_pair(5), 5);
        assert!(ok.passes);
        assert_eq!(ok.rule, "trivial");
        assert!(!linking_obstruction(&trivial_pair(3), 5).passes);
        assert!(linking_obstruction(&trivial_pair(0), 5).passes);
    }

    #[test]
    fn free_orbit_of_five() {
        // lk(i, j) depends only on (j - i) mod 5: each value appears 5 times among the 10 pairs
        let dist = |i: usize, j: usize| {
            let d = (j + 5 - i) % 5;
            if d == 1 || d == 4 {
                2
            } else {
                -1
            }
        };
        let mut linking = vec![vec![0; 5]; 5];
        for i in 0..5 {
            for j in 0..5 {
                if i != j {
                    linking[i][j] = dist(i, j);
                }
            }
        }
        let data = PeriodicLinkData {
            components: 5,
            period: 5,
            permutation: vec![1, 2, 3, 4, 0],
            linking,
            pair_offsets: Default::default(),
        };
        let r = linking_obstruction(&data, 5);
        assert!(r.passes);
        assert_eq!(r.rule, "free");
        let mut broken = data.clone();
        broken.linking[0][1] = 7;
        broken.linking[1][0] = 7;
        assert!(!linking_obstruction(&broken, 5).passes);
    }

    #[test]
    fn determinants() {
        let b = |x: i64| BigInt::from(x);
        assert!(det_divisibility(&b(15), &b(3)));
        assert!(!det_divisibility(&b(15), &b(4)));
        assert!(det_divisibility(&b(0), &b(0)));
        assert!(!det_divisibility(&b(5), &b(0)));
    }
}
