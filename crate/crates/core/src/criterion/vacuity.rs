//! Periods 2 and 3: the knot criterion cannot obstruct.
//!
//! For `p = 3` the only congruence is `J(q) ≡ J(q^{-1})` modulo
//! `q^3 − q^{-3}`, which every knot Jones polynomial satisfies; period 2 is
//! similar, with modulus `q^2 − q^{-2}`.

use serde::Serialize;

use super::congruence_defect;
use crate::laurent::{BiLaurent, QLaurent};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VacuityReport {
    pub modulus: u64,
    /// Whether `khp(−1, q)` satisfies the Jones divisibility (a sanity check on the input).
    pub divisibility_holds: bool,
}

/// `(q^N − q^{-N}) | (J(q) − J(q^{-1}))`.
pub fn jones_divisibility(jones: &QLaurent, modulus: u64) -> bool {
    congruence_defect(jones, modulus).is_zero()
}

/// Returns a report when `(p, n)` is `(2, 1)` or `(3, 1)`.
pub fn vacuity_check(khp: &BiLaurent, p: u64, n: u32) -> Option<VacuityReport> {
    if n != 1 || !(p == 2 || p == 3) {
        return None;
    }
    Some(VacuityReport {
        modulus: p,
        divisibility_holds: jones_divisibility(&khp.eval_t_minus1(), p),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trefoil_jones_divisible() {
        // J(q) of the trefoil in the q + q^{-1} normalization
        let j: QLaurent = "q^2 + q^6 - q^8".parse().unwrap();
        assert!(jones_divisibility(&j, 3));
        let khp: BiLaurent = "q + q^3 + t^2*q^5 + t^3*q^9".parse().unwrap();
        let report = vacuity_check(&khp, 3, 1).unwrap();
        assert!(report.divisibility_holds);
        assert!(vacuity_check(&khp, 2, 1).unwrap().divisibility_holds);
    }

    #[test]
    fn higher_powers_are_not_vacuous() {
        let khp = BiLaurent::lee_pair(0);
        assert!(vacuity_check(&khp, 3, 2).is_none());
        assert!(vacuity_check(&khp, 5, 1).is_none());
    }
}
