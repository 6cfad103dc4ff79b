use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;

use super::fp;
use crate::laurent::QLaurent;

/// Alexander polynomial in `t`, stored as a one-variable Laurent polynomial.
pub type AlexPoly = QLaurent;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MurasugiResult {
    /// Values of `l` in `[1, l_max]` for which the congruence holds.
    pub feasible: Vec<u64>,
    /// Whether `Δ_0` divides `Δ` over `Z[t^±1]`.
    pub quotient_divides: bool,
    /// Set when `Δ` is not symmetric up to a unit.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
}

impl MurasugiResult {
    /// The pair `(Δ_0, p)` is obstructed when no `l` works or `Δ_0 ∤ Δ`.
    pub fn obstructed(&self) -> bool {
        self.feasible.is_empty() || !self.quotient_divides
    }
}

fn is_symmetric(delta: &QLaurent) -> bool {
    let (_, v) = delta.to_dense();
    let rev: Vec<BigInt> = v.iter().rev().cloned().collect();
    v == rev || v.iter().zip(&rev).all(|(a, b)| a == &-b)
}

/// Tests `Δ ≡ ±t^k Δ_0^p (1 + t + … + t^{l−1})^{p−1} (mod p)` for each
/// `l ≤ l_max`.  Both sides are compared after stripping powers of `t`, which
/// covers every shift `k`.
pub fn murasugi_check(delta: &AlexPoly, delta0: &AlexPoly, p: u64, l_max: u64) -> MurasugiResult {
    let lhs = fp::normalize(delta, p);
    let base = fp::pow(&fp::normalize(delta0, p), p, p);
    let mut feasible = Vec::new();
    for l in 1..=l_max {
        let ones = vec![1u64; l as usize];
        let rhs = fp::trim(fp::mul(&base, &fp::pow(&ones, p - 1, p), p));
        if !rhs.is_empty() && (lhs == rhs || lhs == fp::neg(&rhs, p)) {
            feasible.push(l);
        }
    }
    let mut warnings = Vec::new();
    if !is_symmetric(delta) {
        warnings.push("Alexander polynomial is not symmetric up to a unit".to_string());
    }
    MurasugiResult {
        feasible,
        quotient_divides: quotient_divides(delta, delta0),
        warnings,
    }
}

/// Whether `divisor | poly` in `Z[t^±1]`.
pub fn quotient_divides(poly: &QLaurent, divisor: &QLaurent) -> bool {
    if divisor.is_zero() {
        return poly.is_zero();
    }
    if poly.is_zero() {
        return true;
    }
    let (_, mut rem) = poly.to_dense();
    let (_, d) = divisor.to_dense();
    let lead = d.last().unwrap().clone();
    while rem.len() >= d.len() {
        let top = rem.last().unwrap().clone();
        if !top.is_zero() {
            let (q, r) = top.div_rem(&lead);
            if !r.is_zero() {
                return false;
            }
            let shift = rem.len() - d.len();
            for (i, c) in d.iter().enumerate() {
                rem[shift + i] -= &q * c;
            }
        }
        rem.pop();
    }
    rem.iter().all(Zero::is_zero)
}
