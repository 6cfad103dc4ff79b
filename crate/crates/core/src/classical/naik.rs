use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::ClassicalError;
use crate::laurent::QLaurent;
use crate::repcyc::is_prime;

/// A finite abelian group `⊕ Z_{q^i}^{mult}` over primes `q`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TorsionDecomp {
    /// `(q, i) → multiplicity`.
    pub parts: BTreeMap<(u64, u32), u64>,
}

#[derive(Serialize, Deserialize)]
struct TorsionPart {
    prime: u64,
    exponent: u32,
    multiplicity: u64,
}

impl TorsionDecomp {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `mult` copies of `Z_{q^i}`.
    pub fn with(mut self, q: u64, i: u32, mult: u64) -> Self {
        if mult > 0 {
            *self.parts.entry((q, i)).or_insert(0) += mult;
        }
        self
    }

    pub fn validate(&self) -> Result<(), ClassicalError> {
        for &(q, i) in self.parts.keys() {
            if !is_prime(q) || i == 0 {
                return Err(ClassicalError::InvalidInput(format!(
                    "Z_{{{q}^{i}}} is not a cyclic group of prime-power order"
                )));
            }
        }
        Ok(())
    }
}

impl Serialize for TorsionDecomp {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let parts: Vec<TorsionPart> = self
            .parts
            .iter()
            .map(|(&(prime, exponent), &multiplicity)| TorsionPart {
                prime,
                exponent,
                multiplicity,
            })
            .collect();
        parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for TorsionDecomp {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let parts = Vec::<TorsionPart>::deserialize(deserializer)?;
        Ok(parts.into_iter().fold(TorsionDecomp::new(), |acc, part| {
            acc.with(part.prime, part.exponent, part.multiplicity)
        }))
    }
}

/// Least `l ≥ 1` with `q^l ≡ ±1 (mod p)`.
pub fn l_q(q: u64, p: u64) -> u64 {
    assert!(!q.is_multiple_of(p), "q must be invertible mod p");
    let mut x = q % p;
    let mut l = 1;
    while x != 1 && x != p - 1 {
        x = x * (q % p) % p;
        l += 1;
    }
    l
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NaikResult {
    pub passes: bool,
    /// `(q, i, multiplicity, required divisor 2·l_q)` for each failing summand.
    pub failures: Vec<(u64, u32, u64, u64)>,
}

/// Multiplicity of each `Z_{q^i}` (`q ≠ p`) in `H / H_quotient` must be a
/// multiple of `2·l_q`.
pub fn naik_multiplicity_check(
    h: &TorsionDecomp,
    h_quotient: &TorsionDecomp,
    p: u64,
) -> Result<NaikResult, ClassicalError> {
    h.validate()?;
    h_quotient.validate()?;
    for (&(q, i), &m) in &h_quotient.parts {
        let available = h.parts.get(&(q, i)).copied().unwrap_or(0);
        if m > available {
            return Err(ClassicalError::QuotientNotSubgroup(format!(
                "Z_{{{q}^{i}}} occurs {m} times in the quotient but {available} times in H"
            )));
        }
    }
    let mut failures = Vec::new();
    for (&(q, i), &m) in &h.parts {
        if q == p {
            continue;
        }
        let mult = m - h_quotient.parts.get(&(q, i)).copied().unwrap_or(0);
        let need = 2 * l_q(q, p);
        if mult % need != 0 {
            failures.push((q, i, mult, need));
        }
    }
    Ok(NaikResult {
        passes: failures.is_empty(),
        failures,
    })
}

/// Resultant of two integer polynomials (coefficients lowest degree first)
/// as the determinant of their Sylvester matrix, by fraction-free
/// elimination.
pub fn resultant(f: &[BigInt], g: &[BigInt]) -> BigInt {
    let f = trim(f);
    let g = trim(g);
    if f.is_empty() || g.is_empty() {
        return BigInt::zero();
    }
    let (m, n) = (f.len() - 1, g.len() - 1);
    if m == 0 && n == 0 {
        return BigInt::one();
    }
    if m == 0 {
        return f[0].pow(n as u32);
    }
    if n == 0 {
        return g[0].pow(m as u32);
    }
    let size = m + n;
    let mut a = vec![vec![BigInt::zero(); size]; size];
    // rows hold coefficients from the highest degree down
    for row in 0..n {
        for (k, c) in f.iter().rev().enumerate() {
            a[row][row + k] = c.clone();
        }
    }
    for row in 0..m {
        for (k, c) in g.iter().rev().enumerate() {
            a[n + row][row + k] = c.clone();
        }
    }
    bareiss_det(a)
}

fn trim(v: &[BigInt]) -> Vec<BigInt> {
    let mut out = v.to_vec();
    while out.last().is_some_and(Zero::is_zero) {
        out.pop();
    }
    out
}

fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

fn dense(poly: &QLaurent) -> Vec<BigInt> {
    poly.to_dense().1
}

/// `S_k = Π Δ(ζ) / Π Δ_0(ζ)` over `k`-th roots of unity `ζ ≠ 1`, in absolute
/// value, via resultants with `1 + t + … + t^{k−1}`.
pub fn sk_ratio(
    delta: &QLaurent,
    delta0: &QLaurent,
    k: u64,
) -> Result<BigRational, ClassicalError> {
    if k < 2 {
        return Err(ClassicalError::InvalidInput("k must be at least 2".into()));
    }
    let cyclo = vec![BigInt::one(); k as usize];
    let num = resultant(&dense(delta), &cyclo).abs();
    let den = resultant(&dense(delta0), &cyclo).abs();
    if den.is_zero() {
        return Err(ClassicalError::ZeroDenominator);
    }
    Ok(BigRational::new(num, den))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SkPrime {
    pub q: u64,
    pub s_q: u32,
    pub l_q: u64,
    pub ok: bool,
}

/// For each prime `q ≠ p` dividing `S_k`, checks `2·l_q | s_q` where `s_q`
/// is the `q`-adic valuation.
pub fn naik_sk_check(sk: &BigRational, p: u64) -> Result<Vec<SkPrime>, ClassicalError> {
    if !sk.is_integer() {
        return Err(ClassicalError::InvalidInput(format!(
            "S_k = {sk} is not an integer"
        )));
    }
    let mut n = sk.to_integer().abs();
    if n.is_zero() {
        return Err(ClassicalError::InvalidInput("S_k vanishes".into()));
    }
    let mut out = Vec::new();
    let mut q: u64 = 2;
    while BigInt::from(q) * BigInt::from(q) <= n {
        let qb = BigInt::from(q);
        let mut s = 0;
        while n.is_multiple_of(&qb) {
            n /= &qb;
            s += 1;
        }
        if s > 0 && q != p {
            out.push(sk_prime(q, s, p));
        }
        q += 1;
    }
    if n > BigInt::one() {
        let q = n.to_u64().ok_or_else(|| {
            ClassicalError::InvalidInput("S_k has a prime factor beyond 64 bits".into())
        })?;
        if q != p {
            out.push(sk_prime(q, 1, p));
        }
    }
    Ok(out)
}

fn sk_prime(q: u64, s_q: u32, p: u64) -> SkPrime {
    let l = l_q(q, p);
    SkPrime {
        q,
        s_q,
        l_q: l,
        ok: (s_q as u64).is_multiple_of(2 * l),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alex(lowest: i64, coeffs: &[i64]) -> QLaurent {
        QLaurent::from_coeffs(lowest, coeffs)
    }

    #[test]
    fn determinant_121() {
        let cyclic = TorsionDecomp::new().with(11, 2, 1);
        let split = TorsionDecomp::new().with(11, 1, 2);
        let trivial = TorsionDecomp::new();
        assert!(
            !naik_multiplicity_check(&cyclic, &trivial, 5)
                .unwrap()
                .passes
        );
        assert!(naik_multiplicity_check(&split, &trivial, 5).unwrap().passes);
        assert!(
            naik_multiplicity_check(&trivial, &trivial, 5)
                .unwrap()
                .passes
        );
        assert!(matches!(
            naik_multiplicity_check(&trivial, &split, 5),
            Err(ClassicalError::QuotientNotSubgroup(_))
        ));
    }

    #[test]
    fn l_q_values() {
        assert_eq!(l_q(11, 5), 1);
        assert_eq!(l_q(2, 5), 2);
        assert_eq!(l_q(3, 7), 3);
        assert_eq!(l_q(19, 5), 1);
    }

    #[test]
    fn resultants() {
        let f = [BigInt::from(-2), BigInt::from(0), BigInt::from(1)];
        let g = [BigInt::from(-3), BigInt::from(1)];
        // Res(t^2 - 2, t - 3) = 3^2 - 2
        assert_eq!(resultant(&f, &g).abs(), BigInt::from(7));
        assert_eq!(resultant(&g, &g), BigInt::zero());
    }

    #[test]
    fn sk_values() {
        let trefoil = alex(-1, &[1, -1, 1]);
        let one = alex(0, &[1]);
        assert_eq!(sk_ratio(&one, &one, 3).unwrap(), BigRational::one());
        assert_eq!(sk_ratio(&trefoil, &trefoil, 5).unwrap(), BigRational::one());
        assert_eq!(
            sk_ratio(&trefoil, &one, 2).unwrap(),
            BigRational::from_integer(3.into())
        );
        let d121 = alex(-1, &[30, -61, 30]);
        let s2 = sk_ratio(&d121, &one, 2).unwrap();
        assert_eq!(s2, BigRational::from_integer(121.into()));
        let primes = naik_sk_check(&s2, 5).unwrap();
        assert_eq!(
            primes,
            vec![SkPrime {
                q: 11,
                s_q: 2,
                l_q: 1,
                ok: true
            }]
        );
        assert!(sk_ratio(&trefoil, &alex(0, &[-1, 1]), 2).is_ok());
        assert!(matches!(
            sk_ratio(&trefoil, &alex(0, &[1, 1]), 2),
            Err(ClassicalError::ZeroDenominator)
        ));
    }
}
