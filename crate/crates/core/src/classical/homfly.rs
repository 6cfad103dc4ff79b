use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize, Serializer};

use super::fp;
use crate::error::ClassicalError;
use crate::laurent::QLaurent;

/// Skein normalization of the HOMFLYPT polynomial; it fixes which unit
/// `u` generates the ring together with `a^±1`, `z` and `u/z`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HomflyConvention {
    /// `a P(L+) − a^{-1} P(L−) = z P(L0)`; `u = a − a^{-1}`.
    #[default]
    Skein,
    /// `a P(L+) + a^{-1} P(L−) + z P(L0) = 0`; `u = a + a^{-1}`.
    Przytycki,
}

impl HomflyConvention {
    /// `a^2 ∓ 1`, the unit `u` with the factor `a^{-1}` removed.
    fn monic_divisor(self, p: u64) -> Vec<u64> {
        match self {
            HomflyConvention::Skein => vec![p - 1, 0, 1],
            HomflyConvention::Przytycki => vec![1, 0, 1],
        }
    }
}

/// HOMFLYPT polynomial keyed by `(a_exp, z_exp)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HomflyPoly {
    terms: BTreeMap<(i64, i64), BigInt>,
}

impl HomflyPoly {
    pub fn from_triples<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, i64, C)>,
        C: Into<BigInt>,
    {
        let mut out = Self::default();
        for (a, z, c) in terms {
            let c = c.into();
            let entry = out.terms.entry((a, z)).or_default();
            *entry += c;
            if *entry == BigInt::from(0) {
                out.terms.remove(&(a, z));
            }
        }
        out
    }

    pub fn triples(&self) -> impl Iterator<Item = (i64, i64, &BigInt)> + '_ {
        self.terms.iter().map(|(&(a, z), c)| (a, z, c))
    }

    /// `P(a^{-1}, z)`.
    pub fn mirror(&self) -> Self {
        Self::from_triples(self.triples().map(|(a, z, c)| (-a, z, c.clone())))
    }

    /// Coefficient of `z^k` as a Laurent polynomial in `a`.
    pub fn z_coefficients(&self) -> BTreeMap<i64, QLaurent> {
        let mut out: BTreeMap<i64, QLaurent> = BTreeMap::new();
        for (a, z, c) in self.triples() {
            out.entry(z).or_default().add_term(a, c.clone());
        }
        out
    }

    /// Checks that `z^{-k}` terms are divisible by `u^k` over `Z`.
    pub fn check_ring(&self, convention: HomflyConvention) -> Result<(), ClassicalError> {
        let unit = match convention {
            HomflyConvention::Skein => QLaurent::from_terms([(1, 1), (-1, -1)]),
            HomflyConvention::Przytycki => QLaurent::from_terms([(1, 1), (-1, 1)]),
        };
        for (z, coeff) in self.z_coefficients() {
            if z >= 0 {
                continue;
            }
            let mut power = QLaurent::from_terms([(0, 1)]);
            for _ in 0..-z {
                power = &power * &unit;
            }
            if !super::quotient_divides(&coeff, &power) {
                return Err(ClassicalError::NotInRing(format!(
                    "coefficient of z^{z} is not divisible by u^{}",
                    -z
                )));
            }
        }
        Ok(())
    }
}

impl fmt::Display for HomflyPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (a, z, c)) in self.triples().enumerate() {
            if n == 0 {
                write!(f, "{c}")?;
            } else if c.sign() == num_bigint::Sign::Minus {
                write!(f, " - {}", -c)?;
            } else {
                write!(f, " + {c}")?;
            }
            write!(f, "*a^{a}*z^{z}")?;
        }
        Ok(())
    }
}

impl Serialize for HomflyPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomflyResult {
    pub passes: bool,
    /// `z`-degrees whose coefficient of `P(a,z) − P(a^{-1},z)` fails the test.
    pub failing_z_degrees: Vec<i64>,
}

/// Tests `P(a, z) ≡ P(a^{-1}, z)` modulo the ideal `(p, z^p)` of the ring
/// generated by `a^±1, z, u/z`: every `z^k` coefficient of the difference
/// with `k < p` must be divisible by `u^{p−k}` over `F_p`.
pub fn homflypt_check(
    poly: &HomflyPoly,
    p: u64,
    convention: HomflyConvention,
) -> Result<HomflyResult, ClassicalError> {
    poly.check_ring(convention)?;
    let mirror = poly.mirror();
    let diff = HomflyPoly::from_triples(
        poly.triples()
            .map(|(a, z, c)| (a, z, c.clone()))
            .chain(mirror.triples().map(|(a, z, c)| (a, z, -c))),
    );
    let divisor = convention.monic_divisor(p);
    let mut failing = Vec::new();
    for (k, coeff) in diff.z_coefficients() {
        if k >= p as i64 {
            continue;
        }
        let reduced = fp::normalize(&coeff, p);
        let power = fp::pow(&divisor, (p as i64 - k) as u64, p);
        if fp::div_exact_monic(&reduced, &power, p).is_none() {
            failing.push(k);
        }
    }
    Ok(HomflyResult {
        passes: failing.is_empty(),
        failing_z_degrees: failing,
    })
}
