//! Arithmetic of cyclic group algebras over `Q` and over prime fields.
//!
//! Irreducible `F_r[Z_m]`-modules are indexed by cyclotomic cosets, the
//! orbits of multiplication by `r` on `Z_m`.  Characteristic zero is encoded
//! as `r = 0`; there the "cosets" are the gcd classes `{a : gcd(a, m) = d}`,
//! matching `Q[Z_m] = ⊕_{d|m} Q(ξ_d)`.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use crate::error::RepError;

/// Euler's totient; `totient(1) = 1`.
pub fn totient(d: u64) -> u64 {
    assert!(d >= 1, "totient of zero");
    let mut n = d;
    let mut result = d;
    let mut f = 2;
    while f * f <= n {
        if n.is_multiple_of(f) {
            while n.is_multiple_of(f) {
                n /= f;
            }
            result -= result / f;
        }
        f += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Positive divisors of `m` in increasing order.
pub fn divisors(m: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut f = 1;
    while f * f <= m {
        if m.is_multiple_of(f) {
            small.push(f);
            if f * f != m {
                large.push(m / f);
            }
        }
        f += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut f = 2;
    while f * f <= n {
        if n.is_multiple_of(f) {
            return false;
        }
        f += 1;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// Least `f ≥ 1` with `r^f ≡ 1 (mod d)`.
pub fn mult_order(r: u64, d: u64) -> Result<u64, RepError> {
    if d == 0 {
        return Err(RepError::ZeroModulus);
    }
    if d == 1 {
        return Ok(1);
    }
    if r.gcd(&d) != 1 {
        return Err(RepError::NotCoprime { r, m: d });
    }
    let r = r % d;
    let mut x = r;
    let mut f = 1;
    while x != 1 {
        x = mul_mod(x, r, d);
        f += 1;
    }
    Ok(f)
}

/// An orbit of multiplication by `r` on `Z_m` (a gcd class when `r = 0`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CyclotomicCoset {
    pub m: u64,
    pub r: u64,
    /// Common value of `gcd(a, m)` over the elements.
    pub d: u64,
    /// Sorted; the first element is the canonical representative.
    pub elements: Vec<u64>,
}

impl CyclotomicCoset {
    /// The coset of `a` in `Z_m`.
    pub fn of(m: u64, r: u64, a: u64) -> Result<Self, RepError> {
        if m == 0 {
            return Err(RepError::ZeroModulus);
        }
        let a = a % m;
        let d = a.gcd(&m);
        let elements: BTreeSet<u64> = if r == 0 {
            (0..m).filter(|x| x.gcd(&m) == d).collect()
        } else {
            if r.gcd(&m) != 1 {
                return Err(RepError::NotCoprime { r, m });
            }
            let mut set = BTreeSet::new();
            let mut x = a;
            while set.insert(x) {
                x = mul_mod(x, r, m);
            }
            set
        };
        Ok(Self {
            m,
            r,
            d,
            elements: elements.into_iter().collect(),
        })
    }

    pub fn representative(&self) -> u64 {
        self.elements[0]
    }

    /// Dimension of the irreducible module `V_χ` over the base field.
    pub fn dim(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn contains(&self, a: u64) -> bool {
        self.elements.binary_search(&(a % self.m)).is_ok()
    }
}

impl fmt::Display for CyclotomicCoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.elements.iter().map(u64::to_string).collect();
        write!(f, "{{{}}} mod {}", items.join(","), self.m)
    }
}

/// Partition of `Z_m` into cyclotomic cosets, ordered by representative.
pub fn cosets(m: u64, r: u64) -> Result<Vec<CyclotomicCoset>, RepError> {
    if m == 0 {
        return Err(RepError::ZeroModulus);
    }
    if r != 0 && r.gcd(&m) != 1 {
        return Err(RepError::NotCoprime { r, m });
    }
    let mut seen = vec![false; m as usize];
    let mut out = Vec::new();
    for a in 0..m {
        if seen[a as usize] {
            continue;
        }
        let c = CyclotomicCoset::of(m, r, a)?;
        for &x in &c.elements {
            seen[x as usize] = true;
        }
        out.push(c);
    }
    Ok(out)
}

/// Cosets of `Z_m` whose elements have gcd `d` with `m`.
pub fn cosets_with_gcd(m: u64, r: u64, d: u64) -> Result<Vec<CyclotomicCoset>, RepError> {
    Ok(cosets(m, r)?.into_iter().filter(|c| c.d == d).collect())
}

/// Dimension of the irreducible summands attached to gcd `d` in `F[Z_m]`:
/// `φ(m/d)` over `Q`, `ord_{m/d}(r)` over `F_r`.
pub fn rep_dimension(m: u64, d: u64, r: u64) -> Result<u64, RepError> {
    if m == 0 || d == 0 || !m.is_multiple_of(d) {
        return Err(RepError::ZeroModulus);
    }
    if r == 0 {
        Ok(totient(m / d))
    } else {
        mult_order(r, m / d)
    }
}

/// Whether `r` generates `(Z/p^n)^×`.  Always true in characteristic zero.
pub fn is_max_order(p: u64, n: u32, r: u64) -> bool {
    if r == 0 {
        return true;
    }
    let pn = p.pow(n);
    if r.is_multiple_of(p) {
        return false;
    }
    mult_order(r, pn).map(|f| f == totient(pn)).unwrap_or(false)
}

/// `k · χ`, the image of the coset under multiplication by `k`.
pub fn coset_scale(chi: &CyclotomicCoset, k: u64) -> CyclotomicCoset {
    CyclotomicCoset::of(chi.m, chi.r, mul_mod(chi.representative(), k, chi.m))
        .expect("scaling preserves validity")
}

/// Exponent `t` with `m = p^n`, `d = p^t`.
fn prime_power_exponent(p: u64, x: u64) -> Result<u32, RepError> {
    let mut e = 0;
    let mut y = x;
    while y > 1 {
        if !y.is_multiple_of(p) {
            return Err(RepError::NotPrimePower(x));
        }
        y /= p;
        e += 1;
    }
    Ok(e)
}

/// The bijection `C(p^n, r)_{p^t} → C(p^{n−t}, r)_1` induced by dividing by `p^t`.
pub fn reduce_coset(chi: &CyclotomicCoset, p: u64) -> Result<CyclotomicCoset, RepError> {
    prime_power_exponent(p, chi.m)?;
    prime_power_exponent(p, chi.d)?;
    let target = chi.m / chi.d;
    CyclotomicCoset::of(target, chi.r, (chi.representative() / chi.d) % target)
}

/// Restriction of `V_χ` from `Z_{p^n}` to its subgroup of order `p^s`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Restriction {
    /// `p^{n−s}·χ`, the coset (in `Z_{p^n}`) labelling the restricted summand.
    pub target: CyclotomicCoset,
    /// Multiplicity `dim V_χ / dim V_target`.
    pub alpha: u64,
    /// True when the restriction is a sum of trivial modules (`s ≤ t`).
    pub trivial: bool,
}

pub fn restriction_mult(chi: &CyclotomicCoset, p: u64, s: u32) -> Result<Restriction, RepError> {
    let n = prime_power_exponent(p, chi.m)?;
    let t = prime_power_exponent(p, chi.d)?;
    assert!(s <= n, "restriction target exceeds the group");
    let target = coset_scale(chi, p.pow(n - s));
    let alpha = chi.dim() / target.dim();
    Ok(Restriction {
        trivial: s <= t,
        target,
        alpha,
    })
}
