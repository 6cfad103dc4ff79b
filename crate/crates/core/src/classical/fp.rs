//! Dense polynomials over `F_p` as coefficient vectors, lowest degree first.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::laurent::QLaurent;

/// Reduces a Laurent polynomial mod `p` and strips the unit `t^{min}`,
/// returning coefficients in `[0, p)` without leading or trailing zeros.
pub fn normalize(poly: &QLaurent, p: u64) -> Vec<u64> {
    let modulus = BigInt::from(p);
    let (_, dense) = poly.to_dense();
    let v: Vec<u64> = dense
        .iter()
        .map(|c| c.mod_floor(&modulus).to_u64().unwrap())
        .collect();
    trim(v)
}

pub fn trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    let lead = v.iter().take_while(|&&c| c == 0).count();
    v.drain(..lead);
    v
}

pub fn neg(v: &[u64], p: u64) -> Vec<u64> {
    v.iter().map(|&c| (p - c) % p).collect()
}

pub fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    out
}

pub fn pow(a: &[u64], e: u64, p: u64) -> Vec<u64> {
    let mut out = vec![1 % p];
    for _ in 0..e {
        out = mul(&out, a, p);
    }
    out
}

/// Divides `a` by a monic `b` over `F_p`; `None` if the remainder is nonzero.
pub fn div_exact_monic(a: &[u64], b: &[u64], p: u64) -> Option<Vec<u64>> {
    debug_assert_eq!(b.last(), Some(&1));
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let mut rem = a.to_vec();
    let mut quot = vec![0u64; a.len() - b.len() + 1];
    for i in (0..quot.len()).rev() {
        let c = rem[i + b.len() - 1];
        quot[i] = c;
        if c != 0 {
            for (j, &bj) in b.iter().enumerate() {
                rem[i + j] = (rem[i + j] + p - (c * bj) % p) % p;
            }
        }
    }
    if rem.iter().all(|&c| c == 0) {
        Some(quot)
    } else {
        None
    }
}
