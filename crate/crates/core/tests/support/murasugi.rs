//! Shift-scan reference for the Alexander congruence: expands the right-hand
//! side over the integers and compares it with `Δ` under every shift and
//! sign.

fn mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn pow(a: &[i64], e: u64) -> Vec<i64> {
    (0..e).fold(vec![1], |acc, _| mul(&acc, a))
}

/// Values of `l ≤ l_max` for which `Δ ≡ ±t^k Δ_0^p (1 + … + t^{l−1})^{p−1}`
/// modulo `p` for some `k`.  Polynomials are coefficient lists, lowest
/// degree first, with their lowest exponents.
pub fn feasible_l(delta: (i64, &[i64]), delta0: (i64, &[i64]), p: u64, l_max: u64) -> Vec<u64> {
    let pi = p as i64;
    let lhs = |e: i64| -> i64 {
        let idx = e - delta.0;
        if idx < 0 || idx >= delta.1.len() as i64 {
            0
        } else {
            delta.1[idx as usize].rem_euclid(pi)
        }
    };
    let mut out = Vec::new();
    for l in 1..=l_max {
        let rhs = mul(&pow(delta0.1, p), &pow(&vec![1; l as usize], p - 1));
        let rhs_low = delta0.0 * pi;
        let reach = (delta.1.len() + rhs.len()) as i64 + pi;
        let found = (-reach..=reach).any(|k| {
            [1i64, -1].iter().any(|&sign| {
                let lo = (delta.0).min(rhs_low + k);
                let hi = (delta.0 + delta.1.len() as i64).max(rhs_low + k + rhs.len() as i64);
                (lo..hi).all(|e| {
                    let idx = e - rhs_low - k;
                    let r = if idx < 0 || idx >= rhs.len() as i64 {
                        0
                    } else {
                        rhs[idx as usize]
                    };
                    (sign * r).rem_euclid(pi) == lhs(e)
                })
            })
        });
        if found {
            out.push(l);
        }
    }
    out
}
