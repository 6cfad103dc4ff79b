//! Exhaustive checks of the cyclotomic-coset identities, each compared with
//! a direct computation that does not go through the library.

use khperiod::repcyc::{cosets, cosets_with_gcd, is_max_order, totient};

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn phi(n: u64) -> u64 {
    (1..=n).filter(|&k| gcd(k, n) == 1).count() as u64
}

fn order(r: u64, n: u64) -> u64 {
    if n == 1 {
        return 1;
    }
    let mut x = r % n;
    let mut k = 1;
    while x != 1 {
        x = x * r % n;
        k += 1;
    }
    k
}

fn is_prime(n: u64) -> bool {
    n >= 2
        && (2..n)
            .take_while(|k| k * k <= n)
            .all(|k| !n.is_multiple_of(k))
}

/// Characteristics to try for modulus `m`: zero and every prime `r ≤ r_max`
/// coprime to `m`.
pub fn characteristics(m: u64, r_max: u64) -> Vec<u64> {
    std::iter::once(0)
        .chain((2..=r_max).filter(|&r| is_prime(r) && !m.is_multiple_of(r)))
        .collect()
}

/// Expected coset of `a` in `Z_m`: the `r`-power orbit, or the whole gcd
/// class in characteristic zero.
fn expected_coset(m: u64, r: u64, a: u64) -> Vec<u64> {
    let mut out: Vec<u64> = if r == 0 {
        let g = gcd(a, m);
        (0..m).filter(|&b| gcd(b, m) == g).collect()
    } else {
        let mut orbit = vec![a];
        let mut x = a * r % m;
        while x != a {
            orbit.push(x);
            x = x * r % m;
        }
        orbit
    };
    out.sort_unstable();
    out.dedup();
    out
}

#[derive(Debug, Default)]
pub struct SuiteCounts {
    pub totient_sums: u64,
    pub partitions: u64,
    pub degree_identities: u64,
    pub dimension_identities: u64,
    pub single_cosets: u64,
}

/// Runs the suite for all `m ≤ m_max` and characteristics up to `r_max`.
pub fn run_suite(m_max: u64, r_max: u64) -> Result<SuiteCounts, String> {
    let mut counts = SuiteCounts::default();
    for m in 1..=m_max {
        let divs: Vec<u64> = (1..=m).filter(|d| m % d == 0).collect();
        let sum: u64 = divs.iter().map(|&d| totient(d)).sum();
        if sum != m || divs.iter().any(|&d| totient(d) != phi(d)) {
            return Err(format!("totient sum fails for m = {m}"));
        }
        counts.totient_sums += 1;

        for r in characteristics(m, r_max) {
            let cs = cosets(m, r).map_err(|e| format!("cosets({m}, {r}): {e}"))?;
            let mut seen = vec![false; m as usize];
            for chi in &cs {
                let expected = expected_coset(m, r, chi.elements[0]);
                if chi.elements != expected {
                    return Err(format!("coset of {} in Z_{m}, r = {r}", chi.elements[0]));
                }
                if chi.d != gcd(chi.elements[0], m) {
                    return Err(format!("gcd label of {chi} in Z_{m}"));
                }
                for &a in &chi.elements {
                    if std::mem::replace(&mut seen[a as usize], true) {
                        return Err(format!("{a} lies in two cosets of Z_{m}, r = {r}"));
                    }
                }
            }
            if !seen.iter().all(|&s| s) {
                return Err(format!("cosets of Z_{m}, r = {r} do not cover"));
            }
            counts.partitions += 1;

            for &d in &divs {
                let class = cosets_with_gcd(m, r, d).map_err(|e| e.to_string())?;
                let total: u64 = class.iter().map(|c| c.elements.len() as u64).sum();
                if total != phi(m / d) {
                    return Err(format!(
                        "degree identity fails for m = {m}, r = {r}, d = {d}"
                    ));
                }
                counts.degree_identities += 1;
                let want = if r == 0 { phi(m / d) } else { order(r, m / d) };
                if class
                    .iter()
                    .any(|c| c.elements.len() as u64 != want || c.dim() != want)
                {
                    return Err(format!(
                        "dimension identity fails for m = {m}, r = {r}, d = {d}"
                    ));
                }
                counts.dimension_identities += 1;
            }
        }
    }

    for p in (2..=m_max).filter(|&p| is_prime(p)) {
        let mut n = 1u32;
        while p.pow(n) <= m_max {
            let m = p.pow(n);
            for r in characteristics(m, r_max) {
                let maximal = r == 0 || order(r, m) == phi(m);
                if is_max_order(p, n, r) != maximal {
                    return Err(format!("is_max_order({p}, {n}, {r})"));
                }
                if !maximal {
                    continue;
                }
                for s in 0..n {
                    let class = cosets_with_gcd(m, r, p.pow(s)).map_err(|e| e.to_string())?;
                    if class.len() != 1 {
                        return Err(format!(
                            "{} cosets with gcd {} in Z_{m}, r = {r}",
                            class.len(),
                            p.pow(s)
                        ));
                    }
                    counts.single_cosets += 1;
                }
            }
            n += 1;
        }
    }
    Ok(counts)
}
