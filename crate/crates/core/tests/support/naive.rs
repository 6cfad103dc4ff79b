//! Reference enumerator for the block-decomposition criterion.  It shares no
//! code with the library search: it lists every possible block position,
//! tries every combination of counts, and checks reconstruction and the
//! congruences with plain integer maps.

use std::collections::BTreeMap;

use khperiod::CriterionInput;

type Poly = BTreeMap<(i64, i64), i64>;

fn to_poly(p: &khperiod::BiLaurent) -> Poly {
    p.terms()
        .map(|(t, q, c)| ((t, q), i64::try_from(c).expect("small coefficient")))
        .collect()
}

fn add(poly: &mut Poly, key: (i64, i64), c: i64) {
    let e = poly.entry(key).or_insert(0);
    *e += c;
    if *e == 0 {
        poly.remove(&key);
    }
}

fn weight(p: i64, k: u32) -> i64 {
    if k == 0 {
        1
    } else {
        p.pow(k) - p.pow(k - 1)
    }
}

fn congruence_holds(diff: &Poly, modulus: i64) -> bool {
    let window = 2 * modulus;
    let mut residue = vec![0i64; window as usize];
    for (&(t, q), &c) in diff {
        let c = if t.rem_euclid(2) == 0 { c } else { -c };
        residue[q.rem_euclid(window) as usize] += c;
        residue[(-q).rem_euclid(window) as usize] -= c;
    }
    residue.iter().all(|&c| c == 0)
}

/// Whether some decomposition exists; `None` when the enumeration would
/// exceed `limit` combinations.
pub fn naive_has_decomposition(input: &CriterionInput, limit: u64) -> Option<bool> {
    let p = input.p as i64;
    let n = input.n;
    let c = if input.char_r == 2 { 1 } else { 2 };
    let khp = to_poly(&input.khp);
    let deltas: Vec<i64> = khp.keys().map(|&(t, q)| q - 2 * t).collect();
    let width = deltas.iter().max().unwrap() - deltas.iter().min().unwrap();
    let max_j = width;
    let free: Vec<Poly> = input.free_parts.iter().map(to_poly).collect();

    let mut x = khp.clone();
    for (k, f) in free.iter().enumerate() {
        for (&key, &v) in f {
            add(&mut x, key, -weight(p, k as u32) * v);
        }
    }
    if x.values().any(|&v| v < 0) {
        return Some(false);
    }

    // (k, j, low end, bound)
    let mut vars: Vec<(u32, i64, (i64, i64), i64)> = Vec::new();
    for (&(t, q), &v) in &x {
        for j in 1..=max_j {
            let Some(&w) = x.get(&(t + 1, q + 2 * c * j)) else {
                continue;
            };
            for k in 0..=n {
                let bound = v.min(w) / weight(p, k);
                if bound > 0 {
                    vars.push((k, j, (t, q), bound));
                }
            }
        }
    }
    let mut total: u64 = 1;
    for v in &vars {
        total = total.saturating_mul(v.3 as u64 + 1);
        if total > limit {
            return None;
        }
    }

    let mut counts = vec![0i64; vars.len()];
    loop {
        let mut rebuilt = Poly::new();
        for (v, &count) in vars.iter().zip(&counts) {
            if count > 0 {
                let (k, j, (t, q), _) = *v;
                let m = weight(p, k) * count;
                add(&mut rebuilt, (t, q), m);
                add(&mut rebuilt, (t + 1, q + 2 * c * j), m);
            }
        }
        if rebuilt == x {
            let mut parts: Vec<Poly> = free.clone();
            for (v, &count) in vars.iter().zip(&counts) {
                if count > 0 {
                    let (k, j, (t, q), _) = *v;
                    add(&mut parts[k as usize], (t, q), count);
                    add(&mut parts[k as usize], (t + 1, q + 2 * c * j), count);
                }
            }
            let ok = (0..n).all(|k| {
                let mut diff = parts[k as usize].clone();
                for (&key, &v) in &parts[k as usize + 1] {
                    add(&mut diff, key, -v);
                }
                congruence_holds(&diff, p.pow(n - k))
            });
            if ok {
                return Some(true);
            }
        }
        let mut idx = 0;
        loop {
            if idx == vars.len() {
                return Some(false);
            }
            if counts[idx] < vars[idx].3 {
                counts[idx] += 1;
                break;
            }
            counts[idx] = 0;
            idx += 1;
        }
    }
}
