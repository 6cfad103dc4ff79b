//! Complete depth-first search over block decompositions.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::{
    first_negative, remainder_after_free_parts, validate, Certificate, CriterionInput,
    Decomposition, Verdict,
};
use crate::error::CriterionError;
use crate::laurent::BiLaurent;

/// Searches every decomposition of `khp − Σ m_k F_k` into non-negative
/// blocks `m_k (1 + t q^{2cj}) S_kj`, stopping at the first one that also
/// passes the congruence conditions.
///
/// The least remaining monomial (by `t`, then `q`) can only be the low end
/// of a block, so the search branches over how its coefficient is split
/// among the admissible `(k, j)` and recurses on the rest.
pub fn brute_force_check(input: &CriterionInput, cap: u64) -> Result<Verdict, CriterionError> {
    input.check_admissible()?;
    let mass = input.khp.mass();
    if mass > BigInt::from(cap) {
        return Err(CriterionError::SearchCapExceeded { mass, cap });
    }
    let x = remainder_after_free_parts(input);
    if let Some((t_exp, q_exp)) = first_negative(&x) {
        return Ok(Verdict::obstructed(
            "brute_force",
            Certificate::NegativeRemainder { t_exp, q_exp },
        ));
    }
    let rem: BTreeMap<(i64, i64), u64> = x
        .terms()
        .map(|(t, q, c)| ((t, q), c.to_u64().expect("bounded by the cap")))
        .collect();
    let weights: Vec<Option<u64>> = (0..=input.n)
        .map(|k| input.multiplicity(k).to_u64())
        .collect();
    let mut search = Search {
        input,
        c: input.c(),
        max_j: input.max_j(),
        weights,
        chosen: Vec::new(),
        cases: 0,
        witness: None,
    };
    search.dfs(rem);
    let certificate = Certificate::BruteForce {
        cases: search.cases,
    };
    Ok(match search.witness {
        Some(w) => Verdict::unobstructed("brute_force", w, Some(certificate)),
        None => Verdict::obstructed("brute_force", certificate),
    })
}

struct Search<'a> {
    input: &'a CriterionInput,
    c: i64,
    max_j: i64,
    weights: Vec<Option<u64>>,
    /// `(k, j, t, q, count)` for every placed group of blocks.
    chosen: Vec<(u32, i64, i64, i64, u64)>,
    cases: u64,
    witness: Option<Decomposition>,
}

impl Search<'_> {
    fn dfs(&mut self, mut rem: BTreeMap<(i64, i64), u64>) -> bool {
        let Some((&(t, q), &coeff)) = rem.iter().next() else {
            return self.leaf();
        };
        rem.remove(&(t, q));
        let mut options = Vec::new();
        for j in 1..=self.max_j {
            if !rem.contains_key(&(t + 1, q + 2 * self.c * j)) {
                continue;
            }
            for k in 0..=self.input.n {
                if let Some(w) = self.weights[k as usize] {
                    if w <= coeff {
                        options.push((k, j, w));
                    }
                }
            }
        }
        self.distribute(&options, 0, coeff, t, q, &mut rem)
    }

    fn distribute(
        &mut self,
        options: &[(u32, i64, u64)],
        idx: usize,
        left: u64,
        t: i64,
        q: i64,
        rem: &mut BTreeMap<(i64, i64), u64>,
    ) -> bool {
        if left == 0 {
            return self.dfs(rem.clone());
        }
        let Some(&(k, j, w)) = options.get(idx) else {
            return false;
        };
        let partner = (t + 1, q + 2 * self.c * j);
        let available = rem.get(&partner).copied().unwrap_or(0);
        let most = (left / w).min(available / w);
        for count in 0..=most {
            if count > 0 {
                let used = count * w;
                if used == available {
                    rem.remove(&partner);
                } else {
                    rem.insert(partner, available - used);
                }
                self.chosen.push((k, j, t, q, count));
            }
            let found = self.distribute(options, idx + 1, left - count * w, t, q, rem);
            if count > 0 {
                self.chosen.pop();
                rem.insert(partner, available);
            }
            if found {
                return true;
            }
        }
        false
    }

    fn leaf(&mut self) -> bool {
        self.cases += 1;
        let mut dec = Decomposition::new();
        for &(k, j, t, q, count) in &self.chosen {
            dec.add(k, j, &BiLaurent::monomial(t, q, count));
        }
        let report = validate(&dec, self.input);
        debug_assert!(report.reconstruction && report.nonnegative && report.width_bound);
        if report.is_valid() {
            self.witness = Some(dec);
            true
        } else {
            false
        }
    }
}
