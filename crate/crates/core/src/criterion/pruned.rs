//! Residue-pruned search for `n = 1`.
//!
//! When every block has `j = 1`, the total block polynomial
//! `S = S_01 + (p−1) S_11` is determined by exact division, and the only
//! freedom is moving `δ` from `S_11` into `S_01` (`S_11 −= δ`,
//! `S_01 += (p−1)δ`).  Moving `a·t^i q^j` changes the congruence defect by
//! `(−1)^i a R_j` with `R_j = p (q^j − q^{j+2c} − q^{-j} + q^{-j-2c})`
//! reduced modulo `q^p − q^{-p}`, which depends only on `j mod 2p`.  The
//! search therefore runs over one bounded integer per distinct residue
//! vector.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use super::{
    first_negative, remainder_after_free_parts, validate, Certificate, CriterionInput,
    Decomposition, Status, Verdict,
};
use crate::error::CriterionError;
use crate::laurent::{BiLaurent, ResiduePoly};

/// Largest box the pruned search is willing to enumerate.
const MAX_CASES: u128 = 50_000_000;

/// Effect on the defect of moving one unit `q^j` (at even `t`) out of `S_11`.
pub fn residue_vector(p: u64, c: i64, j: i64) -> ResiduePoly {
    let p_big = BigInt::from(p);
    ResiduePoly::from_terms(
        p,
        [
            (j, p_big.clone()),
            (j + 2 * c, -p_big.clone()),
            (-j, -p_big.clone()),
            (-j - 2 * c, p_big),
        ],
    )
}

/// Residues `j mod 2p` sharing one residue vector up to sign.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResidueClass {
    pub residues: Vec<u64>,
    /// `+1` if `R_{j'}` equals `vector`, `−1` if it equals its negative.
    pub signs: Vec<i8>,
    pub vector: ResiduePoly,
    /// The same vector in the negated form `(−1)^i p (−q^{-j-2c} + q^{-j} − q^j + q^{j+2c})`.
    pub printed_form: ResiduePoly,
    pub lo: i64,
    pub hi: i64,
}

impl ResidueClass {
    pub fn size(&self) -> u64 {
        (self.hi - self.lo + 1) as u64
    }

    fn sign_of(&self, residue: u64) -> Option<i64> {
        self.residues
            .iter()
            .position(|&r| r == residue)
            .map(|idx| self.signs[idx] as i64)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrunedCertificate {
    pub modulus: u64,
    pub xi: ResiduePoly,
    pub classes: Vec<ResidueClass>,
    pub cases: u64,
    pub feasible: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub solution: Option<Vec<i64>>,
}

impl PrunedCertificate {
    pub fn box_sizes(&self) -> Vec<u64> {
        self.classes.iter().map(ResidueClass::size).collect()
    }
}

fn split_blocks(s: &BiLaurent, p: u64) -> Decomposition {
    let divisor = BigInt::from(p - 1);
    let mut dec = Decomposition::new();
    dec.set(0, 1, s.map_coeffs(|c| c.mod_floor(&divisor)));
    dec.set(1, 1, s.map_coeffs(|c| c.div_floor(&divisor)));
    dec
}

/// Base decomposition of a knot from its s-invariant, assuming the Lee
/// spectral sequence has only `(1, 2c)` differentials: the block total
/// `S = (khp − q^s(q+q^{-1})) / (1 + t q^{2c})` is split as
/// `S_01 = S mod (p−1)`, `S_11 = ⌊S / (p−1)⌋`.
pub fn base_from_lee_ss(
    khp: &BiLaurent,
    s: i64,
    c: i64,
    p: u64,
) -> Result<Decomposition, CriterionError> {
    let x = khp - &BiLaurent::lee_pair(s);
    let total = x.div_block_nonneg(2 * c).ok_or_else(|| {
        CriterionError::NoBlockDecomposition(
            "khp - q^s(q+q^-1) is not a non-negative multiple of 1 + t q^(2c)".into(),
        )
    })?;
    Ok(split_blocks(&total, p))
}

/// Base decomposition for `n = 1` from arbitrary free parts `F_0`, `F_1`.
pub fn base_from_free_parts(input: &CriterionInput) -> Result<Decomposition, CriterionError> {
    if input.n != 1 {
        return Err(CriterionError::PreconditionFailed("requires n = 1".into()));
    }
    let x = remainder_after_free_parts(input);
    if let Some((t, q)) = first_negative(&x) {
        return Err(CriterionError::NoBlockDecomposition(format!(
            "free parts exceed khp at t^{t} q^{q}"
        )));
    }
    let total = x.div_block_nonneg(2 * input.c()).ok_or_else(|| {
        CriterionError::NoBlockDecomposition(
            "remainder is not a non-negative multiple of 1 + t q^(2c)".into(),
        )
    })?;
    Ok(split_blocks(&total, input.p))
}

/// Groups the residues `j mod 2p` occurring in `s` into classes with equal
/// residue vectors up to sign; zero vectors are dropped.
fn residue_classes(s: &BiLaurent, p: u64, c: i64) -> Vec<ResidueClass> {
    let window = 2 * p as i64;
    let mut residues: Vec<u64> = s
        .terms()
        .map(|(_, q, _)| q.rem_euclid(window) as u64)
        .collect();
    residues.sort_unstable();
    residues.dedup();
    let mut classes: Vec<ResidueClass> = Vec::new();
    for r in residues {
        let v = residue_vector(p, c, r as i64);
        if v.is_zero() {
            continue;
        }
        let neg = -&v;
        if let Some(class) = classes.iter_mut().find(|cl| cl.vector == v) {
            class.residues.push(r);
            class.signs.push(1);
        } else if let Some(class) = classes.iter_mut().find(|cl| cl.vector == neg) {
            class.residues.push(r);
            class.signs.push(-1);
        } else {
            classes.push(ResidueClass {
                residues: vec![r],
                signs: vec![1],
                printed_form: neg,
                vector: v,
                lo: 0,
                hi: 0,
            });
        }
    }
    classes
}

fn monomial_sign(t: i64) -> i64 {
    if t.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Decides the `n = 1` criterion by exhausting the box of residue-class
/// multipliers.  Fails with `PreconditionFailed` when blocks with `j ≥ 2`
/// could occur (the search would not be complete) or the base decomposition
/// violates non-negativity or the width bound.
pub fn pruned_check_n1(input: &CriterionInput) -> Result<Verdict, CriterionError> {
    input.check_admissible()?;
    if input.n != 1 {
        return Err(CriterionError::PreconditionFailed("requires n = 1".into()));
    }
    let c = input.c();
    let p = input.p;
    let x = remainder_after_free_parts(input);
    let max_j = input.max_j();
    for j in 2..=max_j {
        if x.terms()
            .any(|(t, q, _)| !x.coeff(t + 1, q + 2 * c * j).is_zero())
        {
            return Err(CriterionError::PreconditionFailed(format!(
                "a block with j = {j} fits in the support"
            )));
        }
    }
    let base = base_from_free_parts(input)?;
    let report = validate(&base, input);
    if !(report.reconstruction && report.nonnegative && report.width_bound) {
        return Err(CriterionError::PreconditionFailed(
            "base decomposition violates non-negativity or the width bound".into(),
        ));
    }
    let xi = report.congruences[0].defect.clone();
    let s11 = base.get(1, 1);
    let total = &base.get(0, 1) + &s11.scale(&BigInt::from(p - 1));
    let mut classes = residue_classes(&total, p, c);
    let window = 2 * p as i64;
    for (t, q, coeff) in s11.terms() {
        let r = q.rem_euclid(window) as u64;
        if let Some(class) = classes.iter_mut().find(|cl| cl.residues.contains(&r)) {
            let sign = monomial_sign(t) * class.sign_of(r).unwrap();
            let amount = coeff.to_i64().ok_or_else(|| {
                CriterionError::PreconditionFailed(
                    "coefficient too large for the box search".into(),
                )
            })?;
            if sign > 0 {
                class.hi += amount;
            } else {
                class.lo -= amount;
            }
        }
    }
    let mut cert = PrunedCertificate {
        modulus: p,
        xi: xi.clone(),
        classes,
        cases: 0,
        feasible: false,
        solution: None,
    };
    if xi.is_zero() {
        cert.feasible = true;
        return Ok(Verdict::unobstructed(
            "pruned",
            base,
            Some(Certificate::Pruned(cert)),
        ));
    }
    let volume: u128 = cert.classes.iter().map(|cl| cl.size() as u128).product();
    if volume > MAX_CASES {
        return Err(CriterionError::PreconditionFailed(format!(
            "box of {volume} cases is too large"
        )));
    }
    let solution = search_box(&xi, &cert.classes, &mut cert.cases);
    let Some(solution) = solution else {
        return Ok(Verdict::obstructed("pruned", Certificate::Pruned(cert)));
    };
    let witness = realize(&base, &cert.classes, &solution, p);
    let check = validate(&witness, input);
    if !check.is_valid() {
        return Err(CriterionError::PreconditionFailed(
            "realized witness failed validation".into(),
        ));
    }
    cert.feasible = true;
    cert.solution = Some(solution);
    Ok(Verdict {
        status: Status::NoObstruction,
        method: "pruned",
        witness: Some(witness),
        certificate: Some(Certificate::Pruned(cert)),
        notes: Vec::new(),
    })
}

/// Odometer over the box; returns the first assignment with
/// `Ξ + Σ a_v V_v = 0`.
fn search_box(xi: &ResiduePoly, classes: &[ResidueClass], cases: &mut u64) -> Option<Vec<i64>> {
    let mut a: Vec<i64> = classes.iter().map(|cl| cl.lo).collect();
    loop {
        *cases += 1;
        let mut total = xi.clone();
        for (cl, &ai) in classes.iter().zip(&a) {
            if ai != 0 {
                total = &total + &cl.vector.scale(&BigInt::from(ai));
            }
        }
        if total.is_zero() {
            return Some(a);
        }
        let mut idx = classes.len();
        loop {
            if idx == 0 {
                return None;
            }
            idx -= 1;
            if a[idx] < classes[idx].hi {
                a[idx] += 1;
                break;
            }
            a[idx] = classes[idx].lo;
        }
    }
}

/// Turns class multipliers back into a decomposition by moving monomials
/// greedily, in `(t, q)` order, from `S_11` into `S_01`.
fn realize(
    base: &Decomposition,
    classes: &[ResidueClass],
    solution: &[i64],
    p: u64,
) -> Decomposition {
    let window = 2 * p as i64;
    let s11 = base.get(1, 1);
    let mut moved: BTreeMap<(i64, i64), i64> = BTreeMap::new();
    for (cl, &target) in classes.iter().zip(solution) {
        let mut left = target.abs();
        let want = target.signum();
        for (t, q, coeff) in s11.terms() {
            if left == 0 {
                break;
            }
            let r = q.rem_euclid(window) as u64;
            let Some(sign) = cl.sign_of(r) else {
                continue;
            };
            if monomial_sign(t) * sign != want {
                continue;
            }
            let take = left.min(coeff.to_i64().unwrap_or(i64::MAX));
            moved.insert((t, q), take);
            left -= take;
        }
    }
    let delta = BiLaurent::from_terms(moved.into_iter().map(|((t, q), a)| (t, q, a)));
    let mut dec = Decomposition::new();
    dec.set(1, 1, &s11 - &delta);
    dec.set(0, 1, &base.get(0, 1) + &delta.scale(&BigInt::from(p - 1)));
    dec
}
