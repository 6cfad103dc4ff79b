//! Decomposition criterion for Khovanov polynomials of periodic knots and
//! links.
//!
//! A Khovanov polynomial of a `p^n`-periodic link splits as
//! `khp = P_0 + Σ_{k=1..n} (p^k − p^{k−1}) P_k` with
//! `P_k = F_k + Σ_j (1 + t q^{2cj}) S_kj`, where `F_k` is the free (Lee)
//! part, every `S_kj` is non-negative, blocks are bounded by the width, and
//! consecutive `P_k` satisfy a Jones-type congruence at `t = −1`.
//! [`check`] searches for such a decomposition.

mod brute;
mod pruned;
mod vacuity;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::CriterionError;
use crate::laurent::{BiLaurent, QLaurent, ResiduePoly, WidthConvention};
use crate::repcyc::{is_max_order, is_prime, totient};

pub use brute::brute_force_check;
pub use pruned::{
    base_from_free_parts, base_from_lee_ss, pruned_check_n1, residue_vector, PrunedCertificate,
    ResidueClass,
};
pub use vacuity::{jones_divisibility, vacuity_check, VacuityReport};

/// Which bound on the block index `j` is enforced.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WidthPolicy {
    /// `j ≤ w` in every characteristic.
    #[default]
    Weak,
    /// `j ≤ w/2` outside characteristic 2, `j ≤ w` in characteristic 2.
    Strict,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InputKind {
    #[default]
    Knot,
    Link,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionInput {
    pub khp: BiLaurent,
    /// Characteristic of the coefficient field, 0 for `Q`.
    pub char_r: u64,
    pub p: u64,
    pub n: u32,
    /// Free parts `F_0..F_n`.
    pub free_parts: Vec<BiLaurent>,
    pub kind: InputKind,
    pub width_policy: WidthPolicy,
    pub width_convention: WidthConvention,
}

impl CriterionInput {
    /// A knot with s-invariant `s`: `F_0 = q^s (q + q^{-1})`, all other free parts zero.
    pub fn knot(khp: BiLaurent, s: i64, char_r: u64, p: u64, n: u32) -> Self {
        let mut free_parts = vec![BiLaurent::zero(); n as usize + 1];
        free_parts[0] = BiLaurent::lee_pair(s);
        Self {
            khp,
            char_r,
            p,
            n,
            free_parts,
            kind: InputKind::Knot,
            width_policy: WidthPolicy::default(),
            width_convention: WidthConvention::default(),
        }
    }

    /// A link with caller-supplied free parts `F_0..F_n`.
    pub fn link(khp: BiLaurent, free_parts: Vec<BiLaurent>, char_r: u64, p: u64, n: u32) -> Self {
        Self {
            khp,
            char_r,
            p,
            n,
            free_parts,
            kind: InputKind::Link,
            width_policy: WidthPolicy::default(),
            width_convention: WidthConvention::default(),
        }
    }

    pub fn with_width_policy(mut self, policy: WidthPolicy) -> Self {
        self.width_policy = policy;
        self
    }

    /// Block step parameter: 1 in characteristic 2, 2 otherwise.
    pub fn c(&self) -> i64 {
        if self.char_r == 2 {
            1
        } else {
            2
        }
    }

    /// `m_k = p^k − p^{k−1}` (with `m_0 = 1`).
    pub fn multiplicity(&self, k: u32) -> BigInt {
        if k == 0 {
            BigInt::one()
        } else {
            BigInt::from(totient(self.p.pow(k)))
        }
    }

    /// Modulus `p^{n−k}` of the congruence between `P_k` and `P_{k+1}`.
    pub fn congruence_modulus(&self, k: u32) -> u64 {
        self.p.pow(self.n - k)
    }

    pub fn width(&self) -> u64 {
        self.khp.delta_width(self.width_convention).unwrap_or(0)
    }

    /// Largest block index allowed by the width policy.
    pub fn max_j(&self) -> i64 {
        let w = self.width() as i64;
        match (self.width_policy, self.c()) {
            (WidthPolicy::Strict, 2) => w / 2,
            _ => w,
        }
    }

    /// Checks the hypotheses under which the criterion applies.
    pub fn check_admissible(&self) -> Result<(), CriterionError> {
        self.check_shape()?;
        self.check_field()
    }

    /// Structural checks: prime period, matching free parts, non-negative input.
    pub fn check_shape(&self) -> Result<(), CriterionError> {
        if !is_prime(self.p) {
            return Err(CriterionError::InvalidInput(format!(
                "{} is not prime",
                self.p
            )));
        }
        if self.n == 0 {
            return Err(CriterionError::InvalidInput(
                "the exponent n must be positive".into(),
            ));
        }
        if self.p.checked_pow(self.n).is_none_or(|m| m > 1 << 40) {
            return Err(CriterionError::InvalidInput("period is too large".into()));
        }
        if self.free_parts.len() != self.n as usize + 1 {
            return Err(CriterionError::InvalidInput(format!(
                "expected {} free parts, got {}",
                self.n + 1,
                self.free_parts.len()
            )));
        }
        if !self.khp.is_nonneg() {
            return Err(CriterionError::InvalidInput(
                "Khovanov polynomial has a negative coefficient".into(),
            ));
        }
        Ok(())
    }

    /// The field must be `Q` or `F_r` with `r` generating `(Z/p^n)^×`.
    pub fn check_field(&self) -> Result<(), CriterionError> {
        if self.char_r != 0 {
            if !is_prime(self.char_r) {
                return Err(CriterionError::FieldNotAdmissible(format!(
                    "characteristic {} is not prime",
                    self.char_r
                )));
            }
            if self.char_r == self.p || !is_max_order(self.p, self.n, self.char_r) {
                return Err(CriterionError::FieldNotAdmissible(format!(
                    "{} does not have maximal order modulo {}^{}",
                    self.char_r, self.p, self.n
                )));
            }
        }
        Ok(())
    }
}

/// Block polynomials `S_kj`, keyed by `(k, j)`.  Missing entries are zero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Decomposition {
    pub s: BTreeMap<(u32, i64), BiLaurent>,
}

impl Decomposition {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, k: u32, j: i64) -> BiLaurent {
        self.s.get(&(k, j)).cloned().unwrap_or_default()
    }

    pub fn set(&mut self, k: u32, j: i64, poly: BiLaurent) {
        if poly.is_zero() {
            self.s.remove(&(k, j));
        } else {
            self.s.insert((k, j), poly);
        }
    }

    pub fn add(&mut self, k: u32, j: i64, poly: &BiLaurent) {
        let sum = &self.get(k, j) + poly;
        self.set(k, j, sum);
    }

    /// `P_k = F_k + Σ_j (1 + t q^{2cj}) S_kj`.
    pub fn p_k(&self, k: u32, input: &CriterionInput) -> BiLaurent {
        let c = input.c();
        let mut out = input.free_parts[k as usize].clone();
        for (&(kk, j), s) in &self.s {
            if kk == k {
                out += &(&BiLaurent::block(c, j) * s);
            }
        }
        out
    }

    pub fn reconstruct(&self, input: &CriterionInput) -> BiLaurent {
        let mut out = BiLaurent::zero();
        for k in 0..=input.n {
            out += &self.p_k(k, input).scale(&input.multiplicity(k));
        }
        out
    }
}

impl Serialize for Decomposition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry<'a> {
            k: u32,
            j: i64,
            s: &'a BiLaurent,
        }
        let mut seq = serializer.serialize_seq(Some(self.s.len()))?;
        for (&(k, j), s) in &self.s {
            seq.serialize_element(&Entry { k, j, s })?;
        }
        seq.end()
    }
}

/// `(D − D(q^{-1})) mod (q^N − q^{-N})`.
pub fn congruence_defect(d: &QLaurent, modulus: u64) -> ResiduePoly {
    (d - &d.mirror()).reduce_mod(modulus)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CongruenceCheck {
    pub k: u32,
    pub modulus: u64,
    pub defect: ResiduePoly,
}

impl CongruenceCheck {
    pub fn holds(&self) -> bool {
        self.defect.is_zero()
    }
}

/// Per-condition outcome of [`validate`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub reconstruction: bool,
    pub nonnegative: bool,
    pub width_bound: bool,
    pub congruences: Vec<CongruenceCheck>,
}

impl ValidationReport {
    pub fn congruences_hold(&self) -> bool {
        self.congruences.iter().all(CongruenceCheck::holds)
    }

    pub fn is_valid(&self) -> bool {
        self.reconstruction && self.nonnegative && self.width_bound && self.congruences_hold()
    }
}

pub fn validate(dec: &Decomposition, input: &CriterionInput) -> ValidationReport {
    let reconstruction = dec.reconstruct(input) == input.khp;
    let nonnegative = dec.s.values().all(BiLaurent::is_nonneg);
    let max_j = input.max_j();
    let width_bound = dec
        .s
        .keys()
        .all(|&(k, j)| k <= input.n && j >= 1 && j <= max_j);
    let congruences = (0..input.n)
        .map(|k| {
            let diff = &dec.p_k(k, input) - &dec.p_k(k + 1, input);
            let modulus = input.congruence_modulus(k);
            CongruenceCheck {
                k,
                modulus,
                defect: congruence_defect(&diff.eval_t_minus1(), modulus),
            }
        })
        .collect();
    ValidationReport {
        reconstruction,
        nonnegative,
        width_bound,
        congruences,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Obstructed,
    NoObstruction,
    Vacuous,
    NotApplicable,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Obstructed => "OBSTRUCTED",
            Status::NoObstruction => "NO_OBSTRUCTION",
            Status::Vacuous => "VACUOUS",
            Status::NotApplicable => "NOT_APPLICABLE",
        }
    }
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    BruteForce {
        cases: u64,
    },
    Pruned(PrunedCertificate),
    Vacuity(VacuityReport),
    /// The free parts alone exceed the Khovanov polynomial at some bidegree.
    NegativeRemainder {
        t_exp: i64,
        q_exp: i64,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub status: Status,
    pub method: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Decomposition>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Verdict {
    pub fn obstructed(method: &'static str, certificate: Certificate) -> Self {
        Self {
            status: Status::Obstructed,
            method,
            witness: None,
            certificate: Some(certificate),
            notes: Vec::new(),
        }
    }

    pub fn unobstructed(
        method: &'static str,
        witness: Decomposition,
        certificate: Option<Certificate>,
    ) -> Self {
        Self {
            status: Status::NoObstruction,
            method,
            witness: Some(witness),
            certificate,
            notes: Vec::new(),
        }
    }

    /// Total number of search cases examined, when the certificate records it.
    pub fn cases(&self) -> Option<u64> {
        match &self.certificate {
            Some(Certificate::BruteForce { cases }) => Some(*cases),
            Some(Certificate::Pruned(p)) => Some(p.cases),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOptions {
    /// Upper bound on the coefficient mass of `khp` accepted by brute force.
    pub brute_force_cap: u64,
    /// Use the residue-pruned search for `n = 1` when its preconditions hold.
    pub use_pruned: bool,
}

impl Default for CheckOptions {
    fn default() -> Self {
        Self {
            brute_force_cap: 64,
            use_pruned: true,
        }
    }
}

/// Runs the criterion: vacuity (knots with period 2 or 3, whatever the
/// field), field admissibility, then the pruned search for `n = 1` and brute
/// force otherwise.
pub fn check(input: &CriterionInput, options: &CheckOptions) -> Result<Verdict, CriterionError> {
    input.check_shape()?;
    if input.kind == InputKind::Knot {
        if let Some(report) = vacuity_check(&input.khp, input.p, input.n) {
            let mut notes = Vec::new();
            if !report.divisibility_holds {
                notes.push(
                    "Jones divisibility fails: input is not a knot Khovanov polynomial".into(),
                );
            }
            return Ok(Verdict {
                status: Status::Vacuous,
                method: "vacuity",
                witness: None,
                certificate: Some(Certificate::Vacuity(report)),
                notes,
            });
        }
    }
    input.check_field()?;
    let mut notes = Vec::new();
    if input.kind == InputKind::Link && input.p == 3 && input.n == 1 {
        notes.push("period 3: the congruence modulo q^3 - q^-3 is weak".to_string());
    }
    if input.n == 1 && options.use_pruned {
        match pruned_check_n1(input) {
            Ok(mut v) => {
                v.notes.extend(notes);
                return Ok(v);
            }
            Err(CriterionError::PreconditionFailed(msg))
            | Err(CriterionError::NoBlockDecomposition(msg)) => {
                notes.push(format!("pruned search not applicable: {msg}"));
            }
            Err(e) => return Err(e),
        }
    }
    let mut v = brute_force_check(input, options.brute_force_cap)?;
    v.notes.extend(notes);
    Ok(v)
}

pub(crate) fn remainder_after_free_parts(input: &CriterionInput) -> BiLaurent {
    let mut x = input.khp.clone();
    for (k, f) in input.free_parts.iter().enumerate() {
        x -= &f.scale(&input.multiplicity(k as u32));
    }
    x
}

pub(crate) fn first_negative(x: &BiLaurent) -> Option<(i64, i64)> {
    x.terms()
        .find(|(_, _, c)| *c < &BigInt::zero())
        .map(|(t, q, _)| (t, q))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bl(s: &str) -> BiLaurent {
        s.parse().unwrap()
    }

    #[test]
    fn unknot_is_valid_everywhere() {
        for (p, n) in [(3, 1), (5, 1), (5, 2), (7, 1), (3, 3)] {
            for r in [0, 2] {
                let input = CriterionInput::knot(BiLaurent::lee_pair(0), 0, r, p, n);
                let report = validate(&Decomposition::new(), &input);
                assert!(report.is_valid(), "p={p} n={n} r={r}");
            }
        }
    }

    #[test]
    fn defect_examples() {
        let d: QLaurent = "q^3 + 2*q + 2*q^-1 + q^-3".parse().unwrap();
        assert!(congruence_defect(&d, 5).is_zero());
        let d: QLaurent = "q^3".parse().unwrap();
        assert_eq!(congruence_defect(&d, 5).to_string(), "1*q^3 - 1*q^7");
    }

    #[test]
    fn period_three_single_level_congruence_holds() {
        // P_0 = khp, P_1 = 0: the p = 3 congruence is Jones divisibility.
        let trefoil = bl("q + q^3 + t^2*q^5 + t^3*q^9");
        let mut input = CriterionInput::knot(trefoil.clone(), 2, 0, 3, 1);
        input.free_parts[0] = trefoil;
        let report = validate(&Decomposition::new(), &input);
        assert!(report.is_valid());
    }

    #[test]
    fn admissibility() {
        let unknot = BiLaurent::lee_pair(0);
        let bad = CriterionInput::knot(unknot.clone(), 0, 11, 5, 1);
        assert!(matches!(
            bad.check_admissible(),
            Err(CriterionError::FieldNotAdmissible(_))
        ));
        let bad = CriterionInput::knot(unknot.clone(), 0, 5, 5, 1);
        assert!(matches!(
            bad.check_admissible(),
            Err(CriterionError::FieldNotAdmissible(_))
        ));
        assert!(CriterionInput::knot(unknot.clone(), 0, 3, 5, 1)
            .check_admissible()
            .is_ok());
        assert!(CriterionInput::knot(unknot, 0, 0, 9, 1)
            .check_admissible()
            .is_err());
    }

    #[test]
    fn width_policies() {
        let khp = bl("q + q^3 + t^2*q^5 + t^3*q^9");
        let input = CriterionInput::knot(khp, 2, 0, 5, 1);
        assert_eq!(input.width(), 2);
        assert_eq!(input.max_j(), 2);
        assert_eq!(
            input.clone().with_width_policy(WidthPolicy::Strict).max_j(),
            1
        );
        let mut char2 = input.with_width_policy(WidthPolicy::Strict);
        char2.char_r = 2;
        assert_eq!(char2.max_j(), 2);
    }
}
