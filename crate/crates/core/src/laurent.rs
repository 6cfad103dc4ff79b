//! Sparse integer Laurent polynomials.
//!
//! Three containers share this module:
//!
//! * [`BiLaurent`] in a homological variable `t` and a quantum variable `q`
//!   (Khovanov polynomials and their block decompositions),
//! * [`QLaurent`] in `q` alone (Jones-type specializations),
//! * [`ResiduePoly`], an element of `Z[q^±1] / (q^N - q^-N)` stored with
//!   exponents in the window `[0, 2N)`.
//!
//! All coefficients are arbitrary-precision integers and no stored
//! coefficient is ever zero.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::LaurentError;

/// Which linear form of the bigrading is used to measure width.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WidthConvention {
    /// `δ = q_exp − 2·t_exp`.
    #[default]
    QuantumMinusTwiceHomological,
    /// `δ = t_exp − 2·q_exp`, the literal reading with the homological index first.
    HomologicalMinusTwiceQuantum,
}

impl WidthConvention {
    pub fn delta(self, t_exp: i64, q_exp: i64) -> i64 {
        match self {
            WidthConvention::QuantumMinusTwiceHomological => q_exp - 2 * t_exp,
            WidthConvention::HomologicalMinusTwiceQuantum => t_exp - 2 * q_exp,
        }
    }
}

fn insert_term<K: Ord>(terms: &mut BTreeMap<K, BigInt>, key: K, coeff: BigInt) {
    if coeff.is_zero() {
        return;
    }
    match terms.entry(key) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(coeff);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            *o.get_mut() += coeff;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

fn format_coeff(f: &mut fmt::Formatter<'_>, first: bool, c: &BigInt) -> fmt::Result {
    if first {
        write!(f, "{c}")
    } else if c.is_negative() {
        write!(f, " - {}", c.abs())
    } else {
        write!(f, " + {c}")
    }
}

// ---------------------------------------------------------------------------
// BiLaurent
// ---------------------------------------------------------------------------

/// Integer Laurent polynomial in `t` and `q`, keyed by `(t_exp, q_exp)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BiLaurent {
    terms: BTreeMap<(i64, i64), BigInt>,
}

impl BiLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, 1)
    }

    pub fn monomial(t_exp: i64, q_exp: i64, coeff: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(t_exp, q_exp, coeff.into());
        p
    }

    /// Builds a polynomial from `(t_exp, q_exp, coeff)` triples; repeated
    /// exponent pairs are summed.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (t, q, c) in terms {
            p.add_term(t, q, c.into());
        }
        p
    }

    /// `q^s (q + q^{-1})`, the Lee pair of a knot with s-invariant `s`.
    pub fn lee_pair(s: i64) -> Self {
        Self::from_terms([(0, s + 1, 1), (0, s - 1, 1)])
    }

    /// The knight-move block `1 + t q^{2cj}`.
    pub fn block(c: i64, j: i64) -> Self {
        Self::from_terms([(0, 0, 1), (1, 2 * c * j, 1)])
    }

    pub fn add_term(&mut self, t_exp: i64, q_exp: i64, coeff: BigInt) {
        insert_term(&mut self.terms, (t_exp, q_exp), coeff);
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, t_exp: i64, q_exp: i64) -> BigInt {
        self.terms
            .get(&(t_exp, q_exp))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// Terms in lexicographic `(t, q)` order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i64, &BigInt)> + '_ {
        self.terms.iter().map(|(&(t, q), c)| (t, q, c))
    }

    /// Lexicographically least monomial (smallest `t`, then smallest `q`).
    pub fn leading_low(&self) -> Option<(i64, i64, &BigInt)> {
        self.terms.iter().next().map(|(&(t, q), c)| (t, q, c))
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect(),
        }
    }

    pub fn scale_i64(&self, k: i64) -> Self {
        self.scale(&BigInt::from(k))
    }

    /// Multiplies by `t^dt q^dq`.
    pub fn shift(&self, dt: i64, dq: i64) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(t, q), c)| ((t + dt, q + dq), c.clone()))
                .collect(),
        }
    }

    /// Specializes `t = -1`.
    pub fn eval_t_minus1(&self) -> QLaurent {
        let mut out = QLaurent::zero();
        for (&(t, q), c) in &self.terms {
            let c = if t.rem_euclid(2) == 0 { c.clone() } else { -c };
            out.add_term(q, c);
        }
        out
    }

    pub fn is_nonneg(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Divides every coefficient by `k`, failing unless all are multiples.
    pub fn div_exact_scalar(&self, k: &BigInt) -> Result<Self, LaurentError> {
        if k.is_zero() {
            return Err(LaurentError::DivisionByZero);
        }
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let (quot, rem) = c.div_rem(k);
            if !rem.is_zero() {
                return Err(LaurentError::NotDivisible {
                    divisor: k.clone(),
                    t_exp: e.0,
                    q_exp: e.1,
                });
            }
            terms.insert(*e, quot);
        }
        Ok(Self { terms })
    }

    /// Sum of all coefficients.
    pub fn mass(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// `max δ − min δ` over the support.
    pub fn delta_width(&self, convention: WidthConvention) -> Result<u64, LaurentError> {
        let mut it = self.terms.keys().map(|&(t, q)| convention.delta(t, q));
        let first = it.next().ok_or(LaurentError::EmptyPolynomial)?;
        let (lo, hi) = it.fold((first, first), |(lo, hi), d| (lo.min(d), hi.max(d)));
        Ok((hi - lo) as u64)
    }

    /// Exact quotient by `1 + t q^{step}` when every intermediate quotient
    /// coefficient is non-negative.  Returns `None` if the division is not
    /// exact or a negative coefficient would appear.
    pub fn div_block_nonneg(&self, step: i64) -> Option<Self> {
        let mut rest = self.clone();
        let mut quotient = Self::zero();
        let max_t = self.terms.keys().map(|k| k.0).max().unwrap_or(0);
        while let Some((t, q, c)) = rest.leading_low() {
            if t >= max_t || c.is_negative() {
                return None;
            }
            let c = c.clone();
            rest.add_term(t, q, -c.clone());
            rest.add_term(t + 1, q + step, -c.clone());
            quotient.add_term(t, q, c);
        }
        Some(quotient)
    }

    /// Coefficient-wise map; zero results are dropped.
    pub fn map_coeffs(&self, f: impl Fn(&BigInt) -> BigInt) -> Self {
        let mut out = Self::zero();
        for (&(t, q), c) in &self.terms {
            out.add_term(t, q, f(c));
        }
        out
    }

    /// `(t_exp, q_exp, coeff)` triples with `i64` coefficients, for serialization.
    pub fn to_triples(&self) -> Vec<(i64, i64, BigInt)> {
        self.terms().map(|(t, q, c)| (t, q, c.clone())).collect()
    }
}

impl fmt::Display for BiLaurent {
    /// Canonical text form: `c*t^i*q^j` terms sorted by `(i, j)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (t, q, c)) in self.terms().enumerate() {
            format_coeff(f, n == 0, c)?;
            write!(f, "*t^{t}*q^{q}")?;
        }
        Ok(())
    }
}

fn parse_signed_terms(s: &str) -> Result<Vec<(BigInt, String)>, LaurentError> {
    let err = || LaurentError::Parse(s.to_string());
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(err());
    }
    if compact == "0" {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let bytes = compact.as_bytes();
    let mut start = 0;
    let mut i = 1;
    // split at '+'/'-' that are not directly after '^'
    while i <= bytes.len() {
        let at_split =
            i == bytes.len() || ((bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^');
        if at_split {
            let piece = &compact[start..i];
            let (sign, body) = match piece.as_bytes()[0] {
                b'+' => (1, &piece[1..]),
                b'-' => (-1, &piece[1..]),
                _ => (1, piece),
            };
            if body.is_empty() {
                return Err(err());
            }
            let mut coeff = BigInt::from(sign);
            let mut vars = Vec::new();
            for factor in body.split('*') {
                if factor.starts_with(|ch: char| ch.is_ascii_digit()) {
                    coeff *= factor.parse::<BigInt>().map_err(|_| err())?;
                } else {
                    vars.push(factor);
                }
            }
            out.push((coeff, vars.join("*")));
            start = i;
        }
        i += 1;
    }
    Ok(out)
}

fn parse_power(factor: &str, var: char) -> Option<i64> {
    let rest = factor.strip_prefix(var)?;
    if rest.is_empty() {
        return Some(1);
    }
    rest.strip_prefix('^')?.parse().ok()
}

impl FromStr for BiLaurent {
    type Err = LaurentError;

    /// Parses the canonical text form (`3*t^-1*q^5 - 2*t^0*q^1`).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut p = Self::zero();
        for (c, monomial) in parse_signed_terms(s)? {
            let (mut t, mut q) = (0, 0);
            if !monomial.is_empty() {
                for factor in monomial.split('*') {
                    if let Some(e) = parse_power(factor, 't') {
                        t += e;
                    } else if let Some(e) = parse_power(factor, 'q') {
                        q += e;
                    } else {
                        return Err(LaurentError::Parse(s.to_string()));
                    }
                }
            }
            p.add_term(t, q, c);
        }
        Ok(p)
    }
}

impl Serialize for BiLaurent {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for BiLaurent {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl AddAssign<&BiLaurent> for BiLaurent {
    fn add_assign(&mut self, rhs: &BiLaurent) {
        for (&(t, q), c) in &rhs.terms {
            self.add_term(t, q, c.clone());
        }
    }
}

impl SubAssign<&BiLaurent> for BiLaurent {
    fn sub_assign(&mut self, rhs: &BiLaurent) {
        for (&(t, q), c) in &rhs.terms {
            self.add_term(t, q, -c);
        }
    }
}

impl Add for &BiLaurent {
    type Output = BiLaurent;
    fn add(self, rhs: &BiLaurent) -> BiLaurent {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for BiLaurent {
    type Output = BiLaurent;
    fn add(mut self, rhs: BiLaurent) -> BiLaurent {
        self += &rhs;
        self
    }
}

impl Sub for &BiLaurent {
    type Output = BiLaurent;
    fn sub(self, rhs: &BiLaurent) -> BiLaurent {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for BiLaurent {
    type Output = BiLaurent;
    fn sub(mut self, rhs: BiLaurent) -> BiLaurent {
        self -= &rhs;
        self
    }
}

impl Neg for &BiLaurent {
    type Output = BiLaurent;
    fn neg(self) -> BiLaurent {
        BiLaurent {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for BiLaurent {
    type Output = BiLaurent;
    fn neg(self) -> BiLaurent {
        -&self
    }
}

impl Mul for &BiLaurent {
    type Output = BiLaurent;
    fn mul(self, rhs: &BiLaurent) -> BiLaurent {
        let mut out = BiLaurent::zero();
        for (&(t1, q1), c1) in &self.terms {
            for (&(t2, q2), c2) in &rhs.terms {
                out.add_term(t1 + t2, q1 + q2, c1 * c2);
            }
        }
        out
    }
}

impl Mul for BiLaurent {
    type Output = BiLaurent;
    fn mul(self, rhs: BiLaurent) -> BiLaurent {
        &self * &rhs
    }
}

// ---------------------------------------------------------------------------
// QLaurent
// ---------------------------------------------------------------------------

/// Integer Laurent polynomial in a single variable (printed as `q`).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QLaurent {
    terms: BTreeMap<i64, BigInt>,
}

impl QLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(exp: i64, coeff: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff.into());
        p
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    /// Dense coefficients starting at exponent `lowest`.
    pub fn from_coeffs<C: Into<BigInt> + Clone>(lowest: i64, coeffs: &[C]) -> Self {
        Self::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (lowest + i as i64, c.clone().into())),
        )
    }

    pub fn add_term(&mut self, exp: i64, coeff: BigInt) {
        insert_term(&mut self.terms, exp, coeff);
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// `max_exp − min_exp`, zero for the zero polynomial.
    pub fn span(&self) -> i64 {
        match (self.min_exp(), self.max_exp()) {
            (Some(lo), Some(hi)) => hi - lo,
            _ => 0,
        }
    }

    /// `q^j ↦ q^{-j}`.
    pub fn mirror(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, c)| (-e, c.clone())).collect(),
        }
    }

    pub fn shift(&self, d: i64) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&e, c)| (e + d, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&e, c)| (e, c * k)).collect(),
        }
    }

    /// Reduction into `Z[q^±1] / (q^N − q^-N)`.
    pub fn reduce_mod(&self, modulus: u64) -> ResiduePoly {
        assert!(modulus >= 1, "modulus must be positive");
        let window = 2 * modulus as i64;
        let mut out = ResiduePoly::zero(modulus);
        for (&e, c) in &self.terms {
            out.add_term(e.rem_euclid(window) as u64, c.clone());
        }
        out
    }

    /// Dense coefficient vector from the lowest exponent, with that exponent.
    pub fn to_dense(&self) -> (i64, Vec<BigInt>) {
        match self.min_exp() {
            None => (0, Vec::new()),
            Some(lo) => {
                let hi = self.max_exp().unwrap();
                let v = (lo..=hi).map(|e| self.coeff(e)).collect();
                (lo, v)
            }
        }
    }

    pub fn fmt_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (n, (e, c)) in self.terms().enumerate() {
            if n == 0 {
                s.push_str(&c.to_string());
            } else if c.is_negative() {
                s.push_str(&format!(" - {}", c.abs()));
            } else {
                s.push_str(&format!(" + {c}"));
            }
            s.push_str(&format!("*{var}^{e}"));
        }
        s
    }

    pub fn parse_in(s: &str, var: char) -> Result<Self, LaurentError> {
        let mut p = Self::zero();
        for (c, monomial) in parse_signed_terms(s)? {
            let mut e = 0;
            if !monomial.is_empty() {
                for factor in monomial.split('*') {
                    e += parse_power(factor, var)
                        .ok_or_else(|| LaurentError::Parse(s.to_string()))?;
                }
            }
            p.add_term(e, c);
        }
        Ok(p)
    }
}

impl fmt::Display for QLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_in("q"))
    }
}

impl FromStr for QLaurent {
    type Err = LaurentError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse_in(s, 'q')
    }
}

impl Serialize for QLaurent {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl Add for &QLaurent {
    type Output = QLaurent;
    fn add(self, rhs: &QLaurent) -> QLaurent {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &QLaurent {
    type Output = QLaurent;
    fn sub(self, rhs: &QLaurent) -> QLaurent {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c);
        }
        out
    }
}

impl Neg for &QLaurent {
    type Output = QLaurent;
    fn neg(self) -> QLaurent {
        QLaurent {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

impl Mul for &QLaurent {
    type Output = QLaurent;
    fn mul(self, rhs: &QLaurent) -> QLaurent {
        let mut out = QLaurent::zero();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

// ---------------------------------------------------------------------------
// ResiduePoly
// ---------------------------------------------------------------------------

/// An element of `Z[q^±1] / (q^N − q^-N)`.
///
/// Since `q^N − q^-N = q^-N (q^{2N} − 1)` and `q^-N` is a unit, the quotient
/// is `Z[q] / (q^{2N} − 1)`; exponents are kept in `[0, 2N)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ResiduePoly {
    modulus: u64,
    terms: BTreeMap<u64, BigInt>,
}

impl ResiduePoly {
    pub fn zero(modulus: u64) -> Self {
        assert!(modulus >= 1, "modulus must be positive");
        Self {
            modulus,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms<I, C>(modulus: u64, terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut out = Self::zero(modulus);
        let window = 2 * modulus as i64;
        for (e, c) in terms {
            out.add_term(e.rem_euclid(window) as u64, c.into());
        }
        out
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn add_term(&mut self, exp: u64, coeff: BigInt) {
        debug_assert!(exp < 2 * self.modulus);
        insert_term(&mut self.terms, exp, coeff);
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: u64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, &BigInt)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    /// Dense coefficient vector of length `2N`.
    pub fn to_vec(&self) -> Vec<BigInt> {
        (0..2 * self.modulus).map(|e| self.coeff(e)).collect()
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        let mut out = Self::zero(self.modulus);
        for (&e, c) in &self.terms {
            out.add_term(e, c * k);
        }
        out
    }

    /// `q^j ↦ q^{-j}` inside the quotient ring.
    pub fn mirror(&self) -> Self {
        let window = 2 * self.modulus;
        let mut out = Self::zero(self.modulus);
        for (&e, c) in &self.terms {
            out.add_term((window - e) % window, c.clone());
        }
        out
    }

    /// True when every coefficient is a multiple of `k`.
    pub fn all_divisible_by(&self, k: &BigInt) -> bool {
        self.terms.values().all(|c| c.is_multiple_of(k))
    }

    /// Leading sign: the sign of the coefficient with the smallest exponent.
    pub fn leading_sign(&self) -> i32 {
        match self.terms.values().next() {
            None => 0,
            Some(c) if c.is_negative() => -1,
            Some(_) => 1,
        }
    }

    fn check_same(&self, rhs: &ResiduePoly) {
        assert_eq!(self.modulus, rhs.modulus, "residue moduli differ");
    }
}

impl fmt::Display for ResiduePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (e, c)) in self.terms().enumerate() {
            format_coeff(f, n == 0, c)?;
            write!(f, "*q^{e}")?;
        }
        Ok(())
    }
}

impl Serialize for ResiduePoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl Add for &ResiduePoly {
    type Output = ResiduePoly;
    fn add(self, rhs: &ResiduePoly) -> ResiduePoly {
        self.check_same(rhs);
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &ResiduePoly {
    type Output = ResiduePoly;
    fn sub(self, rhs: &ResiduePoly) -> ResiduePoly {
        self.check_same(rhs);
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c);
        }
        out
    }
}

impl Neg for &ResiduePoly {
    type Output = ResiduePoly;
    fn neg(self) -> ResiduePoly {
        self.scale(&-BigInt::one())
    }
}

impl Mul for &ResiduePoly {
    type Output = ResiduePoly;
    fn mul(self, rhs: &ResiduePoly) -> ResiduePoly {
        self.check_same(rhs);
        let window = 2 * self.modulus;
        let mut out = ResiduePoly::zero(self.modulus);
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &rhs.terms {
                out.add_term((e1 + e2) % window, c1 * c2);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bl(s: &str) -> BiLaurent {
        s.parse().unwrap()
    }

    #[test]
    fn add_identity_and_cancellation() {
        let unknot = BiLaurent::lee_pair(0);
        assert_eq!(&unknot + &BiLaurent::zero(), unknot);
        let x = BiLaurent::monomial(1, 4, 1);
        assert!((&x + &-&x).is_zero());
        assert_eq!(unknot.scale_i64(4), bl("4*t^0*q^1 + 4*t^0*q^-1"));
    }

    #[test]
    fn mul_examples() {
        let b = BiLaurent::block(2, 1);
        assert_eq!(&b * &BiLaurent::monomial(-1, -3, 1), bl("t^-1*q^-3 + q"));
        assert!((&b * &BiLaurent::zero()).is_zero());
        assert_eq!(&b * &b, bl("1 + 2*t*q^4 + t^2*q^8"));
    }

    #[test]
    fn eval_at_minus_one() {
        assert_eq!(bl("t*q^4").eval_t_minus1(), "-q^4".parse().unwrap());
        assert_eq!(
            bl("1 + t*q^4 + t^2*q^8").eval_t_minus1(),
            "1 - q^4 + q^8".parse().unwrap()
        );
        assert_eq!(
            BiLaurent::lee_pair(0).eval_t_minus1(),
            "q + q^-1".parse().unwrap()
        );
    }

    #[test]
    fn mirror_examples() {
        let m = |s: &str| s.parse::<QLaurent>().unwrap().mirror();
        assert_eq!(m("q^3"), "q^-3".parse().unwrap());
        assert_eq!(m("q + q^-1"), "q + q^-1".parse().unwrap());
        assert_eq!(m("2*q^5 - q^-7"), "2*q^-5 - q^7".parse().unwrap());
    }

    #[test]
    fn reduce_examples() {
        let r = |s: &str| s.parse::<QLaurent>().unwrap().reduce_mod(5);
        assert_eq!(r("q^-5"), ResiduePoly::from_terms(5, [(5, 1)]));
        assert_eq!(r("q^-11"), ResiduePoly::from_terms(5, [(9, 1)]));
        let xi = r("-10*q + 5*q^3 - 5*q^7 + 10*q^9");
        assert_eq!(xi.to_string(), "-10*q^1 + 5*q^3 - 5*q^7 + 10*q^9");
    }

    #[test]
    fn nonneg_and_scalar_division() {
        assert!(!bl("q - q^-1").is_nonneg());
        assert_eq!(
            bl("4*q + 8*q^3").div_exact_scalar(&4.into()).unwrap(),
            bl("q + 2*q^3")
        );
        assert!(matches!(
            bl("4*q + 6*q^3").div_exact_scalar(&4.into()),
            Err(LaurentError::NotDivisible { .. })
        ));
    }

    #[test]
    fn widths() {
        let conv = WidthConvention::default();
        assert_eq!(BiLaurent::lee_pair(0).delta_width(conv).unwrap(), 2);
        for s in [-6, -1, 0, 3, 8] {
            assert_eq!(BiLaurent::lee_pair(s).delta_width(conv).unwrap(), 2);
        }
        assert!(matches!(
            BiLaurent::zero().delta_width(conv),
            Err(LaurentError::EmptyPolynomial)
        ));
        // literal convention: t - 2q on q^{±1} gives {−2, 2}
        assert_eq!(
            BiLaurent::lee_pair(0)
                .delta_width(WidthConvention::HomologicalMinusTwiceQuantum)
                .unwrap(),
            4
        );
    }

    #[test]
    fn canonical_text_roundtrip() {
        let p = bl("3*t^-1*q^5 - 2*t^0*q^1 + t^2*q^-3");
        assert_eq!(p.to_string(), "3*t^-1*q^5 - 2*t^0*q^1 + 1*t^2*q^-3");
        assert_eq!(bl(&p.to_string()), p);
        assert_eq!(BiLaurent::zero().to_string(), "0");
        assert!("3*x^2".parse::<BiLaurent>().is_err());
    }

    #[test]
    fn block_division() {
        let s = bl("t^-2*q^-5 + 3*t*q");
        let x = &BiLaurent::block(2, 1) * &s;
        assert_eq!(x.div_block_nonneg(4), Some(s));
        assert_eq!(bl("q").div_block_nonneg(4), None);
        assert_eq!(bl("t*q^5 - q").div_block_nonneg(4), None);
    }
}
