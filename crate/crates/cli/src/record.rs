//! Input records: one knot or link per JSON line.

use std::collections::BTreeSet;

use khperiod::classical::{AlexPoly, HomflyPoly, TorsionDecomp};
use khperiod::repcyc::is_prime;
use khperiod::{BiLaurent, PeriodicLinkData, QLaurent};
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{name}: {message}")]
pub struct SchemaError {
    pub name: String,
    pub message: String,
}

impl SchemaError {
    fn new(name: &str, message: impl Into<String>) -> Self {
        Self {
            name: name.to_string(),
            message: message.into(),
        }
    }
}

/// One-variable Laurent polynomial as its lowest exponent and coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoeffList {
    pub lowest: i64,
    pub coeffs: Vec<i64>,
}

impl CoeffList {
    pub fn to_poly(&self) -> QLaurent {
        QLaurent::from_coeffs(self.lowest, &self.coeffs)
    }

    /// Fails only when a coefficient does not fit in 64 bits.
    pub fn from_poly(poly: &QLaurent) -> Option<Self> {
        let (lowest, dense) = poly.to_dense();
        let coeffs = dense
            .iter()
            .map(|c| i64::try_from(c).ok())
            .collect::<Option<Vec<_>>>()?;
        Some(Self { lowest, coeffs })
    }

    fn canonical(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|&&c| c == 0).count();
        if lead == coeffs.len() {
            return Self {
                lowest: 0,
                coeffs: Vec::new(),
            };
        }
        Self {
            lowest: self.lowest + lead as i64,
            coeffs: coeffs.split_off(lead),
        }
    }
}

/// A knot or link together with whatever invariants are known for it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KnotRecord {
    pub schema_version: u32,
    pub name: String,
    /// Khovanov polynomial as `(t_exp, q_exp, coeff)` triples.
    pub khp: Vec<(i64, i64, i64)>,
    pub field_char: u64,
    pub s_invariant: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub jones: Option<CoeffList>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alexander: Option<AlexanderField>,
    /// `(a_exp, z_exp, coeff)` triples.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub homflypt: Option<Vec<(i64, i64, i64)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub torsion: Option<TorsionField>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub link_data: Option<PeriodicLinkData>,
}

/// Alexander polynomial with optional candidates for the quotient knot
/// (`1` is always tried).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlexanderField {
    pub lowest: i64,
    pub coeffs: Vec<i64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub quotients: Vec<CoeffList>,
}

/// First homology of the double branched cover, and of the quotient's
/// cover when known (trivial otherwise).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TorsionField {
    pub cover: TorsionDecomp,
    #[serde(default, skip_serializing_if = "is_trivial")]
    pub quotient: TorsionDecomp,
}

impl AlexanderField {
    pub fn poly(&self) -> CoeffList {
        CoeffList {
            lowest: self.lowest,
            coeffs: self.coeffs.clone(),
        }
    }
}

fn is_trivial(t: &TorsionDecomp) -> bool {
    t.parts.is_empty()
}

impl KnotRecord {
    /// A minimal record with only the Khovanov data.
    pub fn new(name: &str, khp: &BiLaurent, field_char: u64, s_invariant: i64) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            name: name.to_string(),
            khp: triples(khp),
            field_char,
            s_invariant,
            jones: None,
            alexander: None,
            homflypt: None,
            torsion: None,
            link_data: None,
        }
    }

    pub fn khp_poly(&self) -> BiLaurent {
        BiLaurent::from_terms(self.khp.iter().copied())
    }

    pub fn alexander_poly(&self) -> Option<AlexPoly> {
        self.alexander.as_ref().map(|a| a.poly().to_poly())
    }

    pub fn homflypt_poly(&self) -> Option<HomflyPoly> {
        self.homflypt
            .as_ref()
            .map(|t| HomflyPoly::from_triples(t.iter().copied()))
    }

    /// Whether the record describes a link with at least two components.
    pub fn is_link(&self) -> bool {
        self.link_data.as_ref().is_some_and(|d| d.components > 1)
    }

    pub fn validate(&self) -> Result<(), SchemaError> {
        let name = self.name.as_str();
        if self.schema_version != SCHEMA_VERSION {
            return Err(SchemaError::new(
                name,
                format!(
                    "schema_version {} is not supported (expected {SCHEMA_VERSION})",
                    self.schema_version
                ),
            ));
        }
        if name.trim().is_empty() {
            return Err(SchemaError::new("<unnamed>", "empty name"));
        }
        if self.khp.is_empty() {
            return Err(SchemaError::new(name, "khp is empty"));
        }
        let mut seen = BTreeSet::new();
        for &(t, q, c) in &self.khp {
            if c <= 0 {
                return Err(SchemaError::new(
                    name,
                    format!("khp coefficient {c} at t^{t} q^{q} is not positive"),
                ));
            }
            if !seen.insert((t, q)) {
                return Err(SchemaError::new(
                    name,
                    format!("khp repeats bidegree ({t}, {q})"),
                ));
            }
        }
        if self.field_char != 0 && !is_prime(self.field_char) {
            return Err(SchemaError::new(
                name,
                format!("field_char {} is neither 0 nor prime", self.field_char),
            ));
        }
        if let Some(t) = &self.torsion {
            for part in [&t.cover, &t.quotient] {
                part.validate()
                    .map_err(|e| SchemaError::new(name, e.to_string()))?;
            }
        }
        if let Some(d) = &self.link_data {
            d.validate()
                .map_err(|e| SchemaError::new(name, format!("link_data: {e}")))?;
        }
        Ok(())
    }

    /// Sorted triples and trimmed coefficient lists; serializing the
    /// canonical form is idempotent.
    pub fn canonical(&self) -> Self {
        let mut out = self.clone();
        out.khp.sort_unstable();
        if let Some(h) = &mut out.homflypt {
            *h = triples_from(HomflyPoly::from_triples(h.iter().copied()).triples());
        }
        out.jones = out.jones.as_ref().map(CoeffList::canonical);
        if let Some(a) = &mut out.alexander {
            let poly = a.poly().canonical();
            a.lowest = poly.lowest;
            a.coeffs = poly.coeffs;
            for q in &mut a.quotients {
                *q = q.canonical();
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("records serialize")
    }
}

fn triples(poly: &BiLaurent) -> Vec<(i64, i64, i64)> {
    poly.terms()
        .map(|(t, q, c)| (t, q, i64::try_from(c).expect("coefficient fits in i64")))
        .collect()
}

fn triples_from<'a>(
    terms: impl Iterator<Item = (i64, i64, &'a num_bigint::BigInt)>,
) -> Vec<(i64, i64, i64)> {
    let mut out: Vec<_> = terms
        .map(|(a, z, c)| (a, z, i64::try_from(c).expect("coefficient fits in i64")))
        .collect();
    out.sort_unstable();
    out
}

/// Parses one JSON line into a validated record.
pub fn parse_record(line: &str) -> Result<KnotRecord, SchemaError> {
    let record: KnotRecord = serde_json::from_str(line).map_err(|e| {
        let name = serde_json::from_str::<serde_json::Value>(line)
            .ok()
            .and_then(|v| v.get("name").and_then(|n| n.as_str()).map(str::to_string))
            .unwrap_or_else(|| "<unparsed>".to_string());
        SchemaError::new(&name, e.to_string())
    })?;
    record.validate()?;
    Ok(record)
}
