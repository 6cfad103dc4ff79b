//! Running the selected criteria on one record.

use std::time::Instant;

use khperiod::classical::{
    homflypt_check, linking_obstruction, murasugi_check, naik_multiplicity_check, HomflyConvention,
};
use khperiod::criterion::{check, jones_divisibility, Certificate, CheckOptions};
use khperiod::equivlee::free_parts;
use khperiod::repcyc::is_max_order;
use khperiod::{
    CriterionError, CriterionInput, HomDegreeConvention, PeriodicLinkData, QLaurent, Status,
    Verdict, WidthPolicy,
};
use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Value};

use crate::period::Period;
use crate::record::{KnotRecord, SchemaError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CriterionKind {
    Khovanov,
    Murasugi,
    Homflypt,
    Naik,
    Linking,
}

impl CriterionKind {
    pub const ALL: [CriterionKind; 5] = [
        CriterionKind::Khovanov,
        CriterionKind::Murasugi,
        CriterionKind::Homflypt,
        CriterionKind::Naik,
        CriterionKind::Linking,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CriterionKind::Khovanov => "khovanov",
            CriterionKind::Murasugi => "murasugi",
            CriterionKind::Homflypt => "homflypt",
            CriterionKind::Naik => "naik",
            CriterionKind::Linking => "linking",
        }
    }
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub period: Period,
    pub criteria: Vec<CriterionKind>,
    /// Overrides the field characteristic of every record.
    pub char_override: Option<u64>,
    pub width_policy: WidthPolicy,
    pub brute_force_cap: u64,
    /// Largest `l` tried in the Alexander congruence (raised to the span of
    /// the Alexander polynomial plus one when that is larger).
    pub murasugi_l_max: u64,
    pub homflypt_convention: HomflyConvention,
    pub hom_degree: HomDegreeConvention,
    /// Record wall-clock time per criterion (makes reports run-dependent).
    pub record_timing: bool,
}

impl RunConfig {
    pub fn new(period: Period) -> Self {
        Self {
            period,
            criteria: CriterionKind::ALL.to_vec(),
            char_override: None,
            width_policy: WidthPolicy::default(),
            brute_force_cap: 64,
            murasugi_l_max: 10,
            homflypt_convention: HomflyConvention::default(),
            hom_degree: HomDegreeConvention::default(),
            record_timing: false,
        }
    }

    pub fn only(mut self, criterion: CriterionKind) -> Self {
        self.criteria = vec![criterion];
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CriterionReport {
    pub criterion: CriterionKind,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub method: Option<&'static str>,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub detail: Value,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_us: Option<u64>,
}

impl CriterionReport {
    fn new(criterion: CriterionKind, status: Status, detail: Value) -> Self {
        Self {
            criterion,
            status,
            method: None,
            detail,
            notes: Vec::new(),
            elapsed_us: None,
        }
    }

    fn not_applicable(criterion: CriterionKind, why: impl Into<String>) -> Self {
        let mut r = Self::new(criterion, Status::NotApplicable, Value::Null);
        r.notes.push(why.into());
        r
    }

    fn from_bool(criterion: CriterionKind, passes: bool, detail: Value) -> Self {
        let status = if passes {
            Status::NoObstruction
        } else {
            Status::Obstructed
        };
        Self::new(criterion, status, detail)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ObstructionReport {
    pub name: String,
    pub period: String,
    pub field_char: u64,
    pub overall: Status,
    pub criteria: Vec<CriterionReport>,
}

impl ObstructionReport {
    pub fn criterion(&self, kind: CriterionKind) -> Option<&CriterionReport> {
        self.criteria.iter().find(|c| c.criterion == kind)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RunError {
    #[error(transparent)]
    Schema(#[from] SchemaError),
    #[error("{name}: field not admissible: {message}")]
    FieldNotAdmissible { name: String, message: String },
}

impl RunError {
    /// The error without the record name.
    pub fn detail(&self) -> String {
        match self {
            RunError::Schema(e) => e.message.clone(),
            RunError::FieldNotAdmissible { message, .. } => {
                format!("field not admissible: {message}")
            }
        }
    }
}

/// Obstructed if any criterion obstructs; otherwise the strongest of
/// no obstruction, vacuous and not applicable that occurs.
pub fn overall_status(reports: &[CriterionReport]) -> Status {
    let has = |s: Status| reports.iter().any(|r| r.status == s);
    if has(Status::Obstructed) {
        Status::Obstructed
    } else if has(Status::NoObstruction) {
        Status::NoObstruction
    } else if has(Status::Vacuous) {
        Status::Vacuous
    } else {
        Status::NotApplicable
    }
}

/// Runs every selected criterion on `record`.
pub fn run(record: &KnotRecord, config: &RunConfig) -> Result<ObstructionReport, RunError> {
    record.validate()?;
    let r = config.char_override.unwrap_or(record.field_char);
    let mut reports = Vec::new();
    for &kind in &config.criteria {
        let start = Instant::now();
        let mut report = match kind {
            CriterionKind::Khovanov => run_khovanov(record, r, config)?,
            CriterionKind::Murasugi => run_murasugi(record, config),
            CriterionKind::Homflypt => run_homflypt(record, config),
            CriterionKind::Naik => run_naik(record, config),
            CriterionKind::Linking => run_linking(record, config),
        };
        if config.record_timing {
            report.elapsed_us = Some(start.elapsed().as_micros() as u64);
        }
        reports.push(report);
    }
    cross_check(&mut reports, config.period.p);
    Ok(ObstructionReport {
        name: record.name.clone(),
        period: config.period.to_string(),
        field_char: r,
        overall: overall_status(&reports),
        criteria: reports,
    })
}

/// When the HOMFLYPT test passes, the pruned search's defect is expected to
/// have all coefficients divisible by `p`; flag records where it does not.
fn cross_check(reports: &mut [CriterionReport], p: u64) {
    let homflypt_passes = reports
        .iter()
        .any(|r| r.criterion == CriterionKind::Homflypt && r.status == Status::NoObstruction);
    if !homflypt_passes {
        return;
    }
    for r in reports.iter_mut() {
        if r.criterion != CriterionKind::Khovanov {
            continue;
        }
        let divisible = r
            .detail
            .get("defect_divisible_by_p")
            .and_then(Value::as_bool);
        if divisible == Some(false) {
            r.notes.push(format!(
                "HOMFLYPT passes but the defect has coefficients not divisible by {p}"
            ));
        }
    }
}

fn link_data_for(record: &KnotRecord, period: Period) -> Result<Option<&PeriodicLinkData>, String> {
    match &record.link_data {
        Some(d) if d.components > 1 => {
            if d.period != period.order() {
                Err(format!(
                    "link data describes period {}, not {}",
                    d.period,
                    period.order()
                ))
            } else {
                Ok(Some(d))
            }
        }
        _ => Ok(None),
    }
}

fn run_khovanov(
    record: &KnotRecord,
    r: u64,
    config: &RunConfig,
) -> Result<CriterionReport, RunError> {
    let kind = CriterionKind::Khovanov;
    let Period { p, n } = config.period;
    let khp = record.khp_poly();
    let not_admissible = |message: String| RunError::FieldNotAdmissible {
        name: record.name.clone(),
        message,
    };
    let input = if record.is_link() {
        let data = match link_data_for(record, config.period) {
            Ok(d) => d.expect("record is a link"),
            Err(why) => return Ok(CriterionReport::not_applicable(kind, why)),
        };
        if r == p || !is_max_order(p, n, r) {
            return Err(not_admissible(format!(
                "characteristic {r} does not have maximal order modulo {}",
                config.period
            )));
        }
        match free_parts(data, p, n, r, config.hom_degree) {
            Ok(parts) => CriterionInput::link(khp, parts, r, p, n),
            Err(e) => {
                return Ok(CriterionReport::not_applicable(
                    kind,
                    format!("equivariant Lee data unavailable: {e}"),
                ))
            }
        }
    } else {
        CriterionInput::knot(khp, record.s_invariant, r, p, n)
    };
    let input = input.with_width_policy(config.width_policy);
    let options = CheckOptions {
        brute_force_cap: config.brute_force_cap,
        use_pruned: true,
    };
    match check(&input, &options) {
        Ok(verdict) => Ok(khovanov_report(record, verdict, p)),
        Err(CriterionError::FieldNotAdmissible(message)) => Err(not_admissible(message)),
        Err(e) => Ok(CriterionReport::not_applicable(kind, e.to_string())),
    }
}

fn khovanov_report(record: &KnotRecord, verdict: Verdict, p: u64) -> CriterionReport {
    let mut detail = json!({});
    if let Some(c) = verdict.cases() {
        detail["cases"] = json!(c);
    }
    if let Some(Certificate::Pruned(cert)) = &verdict.certificate {
        detail["defect"] = json!(cert.xi.to_string());
        detail["box_sizes"] = json!(cert.box_sizes());
        detail["defect_divisible_by_p"] = json!(cert.xi.all_divisible_by(&BigInt::from(p)));
    }
    if let Some(Certificate::NegativeRemainder { t_exp, q_exp }) = &verdict.certificate {
        detail["negative_remainder"] = json!([t_exp, q_exp]);
    }
    if let Some(w) = &verdict.witness {
        detail["witness"] = serde_json::to_value(w).expect("witness serializes");
    }
    let mut notes = verdict.notes;
    if let (Some(Certificate::Vacuity(v)), Some(jones)) = (&verdict.certificate, &record.jones) {
        let holds = jones_divisibility(&jones.to_poly(), v.modulus);
        notes.push(format!(
            "supplied Jones polynomial {} the divisibility",
            if holds { "satisfies" } else { "violates" }
        ));
    }
    CriterionReport {
        criterion: CriterionKind::Khovanov,
        status: verdict.status,
        method: Some(verdict.method),
        detail,
        notes,
        elapsed_us: None,
    }
}

fn subgroup_note(config: &RunConfig) -> Option<String> {
    (config.period.n > 1).then(|| format!("tested for the subgroup of order {}", config.period.p))
}

fn run_murasugi(record: &KnotRecord, config: &RunConfig) -> CriterionReport {
    let kind = CriterionKind::Murasugi;
    if record.is_link() {
        return CriterionReport::not_applicable(kind, "knots only");
    }
    let (Some(delta), Some(field)) = (record.alexander_poly(), &record.alexander) else {
        return CriterionReport::not_applicable(kind, "no Alexander polynomial");
    };
    let p = config.period.p;
    // the right-hand side has span at least (p - 1)(l - 1), so larger l never match
    let l_max = config.murasugi_l_max.max(delta.span() as u64 + 1);
    let mut quotients = vec![QLaurent::monomial(0, 1)];
    quotients.extend(field.quotients.iter().map(|q| q.to_poly()));
    quotients.dedup();
    let mut results = Vec::new();
    let mut any_feasible = false;
    let mut warnings = Vec::new();
    for q in &quotients {
        let res = murasugi_check(&delta, q, p, l_max);
        any_feasible |= !res.obstructed();
        warnings.extend(res.warnings.iter().cloned());
        results.push(json!({
            "quotient": q.fmt_in("t"),
            "feasible_l": res.feasible,
            "quotient_divides": res.quotient_divides,
        }));
    }
    let mut report =
        CriterionReport::from_bool(kind, any_feasible, json!({ "candidates": results }));
    warnings.dedup();
    report.notes.extend(warnings);
    report.notes.extend(subgroup_note(config));
    report
}

fn run_homflypt(record: &KnotRecord, config: &RunConfig) -> CriterionReport {
    let kind = CriterionKind::Homflypt;
    let Some(poly) = record.homflypt_poly() else {
        return CriterionReport::not_applicable(kind, "no HOMFLYPT polynomial");
    };
    match homflypt_check(&poly, config.period.p, config.homflypt_convention) {
        Ok(res) => {
            let detail = if res.passes {
                Value::Null
            } else {
                json!({ "failing_z_degrees": res.failing_z_degrees })
            };
            let mut report = CriterionReport::from_bool(kind, res.passes, detail);
            report.notes.extend(subgroup_note(config));
            report
        }
        Err(e) => CriterionReport::not_applicable(kind, e.to_string()),
    }
}

fn run_naik(record: &KnotRecord, config: &RunConfig) -> CriterionReport {
    let kind = CriterionKind::Naik;
    let Some(torsion) = &record.torsion else {
        return CriterionReport::not_applicable(kind, "no branched-cover homology");
    };
    match naik_multiplicity_check(&torsion.cover, &torsion.quotient, config.period.p) {
        Ok(res) => {
            let detail = if res.passes {
                Value::Null
            } else {
                let failures: Vec<Value> = res
                    .failures
                    .iter()
                    .map(|&(q, i, mult, need)| {
                        json!({ "prime": q, "exponent": i, "multiplicity": mult, "required_divisor": need })
                    })
                    .collect();
                json!({ "failures": failures })
            };
            let mut report = CriterionReport::from_bool(kind, res.passes, detail);
            report.notes.extend(subgroup_note(config));
            report
        }
        Err(e) => CriterionReport::not_applicable(kind, e.to_string()),
    }
}

fn run_linking(record: &KnotRecord, config: &RunConfig) -> CriterionReport {
    let kind = CriterionKind::Linking;
    if !record.is_link() {
        return CriterionReport::not_applicable(kind, "links only");
    }
    let data = match link_data_for(record, config.period) {
        Ok(d) => d.expect("record is a link"),
        Err(why) => return CriterionReport::not_applicable(kind, why),
    };
    // the subgroup of order p is generated by the p^{n-1}-th power
    let mut sub = data.clone();
    for _ in 1..config.period.order() / config.period.p {
        sub.permutation = sub
            .permutation
            .iter()
            .map(|&i| data.permutation[i])
            .collect();
    }
    sub.period = config.period.p;
    let res = linking_obstruction(&sub, config.period.p);
    let mut detail = json!({ "rule": res.rule });
    if !res.violations.is_empty() {
        detail["violations"] = json!(res.violations);
    }
    CriterionReport::from_bool(kind, res.passes, detail)
}
