//! Batch scanning of record tables.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::BufRead;

use khperiod::Status;
use rayon::prelude::*;
use serde::Serialize;

use crate::record::{parse_record, KnotRecord};
use crate::run::{run, CriterionKind, ObstructionReport, RunConfig};

/// A table entry: a parsed record or the reason it was rejected, with its
/// 1-based line number.
#[derive(Clone, Debug)]
pub struct Entry {
    pub line: usize,
    pub record: Result<KnotRecord, Quarantined>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Quarantined {
    pub line: usize,
    pub name: String,
    pub error: String,
}

/// Reads a JSON-lines table; blank lines and lines starting with `#` are
/// skipped.
pub fn read_jsonl(reader: impl BufRead) -> std::io::Result<Vec<Entry>> {
    let mut out = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let record = parse_record(trimmed).map_err(|e| Quarantined {
            line: idx + 1,
            name: e.name.clone(),
            error: e.message.clone(),
        });
        out.push(Entry {
            line: idx + 1,
            record,
        });
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct StatusCounts {
    pub obstructed: usize,
    pub no_obstruction: usize,
    pub vacuous: usize,
    pub not_applicable: usize,
}

impl StatusCounts {
    fn add(&mut self, status: Status) {
        match status {
            Status::Obstructed => self.obstructed += 1,
            Status::NoObstruction => self.no_obstruction += 1,
            Status::Vacuous => self.vacuous += 1,
            Status::NotApplicable => self.not_applicable += 1,
        }
    }

    fn render(&self) -> String {
        format!(
            "OBSTRUCTED {}, NO_OBSTRUCTION {}, VACUOUS {}, NOT_APPLICABLE {}",
            self.obstructed, self.no_obstruction, self.vacuous, self.not_applicable
        )
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub period: String,
    pub records: usize,
    pub processed: usize,
    pub overall: StatusCounts,
    pub by_criterion: BTreeMap<CriterionKind, StatusCounts>,
    pub quarantined: Vec<Quarantined>,
}

impl Summary {
    /// Plain-text summary; stable for a fixed table and configuration.
    pub fn render(&self) -> String {
        let mut s = String::new();
        writeln!(s, "period: {}", self.period).unwrap();
        writeln!(s, "records: {}", self.records).unwrap();
        writeln!(s, "processed: {}", self.processed).unwrap();
        writeln!(s, "quarantined: {}", self.quarantined.len()).unwrap();
        writeln!(s, "overall: {}", self.overall.render()).unwrap();
        for (kind, counts) in &self.by_criterion {
            writeln!(s, "{}: {}", kind.name(), counts.render()).unwrap();
        }
        for q in &self.quarantined {
            writeln!(s, "quarantined line {} ({}): {}", q.line, q.name, q.error).unwrap();
        }
        s
    }
}

#[derive(Clone, Debug)]
pub struct ScanResult {
    /// Reports ordered by record name.
    pub reports: Vec<ObstructionReport>,
    pub summary: Summary,
}

/// Runs `config` over every entry.  Records are processed in parallel and
/// reported in name order (ties by line); records that fail to parse or
/// run are quarantined and the scan continues.
pub fn scan(entries: Vec<Entry>, config: &RunConfig) -> ScanResult {
    let mut summary = Summary {
        period: config.period.to_string(),
        records: entries.len(),
        ..Summary::default()
    };
    let mut good: Vec<(usize, KnotRecord)> = Vec::new();
    for e in entries {
        match e.record {
            Ok(r) => good.push((e.line, r)),
            Err(q) => summary.quarantined.push(q),
        }
    }
    good.sort_by(|a, b| a.1.name.cmp(&b.1.name).then(a.0.cmp(&b.0)));
    let results: Vec<_> = good
        .par_iter()
        .map(|(line, record)| (*line, record, run(record, config)))
        .collect();
    let mut reports = Vec::new();
    for (line, record, result) in results {
        match result {
            Ok(report) => {
                summary.overall.add(report.overall);
                for c in &report.criteria {
                    summary
                        .by_criterion
                        .entry(c.criterion)
                        .or_default()
                        .add(c.status);
                }
                reports.push(report);
            }
            Err(e) => summary.quarantined.push(Quarantined {
                line,
                name: record.name.clone(),
                error: e.detail(),
            }),
        }
    }
    summary.processed = reports.len();
    summary.quarantined.sort_by_key(|q| q.line);
    ScanResult { reports, summary }
}
