//! Import from CSV tables with columns `name, field_char, s_invariant, khp`
//! and optional `jones` (in `q`) and `alexander` (in `t`), polynomials in
//! the text form `c*t^i*q^j + ...`.

use std::io::Read;

use khperiod::{BiLaurent, QLaurent};
use serde::Deserialize;

use crate::record::{AlexanderField, CoeffList, KnotRecord};
use crate::scan::{Entry, Quarantined};

#[derive(Debug, Deserialize)]
struct Row {
    name: String,
    field_char: u64,
    s_invariant: i64,
    khp: String,
    #[serde(default)]
    jones: Option<String>,
    #[serde(default)]
    alexander: Option<String>,
}

fn nonempty(s: &Option<String>) -> Option<&str> {
    s.as_deref().map(str::trim).filter(|s| !s.is_empty())
}

fn coeffs(text: &str, var: char) -> Result<CoeffList, String> {
    let poly = QLaurent::parse_in(text, var).map_err(|e| e.to_string())?;
    CoeffList::from_poly(&poly).ok_or_else(|| format!("coefficient of {text:?} overflows"))
}

fn convert(row: Row) -> Result<KnotRecord, String> {
    let khp: BiLaurent = row.khp.parse().map_err(|e| format!("khp: {e}"))?;
    let mut record = KnotRecord::new(&row.name, &khp, row.field_char, row.s_invariant);
    if let Some(j) = nonempty(&row.jones) {
        record.jones = Some(coeffs(j, 'q').map_err(|e| format!("jones: {e}"))?);
    }
    if let Some(a) = nonempty(&row.alexander) {
        let poly = coeffs(a, 't').map_err(|e| format!("alexander: {e}"))?;
        record.alexander = Some(AlexanderField {
            lowest: poly.lowest,
            coeffs: poly.coeffs,
            quotients: Vec::new(),
        });
    }
    record.validate().map_err(|e| e.message)?;
    Ok(record)
}

/// Reads a CSV table with a header row; line numbers count the header.
pub fn read_csv(reader: impl Read) -> Result<Vec<Entry>, csv::Error> {
    let mut rdr = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_reader(reader);
    let mut out = Vec::new();
    for (idx, row) in rdr.deserialize::<Row>().enumerate() {
        let line = idx + 2;
        let record = match row {
            Ok(row) => {
                let name = row.name.clone();
                convert(row).map_err(|error| Quarantined { line, name, error })
            }
            Err(e) => Err(Quarantined {
                line,
                name: "<unparsed>".into(),
                error: e.to_string(),
            }),
        };
        out.push(Entry { line, record });
    }
    Ok(out)
}
