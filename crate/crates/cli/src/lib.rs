//! Batch front-end for `khperiod`: record schema, per-record reports and
//! table scans.

pub mod csv_import;
pub mod period;
pub mod record;
pub mod run;
pub mod scan;

pub use period::Period;
pub use record::{parse_record, KnotRecord, SchemaError, SCHEMA_VERSION};
pub use run::{run, CriterionKind, CriterionReport, ObstructionReport, RunConfig, RunError};
pub use scan::{read_jsonl, scan, Entry, Quarantined, ScanResult, Summary};
