use std::fs::File;
use std::io::{self, BufReader, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use khperiod::{Status, WidthPolicy};
use khperiod_cli::csv_import::read_csv;
use khperiod_cli::{read_jsonl, run, scan, CriterionKind, Entry, Period, RunConfig};
use rayon::prelude::*;

#[derive(Parser)]
#[command(
    name = "khperiod",
    version,
    about = "Periodicity obstructions for knot and link tables"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Khovanov polynomial decomposition criterion.
    CheckKh(Options),
    /// Alexander polynomial congruence.
    CheckMurasugi(Options),
    /// HOMFLYPT congruence.
    CheckHomflypt(Options),
    /// Homology of the double branched cover.
    CheckNaik(Options),
    /// Linking numbers of periodic links.
    CheckLinking(Options),
    /// Every criterion over a whole table, with a summary.
    Scan(Options),
}

#[derive(Args)]
struct Options {
    /// Input table, one JSON record per line; `-` reads standard input.
    input: PathBuf,
    /// Period `p` or `p^n`.
    #[arg(long)]
    period: Period,
    /// Field characteristic, overriding each record's `field_char`.
    #[arg(long = "char")]
    char_r: Option<u64>,
    /// Only allow blocks with `j` at most half the width (odd characteristic).
    #[arg(long)]
    strict_width: bool,
    /// Largest Khovanov coefficient mass handed to the brute-force search.
    #[arg(long, default_value_t = 64)]
    brute_force_cap: u64,
    /// Write one JSON report per record to this file.
    #[arg(long)]
    jsonl: Option<PathBuf>,
    /// Read the input as CSV instead of JSON lines.
    #[arg(long)]
    csv: bool,
    /// Worker threads (default: all cores).
    #[arg(long)]
    threads: Option<usize>,
    /// Include per-criterion wall-clock times in the reports.
    #[arg(long)]
    timing: bool,
}

fn read_entries(opts: &Options) -> Result<Vec<Entry>> {
    let mut reader: Box<dyn Read> = if opts.input.as_os_str() == "-" {
        Box::new(io::stdin())
    } else {
        let file = File::open(&opts.input)
            .with_context(|| format!("cannot open {}", opts.input.display()))?;
        Box::new(file)
    };
    if opts.csv {
        read_csv(reader).context("reading CSV table")
    } else {
        let mut buf = String::new();
        reader.read_to_string(&mut buf).context("reading input")?;
        Ok(read_jsonl(BufReader::new(buf.as_bytes()))?)
    }
}

fn config(opts: &Options, criterion: Option<CriterionKind>) -> RunConfig {
    let mut cfg = RunConfig::new(opts.period);
    if let Some(c) = criterion {
        cfg = cfg.only(c);
    }
    cfg.char_override = opts.char_r;
    if opts.strict_width {
        cfg.width_policy = WidthPolicy::Strict;
    }
    cfg.brute_force_cap = opts.brute_force_cap;
    cfg.record_timing = opts.timing;
    cfg
}

fn write_reports(path: &PathBuf, lines: &[String]) -> Result<()> {
    let file = File::create(path).with_context(|| format!("cannot create {}", path.display()))?;
    let mut out = BufWriter::new(file);
    for line in lines {
        writeln!(out, "{line}")?;
    }
    out.flush()?;
    Ok(())
}

fn exit_for(obstructed: bool, errors: bool) -> ExitCode {
    if errors {
        ExitCode::from(2)
    } else if obstructed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn run_scan(opts: &Options) -> Result<ExitCode> {
    let entries = read_entries(opts)?;
    let result = scan(entries, &config(opts, None));
    if let Some(path) = &opts.jsonl {
        let lines: Vec<String> = result.reports.iter().map(|r| r.to_json()).collect();
        write_reports(path, &lines)?;
    }
    print!("{}", result.summary.render());
    Ok(exit_for(result.summary.overall.obstructed > 0, false))
}

fn run_single(opts: &Options, criterion: CriterionKind) -> Result<ExitCode> {
    let entries = read_entries(opts)?;
    let cfg = config(opts, Some(criterion));
    let results: Vec<_> = entries
        .par_iter()
        .map(|e| match &e.record {
            Ok(r) => run(r, &cfg).map_err(|err| err.to_string()),
            Err(q) => Err(format!("line {}: {}: {}", q.line, q.name, q.error)),
        })
        .collect();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let mut lines = Vec::new();
    let (mut obstructed, mut errors) = (false, false);
    for result in results {
        match result {
            Ok(report) => {
                let c = &report.criteria[0];
                let method = c.method.map(|m| format!(" [{m}]")).unwrap_or_default();
                writeln!(out, "{}: {}{}", report.name, c.status, method)?;
                for note in &c.notes {
                    writeln!(out, "    {note}")?;
                }
                obstructed |= report.overall == Status::Obstructed;
                lines.push(report.to_json());
            }
            Err(e) => {
                eprintln!("error: {e}");
                errors = true;
            }
        }
    }
    if let Some(path) = &opts.jsonl {
        write_reports(path, &lines)?;
    }
    Ok(exit_for(obstructed, errors))
}

fn dispatch(cli: Cli) -> Result<ExitCode> {
    let (opts, criterion) = match &cli.command {
        Command::CheckKh(o) => (o, Some(CriterionKind::Khovanov)),
        Command::CheckMurasugi(o) => (o, Some(CriterionKind::Murasugi)),
        Command::CheckHomflypt(o) => (o, Some(CriterionKind::Homflypt)),
        Command::CheckNaik(o) => (o, Some(CriterionKind::Naik)),
        Command::CheckLinking(o) => (o, Some(CriterionKind::Linking)),
        Command::Scan(o) => (o, None),
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.threads.unwrap_or(0))
        .build()
        .context("starting worker threads")?;
    pool.install(|| match criterion {
        Some(c) => run_single(opts, c),
        None => run_scan(opts),
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
