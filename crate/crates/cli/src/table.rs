use std::io::{ErrorKind, Write};

use clap::{Args, ValueEnum};
use serde::Serialize;

use crate::values::{check_combination, compute, effective_shift, usage, CliError, Rule, Seq};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Args, Debug)]
pub struct TableArgs {
    #[arg(long, value_enum)]
    pub seq: Seq,
    #[arg(long, value_enum, default_value = "unit")]
    pub rule: Rule,
    /// Shift `m` of the sequence `(a_{n+m})`.
    #[arg(long)]
    pub m: Option<u64>,
    #[arg(long, default_value_t = 0)]
    pub from: u64,
    #[arg(long)]
    pub to: u64,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    /// Evaluation method, e.g. `oracle`, `delta`, `recurrence`, `structural`, `nonsquash`.
    #[arg(long)]
    pub method: Option<String>,
}

#[derive(Debug, Serialize)]
pub struct OutputRecord {
    pub n: u64,
    pub m: u64,
    pub rule: String,
    pub method: String,
    pub value: String,
}

/// Hard cap on the number of rows in one table.
const MAX_ROWS: u64 = 1_000_000;

pub fn records(args: &TableArgs) -> Result<Vec<OutputRecord>, CliError> {
    if args.to < args.from {
        return usage("--to must not be smaller than --from");
    }
    if args.to - args.from >= MAX_ROWS {
        return usage(format!("at most {MAX_ROWS} rows per table"));
    }
    let m = effective_shift(args.seq, args.m)?;
    check_combination(args.seq, args.rule, m, args.method.as_deref())?;
    (args.from..=args.to)
        .map(|n| {
            let v = compute(args.seq, args.rule, m, n, args.method.as_deref())?;
            Ok(OutputRecord { n, m, rule: args.rule.name().to_string(), method: v.method.to_string(), value: v.value })
        })
        .collect()
}

fn write_error(kind: Option<ErrorKind>, msg: String) -> Result<(), CliError> {
    if kind == Some(ErrorKind::BrokenPipe) {
        return Ok(());
    }
    Err(CliError::Usage(format!("write failed: {msg}")))
}

fn emit(args: &TableArgs, recs: &[OutputRecord], out: &mut dyn Write) -> Result<(), CliError> {
    match args.format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for r in recs {
                if let Err(e) = w.serialize(r) {
                    let kind = match e.kind() {
                        csv::ErrorKind::Io(io) => Some(io.kind()),
                        _ => None,
                    };
                    return write_error(kind, e.to_string());
                }
            }
            if let Err(e) = w.flush() {
                return write_error(Some(e.kind()), e.to_string());
            }
        }
        Format::Json => {
            if let Err(e) = serde_json::to_writer_pretty(&mut *out, recs) {
                return write_error(e.io_error_kind(), e.to_string());
            }
            if let Err(e) = writeln!(out) {
                return write_error(Some(e.kind()), e.to_string());
            }
        }
    }
    Ok(())
}

pub fn run(args: &TableArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let recs = records(args)?;
    emit(args, &recs, out)
}
