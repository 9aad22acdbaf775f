mod bench;
mod table;
mod values;
mod verify;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use hankel_core::hankel::{build_matrix, det_oracle};
use hankel_core::SequenceRule;

use values::{CliError, Rule};

/// Hankel determinants of the Catalan numbers modulo 2 and their generalizations.
#[derive(Parser, Debug)]
#[command(name = "hankel", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Emit one record per index for a sequence.
    Table(table::TableArgs),
    /// Exact determinant of a single Hankel matrix.
    Det(DetArgs),
    /// Run verification suites; exit 0 on success, 1 on a failed identity.
    Verify(verify::VerifyArgs),
    /// Time a closed form or an oracle.
    Bench(bench::BenchArgs),
}

#[derive(Args, Debug)]
struct DetArgs {
    #[arg(long)]
    n: u64,
    #[arg(long, value_enum, default_value = "unit")]
    rule: Rule,
    #[arg(long, default_value_t = 0)]
    m: u64,
    /// Print the matrix before its determinant.
    #[arg(long)]
    show: bool,
}

const DET_LIMIT: u64 = 2048;

fn det(args: &DetArgs) -> Result<(), CliError> {
    if args.n > DET_LIMIT {
        return values::usage(format!("det is limited to n <= {DET_LIMIT}"));
    }
    if args.rule == Rule::Grs && args.m == 0 {
        return values::usage("the grs values leave x_0 undefined; use a shift m >= 1");
    }
    let matrix = build_matrix(&SequenceRule::new(args.rule.kind(), args.m), args.n as usize);
    if args.show {
        print!("{matrix}");
    }
    let value = det_oracle(&matrix).map_err(|e| match e {
        hankel_core::Error::SizeGuard { .. } => CliError::Usage(e.to_string()),
        other => CliError::Core(other),
    })?;
    println!("{}", args.rule.kind().render(&value));
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Table(a) => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            let r = table::run(a, &mut lock);
            let _ = lock.flush();
            r.map(|_| true)
        }
        Command::Det(a) => det(a).map(|_| true),
        Command::Verify(a) => verify::run(a),
        Command::Bench(a) => bench::run(a).map(|_| true),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e @ CliError::Usage(_)) => {
            eprintln!("{e}");
            ExitCode::from(2)
        }
        Err(e @ CliError::Core(_)) => {
            eprintln!("{e}");
            ExitCode::from(1)
        }
    }
}
