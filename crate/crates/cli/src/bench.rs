use std::time::{Duration, Instant};

use clap::{Args, ValueEnum};
use hankel_core::hankel::{build_matrix, det_bareiss, det_cofactor, BAREISS_LIMIT};
use hankel_core::SequenceRule;

use crate::values::{check_combination, compute, usage, CliError, Rule, Seq};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Engine {
    Closed,
    Bareiss,
    Cofactor,
}

#[derive(Args, Debug)]
pub struct BenchArgs {
    #[arg(long)]
    pub n: u64,
    #[arg(long, value_enum, default_value = "closed")]
    pub engine: Engine,
    #[arg(long, value_enum, default_value = "unit")]
    pub rule: Rule,
    #[arg(long, default_value_t = 0)]
    pub m: u64,
    /// Also time the Bareiss oracle on the same matrix and report the speedup.
    #[arg(long)]
    pub compare: bool,
}

pub const CLOSED_LIMIT: u64 = 1_000_000_000;
pub const COFACTOR_BENCH_LIMIT: u64 = 32;

fn time<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let v = f();
    (v, start.elapsed())
}

fn bareiss(rule: Rule, m: u64, n: u64) -> Result<(String, Duration), CliError> {
    if n > BAREISS_LIMIT as u64 {
        return usage(format!("bareiss engine is limited to n <= {BAREISS_LIMIT}"));
    }
    if !rule.kind().is_integer() {
        return usage("bareiss engine needs an integer rule (unit or grs)");
    }
    let matrix = build_matrix(&SequenceRule::new(rule.kind(), m), n as usize);
    let (det, t) = time(|| det_bareiss(&matrix));
    Ok((det?.to_string(), t))
}

pub fn run(args: &BenchArgs) -> Result<(), CliError> {
    if args.rule == Rule::Grs && args.m == 0 {
        return usage("the grs values leave x_0 undefined; use a shift m >= 1");
    }
    let (value, elapsed) = match args.engine {
        Engine::Closed => {
            if args.n > CLOSED_LIMIT {
                return usage(format!("closed engine is limited to n <= {CLOSED_LIMIT}"));
            }
            check_combination(Seq::LowerD, args.rule, args.m, None)?;
            let (v, t) = time(|| compute(Seq::LowerD, args.rule, args.m, args.n, None));
            (v?.value, t)
        }
        Engine::Bareiss => bareiss(args.rule, args.m, args.n)?,
        Engine::Cofactor => {
            if args.n > COFACTOR_BENCH_LIMIT {
                return usage(format!("cofactor engine is limited to n <= {COFACTOR_BENCH_LIMIT}"));
            }
            let matrix = build_matrix(&SequenceRule::new(args.rule.kind(), args.m), args.n as usize);
            let (det, t) = time(|| det_cofactor(&matrix));
            (args.rule.kind().render(&det?), t)
        }
    };
    println!(
        "engine={} rule={} m={} n={} value={} elapsed_ns={}",
        format!("{:?}", args.engine).to_lowercase(),
        args.rule.name(),
        args.m,
        args.n,
        value,
        elapsed.as_nanos()
    );
    if args.compare && args.engine != Engine::Bareiss {
        let (oracle, t) = bareiss(args.rule, args.m, args.n)?;
        let speedup = t.as_secs_f64() / elapsed.as_secs_f64().max(1e-9);
        println!("engine=bareiss value={oracle} elapsed_ns={} agree={}", t.as_nanos(), oracle == value);
        println!("speedup={speedup:.0}x");
    }
    Ok(())
}
