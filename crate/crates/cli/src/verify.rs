use std::fmt::Display;

use clap::{Args, ValueEnum};
use hankel_core::closedform::{
    big_d_sign, conjecture_scan, d_shift_generic, d_shift_int, d_sign, favard_st, generic_big_d,
    generic_big_d_recursive, generic_big_t, generic_big_t_structural, generic_d, generic_d_recursive, generic_t,
    generic_t_rule, lambda_profile, mu_profile, ratio_h, shift_modulus, shift_support, t_int, t_table, DMethod, TMethod,
};
use hankel_core::contfrac::{cf_expand, hankel_t, verify_identity, CFSpec, Identity, IDENTITY_ORDER_LIMIT};
use hankel_core::hankel::{
    build_matrix, catalan_shift_parity, det_bareiss, det_cofactor, ldlt_verify_plain, ldlt_verify_shifted,
    moment_orthogonality, nimble_enumerate, nimble_solve, unit_orthopoly,
};
use hankel_core::seq::{digit_sum, grs_r, paperfolding_s, Sign};
use hankel_core::{ExponentVector, LaurentPoly, RuleKind, SequenceRule};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::values::{usage, CliError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Oracle,
    Methods,
    Reflect,
    Ldlt,
    Cf,
    Orthogonality,
    Parity,
    Conjecture,
    All,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value = "all")]
    pub suite: Suite,
    #[arg(long, default_value_t = 32)]
    pub max_n: u64,
    #[arg(long, default_value_t = 8)]
    pub max_m: u64,
    /// Single shift for the conjecture scan; defaults to every `3..=max_m`.
    #[arg(long)]
    pub m: Option<u64>,
    #[arg(long, default_value_t = 0)]
    pub prop_seed: u64,
}

#[derive(Debug, Clone)]
pub struct Failure {
    pub check: &'static str,
    pub n: u64,
    pub m: u64,
    pub expected: String,
    pub got: String,
}

#[derive(Debug, Default)]
struct Checks {
    count: u64,
    failures: Vec<Failure>,
}

impl Checks {
    fn eq<T: PartialEq + Display>(&mut self, check: &'static str, n: u64, m: u64, expected: T, got: T) {
        self.count += 1;
        if expected != got {
            self.failures.push(Failure { check, n, m, expected: expected.to_string(), got: got.to_string() });
        }
    }

    fn merge(mut self, other: Checks) -> Checks {
        self.count += other.count;
        self.failures.extend(other.failures);
        self
    }
}

fn par<I, F>(items: Vec<I>, f: F) -> Checks
where
    I: Send + Sync,
    F: Fn(&I) -> Checks + Send + Sync,
{
    let parts: Vec<Checks> = items.par_iter().map(f).collect();
    parts.into_iter().fold(Checks::default(), Checks::merge)
}

const SYMBOLIC_LIMIT: u64 = 32;
const SYMBOLIC_SHIFT_LIMIT: u64 = 8;
const NIMBLE_LIMIT: u64 = 9;
const NIMBLE_SHIFT_LIMIT: u64 = 4;
const ORTHO_LIMIT: u64 = 20;
const RANDOM_SAMPLES: usize = 512;

fn unit_det(m: u64, n: u64) -> BigInt {
    det_bareiss(&build_matrix(&SequenceRule::unit(m), n as usize)).expect("unit rule")
}

fn oracle(max_n: u64, max_m: u64) -> Checks {
    let pairs: Vec<(u64, u64)> = (0..=max_m).flat_map(|m| (0..=max_n).map(move |n| (m, n))).collect();
    let int = par(pairs.clone(), |&(m, n)| {
        let mut c = Checks::default();
        let closed = match m {
            0 => d_sign(n).to_i64(),
            1 => big_d_sign(n, DMethod::Delta).to_i64(),
            _ => d_shift_int(n, m),
        };
        c.eq("bareiss-vs-closed", n, m, unit_det(m, n), BigInt::from(closed));
        c
    });
    let sym_pairs: Vec<(u64, u64)> = pairs
        .iter()
        .copied()
        .filter(|&(m, n)| n <= SYMBOLIC_LIMIT && m <= SYMBOLIC_SHIFT_LIMIT)
        .collect();
    let sym = par(sym_pairs, |&(m, n)| {
        let mut c = Checks::default();
        let det = det_cofactor(&build_matrix(&SequenceRule::generic(m), n as usize)).expect("within guard");
        let closed = match m {
            0 => generic_d(n),
            1 => generic_big_d(n),
            _ => d_shift_generic(n, m).expect("base case within guard"),
        };
        c.eq("cofactor-vs-closed", n, m, det, closed);
        c
    });
    let nimble_pairs: Vec<(u64, u64)> = pairs
        .iter()
        .copied()
        .filter(|&(m, n)| n <= NIMBLE_LIMIT && m <= NIMBLE_SHIFT_LIMIT)
        .collect();
    let nimble = par(nimble_pairs, |&(m, n)| {
        let mut c = Checks::default();
        let all = nimble_enumerate(n as usize, m).expect("within guard");
        let solved = nimble_solve(n as usize, m);
        let nonzero = unit_det(m, n) != BigInt::from(0);
        c.eq("nimble-count", n, m, u64::from(nonzero), all.len() as u64);
        let found = all.first().map(|p| format!("{:?}", p.images())).unwrap_or_else(|| "none".into());
        let built = solved.as_ref().map(|p| format!("{:?}", p.images())).unwrap_or_else(|| "none".into());
        c.eq("nimble-solver", n, m, found, built);
        c
    });
    int.merge(sym).merge(nimble)
}

fn random_checks(seed: u64) -> Checks {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut c = Checks::default();
    for _ in 0..RANDOM_SAMPLES {
        let n: u64 = rng.gen_range(0..1u64 << 40);
        c.eq("d-methods-random", n, 1, big_d_sign(n, DMethod::Delta), big_d_sign(n, DMethod::Recurrence));
        c.eq("d-profile-random", n, 0, generic_d(n), generic_d_recursive(n));
        c.eq("big-d-profile-random", n, 1, generic_big_d(n), generic_big_d_recursive(n));
        c.eq("big-t-rule-random", n, 1, generic_big_t(n).expect("exact"), generic_big_t_structural(n));
        c.eq("t-rule-random", n, 0, generic_t(n).expect("exact"), generic_t_rule(n));
        let h = LaurentPoly::monomial(Sign::pow_neg_one(n).to_i64(), ExponentVector::single(0, 1));
        c.eq("ratio-h-random", n, 0, h, ratio_h(n).expect("exact"));
        c.eq("t-structural-random", n, 1, t_int(n, TMethod::Ratio), t_int(n, TMethod::Structural));
    }
    c
}

fn methods(max_n: u64, seed: u64) -> Checks {
    let mut c = Checks::default();
    let tables: Vec<Vec<Sign>> = TMethod::ALL.iter().map(|&m| t_table(max_n + 1, m)).collect();
    for n in 0..=max_n {
        let d = big_d_sign(n, DMethod::Delta);
        c.eq("d-recurrence", n, 1, d, big_d_sign(n, DMethod::Recurrence));
        for (tm, table) in TMethod::ALL.iter().zip(&tables).skip(1) {
            let _ = tm;
            c.eq("t-methods", n, 1, tables[0][n as usize], table[n as usize]);
        }
        let grs = generic_big_t(n).expect("exact").substitute(|k| RuleKind::Grs.level_value(k)).expect("no inverse of 0");
        c.eq("grs-t-neighbours", n, 1, LaurentPoly::constant((grs_r(n) * grs_r(n + 2)).to_i64()), grs);
    }
    let mut prod = Sign::Plus;
    for n in 0..=max_n {
        c.eq("d-paperfolding-product", n, 1, big_d_sign(n, DMethod::Delta), prod);
        prod *= paperfolding_s(n);
    }
    c.merge(random_checks(seed))
}

fn reflect(max_n: u64) -> Checks {
    let mut c = Checks::default();
    let d = |n: u64| big_d_sign(n, DMethod::Delta);
    for n in 0..=max_n {
        let k = 64 - n.leading_zeros();
        let p = 1u64 << k.max(1);
        c.eq("d-mirror", n, 1, Sign::pow_neg_one(n) * d(p - 1 - n), d(p + n));
        c.eq("d-double-block-low", n, 1, -d(n), d(2 * p + n));
        c.eq("d-double-block-high", n, 1, d(p + n), d(3 * p + n));
        c.eq("paperfolding-coupling", n, 1, paperfolding_s(n), d(n) * d(n + 1));
        c.eq("lambda-sign", n, 0, d_sign(n), lambda_profile(n).sign());
        c.eq("mu-sign", n, 1, d(n), mu_profile(n).sign());
        if n >= 4 {
            let k = 63 - n.leading_zeros();
            let p = 1u64 << k;
            if n <= 2 * p - 3 {
                c.eq("t-mirror", n, 1, t_int(2 * p - 3 - n, TMethod::Ratio), t_int(n, TMethod::Ratio));
            }
        }
        let powers = generic_big_t(n).expect("exact").substitute(|k| RuleKind::Powers.level_value(k)).expect("x != 0");
        let exp = powers.as_monomial().map(|(_, ev)| ev.get(0)).unwrap_or(i64::MIN);
        c.eq("powers-t-exponent", n, 1, i64::from(digit_sum(n + 2)) - i64::from(digit_sum(n)), exp);
    }
    c
}

fn ldlt(max_n: u64) -> Checks {
    par((1..=max_n).collect(), |&n| {
        let mut c = Checks::default();
        c.eq("ldlt-plain", n, 0, true, ldlt_verify_plain(n as usize));
        c.eq("ldlt-shifted", n, 1, true, ldlt_verify_shifted(n as usize));
        c
    })
}

fn cf(max_n: u64, seed: u64) -> Checks {
    let mut c = Checks::default();
    let order = max_n.min(IDENTITY_ORDER_LIMIT as u64) as usize;
    for which in Identity::ALL {
        c.eq(which.name(), order as u64, 0, true, verify_identity(which, order).unwrap_or(false));
    }
    for n in 0..=max_n.min(ORTHO_LIMIT) {
        let t = hankel_t(n as usize).map(|r| r.to_string()).unwrap_or_else(|e| e.to_string());
        c.eq("hankel-t-vs-favard", n, 0, favard_st(n).1.to_string(), t);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..32 {
        let len = rng.gen_range(1..=order.max(1));
        let coeffs: Vec<i64> = (0..=len).map(|_| if rng.gen::<bool>() { 1 } else { -1 }).collect();
        let a = cf_expand(&CFSpec::s_fraction_ints(&coeffs[..len]), len).expect("deep enough");
        let b = cf_expand(&CFSpec::s_fraction_ints(&coeffs), len).expect("deep enough");
        c.eq("depth-sufficiency", len as u64, 0, a.coeff_strings().join(","), b.coeff_strings().join(","));
    }
    c
}

fn orthogonality(max_n: u64) -> Checks {
    let top = max_n.min(ORTHO_LIMIT) as usize;
    let t: Vec<Sign> = t_table(top as u64 + 1, TMethod::Ratio);
    let mut c = Checks::default();
    for i in 0..=top {
        for j in i..=top {
            let got = moment_orthogonality(i, j).expect("within guard");
            let expected = if i == j { t[..i].iter().fold(Sign::Plus, |a, &b| a * b).to_i64() } else { 0 };
            c.eq("moment", i as u64, j as u64, BigInt::from(expected), got);
        }
    }
    for (n, shown) in [(2usize, "x^2 - 1"), (4, "x^4 + x^2 - 1"), (7, "x^7")] {
        if n <= top {
            c.eq("orthopoly", n as u64, 0, shown.to_string(), unit_orthopoly(n).to_string());
        }
    }
    c
}

fn parity(max_n: u64, max_m: u64) -> Checks {
    let pairs: Vec<(u64, u64)> = (1..=max_m.max(1)).flat_map(|m| (0..=max_n).map(move |n| (m, n))).collect();
    par(pairs, |&(m, n)| {
        let mut c = Checks::default();
        let p = catalan_shift_parity(n, m);
        c.eq("parity-residue", n, m, u8::from(shift_support(n, m)), p);
        c.eq("parity-determinant", n, m, u8::from(d_shift_int(n, m) != 0), p);
        c
    })
}

fn conjecture(args: &VerifyArgs) {
    let shifts: Vec<u64> = match args.m {
        Some(m) => vec![m],
        None => (3..=args.max_m).collect(),
    };
    for m in shifts {
        let r = conjecture_scan(m, args.max_n);
        let eps = r.epsilon.map(|e| e.to_string()).unwrap_or_else(|| "-".into());
        let verdict = if !r.applicable {
            "not-applicable"
        } else if r.conforms() {
            "conforms"
        } else {
            "violates"
        };
        println!(
            "conjecture-scan m={} modulus={} max_n={} checks={} oracle_checks={} violations={} epsilon={} epsilon_stable={} verdict={}",
            r.m,
            shift_modulus(m),
            r.max_n,
            r.checks,
            r.oracle_checks,
            r.violations.len(),
            eps,
            r.epsilon_stable,
            verdict
        );
        for v in r.violations.iter().take(8) {
            println!("  conjecture-scan m={} n={} index={} expected={} got={}", m, v.n, v.index, v.expected, v.got);
        }
    }
}

fn suite_name(s: Suite) -> &'static str {
    match s {
        Suite::Oracle => "oracle",
        Suite::Methods => "methods",
        Suite::Reflect => "reflect",
        Suite::Ldlt => "ldlt",
        Suite::Cf => "cf",
        Suite::Orthogonality => "orthogonality",
        Suite::Parity => "parity",
        Suite::Conjecture => "conjecture",
        Suite::All => "all",
    }
}

/// Runs the suites and returns whether every check passed.
pub fn run(args: &VerifyArgs) -> Result<bool, CliError> {
    if args.max_n == 0 {
        return usage("--max-n must be positive");
    }
    if args.suite == Suite::Conjecture {
        if matches!(args.m, Some(m) if m < 2) {
            return usage("the conjecture scan needs --m >= 2");
        }
        conjecture(args);
        return Ok(true);
    }
    let suites: Vec<Suite> = match args.suite {
        Suite::All => vec![
            Suite::Oracle,
            Suite::Methods,
            Suite::Reflect,
            Suite::Ldlt,
            Suite::Cf,
            Suite::Orthogonality,
            Suite::Parity,
        ],
        s => vec![s],
    };
    let mut ok = true;
    for s in suites {
        let checks = match s {
            Suite::Oracle => oracle(args.max_n, args.max_m),
            Suite::Methods => methods(args.max_n, args.prop_seed),
            Suite::Reflect => reflect(args.max_n),
            Suite::Ldlt => ldlt(args.max_n),
            Suite::Cf => cf(args.max_n, args.prop_seed),
            Suite::Orthogonality => orthogonality(args.max_n),
            Suite::Parity => parity(args.max_n, args.max_m),
            Suite::Conjecture | Suite::All => unreachable!(),
        };
        let status = if checks.failures.is_empty() { "pass" } else { "fail" };
        println!("suite={} checks={} failures={} status={}", suite_name(s), checks.count, checks.failures.len(), status);
        for f in &checks.failures {
            println!(
                "FAIL suite={} check={} n={} m={} expected={} got={}",
                suite_name(s),
                f.check,
                f.n,
                f.m,
                f.expected,
                f.got
            );
        }
        ok &= checks.failures.is_empty();
    }
    println!("verify: {}", if ok { "pass" } else { "fail" });
    Ok(ok)
}
