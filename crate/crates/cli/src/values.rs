use std::fmt;

use clap::ValueEnum;
use hankel_core::closedform::{
    big_d_sign, d_shift_generic, d_shift_int, d_sign, favard_st, generic_big_d, generic_big_t, generic_d, generic_t,
    lambda_profile, mu_profile, t_int, DMethod, ExponentProfile, TMethod,
};
use hankel_core::hankel::{build_matrix, det_oracle};
use hankel_core::seq::{delta_pairs, grs_r, nonsquash_b, paperfolding_s};
use hankel_core::{Error, ExponentVector, LaurentPoly, RuleKind, SequenceRule};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Seq {
    #[value(name = "d")]
    LowerD,
    #[value(name = "D")]
    UpperD,
    #[value(name = "T")]
    UpperT,
    #[value(name = "t")]
    LowerT,
    #[value(name = "s")]
    LowerS,
    #[value(name = "lambda")]
    Lambda,
    #[value(name = "mu")]
    Mu,
    #[value(name = "S")]
    UpperS,
    #[value(name = "r")]
    R,
    #[value(name = "b")]
    B,
    #[value(name = "delta")]
    Delta,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Rule {
    Unit,
    Generic,
    Powers,
    Doubling,
    Grs,
}

impl Rule {
    pub fn kind(self) -> RuleKind {
        match self {
            Rule::Unit => RuleKind::Unit,
            Rule::Generic => RuleKind::Generic,
            Rule::Powers => RuleKind::Powers,
            Rule::Doubling => RuleKind::Doubling,
            Rule::Grs => RuleKind::Grs,
        }
    }

    pub fn name(self) -> &'static str {
        self.kind().name()
    }
}

/// Errors surfaced by the command layer; usage errors map to exit code 2.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Core(Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(s) => write!(f, "usage error: {s}"),
            CliError::Core(e) => write!(f, "error: {e}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

pub fn usage<T>(msg: impl Into<String>) -> Result<T, CliError> {
    Err(CliError::Usage(msg.into()))
}

/// A computed value and the method that produced it.
pub struct Value {
    pub method: &'static str,
    pub value: String,
}

fn render(rule: Rule, p: &LaurentPoly) -> String {
    rule.kind().render(p)
}

fn unsigned(profile: &ExponentProfile) -> LaurentPoly {
    let ev = ExponentVector::from_pairs(profile.entries().iter().map(|(&k, &e)| (k, e as i64)));
    LaurentPoly::monomial(1, ev)
}

fn specialize(rule: Rule, p: LaurentPoly) -> Result<LaurentPoly, CliError> {
    match rule {
        Rule::Generic => Ok(p),
        other => {
            let kind = other.kind();
            Ok(p.substitute(|k| kind.level_value(k))?)
        }
    }
}

/// Shift used for the determinant sequences; `D` is the shift-one case of `d`.
pub fn effective_shift(seq: Seq, m: Option<u64>) -> Result<u64, CliError> {
    match seq {
        Seq::UpperD | Seq::UpperT => match m {
            None | Some(1) => Ok(1),
            Some(other) => usage(format!("--seq {} is the shift-one sequence; --m {other} conflicts", seq_name(seq))),
        },
        Seq::LowerT | Seq::LowerS | Seq::Lambda => match m {
            None | Some(0) => Ok(0),
            Some(other) => usage(format!("--seq {} is unshifted; --m {other} conflicts", seq_name(seq))),
        },
        Seq::Mu => match m {
            None | Some(1) => Ok(1),
            Some(other) => usage(format!("--seq mu belongs to the shift-one determinant; --m {other} conflicts")),
        },
        Seq::LowerD => Ok(m.unwrap_or(0)),
        _ => match m {
            None | Some(0) => Ok(0),
            Some(_) => usage(format!("--m does not apply to --seq {}", seq_name(seq))),
        },
    }
}

pub fn seq_name(seq: Seq) -> &'static str {
    match seq {
        Seq::LowerD => "d",
        Seq::UpperD => "D",
        Seq::UpperT => "T",
        Seq::LowerT => "t",
        Seq::LowerS => "s",
        Seq::Lambda => "lambda",
        Seq::Mu => "mu",
        Seq::UpperS => "S",
        Seq::R => "r",
        Seq::B => "b",
        Seq::Delta => "delta",
    }
}

/// Rejects rule/sequence pairs that have no meaning before any value is computed.
pub fn check_combination(seq: Seq, rule: Rule, m: u64, method: Option<&str>) -> Result<(), CliError> {
    let integer_only = matches!(seq, Seq::LowerS | Seq::UpperS | Seq::R | Seq::B | Seq::Delta);
    if integer_only && rule != Rule::Unit {
        return usage(format!("--seq {} is an integer sequence; use --rule unit", seq_name(seq)));
    }
    if matches!(seq, Seq::Lambda | Seq::Mu) && !matches!(rule, Rule::Unit | Rule::Generic) {
        return usage("exponent tables are defined for the generic rule");
    }
    if rule == Rule::Grs && m == 0 {
        return usage("the grs values leave x_0 undefined; use a shift m >= 1");
    }
    if let Some(method) = method {
        let ok = match seq {
            Seq::UpperD if rule == Rule::Unit => method == "oracle" || method.parse::<DMethod>().is_ok(),
            Seq::UpperT if rule == Rule::Unit => method.parse::<TMethod>().is_ok(),
            Seq::LowerD | Seq::UpperD => method == "oracle" || method == "closed",
            _ => false,
        };
        if !ok {
            return usage(format!("--method {method} does not apply to --seq {} --rule {}", seq_name(seq), rule.name()));
        }
    }
    Ok(())
}

/// Largest index for which the symbolic shifted evaluator stays within the cofactor oracle.
const ORACLE_SIZE_LIMIT: u64 = 32;

pub fn compute(seq: Seq, rule: Rule, m: u64, n: u64, method: Option<&str>) -> Result<Value, CliError> {
    let int = |method: &'static str, v: i64| Value { method, value: v.to_string() };
    let poly = |method: &'static str, p: &LaurentPoly| Value { method, value: render(rule, p) };
    Ok(match seq {
        Seq::LowerD | Seq::UpperD => {
            if method == Some("oracle") {
                if n > ORACLE_SIZE_LIMIT && !rule.kind().is_integer() {
                    return usage(format!("symbolic oracle is limited to n <= {ORACLE_SIZE_LIMIT}"));
                }
                let det = det_oracle(&build_matrix(&SequenceRule::new(rule.kind(), m), n as usize))?;
                return Ok(poly("oracle", &det));
            }
            match (rule, m) {
                (Rule::Unit, 0) => int("binomial", d_sign(n).to_i64()),
                (Rule::Unit, 1) => {
                    let dm = match method {
                        Some(s) if s != "closed" => s.parse::<DMethod>()?,
                        _ => DMethod::Delta,
                    };
                    int(dm.name(), big_d_sign(n, dm).to_i64())
                }
                (Rule::Unit, _) => int("reversal", d_shift_int(n, m)),
                (Rule::Grs, 1) => int("grs", grs_r(n).to_i64()),
                (_, 0) => poly("profile", &specialize(rule, generic_d(n))?),
                (_, 1) => poly("profile", &specialize(rule, generic_big_d(n))?),
                _ => poly("reversal", &specialize(rule, d_shift_generic(n, m)?)?),
            }
        }
        Seq::UpperT => match rule {
            Rule::Unit => {
                let tm = method.map(str::parse::<TMethod>).transpose()?.unwrap_or(TMethod::Ratio);
                int(tm.name(), t_int(n, tm).to_i64())
            }
            _ => poly("ratio", &specialize(rule, generic_big_t(n)?)?),
        },
        Seq::LowerT => match rule {
            Rule::Unit => int("favard", favard_st(n).1),
            _ => poly("ratio", &specialize(rule, generic_t(n)?)?),
        },
        Seq::LowerS => int("favard", favard_st(n).0),
        Seq::Lambda => poly("profile", &unsigned(&lambda_profile(n))),
        Seq::Mu => poly("profile", &unsigned(&mu_profile(n))),
        Seq::UpperS => int("recurrence", paperfolding_s(n).to_i64()),
        Seq::R => int("recurrence", grs_r(n).to_i64()),
        Seq::B => {
            if n < 2 {
                return usage("b(n) is defined for n >= 2");
            }
            Value { method: "recurrence", value: nonsquash_b(n)?.to_string() }
        }
        Seq::Delta => int("pairs", i64::from(delta_pairs(n))),
    })
}
