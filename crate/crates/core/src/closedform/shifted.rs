use super::{big_d_sign, d_sign, generic_big_d, generic_d, DMethod};
use crate::error::Result;
use crate::exactring::{ExponentVector, LaurentPoly};
use crate::hankel::{build_matrix, det_bareiss, det_cofactor, reversal_step, SequenceRule};
use crate::seq::Sign;

/// `2^{K+1}` for `2^K < m <= 2^{K+1}`.
pub fn shift_modulus(m: u64) -> u64 {
    m.max(1).next_power_of_two()
}

/// Below this size the shifted evaluators hand over to an exact oracle.
pub fn shift_base_limit(m: u64) -> u64 {
    (2 * shift_modulus(m)).max(16)
}

/// `d(n, m) != 0` exactly when `n = 0` or `n = -m` modulo `2^{K+1}` (for `m >= 1`).
pub fn shift_support(n: u64, m: u64) -> bool {
    if m == 0 {
        return true;
    }
    let q = shift_modulus(m);
    n.is_multiple_of(q) || (n + m).is_multiple_of(q)
}

/// Some row is `(a_{2^k}, ..., a_{2^k+n-1})`, which vanishes.
fn has_zero_row(n: u64, m: u64) -> bool {
    let mut p = (n + 1).next_power_of_two();
    while p < n + m {
        if p >= m {
            return true;
        }
        p *= 2;
    }
    false
}

/// `d(n, m) in {-1, 0, 1}` for the 0/1 sequence.
pub fn d_shift_int(n: u64, m: u64) -> i64 {
    match m {
        0 => return d_sign(n).to_i64(),
        1 => return big_d_sign(n, DMethod::Delta).to_i64(),
        _ => {}
    }
    let base = shift_base_limit(m);
    let mut acc = Sign::Plus;
    let mut cur = n;
    loop {
        if has_zero_row(cur, m) {
            return 0;
        }
        if cur < base {
            let det = det_bareiss(&build_matrix(&SequenceRule::unit(m), cur as usize)).expect("base case is small");
            return acc.to_i64() * i64::try_from(det).expect("entries are 0/1 with a single surviving term");
        }
        match reversal_step(cur, m) {
            None => return 0,
            Some(step) => {
                acc *= Sign::of_binom2(step.len);
                cur = step.rest;
            }
        }
    }
}

/// Symbolic `d(n, m)`: a signed monomial in the `x_{2^k-1}`, or zero.
pub fn d_shift_generic(n: u64, m: u64) -> Result<LaurentPoly> {
    match m {
        0 => return Ok(generic_d(n)),
        1 => return Ok(generic_big_d(n)),
        _ => {}
    }
    let base = shift_base_limit(m);
    let mut sign = Sign::Plus;
    let mut exps = ExponentVector::one();
    let mut cur = n;
    loop {
        if has_zero_row(cur, m) {
            return Ok(LaurentPoly::zero());
        }
        if cur < base {
            let det = det_cofactor(&build_matrix(&SequenceRule::generic(m), cur as usize))?;
            return Ok(&LaurentPoly::monomial(sign.to_i64(), exps) * &det);
        }
        match reversal_step(cur, m) {
            None => return Ok(LaurentPoly::zero()),
            Some(step) => {
                sign *= Sign::of_binom2(step.len);
                exps.bump(step.level, step.len as i64);
                cur = step.rest;
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjectureViolation {
    pub n: u64,
    pub index: u64,
    pub expected: i64,
    pub got: i64,
}

/// Outcome of scanning `d(2^{K+1} n, m)` and `d(2^{K+1} n - m, m)` for `n = 1..=max_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjectureReport {
    pub m: u64,
    pub modulus: u64,
    pub max_n: u64,
    /// False for `m = 2`, which the conjectured pattern excludes.
    pub applicable: bool,
    pub checks: u64,
    pub oracle_checks: u64,
    pub violations: Vec<ConjectureViolation>,
    /// Fitted `epsilon(m)` for odd `m`, taken from `n = 1`.
    pub epsilon: Option<u8>,
    /// Every scanned `n` gave the same `epsilon`.
    pub epsilon_stable: bool,
}

impl ConjectureReport {
    pub fn conforms(&self) -> bool {
        self.applicable && self.violations.is_empty() && (self.m.is_multiple_of(2) || self.epsilon_stable)
    }
}

/// Largest index compared against the Bareiss oracle during a scan.
const SCAN_ORACLE_LIMIT: u64 = 256;

pub fn conjecture_scan(m: u64, max_n: u64) -> ConjectureReport {
    let q = shift_modulus(m);
    let mut report = ConjectureReport {
        m,
        modulus: q,
        max_n,
        applicable: m > 2,
        checks: 0,
        oracle_checks: 0,
        violations: Vec::new(),
        epsilon: None,
        epsilon_stable: true,
    };
    if !report.applicable {
        return report;
    }
    let eval = |report: &mut ConjectureReport, n: u64, index: u64| -> i64 {
        let got = d_shift_int(index, m);
        report.checks += 1;
        if index <= SCAN_ORACLE_LIMIT {
            report.oracle_checks += 1;
            let det = det_bareiss(&build_matrix(&SequenceRule::unit(m), index as usize)).expect("small");
            let det = i64::try_from(det).unwrap_or(i64::MAX);
            if det != got {
                report.violations.push(ConjectureViolation { n, index, expected: det, got });
            }
        }
        got
    };
    let expect = |report: &mut ConjectureReport, n: u64, index: u64, expected: i64, got: i64| {
        if got != expected {
            report.violations.push(ConjectureViolation { n, index, expected, got });
        }
    };
    for n in 1..=max_n {
        let top = q * n;
        let low = top - m;
        let got_top = eval(&mut report, n, top);
        let got_low = eval(&mut report, n, low);
        if m.is_multiple_of(2) {
            expect(&mut report, n, top, 1, got_top);
            expect(&mut report, n, low, Sign::pow_neg_one(m / 2).to_i64(), got_low);
        } else {
            expect(&mut report, n, top, big_d_sign(top, DMethod::Delta).to_i64(), got_top);
            let base = big_d_sign(low, DMethod::Delta).to_i64();
            let eps = match got_low * base * Sign::pow_neg_one(n).to_i64() {
                1 => Some(0u8),
                -1 => Some(1u8),
                _ => None,
            };
            if n == 1 {
                report.epsilon = eps;
            }
            let fitted = report.epsilon.unwrap_or(0);
            if eps != Some(fitted) {
                report.epsilon_stable = false;
            }
            expect(&mut report, n, low, Sign::pow_neg_one(n + u64::from(fitted)).to_i64() * base, got_low);
        }
    }
    report
}
