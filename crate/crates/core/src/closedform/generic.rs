use std::collections::BTreeMap;

use super::{big_d_sign, d_sign, sign_of_binom_sum, DMethod};
use crate::error::{Error, Result};
use crate::exactring::{ExponentVector, LaurentPoly};
use crate::hankel::RuleKind;
use crate::seq::{grs_r, ones_total, Sign};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Flavor {
    /// Exponents of the unshifted determinant `d(n)`.
    Lambda,
    /// Exponents of the shifted determinant `D(n)`.
    Mu,
}

/// Exponent of `x_{2^k-1}` in `d(n)` or `D(n)`, keyed by `k`; zero exponents are not stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentProfile {
    pub flavor: Flavor,
    entries: BTreeMap<u32, u64>,
}

impl ExponentProfile {
    pub fn get(&self, k: u32) -> u64 {
        self.entries.get(&k).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> &BTreeMap<u32, u64> {
        &self.entries
    }

    /// `(-1)^{sum_k C(e_k, 2)}`.
    pub fn sign(&self) -> Sign {
        sign_of_binom_sum(self.entries.values().copied())
    }

    pub fn to_monomial(&self) -> LaurentPoly {
        let ev = ExponentVector::from_pairs(self.entries.iter().map(|(&k, &e)| (k, e as i64)));
        LaurentPoly::monomial(self.sign().to_i64(), ev)
    }
}

/// `lambda_k(n)`: period `2^{k+1}`, zero up to `2^{k-1}`, then a tent of slope 2.
pub fn lambda_exponent(k: u32, n: u64) -> u64 {
    if k == 0 {
        return n & 1;
    }
    if k > 64 {
        return 0;
    }
    let period = 1u128 << (k + 1);
    let r = (n as u128 % period) as u64;
    let h = 1u64 << (k - 1);
    let full = 2 * h;
    if r <= h {
        0
    } else if r <= full {
        2 * (r - h)
    } else if r < full + h {
        full - 2 * (r - full)
    } else {
        0
    }
}

/// `mu_k(n)` for `k >= 1`: period `2^{k+1}`, odd tent on `[2^{k-1}, 2^k + 2^{k-1})`.
pub fn mu_exponent(k: u32, n: u64) -> u64 {
    if k == 0 || k > 64 {
        return 0;
    }
    let period = 1u128 << (k + 1);
    let r = (n as u128 % period) as u64;
    let h = 1u64 << (k - 1);
    let full = 2 * h;
    if r < h {
        0
    } else if r < full {
        2 * (r - h) + 1
    } else if r < full + h {
        full - 2 * (r - full) - 1
    } else {
        0
    }
}

fn profile(n: u64, flavor: Flavor) -> ExponentProfile {
    let mut entries = BTreeMap::new();
    let first = if flavor == Flavor::Lambda { 0 } else { 1 };
    for k in first..=65u32 {
        if k >= 1 && (1u128 << (k - 1)) > u128::from(n) {
            break;
        }
        let e = match flavor {
            Flavor::Lambda => lambda_exponent(k, n),
            Flavor::Mu => mu_exponent(k, n),
        };
        if e != 0 {
            entries.insert(k, e);
        }
    }
    ExponentProfile { flavor, entries }
}

pub fn lambda_profile(n: u64) -> ExponentProfile {
    profile(n, Flavor::Lambda)
}

pub fn mu_profile(n: u64) -> ExponentProfile {
    profile(n, Flavor::Mu)
}

/// Symbolic `d(n)` from the exponent table.
pub fn generic_d(n: u64) -> LaurentPoly {
    lambda_profile(n).to_monomial()
}

/// Symbolic `D(n)` from the exponent table.
pub fn generic_big_d(n: u64) -> LaurentPoly {
    mu_profile(n).to_monomial()
}

struct MonomialAcc {
    sign: Sign,
    exps: ExponentVector,
}

impl MonomialAcc {
    fn new() -> Self {
        MonomialAcc { sign: Sign::Plus, exps: ExponentVector::one() }
    }

    fn push(&mut self, level: u32, len: u64) {
        self.sign *= Sign::of_binom2(len);
        self.exps.bump(level, len as i64);
    }

    fn finish(self) -> LaurentPoly {
        LaurentPoly::monomial(self.sign.to_i64(), self.exps)
    }
}

/// `d(n) = (-1)^{C(beta,2)} x_alpha^beta d(n - beta)` with `alpha(n) = 2^{ceil(log2 n)} - 1`
/// and `beta(n) = 2n - 1 - alpha(n)`.
pub fn generic_d_recursive(n: u64) -> LaurentPoly {
    let mut acc = MonomialAcc::new();
    let mut n = n;
    while n > 0 {
        let p = n.next_power_of_two();
        let beta = 2 * n - p;
        acc.push(p.trailing_zeros(), beta);
        n -= beta;
    }
    acc.finish()
}

/// `D(n) = (-1)^{C(delta,2)} x_gamma^delta D(gamma - n)` with `gamma(n) = 2^{ceil(log2(n+1))} - 1`
/// and interval length `delta(n) = 2n - gamma(n)`.
pub fn generic_big_d_recursive(n: u64) -> LaurentPoly {
    let mut acc = MonomialAcc::new();
    let mut n = n;
    while n > 0 {
        let gamma = (n + 1).next_power_of_two() - 1;
        let len = 2 * n - gamma;
        acc.push(gamma.count_ones(), len);
        n = gamma - n;
    }
    acc.finish()
}

/// `T_n = D(n) D(n+2) / D(n+1)^2`.
pub fn generic_big_t(n: u64) -> Result<LaurentPoly> {
    let num = &generic_big_d(n) * &generic_big_d(n + 2);
    num.div_exact(&generic_big_d(n + 1).pow(2))
}

fn ratio_monomial(sign: Sign, pairs: &[(u32, i64)]) -> LaurentPoly {
    LaurentPoly::monomial(sign.to_i64(), ExponentVector::from_pairs(pairs.iter().copied()))
}

/// `T_{2n+1} = -T_{2n}`, `T_{4n} = (-1)^n x_3/x_1`,
/// `T_{2^{k+1}q + 2^k - 1} = (-1)^q x_1 x_{2^{k+1}-1} / x_{2^k-1}^2`.
pub fn generic_big_t_structural(n: u64) -> LaurentPoly {
    match n % 4 {
        0 => ratio_monomial(Sign::pow_neg_one(n / 4), &[(2, 1), (1, -1)]),
        1 => -generic_big_t_structural(n - 1),
        _ => {
            let odd = n | 1;
            let k = (odd + 1).trailing_zeros();
            let q = (odd + 1) >> (k + 1);
            let v = ratio_monomial(Sign::pow_neg_one(q), &[(1, 1), (k + 1, 1), (k, -2)]);
            if n == odd {
                v
            } else {
                -v
            }
        }
    }
}

/// `t_n = d(n) d(n+2) / d(n+1)^2`.
pub fn generic_t(n: u64) -> Result<LaurentPoly> {
    let num = &generic_d(n) * &generic_d(n + 2);
    num.div_exact(&generic_d(n + 1).pow(2))
}

/// `t_{2n} = -x_1^2/x_0^2`, `t_{2^k q + 2^{k-1} - 1} = -x_0^2 x_{2^k-1}^2 / x_{2^{k-1}-1}^4`.
pub fn generic_t_rule(n: u64) -> LaurentPoly {
    if n.is_multiple_of(2) {
        ratio_monomial(Sign::Minus, &[(1, 2), (0, -2)])
    } else {
        let k = (n + 1).trailing_zeros() + 1;
        ratio_monomial(Sign::Minus, &[(0, 2), (k, 2), (k - 1, -4)])
    }
}

/// `d(n) d(n+1) / D(n)^2`, which equals `(-1)^n x_0`.
pub fn ratio_h(n: u64) -> Result<LaurentPoly> {
    let num = &generic_d(n) * &generic_d(n + 1);
    num.div_exact(&generic_big_d(n).pow(2))
}

/// One-variable and integer specializations of the indeterminates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Specialization {
    /// `x_{2^k-1} = x^k`.
    Powers,
    /// `x_{2^k-1} = x^{2^k-1}`.
    Doubling,
    /// `x_1 = 1`, `x_{2^k-1} = (-1)^k`; only meaningful shifted.
    Grs,
}

impl Specialization {
    pub fn rule(self) -> RuleKind {
        match self {
            Specialization::Powers => RuleKind::Powers,
            Specialization::Doubling => RuleKind::Doubling,
            Specialization::Grs => RuleKind::Grs,
        }
    }
}

/// Substitutes the specialization into the symbolic `d(n)` or `D(n)`.
pub fn specialize_det(kind: Specialization, shifted: bool, n: u64) -> Result<LaurentPoly> {
    if kind == Specialization::Grs && !shifted {
        return Err(Error::OutOfDomain("the grs values are only defined for the shifted determinant".into()));
    }
    let rule = kind.rule();
    let generic = if shifted { generic_big_d(n) } else { generic_d(n) };
    generic.substitute(|k| rule.level_value(k))
}

fn x_power(sign: Sign, e: u64) -> LaurentPoly {
    LaurentPoly::monomial(sign.to_i64(), ExponentVector::single(0, e as i64))
}

/// The closed form each specialization is expected to collapse to.
pub fn specialized_closed_form(kind: Specialization, shifted: bool, n: u64) -> Option<LaurentPoly> {
    match (kind, shifted) {
        (Specialization::Powers, false) => Some(x_power(d_sign(n), 2 * ones_total(n))),
        (Specialization::Powers, true) => {
            Some(x_power(big_d_sign(n, DMethod::Delta), ones_total(n) + ones_total(n + 1)))
        }
        (Specialization::Doubling, false) => Some(x_power(d_sign(n), n * n.saturating_sub(1))),
        (Specialization::Doubling, true) => Some(x_power(big_d_sign(n, DMethod::Delta), n * n)),
        (Specialization::Grs, true) => Some(LaurentPoly::constant(grs_r(n).to_i64())),
        (Specialization::Grs, false) => None,
    }
}
