//! Closed forms and recursions for the determinants: the signs `d(n)`, `D(n)`,
//! the ratios `T_n`, Favard coefficients, shifted determinants `d(n, m)` and
//! the symbolic monomials over the indeterminates `x_{2^k-1}`.

mod generic;
mod shifted;

pub use generic::{
    generic_big_d, generic_big_d_recursive, generic_big_t, generic_big_t_structural, generic_d,
    generic_d_recursive, generic_t, generic_t_rule, lambda_exponent, lambda_profile, mu_exponent, mu_profile,
    ratio_h, specialize_det, specialized_closed_form, ExponentProfile, Flavor, Specialization,
};
pub use shifted::{
    conjecture_scan, d_shift_generic, d_shift_int, shift_base_limit, shift_modulus, shift_support,
    ConjectureReport, ConjectureViolation,
};

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::seq::{binom2, delta_pairs, nonsquash_b, paperfolding_s, NonSquashTable, Sign};

/// `d(n) = (-1)^{C(n,2)}`.
pub fn d_sign(n: u64) -> Sign {
    Sign::of_binom2(n)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DMethod {
    /// `(-1)^{delta(n)}`.
    Delta,
    /// `D(2n) = (-1)^{C(n,2)} D(n)`, `D(2n+1) = (-1)^{C(n+1,2)} D(n)`.
    Recurrence,
    /// `prod_{j<n} S(j)`; linear in `n`.
    PaperfoldingProduct,
}

impl DMethod {
    pub const ALL: [DMethod; 3] = [DMethod::Delta, DMethod::Recurrence, DMethod::PaperfoldingProduct];

    pub fn name(self) -> &'static str {
        match self {
            DMethod::Delta => "delta",
            DMethod::Recurrence => "recurrence",
            DMethod::PaperfoldingProduct => "paperfolding-product",
        }
    }
}

/// `D(n) = d(n, 1)`.
pub fn big_d_sign(n: u64, method: DMethod) -> Sign {
    match method {
        DMethod::Delta => Sign::pow_neg_one(u64::from(delta_pairs(n))),
        DMethod::Recurrence => {
            let mut acc = Sign::Plus;
            let mut n = n;
            while n > 0 {
                let h = n >> 1;
                acc *= if n & 1 == 0 { Sign::of_binom2(h) } else { Sign::of_binom2(h + 1) };
                n = h;
            }
            acc
        }
        DMethod::PaperfoldingProduct => (0..n).fold(Sign::Plus, |acc, j| acc * paperfolding_s(j)),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TMethod {
    /// `D(n) D(n+2)`.
    Ratio,
    /// `T_{2n} = T_{2n-1} T_{n-1}`, `T_{2n+1} = -T_{2n}`; tabulated, linear in `n`.
    Recurrence,
    /// `T_{4n} = (-1)^n`, `T_{2^{k+1}n + 2^k - 2} = (-1)^{n+1}`, `T_{2n+1} = -T_{2n}`.
    Structural,
    /// `(-1)^{b(n+2)+1}` with `b` the non-squashing partition count; linear in `n`.
    NonSquash,
}

impl TMethod {
    pub const ALL: [TMethod; 4] = [TMethod::Ratio, TMethod::Recurrence, TMethod::Structural, TMethod::NonSquash];

    pub fn name(self) -> &'static str {
        match self {
            TMethod::Ratio => "ratio",
            TMethod::Recurrence => "recurrence",
            TMethod::Structural => "structural",
            TMethod::NonSquash => "nonsquash",
        }
    }
}

impl fmt::Display for DMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl fmt::Display for TMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for DMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        DMethod::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Parse { input: s.into(), reason: "unknown D method".into() })
    }
}

impl FromStr for TMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        TMethod::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Parse { input: s.into(), reason: "unknown T method".into() })
    }
}

/// `T_n = D(n) D(n+2)`.
pub fn t_int(n: u64, method: TMethod) -> Sign {
    match method {
        TMethod::Ratio => big_d_sign(n, DMethod::Delta) * big_d_sign(n + 2, DMethod::Delta),
        TMethod::Structural => t_structural(n),
        TMethod::Recurrence => t_recurrence_table(n + 1)[n as usize],
        TMethod::NonSquash => {
            let b = nonsquash_b(n + 2).expect("n + 2 >= 2");
            if b.bit(0) {
                Sign::Plus
            } else {
                Sign::Minus
            }
        }
    }
}

/// `T_0, ..., T_{len-1}`, sharing work across indices where the method allows it.
pub fn t_table(len: u64, method: TMethod) -> Vec<Sign> {
    match method {
        TMethod::Recurrence => t_recurrence_table(len),
        TMethod::NonSquash => {
            let table = NonSquashTable::build(len + 1).expect("table bound");
            (0..len)
                .map(|n| if table.get(n + 2).expect("in range").bit(0) { Sign::Plus } else { Sign::Minus })
                .collect()
        }
        other => (0..len).map(|n| t_int(n, other)).collect(),
    }
}

fn t_recurrence_table(len: u64) -> Vec<Sign> {
    let len = len as usize;
    let mut t = Vec::with_capacity(len.max(2));
    t.push(Sign::Plus);
    t.push(Sign::Minus);
    for n in 2..len {
        let v = if n % 2 == 0 { t[n - 1] * t[n / 2 - 1] } else { -t[n - 1] };
        t.push(v);
    }
    t.truncate(len);
    t
}

fn t_structural(n: u64) -> Sign {
    match n % 4 {
        0 => Sign::pow_neg_one(n / 4),
        2 => {
            let k = (n + 2).trailing_zeros();
            let q = (n + 2) >> (k + 1);
            Sign::pow_neg_one(q + 1)
        }
        _ => -t_structural(n - 1),
    }
}

/// The folding formulation `T_{4n} = (-1)^n`, `T_{8n+2} = (-1)^{n+1}`,
/// `T_{8n+6} = T_{4n+2}`, `T_{2n+1} = -T_{2n}`.
pub fn t_folding(n: u64) -> Sign {
    let mut n = n;
    let mut acc = Sign::Plus;
    if n % 2 == 1 {
        acc = -acc;
        n -= 1;
    }
    loop {
        match n % 8 {
            0 | 4 => return acc * Sign::pow_neg_one(n / 4),
            2 => return acc * Sign::pow_neg_one(n / 8 + 1),
            _ => n = (n - 6) / 2 + 2,
        }
    }
}

/// Favard coefficients `(s_n, t_n)` of the unshifted sequence.
pub fn favard_st(n: u64) -> (i64, i64) {
    let t = |k: u64| t_int(k, TMethod::Structural).to_i64();
    let s = if n == 0 { t(0) } else { t(2 * n - 1) + t(2 * n) };
    (s, t(2 * n) * t(2 * n + 1))
}

pub(crate) fn sign_of_binom_sum<I: IntoIterator<Item = u64>>(exps: I) -> Sign {
    Sign::pow_neg_one(exps.into_iter().map(|e| (binom2(e) & 1) as u64).sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seq::digit_sum;
    use proptest::prelude::*;

    fn ints(v: impl IntoIterator<Item = Sign>) -> Vec<i64> {
        v.into_iter().map(Sign::to_i64).collect()
    }

    #[test]
    fn printed_d_values() {
        assert_eq!(d_sign(0), Sign::Plus);
        assert_eq!(d_sign(5), Sign::Plus);
        assert_eq!(d_sign(3), Sign::Minus);
        let shown = [1, 1, 1, -1, -1, -1, 1, -1, -1, -1, -1, 1];
        for m in DMethod::ALL {
            assert_eq!(ints((0..12).map(|n| big_d_sign(n, m))), shown, "{m}");
        }
        assert_eq!(big_d_sign(9, DMethod::Delta), Sign::Minus);
    }

    #[test]
    fn printed_t_values() {
        let shown = [1, -1, -1, 1, -1, 1, -1, 1, 1, -1, 1, -1, -1, 1, -1, 1];
        for m in TMethod::ALL {
            assert_eq!(ints(t_table(16, m)), shown, "{m}");
            assert_eq!(ints((0..16).map(|n| t_int(n, m))), shown, "{m}");
        }
        assert_eq!(ints((0..16).map(t_folding)), shown);
    }

    #[test]
    fn printed_favard() {
        assert_eq!(favard_st(0), (1, -1));
        let s: Vec<i64> = (0..11).map(|n| favard_st(n).0).collect();
        assert_eq!(s, [1, -2, 0, 0, 2, 0, -2, 0, 2, -2, 0]);
        for n in 1..2000 {
            let sp = |k| paperfolding_s(k).to_i64();
            assert_eq!(favard_st(n).0, sp(2 * n) * (sp(2 * n - 1) + sp(2 * n + 1)));
            assert_eq!(favard_st(n).1, -1);
        }
    }

    #[test]
    fn methods_agree_on_prefix() {
        let rec = t_table(5000, TMethod::Recurrence);
        let ns = t_table(5000, TMethod::NonSquash);
        for n in 0..5000u64 {
            let r = t_int(n, TMethod::Ratio);
            assert_eq!(rec[n as usize], r, "recurrence {n}");
            assert_eq!(ns[n as usize], r, "nonsquash {n}");
            assert_eq!(t_int(n, TMethod::Structural), r, "structural {n}");
            assert_eq!(t_folding(n), r, "folding {n}");
        }
    }

    #[test]
    fn method_names_round_trip() {
        for m in TMethod::ALL {
            assert_eq!(m.name().parse::<TMethod>().unwrap(), m);
        }
        for m in DMethod::ALL {
            assert_eq!(m.name().parse::<DMethod>().unwrap(), m);
        }
        assert!("bogus".parse::<TMethod>().is_err());
    }

    proptest! {
        #[test]
        fn d_methods_agree(n in 0u64..100_000) {
            let d = big_d_sign(n, DMethod::Delta);
            prop_assert_eq!(big_d_sign(n, DMethod::Recurrence), d);
            prop_assert_eq!(paperfolding_s(n), d * big_d_sign(n + 1, DMethod::Delta));
        }

        #[test]
        fn d_reflections(k in 1u32..40, frac in 0.0f64..1.0) {
            let p = 1u64 << k;
            let n = ((p as f64) * frac) as u64 % p;
            let d = |x| big_d_sign(x, DMethod::Delta);
            prop_assert_eq!(d(p + n), Sign::pow_neg_one(n) * d(p - 1 - n));
            if n < p {
                let q = 2 * p;
                prop_assert_eq!(d(q + n), -d(n));
                prop_assert_eq!(d(q + p + n), d(p + n));
            }
        }

        #[test]
        fn t_reflection(k in 2u32..40, frac in 0.0f64..1.0) {
            let p = 1u64 << k;
            let n = p + ((p - 3) as f64 * frac) as u64;
            prop_assert!(n <= 2 * p - 3);
            prop_assert_eq!(t_int(n, TMethod::Ratio), t_int(2 * p - 3 - n, TMethod::Ratio));
        }

        #[test]
        fn t_block_rules(k in 2u32..30, q in 0u64..1_000_000) {
            prop_assert_eq!(t_int(4 * q, TMethod::Ratio), Sign::pow_neg_one(q));
            let n = (q << (k + 1)) + (1u64 << k) - 2;
            prop_assert_eq!(t_int(n, TMethod::Ratio), Sign::pow_neg_one(q + 1));
            prop_assert_eq!(t_folding(n), t_int(n, TMethod::Ratio));
        }

        #[test]
        fn powers_t_exponent(n in 0u64..10_000) {
            let e = i64::from(digit_sum(n + 2)) - i64::from(digit_sum(n));
            let x = specialize_det(Specialization::Powers, true, n + 2).unwrap()
                .div_exact(&specialize_det(Specialization::Powers, true, n + 1).unwrap().pow(2)).unwrap();
            let x = &x * &specialize_det(Specialization::Powers, true, n).unwrap();
            let (c, ev) = x.as_monomial().unwrap();
            prop_assert_eq!(ev.get(0), e);
            prop_assert_eq!(i64::try_from(c.clone()).unwrap(), t_int(n, TMethod::Ratio).to_i64());
        }
    }
}
