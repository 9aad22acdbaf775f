//! S-fractions and J-fractions expanded bottom-up into truncated power series,
//! and the continued-fraction identities for `sum_k z^{2^k-1}`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::closedform::{favard_st, t_int, TMethod};
use crate::error::{Error, Result};
use crate::exactring::TruncatedSeries;
use crate::hankel::{build_matrix, det_bareiss, SequenceRule};
use crate::seq::grs_r;

/// Largest order accepted by [`verify_identity`].
pub const IDENTITY_ORDER_LIMIT: usize = 128;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CFSpec {
    /// `1/(1 - c_0 z/(1 - c_1 z/(1 - ...)))`.
    SFraction(Vec<BigRational>),
    /// `1/(1 - s_0 z - t_0 z^2/(1 - s_1 z - t_1 z^2/(1 - ...)))`.
    JFraction { s: Vec<BigRational>, t: Vec<BigRational> },
}

fn rationals(v: &[i64]) -> Vec<BigRational> {
    v.iter().map(|&c| BigRational::from_integer(BigInt::from(c))).collect()
}

impl CFSpec {
    pub fn s_fraction_ints(c: &[i64]) -> Self {
        CFSpec::SFraction(rationals(c))
    }

    pub fn j_fraction_ints(s: &[i64], t: &[i64]) -> Self {
        CFSpec::JFraction { s: rationals(s), t: rationals(t) }
    }

    pub fn depth(&self) -> usize {
        match self {
            CFSpec::SFraction(c) => c.len(),
            CFSpec::JFraction { s, t } => s.len().min(t.len()),
        }
    }

    /// Smallest depth that determines the series modulo `z^order`.
    pub fn required_depth(&self, order: usize) -> usize {
        match self {
            CFSpec::SFraction(_) => order,
            CFSpec::JFraction { .. } => order.div_ceil(2),
        }
        .max(1)
    }
}

/// Evaluates the fraction from the deepest level up, with tail 1.
pub fn cf_expand(spec: &CFSpec, order: usize) -> Result<TruncatedSeries> {
    if order == 0 {
        return Err(Error::OutOfDomain("series order must be positive".into()));
    }
    let depth = spec.depth();
    if depth < spec.required_depth(order) {
        return Err(Error::InsufficientDepth { depth, order });
    }
    let one = TruncatedSeries::one(order);
    let mut tail = one.clone();
    match spec {
        CFSpec::SFraction(c) => {
            for ci in c.iter().rev() {
                tail = one.sub(&tail.shift(1).scale(ci)).inverse()?;
            }
        }
        CFSpec::JFraction { s, t } => {
            for i in (0..depth).rev() {
                let lin = TruncatedSeries::from_ints(&[0, 1], order).scale(&s[i]);
                let quad = tail.shift(2).scale(&t[i]);
                tail = one.sub(&lin).sub(&quad).inverse()?;
            }
        }
    }
    Ok(tail)
}

/// `sum_k (+-1)^k z^{2^k-1} mod z^order`.
pub fn target_series(order: usize, alternating: bool) -> TruncatedSeries {
    let mut c = vec![0i64; order];
    let mut k = 0u32;
    while k < 64 && (1usize << k) - 1 < order {
        c[(1usize << k) - 1] = if alternating && k % 2 == 1 { -1 } else { 1 };
        k += 1;
    }
    TruncatedSeries::from_ints(&c, order)
}

/// The three continued fractions for the lacunary series.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Identity {
    /// S-fraction with coefficients `T_n` equals `sum z^{2^k-1}`.
    TFraction,
    /// J-fraction with the Favard coefficients `s_n`, `t_n` equals `sum z^{2^k-1}`.
    FavardFraction,
    /// S-fraction with coefficients `-r(n)r(n+2)` equals `sum (-1)^k z^{2^k-1}`.
    GrsFraction,
}

impl Identity {
    pub const ALL: [Identity; 3] = [Identity::TFraction, Identity::FavardFraction, Identity::GrsFraction];

    pub fn name(self) -> &'static str {
        match self {
            Identity::TFraction => "t-fraction",
            Identity::FavardFraction => "favard-fraction",
            Identity::GrsFraction => "grs-fraction",
        }
    }

    /// The fraction, deep enough for `order`.
    pub fn spec(self, order: usize) -> CFSpec {
        let order = order as u64;
        match self {
            Identity::TFraction => {
                let c: Vec<i64> = (0..order).map(|n| t_int(n, TMethod::Ratio).to_i64()).collect();
                CFSpec::s_fraction_ints(&c)
            }
            Identity::FavardFraction => {
                let (s, t): (Vec<i64>, Vec<i64>) = (0..order.div_ceil(2).max(1)).map(favard_st).unzip();
                CFSpec::j_fraction_ints(&s, &t)
            }
            Identity::GrsFraction => CFSpec::s_fraction_ints(&grs_fraction_coeffs(order as usize)),
        }
    }

    pub fn target(self, order: usize) -> TruncatedSeries {
        target_series(order, self == Identity::GrsFraction)
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Identity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Identity::ALL
            .into_iter()
            .find(|i| i.name() == s)
            .ok_or_else(|| Error::Parse { input: s.into(), reason: "unknown identity".into() })
    }
}

/// `-r(n) r(n+2)`: the `1/(1 - c z ...)` coefficients of the alternating series.
pub fn grs_fraction_coeffs(len: usize) -> Vec<i64> {
    (0..len as u64).map(|n| -(grs_r(n) * grs_r(n + 2)).to_i64()).collect()
}

/// How many leading coefficients follow the strictly alternating pattern `-1, 1, -1, 1, ...`.
pub fn grs_alternating_prefix(len: usize) -> usize {
    grs_fraction_coeffs(len).iter().enumerate().take_while(|(n, &c)| c == if n % 2 == 0 { -1 } else { 1 }).count()
}

/// Coefficientwise equality of the fraction and its target modulo `z^order`.
pub fn verify_identity(which: Identity, order: usize) -> Result<bool> {
    if order == 0 || order > IDENTITY_ORDER_LIMIT {
        return Err(Error::SizeGuard { what: "identity order", limit: IDENTITY_ORDER_LIMIT as u64, got: order as u64 });
    }
    Ok(cf_expand(&which.spec(order), order)? == which.target(order))
}

/// `t_n = H_n H_{n+2} / H_{n+1}^2` from Bareiss determinants of the unshifted 0/1 sequence.
pub fn hankel_t(n: usize) -> Result<BigRational> {
    let h = |k: usize| det_bareiss(&build_matrix(&SequenceRule::unit(0), k));
    let den = h(n + 1)?;
    if den.is_zero() {
        return Err(Error::OutOfDomain(format!("H_{} vanishes", n + 1)));
    }
    Ok(BigRational::new(h(n)? * h(n + 2)?, &den * &den))
}
