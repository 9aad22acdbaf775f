//! Integer and sign sequences indexed by binary digits.
//!
//! Everything here is a pure function of its index. Binary digits are
//! numbered from the least significant end, so `n = [e_k ... e_1 e_0]_2`.

use std::fmt;
use std::ops::{Mul, MulAssign, Neg};

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

/// A value in `{-1, +1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    /// `(-1)^e`, looking only at the parity of `e`.
    #[inline]
    pub fn pow_neg_one(e: u64) -> Sign {
        if e & 1 == 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    /// `(-1)^{C(n,2)}`, which is `+1` exactly when `n mod 4` is 0 or 1.
    #[inline]
    pub fn of_binom2(n: u64) -> Sign {
        if n & 2 == 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    #[inline]
    pub fn to_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_i64(v: i64) -> Option<Sign> {
        match v {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    #[inline]
    pub fn is_plus(self) -> bool {
        self == Sign::Plus
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl MulAssign for Sign {
    fn mul_assign(&mut self, rhs: Sign) {
        *self = *self * rhs;
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_i64())
    }
}

/// `C(n,2)`, saturating only beyond `u64` range.
#[inline]
pub(crate) fn binom2(n: u64) -> u128 {
    let n = n as u128;
    n * n.saturating_sub(1) / 2
}

/// `a_n`: 1 when `n + 1` is a power of two, else 0. This is `C_n mod 2`.
#[inline]
pub fn bit_a(n: u64) -> u8 {
    u8::from(n.checked_add(1).is_some_and(u64::is_power_of_two))
}

/// Regular paperfolding sequence: `S(0) = 1`, `S(2n) = (-1)^n`, `S(2n+1) = S(n)`.
pub fn paperfolding_s(mut n: u64) -> Sign {
    while n & 1 == 1 {
        n >>= 1;
    }
    Sign::pow_neg_one(n >> 1)
}

/// `s(0) = 1`, `s(2n) = (-1)^n s(n)`, `s(2n+1) = s(n)`.
pub fn sign_s(mut n: u64) -> Sign {
    let mut acc = Sign::Plus;
    while n > 0 {
        let half = n >> 1;
        if n & 1 == 0 {
            acc *= Sign::pow_neg_one(half);
        }
        n = half;
    }
    acc
}

/// `v(0) = 1`, `v(2n+1) = v(n)`, `v(4n) = (-1)^n v(2n)`, `v(4n+2) = v(2n)`.
pub fn sign_v(mut n: u64) -> Sign {
    let mut acc = Sign::Plus;
    while n > 0 {
        match n & 3 {
            1 | 3 => n >>= 1,
            0 => {
                acc *= Sign::pow_neg_one(n >> 2);
                n >>= 1;
            }
            // 4n+2 -> 2n
            _ => n = (n >> 1) - 1,
        }
    }
    acc
}

/// Counts digit pairs `e_{i+1} e_i = 10` with `i >= 1`, plus one when the two
/// lowest digits are `11`.
pub fn delta_pairs(n: u64) -> u32 {
    // bit i set in `tens` <=> e_{i+1} = 1 and e_i = 0
    let tens = (n >> 1) & !n;
    let high = (tens & !1).count_ones();
    high + u32::from(n & 3 == 3)
}

/// Number of (overlapping) adjacent digit pairs equal to `11`.
#[inline]
pub fn rho_pairs(n: u64) -> u32 {
    (n & (n >> 1)).count_ones()
}

/// Golay-Rudin-Shapiro sign via `r(2n) = r(n)`, `r(2n+1) = (-1)^n r(n)`.
pub fn grs_r(mut n: u64) -> Sign {
    let mut acc = Sign::Plus;
    while n > 0 {
        let half = n >> 1;
        if n & 1 == 1 {
            acc *= Sign::pow_neg_one(half);
        }
        n = half;
    }
    acc
}

/// Total number of 1-digits in the binary expansions of `0, 1, ..., n-1`.
pub fn ones_total(n: u64) -> u64 {
    let n = n as u128;
    let mut total: u128 = 0;
    let mut bit = 0u32;
    while bit < 64 && (1u128 << bit) < n.max(1) {
        let period = 1u128 << (bit + 1);
        let half = 1u128 << bit;
        total += (n / period) * half + (n % period).saturating_sub(half);
        bit += 1;
    }
    total as u64
}

/// Binary digit sum `s_2(n)`.
#[inline]
pub fn digit_sum(n: u64) -> u32 {
    n.count_ones()
}

/// Table of non-squashing distinct-part partition counts `b(2..=max)`.
///
/// Built once with `b(2m) = b(2m-1) + b(m) - 1` and `b(2m+1) = b(2m) + 1`
/// from the anchors `b(2) = 1`, `b(3) = 2`. Index `i` holds `b(i)`; slots 0
/// and 1 are unused.
#[derive(Clone, Debug)]
pub struct NonSquashTable {
    values: Vec<BigUint>,
}

impl NonSquashTable {
    pub fn build(max: u64) -> Result<Self> {
        if max < 2 {
            return Err(Error::OutOfDomain(format!(
                "non-squashing counts start at n = 2, got max = {max}"
            )));
        }
        let len = usize::try_from(max).map_err(|_| Error::SizeGuard {
            what: "non-squashing table",
            limit: usize::MAX as u64,
            got: max,
        })? + 1;
        let mut values = vec![BigUint::default(); len.max(4)];
        values[2] = BigUint::one();
        values[3] = BigUint::from(2u8);
        for i in 4..len {
            values[i] = if i % 2 == 0 {
                &values[i - 1] + &values[i / 2] - 1u8
            } else {
                &values[i - 1] + 1u8
            };
        }
        values.truncate(len);
        Ok(NonSquashTable { values })
    }

    pub fn max(&self) -> u64 {
        self.values.len() as u64 - 1
    }

    pub fn get(&self, n: u64) -> Result<&BigUint> {
        if n < 2 {
            return Err(Error::OutOfDomain(format!(
                "b(n) is defined for n >= 2, got {n}"
            )));
        }
        self.values.get(n as usize).ok_or(Error::SizeGuard {
            what: "non-squashing table lookup",
            limit: self.max(),
            got: n,
        })
    }
}

/// `b(n)`, the number of non-squashing partitions of `n` into distinct parts.
pub fn nonsquash_b(n: u64) -> Result<BigUint> {
    if n < 2 {
        return Err(Error::OutOfDomain(format!(
            "b(n) is defined for n >= 2, got {n}"
        )));
    }
    let table = NonSquashTable::build(n)?;
    Ok(table.get(n)?.clone())
}
