use num_bigint::BigInt;

use crate::closedform::{t_table, TMethod};
use crate::error::{Error, Result};
use crate::exactring::UniPoly;
use crate::seq::bit_a;

const ORTHO_LIMIT: usize = 64;

/// Monic `p_n` from `p_n = x p_{n-1} - T_{n-2} p_{n-2}`, `p_0 = 1`, `p_1 = x`.
pub fn orthopoly(n: usize, t: &[BigInt]) -> Result<UniPoly> {
    if n >= 2 && t.len() < n - 1 {
        return Err(Error::OutOfDomain(format!("need {} recurrence values, got {}", n - 1, t.len())));
    }
    let mut prev = UniPoly::one();
    if n == 0 {
        return Ok(prev);
    }
    let mut cur = UniPoly::x();
    for k in 2..=n {
        let next = &cur.mul_x() - &prev.scale(&t[k - 2]);
        prev = std::mem::replace(&mut cur, next);
    }
    Ok(cur)
}

/// `p_n` for the unit-rule moments, using the closed-form `T` values.
pub fn unit_orthopoly(n: usize) -> UniPoly {
    let t: Vec<BigInt> = t_table(n as u64, TMethod::Recurrence).into_iter().map(|s| BigInt::from(s.to_i64())).collect();
    orthopoly(n, &t).expect("table is long enough")
}

/// `L(x^k) = a_{k+1}`.
pub fn moment(k: u64) -> BigInt {
    BigInt::from(bit_a(k + 1))
}

/// `L(p_i p_j)` for the unit-rule polynomials.
pub fn moment_orthogonality(i: usize, j: usize) -> Result<BigInt> {
    let big = i.max(j);
    if big > ORTHO_LIMIT {
        return Err(Error::SizeGuard { what: "orthogonality index", limit: ORTHO_LIMIT as u64, got: big as u64 });
    }
    let prod = &unit_orthopoly(i) * &unit_orthopoly(j);
    Ok(prod.coeffs().iter().enumerate().map(|(k, c)| c * moment(k as u64)).sum())
}
