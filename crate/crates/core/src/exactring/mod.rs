//! Exact arithmetic: sparse Laurent polynomials in the variables
//! `x_{2^k-1}`, dense integer polynomials, and truncated rational series.

mod laurent;
mod series;
mod unipoly;

pub use laurent::{var_name_index, ExponentVector, LaurentPoly};
pub use series::TruncatedSeries;
pub use unipoly::UniPoly;

use std::collections::BTreeMap;

use num_rational::BigRational;

use crate::error::Result;

/// Exact product of two Laurent polynomials.
pub fn poly_mul(p: &LaurentPoly, q: &LaurentPoly) -> LaurentPoly {
    p * q
}

/// Exact value of `p` under `k -> value`.
pub fn poly_eval(p: &LaurentPoly, assignment: &BTreeMap<u32, BigRational>) -> Result<BigRational> {
    p.eval(assignment)
}

/// `t` with `s * t = 1 mod z^N`.
pub fn series_inverse(s: &TruncatedSeries) -> Result<TruncatedSeries> {
    s.inverse()
}
