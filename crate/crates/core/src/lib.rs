//! Exact Hankel determinants of the sequence of Catalan numbers modulo 2 and
//! of its generalizations where `a_n = x_n` on indices `n = 2^k - 1` and zero
//! elsewhere.
//!
//! The crate pairs two kinds of evaluators:
//!
//! * exact oracles in [`hankel`]: fraction-free Bareiss elimination over
//!   arbitrary-precision integers and a sparse memoized cofactor expansion
//!   over Laurent polynomials;
//! * `O(log n)` closed forms and interval-reversal recursions in
//!   [`closedform`], plus the continued-fraction identities in [`contfrac`].
//!
//! Every closed form is tested against the oracles.

pub mod closedform;
pub mod contfrac;
mod error;
pub mod exactring;
pub mod hankel;
pub mod seq;

pub use error::{Error, Result};
pub use exactring::{ExponentVector, LaurentPoly, TruncatedSeries, UniPoly};
pub use hankel::{HankelMatrix, RuleKind, SequenceRule, SignedPermutation};
pub use seq::Sign;
