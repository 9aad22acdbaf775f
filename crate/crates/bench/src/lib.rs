//! Workloads shared by the criterion benches: each closed form next to the oracle it replaces.

use hankel_core::closedform::{big_d_sign, d_shift_int, d_sign, generic_big_d, t_int, DMethod, TMethod};
use hankel_core::hankel::{build_matrix, det_bareiss, det_cofactor};
use hankel_core::{LaurentPoly, SequenceRule};
use num_bigint::BigInt;

/// Closed-form value of the unit-rule determinant of size `n` with shift `m`.
pub fn closed_unit(n: u64, m: u64) -> i64 {
    match m {
        0 => d_sign(n).to_i64(),
        1 => big_d_sign(n, DMethod::Delta).to_i64(),
        _ => d_shift_int(n, m),
    }
}

/// Bareiss value of the same determinant.
pub fn bareiss_unit(n: u64, m: u64) -> BigInt {
    det_bareiss(&build_matrix(&SequenceRule::unit(m), n as usize)).expect("unit rule is integral")
}

/// Cofactor value of the generic determinant.
pub fn cofactor_generic(n: u64, m: u64) -> LaurentPoly {
    det_cofactor(&build_matrix(&SequenceRule::generic(m), n as usize)).expect("within guard")
}

/// Sum of `T(n)` over a window, so the loop is not optimized away.
pub fn t_window(start: u64, len: u64, method: TMethod) -> i64 {
    (start..start + len).map(|n| t_int(n, method).to_i64()).sum()
}

/// Generic shifted-by-one monomial.
pub fn closed_generic_shifted(n: u64) -> LaurentPoly {
    generic_big_d(n)
}
