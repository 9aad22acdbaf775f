use crate::hankel::{build_matrix, SequenceRule};
use crate::seq::{paperfolding_s, sign_s, sign_v};

/// `C(a, b) mod 2`: 1 iff the binary digits of `b` are a subset of those of `a`.
pub fn binom_parity(a: u64, b: i64) -> u8 {
    if b < 0 || b as u64 > a {
        return 0;
    }
    u8::from(b as u64 & !a == 0)
}

/// Lower unitriangular `a(i,j) = s(i)s(j)C(2i+1, i-j) mod 2` and diagonal `(-1)^i`.
pub fn ldlt_plain_factors(n: usize) -> (Vec<Vec<i64>>, Vec<i64>) {
    let lower = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let b = binom_parity(2 * i as u64 + 1, i as i64 - j as i64);
                    i64::from(b) * (sign_s(i as u64) * sign_s(j as u64)).to_i64()
                })
                .collect()
        })
        .collect();
    let diag = (0..n).map(|i| if i % 2 == 0 { 1 } else { -1 }).collect();
    (lower, diag)
}

/// Lower unitriangular `c(i,j) = C(2i+2, i-j) v(i)v(j) mod 2` and diagonal `S(i)`.
pub fn ldlt_shifted_factors(n: usize) -> (Vec<Vec<i64>>, Vec<i64>) {
    let lower = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let b = binom_parity(2 * i as u64 + 2, i as i64 - j as i64);
                    i64::from(b) * (sign_v(i as u64) * sign_v(j as u64)).to_i64()
                })
                .collect()
        })
        .collect();
    let diag = (0..n).map(|i| paperfolding_s(i as u64).to_i64()).collect();
    (lower, diag)
}

fn reproduces(lower: &[Vec<i64>], diag: &[i64], shift: u64) -> bool {
    let n = lower.len();
    let h = build_matrix(&SequenceRule::unit(shift), n).to_integer_rows().expect("unit rule");
    for i in 0..n {
        for j in 0..=i {
            let mut acc = 0i64;
            for k in 0..=j {
                acc += lower[i][k] * diag[k] * lower[j][k];
            }
            if h[i][j] != acc.into() || h[j][i] != acc.into() {
                return false;
            }
        }
    }
    true
}

/// `A D A^T` equals the unshifted Hankel matrix.
pub fn ldlt_verify_plain(n: usize) -> bool {
    let (a, d) = ldlt_plain_factors(n);
    reproduces(&a, &d, 0)
}

/// `C D C^T` equals the Hankel matrix shifted by one.
pub fn ldlt_verify_shifted(n: usize) -> bool {
    let (c, d) = ldlt_shifted_factors(n);
    reproduces(&c, &d, 1)
}
