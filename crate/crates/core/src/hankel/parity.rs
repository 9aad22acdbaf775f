/// `sum_{1 <= i <= j <= m-1} v2(2n+i+j) - v2(i+j)`, the 2-adic valuation of
/// `det(C_{i+j+m})` for the Catalan numbers `C_k`.
pub fn catalan_shift_valuation(n: u64, m: u64) -> u64 {
    let mut total: i64 = 0;
    for j in 1..m {
        for i in 1..=j {
            total += i64::from((2 * n + i + j).trailing_zeros());
            total -= i64::from((i + j).trailing_zeros());
        }
    }
    debug_assert!(total >= 0);
    total.max(0) as u64
}

/// Parity of `det(C_{i+j+m})_{i,j<n}`.
pub fn catalan_shift_parity(n: u64, m: u64) -> u8 {
    u8::from(catalan_shift_valuation(n, m) == 0)
}
