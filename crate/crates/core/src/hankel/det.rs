use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::HankelMatrix;
use crate::error::{Error, Result};
use crate::exactring::LaurentPoly;

/// Largest size accepted by [`det_bareiss`].
pub const BAREISS_LIMIT: usize = 2048;
/// Largest size accepted by [`det_cofactor`] (column sets are kept in a `u64`).
pub const COFACTOR_LIMIT: usize = 64;

/// Fraction-free elimination with row swaps. Tries `i128` first and restarts
/// over `BigInt` on overflow.
pub fn det_bareiss(m: &HankelMatrix) -> Result<BigInt> {
    let n = m.size();
    if n > BAREISS_LIMIT {
        return Err(Error::SizeGuard { what: "bareiss", limit: BAREISS_LIMIT as u64, got: n as u64 });
    }
    let rows = m
        .to_integer_rows()
        .ok_or_else(|| Error::OutOfDomain("bareiss needs an integer-valued rule".into()))?;
    let small: Option<Vec<Vec<i128>>> = rows
        .iter()
        .map(|r| r.iter().map(|c| i128::try_from(c).ok()).collect())
        .collect();
    if let Some(small) = small {
        if let Some(d) = bareiss_i128(small) {
            return Ok(BigInt::from(d));
        }
    }
    Ok(bareiss_big(rows))
}

fn bareiss_i128(mut a: Vec<Vec<i128>>) -> Option<i128> {
    let n = a.len();
    if n == 0 {
        return Some(1);
    }
    let mut negate = false;
    let mut prev: i128 = 1;
    for k in 0..n {
        if a[k][k] == 0 {
            let r = (k + 1..n).find(|&r| a[r][k] != 0)?;
            a.swap(k, r);
            negate = !negate;
        }
        let (top, rest) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let piv = pivot_row[k];
        for row in rest.iter_mut() {
            let aik = row[k];
            if aik == 0 {
                if piv == prev {
                    continue;
                }
                for x in &mut row[k + 1..] {
                    if *x != 0 {
                        *x = piv.checked_mul(*x)? / prev;
                    }
                }
            } else {
                for (x, &p) in row[k + 1..].iter_mut().zip(&pivot_row[k + 1..]) {
                    let v = piv.checked_mul(*x)?.checked_sub(aik.checked_mul(p)?)?;
                    *x = v / prev;
                }
                row[k] = 0;
            }
        }
        prev = piv;
    }
    Some(if negate { -a[n - 1][n - 1] } else { a[n - 1][n - 1] })
}

fn bareiss_big(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        let (top, rest) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let piv = pivot_row[k].clone();
        for row in rest.iter_mut() {
            let aik = row[k].clone();
            if aik.is_zero() {
                if piv == prev {
                    continue;
                }
                for x in &mut row[k + 1..] {
                    if !x.is_zero() {
                        *x = &piv * &*x / &prev;
                    }
                }
            } else {
                for (x, p) in row[k + 1..].iter_mut().zip(&pivot_row[k + 1..]) {
                    *x = (&piv * &*x - &aik * p) / &prev;
                }
                row[k] = BigInt::zero();
            }
        }
        prev = piv;
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

struct Cofactor<'a> {
    n: usize,
    diagonals: Vec<(usize, &'a LaurentPoly)>,
    memo: HashMap<(u64, u64), LaurentPoly>,
}

impl Cofactor<'_> {
    fn options(&self, i: usize, cols: u64) -> impl Iterator<Item = (usize, &LaurentPoly)> + '_ {
        let n = self.n;
        self.diagonals
            .iter()
            .filter(move |(t, _)| *t >= i && *t - i < n && cols >> (*t - i) & 1 == 1)
            .map(move |(t, v)| (*t - i, *v))
    }

    fn solve(&mut self, rows: u64, cols: u64) -> LaurentPoly {
        if rows == 0 {
            return LaurentPoly::one();
        }
        if let Some(v) = self.memo.get(&(rows, cols)) {
            return v.clone();
        }
        let mut best: Option<(usize, usize)> = None;
        let mut bits = rows;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let count = self.options(i, cols).count();
            if best.is_none_or(|(_, c)| count < c) {
                best = Some((i, count));
                if count <= 1 {
                    break;
                }
            }
        }
        let (r, count) = best.expect("rows is nonempty");
        let mut total = LaurentPoly::zero();
        if count > 0 {
            let picks: Vec<(usize, LaurentPoly)> = self.options(r, cols).map(|(c, v)| (c, v.clone())).collect();
            let pos_r = (rows & ((1u64 << r) - 1)).count_ones();
            for (c, v) in picks {
                let pos_c = (cols & ((1u64 << c) - 1)).count_ones();
                let minor = self.solve(rows & !(1u64 << r), cols & !(1u64 << c));
                if minor.is_zero() {
                    continue;
                }
                let term = &v * &minor;
                if (pos_r + pos_c).is_multiple_of(2) {
                    total += term;
                } else {
                    total = total - term;
                }
            }
        }
        self.memo.insert((rows, cols), total.clone());
        total
    }
}

/// Cofactor expansion along the sparsest remaining row, memoized on the
/// remaining row and column sets.
pub fn det_cofactor(m: &HankelMatrix) -> Result<LaurentPoly> {
    let n = m.size();
    if n > COFACTOR_LIMIT {
        return Err(Error::SizeGuard { what: "cofactor", limit: COFACTOR_LIMIT as u64, got: n as u64 });
    }
    if n == 0 {
        return Ok(LaurentPoly::one());
    }
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut engine = Cofactor {
        n,
        diagonals: m.diagonals().iter().map(|(t, _, v)| (*t, v)).collect(),
        memo: HashMap::new(),
    };
    Ok(engine.solve(full, full))
}

/// Bareiss for integer rules, cofactor expansion otherwise.
pub fn det_oracle(m: &HankelMatrix) -> Result<LaurentPoly> {
    if m.rule().kind.is_integer() {
        det_bareiss(m).map(LaurentPoly::constant)
    } else {
        det_cofactor(m)
    }
}
