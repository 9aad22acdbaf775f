use crate::error::{Error, Result};
use crate::seq::Sign;

/// Largest size accepted by [`nimble_enumerate`].
pub const ENUMERATE_LIMIT: usize = 10;

/// A permutation of `0..n` together with its sign.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedPermutation {
    images: Vec<usize>,
    sign: Sign,
}

impl SignedPermutation {
    /// Returns `None` unless `images` is a bijection on `0..images.len()`.
    pub fn new(images: Vec<usize>) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &p in &images {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return None;
            }
        }
        let mut visited = vec![false; n];
        let mut even_cycles = 0u64;
        for start in 0..n {
            if visited[start] {
                continue;
            }
            let mut len = 0u64;
            let mut i = start;
            while !visited[i] {
                visited[i] = true;
                i = images[i];
                len += 1;
            }
            if len.is_multiple_of(2) {
                even_cycles += 1;
            }
        }
        Some(SignedPermutation { images, sign: Sign::pow_neg_one(even_cycles) })
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// Counts inversions directly; quadratic.
    pub fn inversions(&self) -> u64 {
        let mut count = 0;
        for i in 0..self.images.len() {
            for j in i + 1..self.images.len() {
                if self.images[i] > self.images[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Every `i + images[i] + m + 1` is a power of two.
    pub fn is_nimble(&self, m: u64) -> bool {
        self.images.iter().enumerate().all(|(i, &p)| (i as u64 + p as u64 + m + 1).is_power_of_two())
    }
}

/// One step of the interval reversal: rows `rest..n` pair with columns
/// `rest..n` reversed along the antidiagonal `i + j + m + 1 = 2^level`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReversalStep {
    pub level: u32,
    pub len: u64,
    pub rest: u64,
}

/// The forced top block of an `n x n` matrix with shift `m`, or `None` when the
/// last row has no admissible column inside the block structure.
pub fn reversal_step(n: u64, m: u64) -> Option<ReversalStep> {
    if n == 0 {
        return None;
    }
    let p = (n + m).checked_next_power_of_two()?;
    if p > 2 * n + m - 1 {
        return None;
    }
    let rest = p - m - n;
    Some(ReversalStep { level: p.trailing_zeros(), len: n - rest, rest })
}

/// The unique `m`-nimble permutation of `0..n`, built by repeated reversal of
/// the top interval.
pub fn nimble_solve(n: usize, m: u64) -> Option<SignedPermutation> {
    let mut images = vec![0usize; n];
    let mut cur = n as u64;
    while cur > 0 {
        let step = reversal_step(cur, m)?;
        let top = (1u64 << step.level) - m - 1;
        for i in step.rest..cur {
            images[i as usize] = (top - i) as usize;
        }
        cur = step.rest;
    }
    SignedPermutation::new(images)
}

/// All `m`-nimble permutations of `0..n`, by exhaustive search.
pub fn nimble_enumerate(n: usize, m: u64) -> Result<Vec<SignedPermutation>> {
    if n > ENUMERATE_LIMIT {
        return Err(Error::SizeGuard { what: "nimble enumeration", limit: ENUMERATE_LIMIT as u64, got: n as u64 });
    }
    let mut out = Vec::new();
    let mut images = Vec::with_capacity(n);
    let mut used = vec![false; n];
    search(n, m, &mut images, &mut used, &mut out);
    Ok(out)
}

fn search(n: usize, m: u64, images: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<SignedPermutation>) {
    let i = images.len();
    if i == n {
        out.push(SignedPermutation::new(images.clone()).expect("search builds bijections"));
        return;
    }
    for j in 0..n {
        if !used[j] && (i as u64 + j as u64 + m + 1).is_power_of_two() {
            used[j] = true;
            images.push(j);
            search(n, m, images, used, out);
            images.pop();
            used[j] = false;
        }
    }
}
