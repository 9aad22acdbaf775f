//! Hankel matrices over the sparse sequences `a_n = x_n` for `n = 2^k - 1`,
//! exact determinant oracles, nimble permutations, LDL^T factorizations and
//! the associated orthogonal polynomials.

mod det;
mod ldlt;
mod nimble;
mod ortho;
mod parity;

pub use det::{det_bareiss, det_cofactor, det_oracle, BAREISS_LIMIT, COFACTOR_LIMIT};
pub use ldlt::{binom_parity, ldlt_plain_factors, ldlt_shifted_factors, ldlt_verify_plain, ldlt_verify_shifted};
pub use nimble::{nimble_enumerate, nimble_solve, reversal_step, ReversalStep, SignedPermutation, ENUMERATE_LIMIT};
pub use ortho::{moment, moment_orthogonality, orthopoly, unit_orthopoly};
pub use parity::{catalan_shift_parity, catalan_shift_valuation};

use std::fmt;

use num_bigint::BigInt;

use crate::exactring::{ExponentVector, LaurentPoly};

/// How the nonzero values `x_{2^k-1}` are chosen.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RuleKind {
    /// Every `x_{2^k-1} = 1`: the Catalan numbers modulo 2.
    Unit,
    /// Independent indeterminates `x_{2^k-1}` (variable `k`).
    Generic,
    /// `x_{2^k-1} = x^k`.
    Powers,
    /// `x_{2^k-1} = x^{2^k-1}`.
    Doubling,
    /// `x_1 = 1`, `x_{2^k-1} = (-1)^k` otherwise (Golay-Rudin-Shapiro).
    Grs,
    /// `x_{2^k-1} = values[k]`; levels past the end take the value 1.
    Custom(Vec<BigInt>),
}

impl RuleKind {
    pub fn name(&self) -> &'static str {
        match self {
            RuleKind::Unit => "unit",
            RuleKind::Generic => "generic",
            RuleKind::Powers => "powers",
            RuleKind::Doubling => "doubling",
            RuleKind::Grs => "grs",
            RuleKind::Custom(_) => "custom",
        }
    }

    /// Values are plain integers (no indeterminates).
    pub fn is_integer(&self) -> bool {
        matches!(self, RuleKind::Unit | RuleKind::Grs | RuleKind::Custom(_))
    }

    /// Values are monomials in the single variable `x` (variable 0).
    pub fn is_univariate(&self) -> bool {
        matches!(self, RuleKind::Powers | RuleKind::Doubling)
    }

    /// The value `x_{2^k-1}`.
    pub fn level_value(&self, k: u32) -> LaurentPoly {
        match self {
            RuleKind::Unit => LaurentPoly::one(),
            RuleKind::Generic => LaurentPoly::var(k),
            RuleKind::Powers => LaurentPoly::monomial(1, ExponentVector::single(0, i64::from(k))),
            RuleKind::Doubling => LaurentPoly::monomial(1, ExponentVector::single(0, (1i64 << k) - 1)),
            RuleKind::Grs => LaurentPoly::constant(if k == 1 || k.is_multiple_of(2) { 1 } else { -1 }),
            RuleKind::Custom(values) => {
                values.get(k as usize).cloned().map(LaurentPoly::constant).unwrap_or_else(LaurentPoly::one)
            }
        }
    }

    /// Renders a value of this rule: `x` for single-variable rules, `x_{2^k-1}` names otherwise.
    pub fn render(&self, p: &LaurentPoly) -> String {
        if self.is_univariate() {
            p.to_univariate_string()
        } else {
            p.to_string()
        }
    }
}

/// Sequence `(a_{n+m})_{n >= 0}` with `a_p = x_p` when `p + 1` is a power of two.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SequenceRule {
    pub kind: RuleKind,
    pub shift: u64,
}

impl SequenceRule {
    pub fn new(kind: RuleKind, shift: u64) -> Self {
        SequenceRule { kind, shift }
    }

    pub fn unit(shift: u64) -> Self {
        SequenceRule::new(RuleKind::Unit, shift)
    }

    pub fn generic(shift: u64) -> Self {
        SequenceRule::new(RuleKind::Generic, shift)
    }

    /// Level `k` with `t + shift + 1 = 2^k`, if entry `t` is in the support.
    pub fn level_of(&self, t: u64) -> Option<u32> {
        let p = t.checked_add(self.shift)?.checked_add(1)?;
        p.is_power_of_two().then(|| p.trailing_zeros())
    }

    /// Sequence value at index `t` (the entry on antidiagonal `i + j = t`).
    pub fn entry(&self, t: u64) -> LaurentPoly {
        match self.level_of(t) {
            Some(k) => self.kind.level_value(k),
            None => LaurentPoly::zero(),
        }
    }
}

/// `n x n` Hankel matrix `(a_{i+j+m})`, stored by its nonzero antidiagonals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HankelMatrix {
    n: usize,
    rule: SequenceRule,
    diagonals: Vec<(usize, u32, LaurentPoly)>,
}

impl HankelMatrix {
    pub fn size(&self) -> usize {
        self.n
    }

    pub fn rule(&self) -> &SequenceRule {
        &self.rule
    }

    /// `(t, level, value)` for each nonzero antidiagonal `i + j = t`, ascending in `t`.
    pub fn diagonals(&self) -> &[(usize, u32, LaurentPoly)] {
        &self.diagonals
    }

    pub fn entry(&self, i: usize, j: usize) -> LaurentPoly {
        let t = i + j;
        self.diagonals
            .iter()
            .find(|(d, _, _)| *d == t)
            .map(|(_, _, v)| v.clone())
            .unwrap_or_else(LaurentPoly::zero)
    }

    /// Dense integer rows, when every entry is a constant.
    pub fn to_integer_rows(&self) -> Option<Vec<Vec<BigInt>>> {
        let values: Option<Vec<(usize, BigInt)>> =
            self.diagonals.iter().map(|(t, _, v)| v.as_integer().map(|c| (*t, c))).collect();
        let values = values?;
        let mut rows = vec![vec![BigInt::default(); self.n]; self.n];
        for (t, c) in values {
            for i in t.saturating_sub(self.n - 1)..=t.min(self.n - 1) {
                rows[i][t - i] = c.clone();
            }
        }
        Some(rows)
    }

    /// Row-major grid of rendered entries.
    pub fn render_rows(&self) -> Vec<Vec<String>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.rule.kind.render(&self.entry(i, j))).collect())
            .collect()
    }
}

impl fmt::Display for HankelMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows = self.render_rows();
        let width = rows.iter().flatten().map(String::len).max().unwrap_or(1);
        for row in rows {
            let cells: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Hankel matrix `(entry(i + j))_{i,j < n}` of `rule`.
pub fn build_matrix(rule: &SequenceRule, n: usize) -> HankelMatrix {
    let mut diagonals = Vec::new();
    if n > 0 {
        let max_t = 2 * n as u64 - 2;
        for k in 0..64u32 {
            let p = 1u128 << k;
            let t = p as i128 - 1 - rule.shift as i128;
            if t > max_t as i128 {
                break;
            }
            if t >= 0 {
                diagonals.push((t as usize, k, rule.kind.level_value(k)));
            }
        }
    }
    HankelMatrix { n, rule: rule.clone(), diagonals }
}
