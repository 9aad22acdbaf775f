use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Printed subscript of variable index `k`, i.e. `2^k - 1`.
pub fn var_name_index(k: u32) -> u128 {
    (1u128 << k) - 1
}

/// Sparse exponent map `k -> e` for the monomial `prod x_{2^k-1}^e`.
///
/// Zero exponents are never stored, so structural equality is value
/// equality. Ordering is lexicographic on `(k, e)` pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentVector(BTreeMap<u32, i64>);

impl ExponentVector {
    pub fn one() -> Self {
        ExponentVector(BTreeMap::new())
    }

    pub fn single(k: u32, e: i64) -> Self {
        let mut v = ExponentVector::one();
        v.bump(k, e);
        v
    }

    pub fn from_pairs<I: IntoIterator<Item = (u32, i64)>>(pairs: I) -> Self {
        let mut v = ExponentVector::one();
        for (k, e) in pairs {
            v.bump(k, e);
        }
        v
    }

    /// Adds `e` to the exponent of variable `k`.
    pub fn bump(&mut self, k: u32, e: i64) {
        if e == 0 {
            return;
        }
        let slot = self.0.entry(k).or_insert(0);
        *slot += e;
        if *slot == 0 {
            self.0.remove(&k);
        }
    }

    pub fn get(&self, k: u32) -> i64 {
        self.0.get(&k).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, i64)> + '_ {
        self.0.iter().map(|(&k, &e)| (k, e))
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn has_negative(&self) -> bool {
        self.0.values().any(|&e| e < 0)
    }

    pub fn product(&self, other: &ExponentVector) -> ExponentVector {
        let mut out = self.clone();
        for (k, e) in other.iter() {
            out.bump(k, e);
        }
        out
    }

    pub fn inverse(&self) -> ExponentVector {
        ExponentVector(self.0.iter().map(|(&k, &e)| (k, -e)).collect())
    }

    pub fn scaled(&self, factor: i64) -> ExponentVector {
        ExponentVector::from_pairs(self.iter().map(|(k, e)| (k, e * factor)))
    }
}

/// Sparse multivariate Laurent polynomial with integer coefficients.
///
/// Variable `k` stands for `x_{2^k-1}`; for single-variable specializations
/// variable 0 plays the role of `x`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<ExponentVector, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::constant(BigInt::one())
    }

    pub fn constant<T: Into<BigInt>>(c: T) -> Self {
        LaurentPoly::monomial(c, ExponentVector::one())
    }

    /// The variable `x_{2^k-1}`.
    pub fn var(k: u32) -> Self {
        LaurentPoly::monomial(1, ExponentVector::single(k, 1))
    }

    pub fn monomial<T: Into<BigInt>>(c: T, exps: ExponentVector) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        LaurentPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_integer().is_some_and(|c| c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &BigInt)> {
        self.terms.iter()
    }

    /// The single term, if there is exactly one.
    pub fn as_monomial(&self) -> Option<(&BigInt, &ExponentVector)> {
        if self.terms.len() != 1 {
            return None;
        }
        self.terms.iter().next().map(|(e, c)| (c, e))
    }

    /// The value as an integer, if the polynomial is constant (zero included).
    pub fn as_integer(&self) -> Option<BigInt> {
        if self.is_zero() {
            return Some(BigInt::zero());
        }
        match self.as_monomial() {
            Some((c, e)) if e.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    /// Every variable index that occurs.
    pub fn variables(&self) -> Vec<u32> {
        let mut vars: Vec<u32> = self.terms.keys().flat_map(|e| e.iter().map(|(k, _)| k)).collect();
        vars.sort_unstable();
        vars.dedup();
        vars
    }

    fn add_term(&mut self, exps: ExponentVector, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn pow(&self, mut e: u32) -> LaurentPoly {
        let mut base = self.clone();
        let mut acc = LaurentPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Inverse of a unit monomial `±m`.
    pub fn inverse_monomial(&self) -> Result<LaurentPoly> {
        match self.as_monomial() {
            Some((c, e)) if c.abs().is_one() => Ok(LaurentPoly::monomial(c.clone(), e.inverse())),
            _ => Err(Error::InexactDivision(self.to_string())),
        }
    }

    /// Integer power, negative exponents allowed for unit monomials.
    pub fn powi(&self, e: i64) -> Result<LaurentPoly> {
        let mag = u32::try_from(e.unsigned_abs()).map_err(|_| Error::SizeGuard {
            what: "Laurent exponent",
            limit: u32::MAX as u64,
            got: e.unsigned_abs(),
        })?;
        if e >= 0 {
            Ok(self.pow(mag))
        } else {
            Ok(self.inverse_monomial()?.pow(mag))
        }
    }

    /// Exact quotient `self / divisor` for a monomial divisor whose
    /// coefficient divides every coefficient of `self`.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Result<LaurentPoly> {
        let (dc, de) = divisor
            .as_monomial()
            .ok_or_else(|| Error::InexactDivision(format!("({self}) / ({divisor})")))?;
        let inv = de.inverse();
        let mut out = LaurentPoly::zero();
        for (e, c) in &self.terms {
            if !(c % dc).is_zero() {
                return Err(Error::InexactDivision(format!("({self}) / ({divisor})")));
            }
            out.add_term(e.product(&inv), c / dc);
        }
        Ok(out)
    }

    /// Replaces each variable `k` by `image(k)`. Variables raised to negative
    /// powers must map to unit monomials.
    pub fn substitute<F>(&self, mut image: F) -> Result<LaurentPoly>
    where
        F: FnMut(u32) -> LaurentPoly,
    {
        let mut cache: BTreeMap<u32, LaurentPoly> = BTreeMap::new();
        let mut out = LaurentPoly::zero();
        for (e, c) in &self.terms {
            let mut term = LaurentPoly::constant(c.clone());
            for (k, p) in e.iter() {
                let base = cache.entry(k).or_insert_with(|| image(k));
                term = &term * &base.powi(p)?;
            }
            out += term;
        }
        Ok(out)
    }

    /// Exact rational value under the assignment `k -> value`.
    pub fn eval(&self, assignment: &BTreeMap<u32, BigRational>) -> Result<BigRational> {
        let mut total = BigRational::zero();
        for (e, c) in &self.terms {
            let mut term = BigRational::from_integer(c.clone());
            for (k, p) in e.iter() {
                let v = assignment.get(&k).ok_or(Error::MissingVariable(k))?;
                if v.is_zero() && p < 0 {
                    return Err(Error::DivisionByZero(k));
                }
                term *= BigRational::pow(v, p as i32);
            }
            total += term;
        }
        Ok(total)
    }

    /// Renders with variable `k` printed by `name(k)`.
    pub fn render_with(&self, name: &dyn Fn(u32) -> String) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            render_term(&mut out, &c.abs(), e, name);
        }
        out
    }

    /// Canonical rendering for single-variable values, printing variable 0 as `x`.
    pub fn to_univariate_string(&self) -> String {
        self.render_with(&|k| if k == 0 { "x".to_string() } else { format!("x{}", var_name_index(k)) })
    }
}

fn render_factor(out: &mut String, name: &str, e: i64) {
    out.push_str(name);
    if e != 1 {
        out.push('^');
        out.push_str(&e.to_string());
    }
}

fn render_term(out: &mut String, mag: &BigInt, e: &ExponentVector, name: &dyn Fn(u32) -> String) {
    let num: Vec<(u32, i64)> = e.iter().filter(|&(_, p)| p > 0).collect();
    let den: Vec<(u32, i64)> = e.iter().filter(|&(_, p)| p < 0).map(|(k, p)| (k, -p)).collect();
    if num.is_empty() {
        out.push_str(&mag.to_string());
    } else {
        if !mag.is_one() {
            out.push_str(&mag.to_string());
            out.push('*');
        }
        for (i, &(k, p)) in num.iter().enumerate() {
            if i > 0 {
                out.push('*');
            }
            render_factor(out, &name(k), p);
        }
    }
    if !den.is_empty() {
        out.push('/');
        if den.len() > 1 {
            out.push('(');
        }
        for (i, &(k, p)) in den.iter().enumerate() {
            if i > 0 {
                out.push('*');
            }
            render_factor(out, &name(k), p);
        }
        if den.len() > 1 {
            out.push(')');
        }
    }
}

/// `x0*x3^2*x7^2`, `-x1*x7/x3^2`, `x3/x1`, `1 - x0^2`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_with(&|k| format!("x{}", var_name_index(k))))
    }
}

struct Parser<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, reason: impl Into<String>) -> Error {
        Error::Parse {
            input: self.src.to_string(),
            reason: format!("{} at byte {}", reason.into(), self.pos),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| &self.src[start..self.pos])
    }

    fn factor(&mut self, exps: &mut ExponentVector, sign: i64) -> Result<()> {
        if !self.eat(b'x') {
            return Err(self.err("expected variable"));
        }
        let k = match self.digits() {
            None => 0,
            Some(d) => {
                let idx: u128 = d.parse().map_err(|_| self.err("subscript too large"))?;
                let k = (idx + 1).trailing_zeros();
                if (idx + 1).count_ones() != 1 || k > 63 {
                    return Err(self.err(format!("x{idx} is not of the form x_(2^k-1)")));
                }
                k
            }
        };
        let mut e = 1i64;
        if self.eat(b'^') {
            let neg = self.eat(b'-');
            let d = self.digits().ok_or_else(|| self.err("expected exponent"))?;
            e = d.parse().map_err(|_| self.err("exponent too large"))?;
            if neg {
                e = -e;
            }
        }
        exps.bump(k, sign * e);
        Ok(())
    }

    fn factors(&mut self, exps: &mut ExponentVector, sign: i64) -> Result<()> {
        self.factor(exps, sign)?;
        while self.eat(b'*') {
            self.factor(exps, sign)?;
        }
        Ok(())
    }

    fn term(&mut self) -> Result<(BigInt, ExponentVector)> {
        let mut exps = ExponentVector::one();
        let coef = match self.digits() {
            Some(d) => {
                let c: BigInt = d.parse().map_err(|_| self.err("bad coefficient"))?;
                if self.eat(b'*') {
                    self.factors(&mut exps, 1)?;
                }
                c
            }
            None => {
                self.factors(&mut exps, 1)?;
                BigInt::one()
            }
        };
        if self.eat(b'/') {
            if self.eat(b'(') {
                self.factors(&mut exps, -1)?;
                if !self.eat(b')') {
                    return Err(self.err("expected `)`"));
                }
            } else {
                self.factor(&mut exps, -1)?;
            }
        }
        Ok((coef, exps))
    }

    fn poly(&mut self) -> Result<LaurentPoly> {
        let mut out = LaurentPoly::zero();
        self.skip_ws();
        let mut negative = self.eat(b'-');
        loop {
            self.skip_ws();
            let (c, e) = self.term()?;
            out.add_term(e, if negative { -c } else { c });
            self.skip_ws();
            match self.peek() {
                None => break,
                Some(b'+') => negative = false,
                Some(b'-') => negative = true,
                Some(_) => return Err(self.err("unexpected character")),
            }
            self.pos += 1;
        }
        Ok(out)
    }
}

/// Inverse of the canonical rendering. Bare `x` parses as variable 0.
impl FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Parser { src: s, bytes: s.as_bytes(), pos: 0 }.poly()
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs.clone();
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += rhs;
        self
    }
}

impl AddAssign for LaurentPoly {
    fn add_assign(&mut self, rhs: LaurentPoly) {
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -self.clone()
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += -rhs;
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        self + (-rhs)
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea.product(eb), ca * cb);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

impl From<BigInt> for LaurentPoly {
    fn from(c: BigInt) -> Self {
        LaurentPoly::constant(c)
    }
}
