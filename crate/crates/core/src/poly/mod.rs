//! Exact multivariate polynomials over the rationals.
//!
//! A [`MultiPoly`] stores a sorted map from dense exponent vectors to nonzero
//! [`BigRational`] coefficients. Variables are addressed by 0-based index; the
//! textual form names them `x1, x2, ...`.

mod diff;
mod parse;
mod symmetric;

pub use diff::DiffOperator;
pub use symmetric::{alternant, complete, elementary, sym_generator, vandermonde, SymKind};

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{dimension, Error, Result};

/// Dense exponent vector, one entry per variable.
pub type Exponent = Vec<u32>;

/// Exact polynomial in a fixed number of variables.
///
/// Polynomials with different variable counts can be combined; the smaller one
/// is embedded by padding its exponents with zeros. Equality follows the same
/// rule, so `x1` in two variables equals `x1` in five.
#[derive(Clone, Debug)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Exponent, BigRational>,
}

pub(crate) fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigRational::one())
    }

    pub fn constant(nvars: usize, c: BigRational) -> Self {
        Self::monomial(vec![0; nvars], c)
    }

    /// The variable with 0-based index `i`.
    pub fn var(i: usize, nvars: usize) -> Self {
        assert!(i < nvars, "variable index {i} out of range for {nvars} variables");
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, BigRational::one())
    }

    pub fn monomial(exponent: Exponent, c: BigRational) -> Self {
        let nvars = exponent.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exponent, c);
        }
        MultiPoly { nvars, terms }
    }

    /// Builds a polynomial from (exponent, coefficient) pairs, merging repeats.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Exponent, BigRational)>,
    {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent length must equal the variable count");
            p.add_term(e, c);
        }
        p
    }

    /// Same as [`MultiPoly::from_terms`] with integer coefficients.
    pub fn from_int_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Exponent, i64)>,
    {
        Self::from_terms(nvars, terms.into_iter().map(|(e, c)| (e, rat(c))))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing lexicographic order of exponents.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &BigRational)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, exponent: Exponent, c: BigRational) {
        debug_assert_eq!(exponent.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exponent) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&exponent);
                }
            }
            None => {
                self.terms.insert(exponent, c);
            }
        }
    }

    /// Embeds into `n` variables. Shrinking is allowed only when the dropped
    /// variables do not occur.
    pub fn with_nvars(&self, n: usize) -> Result<Self> {
        if n == self.nvars {
            return Ok(self.clone());
        }
        if n < self.nvars && self.terms.keys().any(|e| e[n..].iter().any(|&a| a > 0)) {
            return dimension(format!(
                "cannot restrict to {n} variables: a dropped variable occurs"
            ));
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut e2 = e.clone();
                e2.resize(n, 0);
                (e2, c.clone())
            })
            .collect();
        Ok(MultiPoly { nvars: n, terms })
    }

    fn padded(&self, n: usize) -> std::borrow::Cow<'_, MultiPoly> {
        if n == self.nvars {
            std::borrow::Cow::Borrowed(self)
        } else {
            std::borrow::Cow::Owned(self.with_nvars(n).expect("padding never drops variables"))
        }
    }

    /// Number of variables that actually occur, counted up to the last one used.
    pub fn support_nvars(&self) -> usize {
        self.terms
            .keys()
            .map(|e| e.iter().rposition(|&a| a > 0).map_or(0, |p| p + 1))
            .max()
            .unwrap_or(0)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn evaluate(&self, point: &[BigRational]) -> Result<BigRational> {
        if point.len() != self.nvars {
            return dimension(format!(
                "evaluation point has {} coordinates, polynomial has {} variables",
                point.len(),
                self.nvars
            ));
        }
        let mut total = BigRational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &a) in point.iter().zip(e) {
                if a > 0 {
                    t *= num_traits::pow(x.clone(), a as usize);
                }
            }
            total += t;
        }
        Ok(total)
    }

    /// Evaluates at integer coordinates.
    pub fn evaluate_int(&self, point: &[i64]) -> Result<BigRational> {
        let p: Vec<BigRational> = point.iter().map(|&v| rat(v)).collect();
        self.evaluate(&p)
    }

    pub fn coefficient_of(&self, exponent: &[u32]) -> BigRational {
        let mut e = vec![0; self.nvars];
        for (i, &a) in exponent.iter().enumerate() {
            if i < self.nvars {
                e[i] = a;
            } else if a > 0 {
                return BigRational::zero();
            }
        }
        self.terms.get(&e).cloned().unwrap_or_else(BigRational::zero)
    }

    /// The value of a constant polynomial, `None` if some variable occurs.
    pub fn as_constant(&self) -> Option<BigRational> {
        if self.terms.keys().all(|e| e.iter().all(|&a| a == 0)) {
            Some(self.constant_term())
        } else {
            None
        }
    }

    pub fn constant_term(&self) -> BigRational {
        self.coefficient_of(&vec![0; self.nvars])
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|x| x == d),
        }
    }

    pub fn homogeneous_part(&self, d: u32) -> Self {
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.iter().sum::<u32>() == d)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Lexicographically greatest term with `x1 > x2 > ...`.
    pub fn leading_term_lex(&self) -> Option<(&Exponent, &BigRational)> {
        self.terms.iter().next_back()
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// Integer coefficients, or a domain error if some denominator is not 1.
    pub fn integer_terms(&self) -> Result<Vec<(Exponent, BigInt)>> {
        self.terms
            .iter()
            .map(|(e, c)| {
                if c.is_integer() {
                    Ok((e.clone(), c.to_integer()))
                } else {
                    Err(Error::Domain(format!("non-integral coefficient {c}")))
                }
            })
            .collect()
    }

    pub fn all_coefficients_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Iterated partial derivative with respect to the 0-based variable `i`.
    pub fn partial_derivative(&self, i: usize, order: u32) -> Self {
        assert!(i < self.nvars, "variable index out of range");
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[i] < order {
                continue;
            }
            let mut factor = BigInt::one();
            for t in 0..order {
                factor *= BigInt::from(e[i] - t);
            }
            let mut e2 = e.clone();
            e2[i] -= order;
            out.add_term(e2, c * BigRational::from_integer(factor));
        }
        out
    }

    /// Antiderivative in the 0-based variable `i` with zero constant of integration.
    pub fn antiderivative(&self, i: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            e2[i] += 1;
            let d = rat(e2[i] as i64);
            out.add_term(e2, c / d);
        }
        out
    }

    /// Exchanges two variables.
    pub fn swap_variables(&self, i: usize, j: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            e2.swap(i, j);
            out.terms.insert(e2, c.clone());
        }
        out
    }

    pub fn is_symmetric_in(&self, i: usize, j: usize) -> bool {
        self.swap_variables(i, j) == *self
    }

    /// Symmetric under every permutation of its variables.
    pub fn is_symmetric(&self) -> bool {
        (1..self.nvars).all(|i| self.is_symmetric_in(i - 1, i))
    }

    /// Substitutes `value` (a polynomial in the same variables, not involving
    /// variable `i`) for variable `i`.
    pub fn substitute(&self, i: usize, value: &MultiPoly) -> Self {
        let value = value.padded(self.nvars);
        let mut by_power: BTreeMap<u32, MultiPoly> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut rest = e.clone();
            let k = rest[i];
            rest[i] = 0;
            by_power
                .entry(k)
                .or_insert_with(|| MultiPoly::zero(self.nvars))
                .add_term(rest, c.clone());
        }
        let mut out = MultiPoly::zero(self.nvars);
        let mut power = MultiPoly::one(self.nvars);
        let mut current = 0;
        for (k, coeff) in by_power {
            while current < k {
                power = &power * value.as_ref();
                current += 1;
            }
            out = &out + &(&coeff * &power);
        }
        out
    }

    /// Exact quotient `self / divisor`, by lexicographic long division.
    pub fn div_exact(&self, divisor: &MultiPoly) -> Result<MultiPoly> {
        let n = self.nvars.max(divisor.nvars);
        let divisor = divisor.padded(n);
        let (lead_e, lead_c) = match divisor.leading_term_lex() {
            Some((e, c)) => (e.clone(), c.clone()),
            None => return Err(Error::InexactDivision("division by zero polynomial".into())),
        };
        let mut rem = self.padded(n).into_owned();
        let mut quot = MultiPoly::zero(n);
        while let Some((e, c)) = rem.leading_term_lex() {
            if e.iter().zip(&lead_e).any(|(a, b)| a < b) {
                return Err(Error::InexactDivision(format!(
                    "leading monomial {e:?} not divisible by {lead_e:?}"
                )));
            }
            let qe: Exponent = e.iter().zip(&lead_e).map(|(a, b)| a - b).collect();
            let qc = c / &lead_c;
            let step = MultiPoly::monomial(qe.clone(), qc.clone());
            rem = &rem - &(&step * divisor.as_ref());
            quot.add_term(qe, qc);
        }
        Ok(quot)
    }

    /// Renders the polynomial with custom variable names.
    pub fn display_with<'a>(&'a self, names: &'a [&'a str]) -> impl fmt::Display + 'a {
        Rendered { poly: self, names: Names::Given(names) }
    }

    /// Terms ordered for display: higher total degree first, then
    /// lexicographically greater exponents first.
    pub fn display_order(&self) -> Vec<(&Exponent, &BigRational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| {
            let da: u32 = a.0.iter().sum();
            let db: u32 = b.0.iter().sum();
            db.cmp(&da).then_with(|| b.0.cmp(a.0))
        });
        v
    }
}

enum Names<'a> {
    Indexed,
    Given(&'a [&'a str]),
}

struct Rendered<'a> {
    poly: &'a MultiPoly,
    names: Names<'a>,
}

impl fmt::Display for Rendered<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.poly.display_order();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in terms.into_iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            match (idx, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut factors: Vec<String> = Vec::new();
            for (i, &a) in e.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                let name = match &self.names {
                    Names::Indexed => format!("x{}", i + 1),
                    Names::Given(ns) => ns.get(i).map_or_else(|| format!("x{}", i + 1), |s| s.to_string()),
                };
                factors.push(if a == 1 { name } else { format!("{name}^{a}") });
            }
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                write!(f, "{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Rendered { poly: self, names: Names::Indexed }.fmt(f)
    }
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        if self.nvars == other.nvars {
            return self.terms == other.terms;
        }
        let n = self.nvars.max(other.nvars);
        self.padded(n).terms == other.padded(n).terms
    }
}

impl Eq for MultiPoly {}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let n = self.nvars.max(rhs.nvars);
        let mut out = self.padded(n).into_owned();
        for (e, c) in &rhs.padded(n).terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let n = self.nvars.max(rhs.nvars);
        let mut out = self.padded(n).into_owned();
        for (e, c) in &rhs.padded(n).terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect(),
        }
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let n = self.nvars.max(rhs.nvars);
        let a = self.padded(n);
        let b = rhs.padded(n);
        let mut acc: BTreeMap<Exponent, BigRational> = BTreeMap::new();
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let e: Exponent = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                *acc.entry(e).or_insert_with(BigRational::zero) += ca * cb;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        MultiPoly { nvars: n, terms: acc }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
