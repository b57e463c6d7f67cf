use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{dimension, domain, Error, Result};
use crate::poly::MultiPoly;

/// Integer partition, stored with trailing zeros removed.
///
/// The ordering is graded: smaller partitions first, and within one size the
/// lexicographically larger part sequence first, so `(2) < (1,1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Panics if `parts` is not weakly decreasing; see [`Partition::try_new`].
    pub fn new(parts: Vec<u32>) -> Self {
        Self::try_new(parts).expect("parts must be weakly decreasing")
    }

    pub fn try_new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return domain(format!("{parts:?} is not weakly decreasing"));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// One-row partition `(m)`.
    pub fn row(m: u32) -> Self {
        Partition::new(vec![m])
    }

    /// One-column partition `(1^m)`.
    pub fn column(m: usize) -> Self {
        Partition::new(vec![1; m])
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn fits(&self, rect: Rect) -> bool {
        self.len() <= rect.rows && self.part(0) <= rect.cols
    }

    /// Diagram inclusion `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0);
        Partition::new((0..cols).map(|c| self.parts.iter().filter(|&&p| p > c).count() as u32).collect())
    }

    /// Hook lengths `arm + leg + 1`, row by row.
    pub fn hooks(&self) -> Vec<u32> {
        let conj = self.conjugate();
        let mut out = Vec::with_capacity(self.size() as usize);
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row {
                let arm = row - j - 1;
                let leg = conj.part(j as usize) - i as u32 - 1;
                out.push(arm + leg + 1);
            }
        }
        out
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size().cmp(&other.size()).then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `[2,1]`, `2,1`, `[]` and the empty string.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let t = t.strip_prefix('[').and_then(|u| u.strip_suffix(']')).unwrap_or(t);
        if t.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = t
            .split(',')
            .map(|p| p.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad partition literal {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::try_new(parts).map_err(|_| Error::Parse(format!("partition {s:?} is not weakly decreasing")))
    }
}

/// A `rows × cols` rectangle; in Grassmannian use `rows = k`, `cols = n - k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Rect {
    pub rows: usize,
    pub cols: u32,
}

impl Rect {
    pub fn new(rows: usize, cols: u32) -> Self {
        Rect { rows, cols }
    }

    /// The `k × (n-k)` frame of `Gr(k, n)`.
    pub fn grassmannian(k: usize, n: usize) -> Result<Self> {
        if k == 0 || k > n {
            return domain(format!("Gr({k},{n}) needs 1 <= k <= n"));
        }
        Ok(Rect { rows: k, cols: (n - k) as u32 })
    }

    pub fn area(&self) -> u32 {
        self.rows as u32 * self.cols
    }

    pub fn full(&self) -> Partition {
        Partition::new(vec![self.cols; self.rows])
    }
}

/// All partitions fitting in `rect`, in the graded order of [`Partition`].
pub fn partitions_in_box(rect: Rect) -> Vec<Partition> {
    fn rec(rows_left: usize, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        out.push(Partition::new(cur.clone()));
        if rows_left == 0 {
            return;
        }
        for p in 1..=max {
            cur.push(p);
            rec(rows_left - 1, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(rect.rows, rect.cols, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// The complement `λ̂_i = cols - λ_{rows+1-i}` of `lambda` inside `rect`.
pub fn complement(lambda: &Partition, rect: Rect) -> Result<Partition> {
    if !lambda.fits(rect) {
        return dimension(format!("{lambda} does not fit in a {}x{} box", rect.rows, rect.cols));
    }
    Ok(Partition::new((0..rect.rows).map(|i| rect.cols - lambda.part(rect.rows - 1 - i)).collect()))
}

/// `true` iff `lambda ⊆ mu` as diagrams.
pub fn contains(mu: &Partition, lambda: &Partition) -> bool {
    mu.contains(lambda)
}

fn factorial(n: u32) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

pub fn binomial(n: u32, k: u32) -> BigUint {
    if k > n {
        return BigUint::default();
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// Hook lengths and the number of standard tableaux `|λ|! / ∏ h(s)`.
pub fn hooks_and_syt_count(lambda: &Partition) -> (Vec<u32>, BigUint) {
    let hooks = lambda.hooks();
    let denom = hooks.iter().fold(BigUint::one(), |acc, &h| acc * h);
    let num = factorial(lambda.size());
    assert!((&num % &denom) == BigUint::default(), "hook quotient must be integral");
    (hooks, num / denom)
}

/// Gaussian binomial `[n choose k]_q` as a polynomial in one variable.
pub fn q_binomial(n: u32, k: u32) -> Result<MultiPoly> {
    if k > n {
        return domain(format!("q-binomial needs k <= n, got n={n}, k={k}"));
    }
    let q_pow = |a: u32| MultiPoly::monomial(vec![a], crate::poly::rat(1));
    let mut num = MultiPoly::one(1);
    let mut den = MultiPoly::one(1);
    for i in 0..k {
        num = &num * &(&q_pow(n) - &q_pow(i));
        den = &den * &(&q_pow(k) - &q_pow(i));
    }
    num.div_exact(&den)
}
