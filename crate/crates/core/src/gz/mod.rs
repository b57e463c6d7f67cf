//! Gelfand–Zetlin patterns, Kogan faces and Demazure characters.
//!
//! A pattern has rows `0..n`; row 0 is `λ` and row `i` has `n - i` entries
//! `x_{i,1}, ..., x_{i,n-i}` with `x_{i-1,j} <= x_{i,j} <= x_{i-1,j+1}`.

mod volume;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use crate::comb::{reduced_subwords, Permutation, ReducedWord};
use crate::error::{domain, Error, Result};

pub use volume::{face_volume, flag_schubert_degree, gz_volume_polynomial, kp_pairing};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn new(entries: Vec<i64>) -> Self {
        Weight(entries)
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn is_weakly_increasing(&self) -> bool {
        self.0.windows(2).all(|p| p[0] <= p[1])
    }

    pub fn is_strict(&self) -> bool {
        self.0.windows(2).all(|p| p[0] < p[1])
    }

    pub fn scaled(&self, m: i64) -> Weight {
        Weight(self.0.iter().map(|&a| a * m).collect())
    }

    pub(crate) fn require_weak(&self) -> Result<()> {
        if self.0.is_empty() || !self.is_weakly_increasing() {
            return domain(format!("weight {self} must be nonempty and weakly increasing"));
        }
        Ok(())
    }

    pub(crate) fn require_strict(&self) -> Result<()> {
        if self.0.is_empty() || !self.is_strict() {
            return domain(format!("weight {self} must be strictly increasing"));
        }
        Ok(())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|a| a.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for Weight {
    type Err = Error;

    /// `0,1,2` or `(0,1,2)`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
        if inner.trim().is_empty() {
            return Err(Error::Parse(format!("empty weight {s:?}")));
        }
        inner
            .split(',')
            .map(|t| t.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad weight entry {t:?} in {s:?}"))))
            .collect::<Result<Vec<_>>>()
            .map(Weight)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GzPattern {
    rows: Vec<Vec<i64>>,
}

impl GzPattern {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rows.first().map_or(0, |r| r.len());
        if n == 0 || rows.len() != n || rows.iter().enumerate().any(|(i, r)| r.len() != n - i) {
            return domain("pattern rows must have lengths n, n-1, ..., 1");
        }
        for i in 1..n {
            for j in 0..n - i {
                let (a, c, b) = (rows[i - 1][j], rows[i][j], rows[i - 1][j + 1]);
                if !(a <= c && c <= b) {
                    return domain(format!("interlacing fails at x_{},{}", i, j + 1));
                }
            }
        }
        Ok(GzPattern { rows })
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn lambda(&self) -> Weight {
        Weight(self.rows[0].clone())
    }

    /// `x_{i,j}` with `j` 1-based; `i = 0` is the top row.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.rows[i][j - 1]
    }

    /// Entries below the top row, row by row.
    pub fn coordinates(&self) -> Vec<i64> {
        self.rows[1..].iter().flatten().copied().collect()
    }
}

impl fmt::Display for GzPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "{}", rows.join(" | "))
    }
}

/// Weyl dimension `∏_{i<j} (λ_j - λ_i + j - i) / (j - i)`.
pub fn weyl_dimension(lambda: &Weight) -> BigUint {
    let l = lambda.entries();
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..l.len() {
        for j in i + 1..l.len() {
            let v = l[j] - l[i] + (j - i) as i64;
            assert!(v > 0, "Weyl dimension needs a weakly increasing weight");
            num *= v as u64;
            den *= (j - i) as u64;
        }
    }
    num / den
}

fn enumerate(lambda: &Weight, fixed: &BTreeSet<(usize, usize)>) -> Vec<GzPattern> {
    let n = lambda.n();
    let mut rows: Vec<Vec<i64>> = (0..n).map(|i| vec![0; n - i]).collect();
    rows[0] = lambda.entries().to_vec();
    let cells: Vec<(usize, usize)> = (1..n).flat_map(|i| (1..=n - i).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    fn rec(k: usize, cells: &[(usize, usize)], fixed: &BTreeSet<(usize, usize)>, rows: &mut Vec<Vec<i64>>, out: &mut Vec<GzPattern>) {
        if k == cells.len() {
            out.push(GzPattern { rows: rows.clone() });
            return;
        }
        let (i, j) = cells[k];
        let lo = rows[i - 1][j - 1];
        let hi = if fixed.contains(&(i, j)) { lo } else { rows[i - 1][j] };
        for v in lo..=hi {
            rows[i][j - 1] = v;
            rec(k + 1, cells, fixed, rows, out);
        }
    }
    rec(0, &cells, fixed, &mut rows, &mut out);
    out
}

/// Integer points of `GZ(λ)` in row-major lexicographic order.
pub fn gz_lattice_points(lambda: &Weight) -> Result<Vec<GzPattern>> {
    lambda.require_weak()?;
    let pts = enumerate(lambda, &BTreeSet::new());
    assert_eq!(BigUint::from(pts.len()), weyl_dimension(lambda), "point count must equal the Weyl dimension");
    Ok(pts)
}

/// `π(x)_k = Σ row_{n-k} - Σ row_{n-k+1}`, with the empty row `n` summing to 0.
pub fn projection_pi(p: &GzPattern) -> Weight {
    let n = p.n();
    let sum = |i: usize| if i >= n { 0 } else { p.rows[i].iter().sum::<i64>() };
    Weight((1..=n).map(|k| sum(n - k) - sum(n - k + 1)).collect())
}

/// Intersection of facets `x_{i,j} = x_{i-1,j}`, `i + j <= n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct KoganFace {
    n: usize,
    equalities: BTreeSet<(usize, usize)>,
}

impl KoganFace {
    pub fn new(n: usize, equalities: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let equalities: BTreeSet<_> = equalities.into_iter().collect();
        if let Some(&(i, j)) = equalities.iter().find(|&&(i, j)| i < 1 || j < 1 || i + j > n) {
            return domain(format!("equality at ({i},{j}) is outside the GZ triangle of size {n}"));
        }
        Ok(KoganFace { n, equalities })
    }

    pub fn full(n: usize) -> Self {
        KoganFace { n, equalities: BTreeSet::new() }
    }

    /// All equalities at once: the vertex `x_{i,j} = λ_j`.
    pub fn vertex(n: usize) -> Self {
        KoganFace { n, equalities: (1..n).flat_map(|i| (1..=n - i).map(move |j| (i, j))).collect() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn equalities(&self) -> &BTreeSet<(usize, usize)> {
        &self.equalities
    }

    pub fn codimension(&self) -> usize {
        self.equalities.len()
    }

    pub fn is_reduced(&self) -> bool {
        kogan_face_word(self).is_reduced(self.n.max(1))
    }

    /// `w(F)` when the face is reduced.
    pub fn permutation(&self) -> Option<Permutation> {
        let word = kogan_face_word(self);
        if !word.is_reduced(self.n.max(1)) {
            return None;
        }
        word.product(self.n.max(1)).ok()
    }
}

impl fmt::Display for KoganFace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let eqs: Vec<String> = self
            .equalities
            .iter()
            .map(|&(i, j)| if i == 1 { format!("x{i}{j}=l{j}") } else { format!("x{i}{j}=x{}{j}", i - 1) })
            .collect();
        write!(f, "{{{}}}", eqs.join(", "))
    }
}

/// Equality positions in reading order: bottom row first, left to right within a row.
fn reading_order(n: usize) -> Vec<(usize, usize)> {
    (1..n).rev().flat_map(|i| (1..=n - i).map(move |j| (i, j))).collect()
}

/// Labels `s_{i+j-1}` read from bottom to top, left to right.
pub fn kogan_face_word(face: &KoganFace) -> ReducedWord {
    ReducedWord::new(
        reading_order(face.n).into_iter().filter(|p| face.equalities.contains(p)).map(|(i, j)| i + j - 1).collect(),
    )
}

/// Reduced Kogan faces whose word multiplies to `w`, sorted.
pub fn enumerate_reduced_kogan_faces(w: &Permutation) -> Vec<KoganFace> {
    let n = w.n();
    let cells = reading_order(n);
    let letters: Vec<usize> = cells.iter().map(|&(i, j)| i + j - 1).collect();
    let mut faces: Vec<KoganFace> = reduced_subwords(w, &letters)
        .into_iter()
        .map(|idx| KoganFace { n, equalities: idx.into_iter().map(|k| cells[k]).collect() })
        .collect();
    faces.sort();
    faces
}

/// Integer points of `GZ(λ)` on the face.
pub fn face_lattice_points(face: &KoganFace, lambda: &Weight) -> Result<Vec<GzPattern>> {
    lambda.require_weak()?;
    if lambda.n() != face.n {
        return domain(format!("face lives in GZ of size {}, weight has {} entries", face.n, lambda.n()));
    }
    Ok(enumerate(lambda, &face.equalities))
}

/// Weight multiplicities `Σ e^μ`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FormalCharacter {
    terms: BTreeMap<Weight, u64>,
}

impl FormalCharacter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, mu: Weight, m: u64) {
        if m > 0 {
            *self.terms.entry(mu).or_insert(0) += m;
        }
    }

    pub fn multiplicity(&self, mu: &Weight) -> u64 {
        self.terms.get(mu).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, &u64)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Value at 1.
    pub fn dimension(&self) -> u64 {
        self.terms.values().sum()
    }

    /// Invariance under permuting weight coordinates.
    pub fn is_symmetric(&self) -> bool {
        self.terms.iter().all(|(mu, &m)| {
            (1..mu.n()).all(|i| {
                let mut sw = mu.clone();
                sw.0.swap(i - 1, i);
                self.multiplicity(&sw) == m
            })
        })
    }

    /// Lattice character of a set of patterns.
    pub fn of_points<'a>(points: impl IntoIterator<Item = &'a GzPattern>) -> Self {
        let mut ch = Self::new();
        for p in points {
            ch.add(projection_pi(p), 1);
        }
        ch
    }
}

impl fmt::Display for FormalCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(mu, &m)| if m == 1 { format!("e^{mu}") } else { format!("{m}*e^{mu}") })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Integer points on the union of the reduced Kogan faces of `w`, deduplicated.
pub fn demazure_points(w: &Permutation, lambda: &Weight) -> Result<BTreeSet<GzPattern>> {
    lambda.require_strict()?;
    if lambda.n() != w.n() {
        return domain(format!("{w} and {lambda} have different sizes"));
    }
    let mut union = BTreeSet::new();
    for face in enumerate_reduced_kogan_faces(w) {
        union.extend(face_lattice_points(&face, lambda)?);
    }
    Ok(union)
}

/// `ch D_w(λ)` as the lattice character of the union of reduced Kogan faces.
pub fn demazure_character(w: &Permutation, lambda: &Weight) -> Result<FormalCharacter> {
    Ok(FormalCharacter::of_points(&demazure_points(w, lambda)?))
}
