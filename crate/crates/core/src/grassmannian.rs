//! The Schubert basis of `H*(Gr(k, n))`.
//!
//! Products go through symmetric functions: `s_λ · s_μ` is expanded in `k`
//! variables and partitions leaving the `k × (n-k)` box are dropped. The Pieri
//! rule is implemented separately and serves as a cross-check.

use std::collections::{BTreeMap, HashMap};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::comb::{complement, hooks_and_syt_count, partitions_in_box, q_binomial, Partition, Rect};
use crate::error::{dimension, domain, Result};
use crate::poly::{rat, MultiPoly};
use crate::schur::{lr_expansion, pieri_partition_set, PieriKind};

/// Integer combination of Schubert classes `σ_λ` in `H*(Gr(k, n))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrClassSum {
    rect: Rect,
    terms: BTreeMap<Partition, BigInt>,
}

impl GrClassSum {
    pub fn zero(rect: Rect) -> Self {
        GrClassSum { rect, terms: BTreeMap::new() }
    }

    /// The class `σ_λ`.
    pub fn basis(rect: Rect, lambda: Partition) -> Result<Self> {
        let mut x = Self::zero(rect);
        x.add(lambda, BigInt::one())?;
        Ok(x)
    }

    /// The special class `σ_m = σ_{(m)}`.
    pub fn special(rect: Rect, m: u32) -> Result<Self> {
        Self::basis(rect, Partition::row(m))
    }

    pub fn one(rect: Rect) -> Self {
        Self::basis(rect, Partition::empty()).expect("empty partition fits every box")
    }

    pub fn point(rect: Rect) -> Self {
        Self::basis(rect, rect.full()).expect("full box fits")
    }

    pub fn rect(&self) -> Rect {
        self.rect
    }

    pub fn add(&mut self, lambda: Partition, c: BigInt) -> Result<()> {
        if !lambda.fits(self.rect) {
            return dimension(format!("{lambda} does not fit in a {}x{} box", self.rect.rows, self.rect.cols));
        }
        if c.is_zero() {
            return Ok(());
        }
        let e = self.terms.entry(lambda.clone()).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&lambda);
        }
        Ok(())
    }

    pub fn get(&self, lambda: &Partition) -> BigInt {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn plus(&mut self, other: &GrClassSum, scale: &BigInt) {
        for (p, c) in &other.terms {
            self.add(p.clone(), c * scale).expect("same box");
        }
    }
}

/// `x · σ_m` by the Pieri rule.
pub fn pieri_multiply(x: &GrClassSum, m: u32) -> Result<GrClassSum> {
    if m > x.rect.cols {
        return domain(format!("σ_{m} does not exist in a box with {} columns", x.rect.cols));
    }
    let mut out = GrClassSum::zero(x.rect);
    for (lambda, c) in x.iter() {
        for nu in pieri_partition_set(lambda, m, PieriKind::Row) {
            if nu.fits(x.rect) {
                out.add(nu, c.clone())?;
            }
        }
    }
    Ok(out)
}

/// Ring product in `H*(Gr(k, n))`.
pub fn gr_product(x: &GrClassSum, y: &GrClassSum) -> Result<GrClassSum> {
    if x.rect != y.rect {
        return dimension("classes live in different Grassmannians");
    }
    let rect = x.rect;
    let mut out = GrClassSum::zero(rect);
    let mut cache: HashMap<(Partition, Partition), GrClassSum> = HashMap::new();
    for (a, ca) in x.iter() {
        for (b, cb) in y.iter() {
            let key = if a <= b { (a.clone(), b.clone()) } else { (b.clone(), a.clone()) };
            let basis_product = cache.entry(key).or_insert_with_key(|(l, m)| basis_product(rect, l, m));
            out.plus(basis_product, &(ca * cb));
        }
    }
    Ok(out)
}

fn basis_product(rect: Rect, lambda: &Partition, mu: &Partition) -> GrClassSum {
    let mut out = GrClassSum::zero(rect);
    if lambda.size() + mu.size() > rect.area() {
        return out;
    }
    // s_ν with more than k rows vanish in k variables, which is exactly φ_{k,n}
    // on the row side; the column bound is imposed by hand.
    for (nu, c) in lr_expansion(lambda, mu, rect.rows).iter() {
        if nu.fits(rect) {
            out.add(nu.clone(), c.clone()).expect("fits");
        }
    }
    out
}

/// Intersection numbers `⟨σ_λ σ_μ, [pt]⟩` for all `λ, μ` in the box.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingMatrix {
    pub index: Vec<Partition>,
    pub entries: Vec<Vec<BigInt>>,
}

impl PairingMatrix {
    /// `true` iff the entry at `(λ, μ)` is `[μ = λ̂]`.
    pub fn is_complement_permutation(&self, rect: Rect) -> bool {
        self.index.iter().enumerate().all(|(i, l)| {
            let hat = complement(l, rect).expect("index fits");
            self.index
                .iter()
                .enumerate()
                .all(|(j, m)| self.entries[i][j] == if *m == hat { BigInt::one() } else { BigInt::zero() })
        })
    }
}

/// Coefficient of the point class in every product `σ_λ · σ_μ`; checked to
/// be the complement permutation.
pub fn duality_pairing(k: usize, n: usize) -> Result<PairingMatrix> {
    let rect = Rect::grassmannian(k, n)?;
    let index = partitions_in_box(rect);
    let full = rect.full();
    let mut entries = vec![vec![BigInt::zero(); index.len()]; index.len()];
    for (i, l) in index.iter().enumerate() {
        for (j, m) in index.iter().enumerate() {
            if l.size() + m.size() != rect.area() {
                continue;
            }
            let prod = gr_product(&GrClassSum::basis(rect, l.clone())?, &GrClassSum::basis(rect, m.clone())?)?;
            entries[i][j] = prod.get(&full);
        }
    }
    let matrix = PairingMatrix { index, entries };
    assert!(matrix.is_complement_permutation(rect), "Schubert classes must be self-dual");
    Ok(matrix)
}

/// Poincaré polynomial `Σ_{λ ⊆ box} q^{|λ|}`, checked against `[n choose k]_q`.
pub fn gr_poincare(k: usize, n: usize) -> Result<MultiPoly> {
    let rect = Rect::grassmannian(k, n)?;
    let mut cells = MultiPoly::zero(1);
    for l in partitions_in_box(rect) {
        cells.add_term(vec![l.size()], rat(1));
    }
    let qb = q_binomial(n as u32, k as u32)?;
    assert_eq!(cells, qb, "cell count must match the Gaussian binomial");
    Ok(qb)
}

/// Degree of `X_λ` under the Plücker embedding: `#SYT(λ̂)`.
pub fn schubert_degree_gr(lambda: &Partition, k: usize, n: usize) -> Result<BigUint> {
    let rect = Rect::grassmannian(k, n)?;
    let hat = complement(lambda, rect)?;
    let deg = hooks_and_syt_count(&hat).1;
    if lambda.is_empty() {
        assert_eq!(deg, grassmannian_degree(k, n), "hook-length and closed formula disagree");
    }
    Ok(deg)
}

/// `(k(n-k))! · ∏_{i<k} i! / (n-k+i)!`.
pub fn grassmannian_degree(k: usize, n: usize) -> BigUint {
    let fact = |m: usize| (1..=m).fold(BigUint::one(), |acc, i| acc * i);
    let mut num = fact(k * (n - k));
    let mut den = BigUint::one();
    for i in 0..k {
        num *= fact(i);
        den *= fact(n - k + i);
    }
    assert!((&num % &den).is_zero());
    num / den
}

/// The three-term relation `p_ij p_kl - p_ik p_jl + p_il p_jk` for `i < j < k < l` (1-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PluckerRelation {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub l: usize,
}

/// Position of `p_ab` (`a < b`, 1-based) in the lexicographic coordinate list.
pub fn plucker_index(a: usize, b: usize, n: usize) -> usize {
    debug_assert!(a < b && b <= n);
    (1..a).map(|r| n - r).sum::<usize>() + (b - a - 1)
}

impl PluckerRelation {
    /// As a quadratic form in the `binomial(n, 2)` coordinates.
    pub fn to_poly(&self, n: usize) -> MultiPoly {
        let m = n * (n - 1) / 2;
        let quad = |a: (usize, usize), b: (usize, usize), c: i64| {
            let mut e = vec![0u32; m];
            e[plucker_index(a.0, a.1, n)] += 1;
            e[plucker_index(b.0, b.1, n)] += 1;
            (e, c)
        };
        let (i, j, k, l) = (self.i, self.j, self.k, self.l);
        MultiPoly::from_int_terms(m, [quad((i, j), (k, l), 1), quad((i, k), (j, l), -1), quad((i, l), (j, k), 1)])
    }

    pub fn evaluate(&self, coords: &[BigRational], n: usize) -> BigRational {
        let p = |a, b| &coords[plucker_index(a, b, n)];
        let (i, j, k, l) = (self.i, self.j, self.k, self.l);
        p(i, j) * p(k, l) - p(i, k) * p(j, l) + p(i, l) * p(j, k)
    }
}

/// All `binomial(n, 4)` Plücker quadrics of `Gr(2, n)`.
pub fn plucker_quadrics_k2(n: usize) -> Vec<PluckerRelation> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            for k in j + 1..=n {
                for l in k + 1..=n {
                    out.push(PluckerRelation { i, j, k, l });
                }
            }
        }
    }
    out
}

/// Whether `ω = Σ p_ij e_i ∧ e_j` is decomposable, i.e. `ω ∧ ω = 0`.
pub fn is_decomposable(coords: &[BigRational], n: usize) -> Result<bool> {
    if coords.len() != n * (n.saturating_sub(1)) / 2 {
        return dimension(format!("expected {} Plücker coordinates, got {}", n * (n - 1) / 2, coords.len()));
    }
    Ok(plucker_quadrics_k2(n).iter().all(|r| r.evaluate(coords, n).is_zero()))
}
