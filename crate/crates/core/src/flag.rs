//! The Schubert basis of `H*(Fl(n))` and Schubert polynomials.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::comb::Permutation;
use crate::error::{dimension, domain, Result};
use crate::poly::{rat, MultiPoly};

/// Integer combination of classes `σ_w`, `w ∈ S_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlClassSum {
    n: usize,
    terms: BTreeMap<Permutation, BigInt>,
}

impl FlClassSum {
    pub fn zero(n: usize) -> Self {
        FlClassSum { n, terms: BTreeMap::new() }
    }

    pub fn basis(w: Permutation) -> Self {
        let mut x = Self::zero(w.n());
        x.terms.insert(w, BigInt::one());
        x
    }

    pub fn one(n: usize) -> Self {
        Self::basis(Permutation::identity(n))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add(&mut self, w: Permutation, c: BigInt) -> Result<()> {
        if w.n() != self.n {
            return dimension(format!("{w} is not in S_{}", self.n));
        }
        if c.is_zero() {
            return Ok(());
        }
        let e = self.terms.entry(w.clone()).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&w);
        }
        Ok(())
    }

    pub fn get(&self, w: &Permutation) -> BigInt {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Permutation, &BigInt)> {
        self.terms.iter()
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

    /// `Σ c_w 𝔖_w` in `n` variables.
    pub fn to_polynomial(&self) -> MultiPoly {
        let mut out = MultiPoly::zero(self.n);
        for (w, c) in self.iter() {
            out = &out + &schubert_polynomial(w).poly.scale(&BigRational::from_integer(c.clone()));
        }
        out
    }
}

/// `𝔖_w` together with its index. The polynomial carries `n` variables even
/// though `x_n` never occurs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchubertPoly {
    pub w: Permutation,
    pub poly: MultiPoly,
}

/// `x_1^{n-1} x_2^{n-2} ... x_{n-1}` in `n` variables.
pub fn staircase(n: usize) -> MultiPoly {
    let e = (0..n).map(|i| (n - 1 - i) as u32).collect();
    MultiPoly::monomial(e, rat(1))
}

fn cache() -> &'static Mutex<HashMap<Permutation, MultiPoly>> {
    static CACHE: OnceLock<Mutex<HashMap<Permutation, MultiPoly>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `𝔖_w = ∂_{i_l} ... ∂_{i_1}(x_1^{n-1} ... x_{n-1})` where `w_0 w = s_{i_1} ... s_{i_l}`,
/// evaluated along two reduced words of `w_0 w` when they differ.
pub fn schubert_polynomial(w: &Permutation) -> SchubertPoly {
    if let Some(p) = cache().lock().unwrap().get(w) {
        return SchubertPoly { w: w.clone(), poly: p.clone() };
    }
    let n = w.n();
    let v = Permutation::longest(n).compose(w).expect("same n");
    let top = staircase(n);
    // ∂_{i_1} acts first
    let apply = |letters: &[usize]| letters.iter().fold(top.clone(), |f, &i| f.divided_difference(i));
    let first = v.reduced_word();
    let poly = apply(&first.letters);
    let second = v.reduced_word_smallest_descent();
    if second != first {
        let other = apply(&second.letters);
        assert_eq!(poly, other, "𝔖_{w} depends on the reduced word");
    }
    check_schubert(w, &poly);
    cache().lock().unwrap().insert(w.clone(), poly.clone());
    SchubertPoly { w: w.clone(), poly }
}

fn check_schubert(w: &Permutation, poly: &MultiPoly) {
    let n = w.n();
    let l = w.length() as u32;
    assert!(poly.terms().all(|(e, _)| e.iter().sum::<u32>() == l), "𝔖_{w} is not homogeneous of degree {l}");
    assert!(
        poly.terms().all(|(e, _)| e.iter().enumerate().all(|(i, &a)| a as usize + i < n)),
        "𝔖_{w} leaves the staircase span"
    );
    assert!(poly.all_coefficients_nonnegative(), "𝔖_{w} has a negative coefficient");
}

/// Coefficients `c_u` of `f = Σ c_u 𝔖_u` for `u ∈ S_n` with `ℓ(u) <= max_len`.
///
/// `c_u` is the constant term of `∂_u f`. The operators `∂_u` are built one
/// left multiplication at a time: `∂_{s_a u} = ∂_a ∂_u` when `ℓ(s_a u) > ℓ(u)`.
fn expansion_by_extraction(f: &MultiPoly, n: usize, max_len: usize) -> BTreeMap<Permutation, BigRational> {
    let f = f.with_nvars(n.max(f.nvars())).expect("padding");
    let mut out = BTreeMap::new();
    let mut level: BTreeMap<Permutation, MultiPoly> = BTreeMap::new();
    level.insert(Permutation::identity(n), f);
    for len in 0..=max_len {
        for (u, h) in &level {
            let c = h.constant_term();
            if !c.is_zero() {
                out.insert(u.clone(), c);
            }
        }
        if len == max_len {
            break;
        }
        let mut next = BTreeMap::new();
        for (u, h) in &level {
            let inv = u.inverse();
            for a in 1..n {
                // ℓ(s_a u) > ℓ(u) iff a appears before a + 1 in u
                if inv.image(a) < inv.image(a + 1) {
                    let su = u.simple_mul(a);
                    if next.contains_key(&su) {
                        continue;
                    }
                    let g = h.divided_difference(a);
                    if !g.is_zero() {
                        next.insert(su, g);
                    }
                }
            }
        }
        if next.is_empty() {
            break;
        }
        level = next;
    }
    out
}

/// Expansion `f = Σ c_u 𝔖_u` over `u ∈ S_m`. Exact as a polynomial identity
/// once `m` is large enough for the support of `f`.
pub fn schubert_expansion(f: &MultiPoly, m: usize) -> Result<BTreeMap<Permutation, BigRational>> {
    if f.support_nvars() > m {
        return dimension(format!("polynomial uses more than {m} variables"));
    }
    let max_len = (f.degree().unwrap_or(0) as usize).min(m * m.saturating_sub(1) / 2);
    Ok(expansion_by_extraction(f, m, max_len))
}

/// `x · σ_{s_i}` by Monk's rule.
pub fn monk_multiply(x: &FlClassSum, i: usize) -> Result<FlClassSum> {
    let n = x.n;
    if i < 1 || i >= n {
        return domain(format!("Monk index {i} outside 1..{n}"));
    }
    let mut out = FlClassSum::zero(n);
    for (w, c) in x.iter() {
        let l = w.length();
        for j in 1..=i {
            for k in i + 1..=n {
                let u = w.compose(&Permutation::transposition(j, k, n))?;
                if u.length() == l + 1 {
                    out.add(u, c.clone())?;
                }
            }
        }
    }
    Ok(out)
}

/// Ring product in `H*(Fl(n))`.
pub fn flag_product(x: &FlClassSum, y: &FlClassSum) -> Result<FlClassSum> {
    if x.n != y.n {
        return dimension(format!("cannot multiply classes of Fl({}) and Fl({})", x.n, y.n));
    }
    let n = x.n;
    let top = n * n.saturating_sub(1) / 2;
    let mut out = FlClassSum::zero(n);
    for (w, a) in x.iter() {
        for (v, b) in y.iter() {
            let d = w.length() + v.length();
            if d > top {
                continue;
            }
            let f = &schubert_polynomial(w).poly * &schubert_polynomial(v).poly;
            for (u, c) in expansion_by_extraction(&f, n, d) {
                debug_assert_eq!(u.length(), d);
                assert!(c.is_integer(), "non-integral structure constant");
                out.add(u, a * b * c.to_integer())?;
            }
        }
    }
    Ok(out)
}

/// `Σ_{w ∈ S_n} q^{ℓ(w)} = ∏_{i<=n} (1 - q^i) / (1 - q)^n`.
pub fn flag_poincare(n: usize) -> Result<MultiPoly> {
    if n < 1 {
        return domain("flag_poincare needs n >= 1");
    }
    let q = MultiPoly::var(0, 1);
    let one = MultiPoly::one(1);
    let mut num = one.clone();
    let mut den = one.clone();
    for i in 1..=n as u32 {
        num = &num * &(&one - &q.pow(i));
        den = &den * &(&one - &q);
    }
    let p = num.div_exact(&den)?;
    if n <= 7 {
        let mut lengths = MultiPoly::zero(1);
        for w in Permutation::all(n) {
            lengths.add_term(vec![w.length() as u32], rat(1));
        }
        assert_eq!(p, lengths, "length generating function disagrees");
    }
    Ok(p)
}

/// Whether `𝔖_{w × 1}` in `S_{n+1}` equals `𝔖_w` in `S_n`.
pub fn stability_check(w: &Permutation, n: usize) -> Result<bool> {
    if w.n() != n {
        return dimension(format!("{w} is not in S_{n}"));
    }
    Ok(schubert_polynomial(&w.embed()).poly == schubert_polynomial(w).poly)
}

/// Representative of `f` modulo the ideal generated by symmetric polynomials
/// without constant term, as a combination of `𝔖_u`, `u ∈ S_n`.
pub fn borel_quotient_residue(f: &MultiPoly, n: usize) -> Result<MultiPoly> {
    if f.support_nvars() > n {
        return dimension(format!("polynomial uses more than {n} variables"));
    }
    let max_len = (f.degree().unwrap_or(0) as usize).min(n * n.saturating_sub(1) / 2);
    let mut out = MultiPoly::zero(n);
    for (u, c) in expansion_by_extraction(f, n, max_len) {
        out = &out + &schubert_polynomial(&u).poly.scale(&c);
    }
    Ok(out)
}
