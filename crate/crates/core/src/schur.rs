//! Schur polynomials, Pieri sets and Littlewood–Richardson coefficients.
//!
//! Two independent constructions of `s_λ` are provided (bialternant quotient
//! and tableau sum). Expansion into the Schur basis peels off lex-leading
//! monomials: the lex-leading monomial of `s_ν` is `x^ν`.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::comb::{ssyt_enumerate, Partition};
use crate::error::{domain, Error, Result};
use crate::poly::{alternant, rat, MultiPoly};

/// Integer combination of Schur functions indexed by partitions.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SchurExpansion {
    terms: BTreeMap<Partition, BigInt>,
}

impl SchurExpansion {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, lambda: Partition, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(lambda.clone()).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&lambda);
        }
    }

    /// Coefficient of `s_λ` (zero if absent).
    pub fn get(&self, lambda: &Partition) -> BigInt {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn into_terms(self) -> BTreeMap<Partition, BigInt> {
        self.terms
    }
}

impl FromIterator<(Partition, BigInt)> for SchurExpansion {
    fn from_iter<I: IntoIterator<Item = (Partition, BigInt)>>(iter: I) -> Self {
        let mut e = SchurExpansion::new();
        for (p, c) in iter {
            e.add(p, c);
        }
        e
    }
}

/// `s_λ = a_{λ+δ} / a_δ` in `k` variables.
pub fn schur_bialternant(lambda: &Partition, k: usize) -> Result<MultiPoly> {
    let num = alternant(lambda, k)?;
    let den = alternant(&Partition::empty(), k)?;
    num.div_exact(&den)
}

/// `s_λ = Σ_T x^T` over semistandard tableaux with entries in `1..=k`.
pub fn schur_ssyt(lambda: &Partition, k: usize) -> MultiPoly {
    let mut out = MultiPoly::zero(k);
    for t in ssyt_enumerate(lambda, k) {
        out.add_term(t.content(k), rat(1));
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PieriKind {
    /// Horizontal strips: no two added boxes in one column (`λ ⊗ m`).
    Row,
    /// Vertical strips: no two added boxes in one row (`λ ⊗ 1^m`).
    Column,
}

/// All partitions obtained from `lambda` by adding a strip of `m` boxes.
pub fn pieri_partition_set(lambda: &Partition, m: u32, kind: PieriKind) -> Vec<Partition> {
    let mut out = Vec::new();
    match kind {
        PieriKind::Row => {
            // λ_i <= ν_i <= λ_{i-1}, one extra row allowed
            let len = lambda.len() + 1;
            fn rec(lambda: &Partition, i: usize, len: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
                if i == len {
                    if left == 0 {
                        out.push(Partition::new(cur.clone()));
                    }
                    return;
                }
                let lo = lambda.part(i);
                let hi = if i == 0 { lo + left } else { (lambda.part(i - 1)).min(lo + left) };
                for v in lo..=hi {
                    cur.push(v);
                    rec(lambda, i + 1, len, left - (v - lo), cur, out);
                    cur.pop();
                }
            }
            rec(lambda, 0, len, m, &mut Vec::new(), &mut out);
        }
        PieriKind::Column => {
            let len = lambda.len() + m as usize;
            fn rec(lambda: &Partition, i: usize, len: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
                if i == len {
                    if left == 0 {
                        out.push(Partition::new(cur.clone()));
                    }
                    return;
                }
                for add in 0..=left.min(1) {
                    let v = lambda.part(i) + add;
                    if i > 0 && v > cur[i - 1] {
                        continue;
                    }
                    cur.push(v);
                    rec(lambda, i + 1, len, left - add, cur, out);
                    cur.pop();
                }
            }
            rec(lambda, 0, len, m, &mut Vec::new(), &mut out);
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Expands a symmetric integer polynomial in the Schur basis of its variables.
pub fn schur_expand(f: &MultiPoly) -> Result<SchurExpansion> {
    let k = f.nvars();
    if !f.is_symmetric() {
        return domain("input polynomial is not symmetric");
    }
    if !f.is_integral() {
        return domain("input polynomial has non-integral coefficients");
    }
    let mut cache: HashMap<Partition, MultiPoly> = HashMap::new();
    let mut rem = f.clone();
    let mut out = SchurExpansion::new();
    while let Some((e, c)) = rem.leading_term_lex() {
        let nu = Partition::try_new(e.clone())
            .map_err(|_| Error::Domain("lex-leading exponent is not a partition".into()))?;
        let c = c.to_integer();
        let s = cache.entry(nu.clone()).or_insert_with(|| schur_ssyt(&nu, k));
        rem = &rem - &s.scale(&num_rational::BigRational::from_integer(c.clone()));
        out.add(nu, c);
    }
    Ok(out)
}

/// Schur expansion of `s_λ · s_μ` computed in `nvars` variables; only
/// partitions with at most `nvars` rows appear.
pub fn lr_expansion(lambda: &Partition, mu: &Partition, nvars: usize) -> SchurExpansion {
    let prod = &schur_ssyt(lambda, nvars) * &schur_ssyt(mu, nvars);
    let e = schur_expand(&prod).expect("a product of Schur polynomials is symmetric and integral");
    assert!(e.iter().all(|(_, c)| c.is_positive()), "Littlewood–Richardson coefficients are nonnegative");
    e
}

/// `c^ν_{λμ}`, the coefficient of `s_ν` in `s_λ · s_μ`.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> BigInt {
    let total = lambda.size() + mu.size();
    if nu.size() != total {
        return BigInt::zero();
    }
    let nvars = (total as usize).max(1);
    lr_expansion(lambda, mu, nvars).get(nu)
}
