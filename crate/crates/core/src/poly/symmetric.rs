use num_rational::BigRational;
use num_traits::One;

use super::{rat, Exponent, MultiPoly};
use crate::comb::{Partition, Permutation};
use crate::error::{domain, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SymKind {
    Elementary,
    Complete,
}

/// `e_m` or `h_m` in `k` variables.
pub fn sym_generator(kind: SymKind, m: u32, k: usize) -> MultiPoly {
    match kind {
        SymKind::Elementary => elementary(m, k),
        SymKind::Complete => complete(m, k),
    }
}

/// Elementary symmetric polynomial `e_m(x_1, ..., x_k)`; zero for `m > k`.
pub fn elementary(m: u32, k: usize) -> MultiPoly {
    let mut out = MultiPoly::zero(k);
    let mut e = vec![0u32; k];
    fn rec(pos: usize, left: u32, e: &mut Exponent, out: &mut MultiPoly) {
        if left == 0 {
            out.add_term(e.clone(), BigRational::one());
            return;
        }
        if pos == e.len() || (e.len() - pos) < left as usize {
            return;
        }
        e[pos] = 1;
        rec(pos + 1, left - 1, e, out);
        e[pos] = 0;
        rec(pos + 1, left, e, out);
    }
    rec(0, m, &mut e, &mut out);
    out
}

/// Complete homogeneous symmetric polynomial `h_m(x_1, ..., x_k)`.
pub fn complete(m: u32, k: usize) -> MultiPoly {
    let mut out = MultiPoly::zero(k);
    if k == 0 {
        if m == 0 {
            out = MultiPoly::one(0);
        }
        return out;
    }
    let mut e = vec![0u32; k];
    fn rec(pos: usize, left: u32, e: &mut Exponent, out: &mut MultiPoly) {
        if pos + 1 == e.len() {
            e[pos] = left;
            out.add_term(e.clone(), BigRational::one());
            e[pos] = 0;
            return;
        }
        for a in (0..=left).rev() {
            e[pos] = a;
            rec(pos + 1, left - a, e, out);
        }
        e[pos] = 0;
    }
    rec(0, m, &mut e, &mut out);
    out
}

/// Skew-symmetrization `a_{λ+δ} = Σ_σ sgn(σ) x_{σ(1)}^{λ_1+k-1} ... x_{σ(k)}^{λ_k}`.
///
/// With `λ = ∅` this is the Vandermonde determinant `∏_{i<j} (x_i - x_j)`.
pub fn alternant(lambda: &Partition, k: usize) -> Result<MultiPoly> {
    if lambda.len() > k {
        return domain(format!("partition {lambda} has more than {k} parts"));
    }
    let shifted: Vec<u32> = (0..k).map(|i| lambda.part(i) + (k - 1 - i) as u32).collect();
    let mut out = MultiPoly::zero(k);
    for sigma in Permutation::all(k) {
        let mut e = vec![0u32; k];
        for (i, &s) in shifted.iter().enumerate() {
            e[sigma.image(i + 1) - 1] = s;
        }
        let sign = if sigma.length() % 2 == 0 { 1 } else { -1 };
        out.add_term(e, rat(sign));
    }
    Ok(out)
}

/// `∏_{i<j} (x_i - x_j)`, multiplied out factor by factor.
pub fn vandermonde(k: usize) -> MultiPoly {
    let mut acc = MultiPoly::one(k);
    for i in 0..k {
        for j in i + 1..k {
            acc = &acc * &(&MultiPoly::var(i, k) - &MultiPoly::var(j, k));
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_generators_coincide() {
        for k in 1..5 {
            let sum = (0..k).fold(MultiPoly::zero(k), |a, i| &a + &MultiPoly::var(i, k));
            assert_eq!(elementary(1, k), sum);
            assert_eq!(complete(1, k), sum);
            assert_eq!(elementary(0, k), MultiPoly::one(k));
            assert_eq!(complete(0, k), MultiPoly::one(k));
            assert!(elementary(k as u32 + 1, k).is_zero());
        }
    }

    #[test]
    fn h2_in_two_variables() {
        let expect = MultiPoly::from_int_terms(2, [(vec![2, 0], 1), (vec![1, 1], 1), (vec![0, 2], 1)]);
        assert_eq!(complete(2, 2), expect);
    }

    #[test]
    fn e_h_alternating_sum_vanishes() {
        for k in 1..6usize {
            for nv in 1..5 {
                let mut acc = MultiPoly::zero(nv);
                for m in 0..=k {
                    let term = &elementary(m as u32, nv) * &complete((k - m) as u32, nv);
                    acc = if m % 2 == 0 { &acc + &term } else { &acc - &term };
                }
                assert!(acc.is_zero(), "k={k} nvars={nv}");
            }
        }
    }

    #[test]
    fn small_alternants() {
        let x = |i| MultiPoly::var(i, 2);
        assert_eq!(alternant(&Partition::empty(), 2).unwrap(), &x(0) - &x(1));
        assert_eq!(alternant(&Partition::new(vec![1]), 2).unwrap(), &x(0).pow(2) - &x(1).pow(2));
        for k in 1..5 {
            assert_eq!(alternant(&Partition::empty(), k).unwrap(), vandermonde(k));
        }
        assert!(alternant(&Partition::new(vec![1, 1, 1]), 2).is_err());
    }

    #[test]
    fn alternant_is_antisymmetric() {
        let a = alternant(&Partition::new(vec![2, 1]), 3).unwrap();
        for i in 0..3 {
            for j in i + 1..3 {
                assert_eq!(a.swap_variables(i, j), -&a);
            }
        }
    }

    #[test]
    fn alternants_divisible_by_vandermonde() {
        let delta = vandermonde(3);
        for lambda in crate::comb::partitions_in_box(crate::comb::Rect::new(3, 3)) {
            let a = alternant(&lambda, 3).unwrap();
            let q = a.div_exact(&delta).unwrap();
            assert_eq!(&q * &delta, a);
        }
    }
}
