use super::{Exponent, MultiPoly};

impl MultiPoly {
    /// Divided difference `∂_i f = (f - s_i f) / (x_i - x_{i+1})` for the
    /// 1-based letter `i`, acting on 0-based variables `i - 1` and `i`.
    ///
    /// The quotient is computed monomial by monomial, so it is always exact:
    /// for `a > b`, `(x^a y^b - x^b y^a) / (x - y) = (xy)^b (x^{a-b-1} + ... + y^{a-b-1})`.
    pub fn divided_difference(&self, i: usize) -> MultiPoly {
        assert!(i >= 1 && i < self.nvars, "divided difference ∂_{i} needs variables x_{i}, x_{}", i + 1);
        let (p, q) = (i - 1, i);
        let mut out = MultiPoly::zero(self.nvars);
        for (e, c) in self.terms() {
            let (a, b) = (e[p], e[q]);
            if a == b {
                continue;
            }
            let (hi, lo, sign) = if a > b { (a, b, 1) } else { (b, a, -1) };
            let coeff = if sign > 0 { c.clone() } else { -c.clone() };
            let gap = hi - lo;
            for t in 0..gap {
                let mut e2: Exponent = e.clone();
                e2[p] = lo + (gap - 1 - t);
                e2[q] = lo + t;
                out.add_term(e2, coeff.clone());
            }
        }
        out
    }

    /// Applies `∂_{letters[0]} ∘ ∂_{letters[1]} ∘ ...`, i.e. the last letter acts first.
    pub fn divided_difference_word(&self, letters: &[usize]) -> MultiPoly {
        letters.iter().rev().fold(self.clone(), |f, &i| f.divided_difference(i))
    }
}

/// Constant-coefficient differential operator, stored as a polynomial in the
/// formal symbols `∂/∂y_1, ..., ∂/∂y_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffOperator(pub MultiPoly);

impl DiffOperator {
    pub fn new(symbol: MultiPoly) -> Self {
        DiffOperator(symbol)
    }

    /// The image of `p(x_1, ..., x_n)` under `x_i ↦ -∂/∂y_i`.
    pub fn from_negated_variables(p: &MultiPoly) -> Self {
        let terms = p.terms().map(|(e, c)| {
            let deg: u32 = e.iter().sum();
            let c = if deg % 2 == 1 { -c.clone() } else { c.clone() };
            (e.clone(), c)
        });
        DiffOperator(MultiPoly::from_terms(p.nvars(), terms))
    }

    pub fn symbol(&self) -> &MultiPoly {
        &self.0
    }

    /// Applies the operator to `f`.
    pub fn apply(&self, f: &MultiPoly) -> MultiPoly {
        let n = f.nvars().max(self.0.nvars());
        let f = f.with_nvars(n).expect("padding never drops variables");
        let mut out = MultiPoly::zero(n);
        for (e, c) in self.0.terms() {
            let mut g = f.clone();
            for (i, &a) in e.iter().enumerate() {
                if a > 0 {
                    g = g.partial_derivative(i, a);
                }
                if g.is_zero() {
                    break;
                }
            }
            out = &out + &g.scale(c);
        }
        out
    }

    pub fn compose(&self, other: &DiffOperator) -> DiffOperator {
        DiffOperator(&self.0 * &other.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;
    use proptest::prelude::*;

    fn x(i: usize, n: usize) -> MultiPoly {
        MultiPoly::var(i, n)
    }

    #[test]
    fn simple_divided_differences() {
        assert_eq!(x(0, 2).divided_difference(1), MultiPoly::one(2));
        // ∂1(x1^2 x2) = x1 x2
        let f = &x(0, 2).pow(2) * &x(1, 2);
        assert_eq!(f.divided_difference(1), &x(0, 2) * &x(1, 2));
        // symmetric input
        let g = &(&x(0, 3) + &x(1, 3)) * &x(2, 3);
        assert!(g.divided_difference(1).is_zero());
    }

    #[test]
    fn quotient_times_denominator_recovers_numerator() {
        let f = MultiPoly::from_int_terms(3, [(vec![3, 0, 1], 2), (vec![1, 4, 0], -5), (vec![0, 0, 2], 1)]);
        for i in 1..3 {
            let d = f.divided_difference(i);
            let lin = &x(i - 1, 3) - &x(i, 3);
            assert_eq!(&d * &lin, &f - &f.swap_variables(i - 1, i));
        }
    }

    #[test]
    fn kaveh_sign_on_x1() {
        let vol = &x(1, 2) - &x(0, 2);
        let op = DiffOperator::from_negated_variables(&x(0, 2));
        assert_eq!(op.apply(&vol), MultiPoly::one(2));
        assert_eq!(op.apply(&vol).as_constant(), Some(rat(1)));
    }

    fn arb_poly(nvars: usize) -> impl Strategy<Value = MultiPoly> {
        prop::collection::vec((prop::collection::vec(0u32..4, nvars), -3i64..4), 0..6)
            .prop_map(move |ts| MultiPoly::from_int_terms(nvars, ts))
    }

    proptest! {
        #[test]
        fn nil_coxeter_relations(f in arb_poly(5)) {
            for i in 1..5 {
                prop_assert!(f.divided_difference(i).divided_difference(i).is_zero());
            }
            for i in 1..5usize {
                for j in 1..5 {
                    if i.abs_diff(j) > 1 {
                        prop_assert_eq!(
                            f.divided_difference_word(&[i, j]),
                            f.divided_difference_word(&[j, i])
                        );
                    }
                }
            }
            for i in 1..4 {
                prop_assert_eq!(
                    f.divided_difference_word(&[i, i + 1, i]),
                    f.divided_difference_word(&[i + 1, i, i + 1])
                );
            }
        }
    }
}
