use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use schubert::comb::{partitions_in_box, Partition, Rect};
use schubert::poly::{alternant, vandermonde, MultiPoly};
use schubert::schur::{
    lr_coefficient, lr_expansion, pieri_partition_set, schur_bialternant, schur_expand, schur_ssyt, PieriKind,
};

fn p(v: &[u32]) -> Partition {
    Partition::new(v.to_vec())
}

fn partitions_of(n: u32) -> Vec<Partition> {
    partitions_in_box(Rect::new(n as usize, n)).into_iter().filter(|l| l.size() == n).collect()
}

#[test]
fn bialternant_equals_tableau_sum() {
    for k in [3, 4] {
        for lambda in partitions_in_box(Rect::new(3, 3)) {
            assert_eq!(schur_bialternant(&lambda, k).unwrap(), schur_ssyt(&lambda, k), "{lambda}, k = {k}");
        }
    }
}

/// `c^ν_{λμ} = [x^{ν+δ}] s_λ s_μ a_δ` in `k >= ℓ(ν)` variables.
fn lr_by_alternant(lambda: &Partition, mu: &Partition, nu: &Partition) -> BigInt {
    let k = nu.len().max(1);
    let prod = &(&schur_ssyt(lambda, k) * &schur_ssyt(mu, k)) * &vandermonde(k);
    let e: Vec<u32> = (0..k).map(|i| nu.part(i) + (k - 1 - i) as u32).collect();
    prod.coefficient_of(&e).to_integer()
}

#[test]
fn lr_matches_alternant_oracle() {
    for total in 0..=5 {
        for nu in partitions_of(total) {
            for a in 0..=total {
                for lambda in partitions_of(a) {
                    for mu in partitions_of(total - a) {
                        assert_eq!(lr_coefficient(&lambda, &mu, &nu), lr_by_alternant(&lambda, &mu, &nu), "{lambda} {mu} {nu}");
                    }
                }
            }
        }
    }
}

#[test]
fn lr_is_symmetric() {
    for total in 0..=6 {
        for nu in partitions_of(total) {
            for a in 0..=total {
                for lambda in partitions_of(a) {
                    for mu in partitions_of(total - a) {
                        if lambda <= mu {
                            assert_eq!(lr_coefficient(&lambda, &mu, &nu), lr_coefficient(&mu, &lambda, &nu));
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn pieri_agrees_with_products() {
    for lambda in partitions_in_box(Rect::new(3, 3)) {
        for m in 1..=3 {
            let rows = lambda.len() + 1;
            let e = lr_expansion(&lambda, &Partition::row(m), rows);
            let mut from_rule = pieri_partition_set(&lambda, m, PieriKind::Row);
            from_rule.sort();
            let from_product: Vec<Partition> = e.iter().map(|(nu, c)| {
                assert_eq!(*c, BigInt::from(1));
                nu.clone()
            }).collect();
            assert_eq!(from_product, from_rule, "{lambda} ⊗ {m}");
            let cols = lambda.len() + m as usize;
            let e = lr_expansion(&lambda, &Partition::column(m as usize), cols);
            let mut from_rule = pieri_partition_set(&lambda, m, PieriKind::Column);
            from_rule.sort();
            assert_eq!(e.iter().map(|(nu, _)| nu.clone()).collect::<Vec<_>>(), from_rule);
        }
    }
    assert_eq!(pieri_partition_set(&p(&[3, 2]), 2, PieriKind::Row).len(), 5);
}

#[test]
fn alternant_quotient_in_four_variables() {
    let lambda = p(&[2, 1]);
    let q = alternant(&lambda, 4).unwrap().div_exact(&vandermonde(4)).unwrap();
    assert_eq!(q, schur_ssyt(&lambda, 4));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn expansion_reassembles(coeffs in proptest::collection::vec(-3i64..4, 5)) {
        let basis = [p(&[]), p(&[1]), p(&[2]), p(&[1, 1]), p(&[2, 1])];
        let k = 3;
        let mut f = MultiPoly::zero(k);
        for (lambda, &c) in basis.iter().zip(&coeffs) {
            f = &f + &schur_ssyt(lambda, k).scale(&BigRational::from_integer(c.into()));
        }
        let e = schur_expand(&f).unwrap();
        for (lambda, &c) in basis.iter().zip(&coeffs) {
            prop_assert_eq!(e.get(lambda), BigInt::from(c));
        }
        prop_assert_eq!(e.len(), coeffs.iter().filter(|&&c| c != 0).count());
    }
}
