use num_bigint::BigInt;
use schubert::comb::{complement, hooks_and_syt_count, partitions_in_box, Partition, Rect};
use schubert::grassmannian::{
    duality_pairing, gr_poincare, gr_product, grassmannian_degree, pieri_multiply, schubert_degree_gr, GrClassSum,
};

fn basis(rect: Rect, l: &Partition) -> GrClassSum {
    GrClassSum::basis(rect, l.clone()).unwrap()
}

#[test]
fn duality_is_the_complement_permutation() {
    for (k, n) in [(2, 4), (2, 5), (3, 6), (1, 4)] {
        let rect = Rect::grassmannian(k, n).unwrap();
        assert!(duality_pairing(k, n).unwrap().is_complement_permutation(rect));
    }
}

#[test]
fn product_is_commutative_and_associative() {
    let rect = Rect::grassmannian(2, 5).unwrap();
    let all = partitions_in_box(rect);
    for a in &all {
        for b in &all {
            let ab = gr_product(&basis(rect, a), &basis(rect, b)).unwrap();
            assert_eq!(ab, gr_product(&basis(rect, b), &basis(rect, a)).unwrap());
            for c in all.iter().filter(|c| c.size() <= 2) {
                let left = gr_product(&ab, &basis(rect, c)).unwrap();
                let bc = gr_product(&basis(rect, b), &basis(rect, c)).unwrap();
                assert_eq!(left, gr_product(&basis(rect, a), &bc).unwrap());
            }
        }
    }
}

#[test]
fn pieri_matches_product_with_special_classes() {
    for (k, n) in [(2, 4), (2, 5), (3, 6)] {
        let rect = Rect::grassmannian(k, n).unwrap();
        for l in partitions_in_box(rect) {
            for m in 0..=(n - k) as u32 {
                let x = basis(rect, &l);
                let special = GrClassSum::special(rect, m).unwrap();
                assert_eq!(pieri_multiply(&x, m).unwrap(), gr_product(&x, &special).unwrap(), "{l} * σ_{m}");
            }
        }
    }
}

#[test]
fn degree_of_each_schubert_variety_by_sigma1_powers() {
    // deg X_λ = coefficient of the point class in σ_λ σ_1^{dim X_λ}
    let rect = Rect::grassmannian(2, 5).unwrap();
    let s1 = GrClassSum::special(rect, 1).unwrap();
    for l in partitions_in_box(rect) {
        let mut acc = basis(rect, &l);
        for _ in 0..rect.area() - l.size() {
            acc = gr_product(&acc, &s1).unwrap();
        }
        let deg = schubert_degree_gr(&l, 2, 5).unwrap();
        assert_eq!(acc.get(&rect.full()), BigInt::from(deg.clone()));
        assert_eq!(deg, hooks_and_syt_count(&complement(&l, rect).unwrap()).1);
    }
}

#[test]
fn closed_formula_degrees() {
    assert_eq!(grassmannian_degree(2, 4), 2u32.into());
    assert_eq!(grassmannian_degree(2, 5), 5u32.into());
    assert_eq!(grassmannian_degree(3, 6), 42u32.into());
    // Gr(2, n) has degree the Catalan number C_{n-2}
    assert_eq!(grassmannian_degree(2, 7), 42u32.into());
    assert_eq!(grassmannian_degree(1, 6), 1u32.into());
}

#[test]
fn poincare_polynomials_are_palindromic() {
    for n in 2..8 {
        for k in 1..n {
            let p = gr_poincare(k, n).unwrap();
            let top = (k * (n - k)) as u32;
            for (e, c) in p.terms() {
                assert_eq!(p.coefficient_of(&[top - e[0]]), c.clone());
            }
        }
    }
}
