use schubert::comb::Permutation;
use schubert::flag::schubert_polynomial;
use schubert::pipedream::{enumerate_reduced, fk_polynomial, is_reduced, trace_permutation};

#[test]
fn fomin_kirillov_in_s4_and_s5() {
    for n in [4, 5] {
        for w in Permutation::all(n) {
            assert_eq!(fk_polynomial(&w), schubert_polynomial(&w).poly, "{w}");
        }
    }
}

#[test]
fn enumerated_dreams_are_reduced_and_trace_back() {
    for w in Permutation::all(5) {
        let dreams = enumerate_reduced(&w);
        assert!(!dreams.is_empty());
        assert!(dreams.windows(2).all(|d| d[0].crosses() < d[1].crosses()));
        for d in &dreams {
            assert!(is_reduced(d));
            assert_eq!(trace_permutation(d), w);
            assert_eq!(d.crosses().len(), w.length());
        }
    }
}

#[test]
fn counts_are_inverse_symmetric() {
    for w in Permutation::all(5) {
        assert_eq!(enumerate_reduced(&w).len(), enumerate_reduced(&w.inverse()).len(), "{w}");
    }
}
