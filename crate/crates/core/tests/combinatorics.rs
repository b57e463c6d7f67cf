use std::collections::BTreeSet;

use num_bigint::BigUint;
use proptest::prelude::*;
use schubert::comb::{
    bruhat_leq, hooks_and_syt_count, partitions_in_box, perm_from_code, q_binomial, Partition, Permutation, Rect,
};

/// Standard tableaux counted by adding the boxes `1, 2, ...` one corner at a time.
fn syt_brute(shape: &[u32]) -> u64 {
    fn rec(cur: &mut Vec<u32>, shape: &[u32]) -> u64 {
        if cur.iter().zip(shape).all(|(a, b)| a == b) {
            return 1;
        }
        let mut total = 0;
        for r in 0..shape.len() {
            let fits_row = cur[r] < shape[r];
            let fits_above = r == 0 || cur[r - 1] > cur[r];
            if fits_row && fits_above {
                cur[r] += 1;
                total += rec(cur, shape);
                cur[r] -= 1;
            }
        }
        total
    }
    rec(&mut vec![0; shape.len()], shape)
}

fn partitions_of(n: u32, max: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (1..=n.min(max)).rev() {
        for mut rest in partitions_of(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

#[test]
fn hook_length_matches_brute_force() {
    for n in 0..=8 {
        for parts in partitions_of(n, n) {
            let lambda = Partition::new(parts.clone());
            assert_eq!(hooks_and_syt_count(&lambda).1, BigUint::from(syt_brute(&parts)), "{lambda}");
        }
    }
}

#[test]
fn box_listing_counts() {
    for n in 1..8 {
        for k in 1..=n {
            let rect = Rect::grassmannian(k, n).unwrap();
            let all = partitions_in_box(rect);
            let expect = schubert::comb::binomial(n as u32, k as u32);
            assert_eq!(BigUint::from(all.len()), expect);
            assert!(all.windows(2).all(|w| w[0] < w[1]));
        }
    }
}

/// Two-dimensional subspaces of `F_2^4` as sets of nonzero bitmask vectors.
#[test]
fn q_binomial_counts_subspaces_over_f2() {
    let mut spans = BTreeSet::new();
    for a in 1u8..16 {
        for b in 1u8..16 {
            if a != b {
                let mut s = [a, b, a ^ b];
                s.sort();
                spans.insert(s);
            }
        }
    }
    assert_eq!(spans.len(), 35);
    let qb = q_binomial(4, 2).unwrap();
    assert_eq!(qb.evaluate_int(&[2]).unwrap(), num_rational::BigRational::from_integer(35.into()));
}

#[test]
fn bruhat_is_a_graded_partial_order() {
    let s4 = Permutation::all(4);
    for u in &s4 {
        assert!(bruhat_leq(u, u).unwrap());
        for v in &s4 {
            let uv = bruhat_leq(u, v).unwrap();
            if uv && u != v {
                assert!(u.length() < v.length());
                assert!(!bruhat_leq(v, u).unwrap());
            }
            for w in &s4 {
                if uv && bruhat_leq(v, w).unwrap() {
                    assert!(bruhat_leq(u, w).unwrap());
                }
            }
        }
        assert!(bruhat_leq(&Permutation::identity(4), u).unwrap());
        assert!(bruhat_leq(u, &Permutation::longest(4)).unwrap());
    }
}

#[test]
fn reduced_words_multiply_back() {
    for w in Permutation::all(5) {
        for word in w.reduced_words().iter().take(20) {
            assert_eq!(word.len(), w.length());
            assert_eq!(&word.product(5).unwrap(), &w);
            assert!(word.is_reduced(5));
        }
    }
}

proptest! {
    #[test]
    fn code_round_trip(seed in proptest::collection::vec(0usize..6, 6)) {
        // clamp to a valid Lehmer code of S_6
        let code: Vec<usize> = seed.iter().enumerate().map(|(i, &c)| c % (6 - i)).collect();
        let w = perm_from_code(&code, 6).unwrap();
        prop_assert_eq!(w.lehmer_code(), code.clone());
        prop_assert_eq!(w.length(), code.iter().sum::<usize>());
        prop_assert_eq!(w.inverse().length(), w.length());
    }

    #[test]
    fn conjugation_is_an_involution(parts in proptest::collection::vec(0u32..6, 0..6)) {
        let mut parts = parts;
        parts.sort_by(|a, b| b.cmp(a));
        let lambda = Partition::new(parts);
        prop_assert_eq!(lambda.conjugate().conjugate(), lambda.clone());
        prop_assert_eq!(lambda.conjugate().size(), lambda.size());
        prop_assert_eq!(hooks_and_syt_count(&lambda).1, hooks_and_syt_count(&lambda.conjugate()).1);
    }
}
