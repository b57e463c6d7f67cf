use num_bigint::{BigInt, BigUint};
use schubert::comb::{bruhat_leq, Permutation};
use schubert::gz::{
    demazure_character, demazure_points, enumerate_reduced_kogan_faces, face_volume, flag_schubert_degree,
    gz_lattice_points, gz_volume_polynomial, kp_pairing, weyl_dimension, KoganFace, Weight,
};
use schubert::pipedream::enumerate_reduced;

fn strict_weights(n: usize, max: i64) -> Vec<Weight> {
    fn rec(n: usize, from: i64, max: i64, cur: &mut Vec<i64>, out: &mut Vec<Weight>) {
        if cur.len() == n {
            out.push(Weight(cur.clone()));
            return;
        }
        for v in from..=max {
            cur.push(v);
            rec(n, v + 1, max, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, 0, max, &mut Vec::new(), &mut out);
    out
}

/// `Δ^d f(1)` for `f(m) = dim D_w(mλ)`, which is `d!` times the leading coefficient.
fn ehrhart_degree(w: &Permutation, lambda: &Weight) -> BigInt {
    let d = w.n() * (w.n() - 1) / 2 - w.length();
    let mut vals: Vec<BigInt> =
        (1..=d as i64 + 1).map(|m| BigInt::from(demazure_points(w, &lambda.scaled(m)).unwrap().len())).collect();
    for _ in 0..d {
        vals = vals.windows(2).map(|p| &p[1] - &p[0]).collect();
    }
    vals[0].clone()
}

#[test]
fn kogan_faces_and_pipe_dreams_are_equinumerous() {
    for n in [3, 4] {
        for w in Permutation::all(n) {
            let faces = enumerate_reduced_kogan_faces(&w);
            assert_eq!(faces.len(), enumerate_reduced(&w).len(), "{w}");
            assert!(faces.iter().all(|f| f.permutation().as_ref() == Some(&w) && f.codimension() == w.length()));
        }
    }
}

#[test]
fn demazure_extremes() {
    for n in 1..=4 {
        for lambda in strict_weights(n, 4) {
            let id = demazure_character(&Permutation::identity(n), &lambda).unwrap();
            assert_eq!(BigUint::from(id.dimension()), weyl_dimension(&lambda));
            assert_eq!(id.dimension() as usize, gz_lattice_points(&lambda).unwrap().len());
            assert!(id.is_symmetric(), "{lambda}");
            assert_eq!(demazure_character(&Permutation::longest(n), &lambda).unwrap().dimension(), 1);
        }
    }
}

/// Larger permutations index smaller modules here: D_w shrinks along the Bruhat order.
#[test]
fn demazure_dimension_is_antitone_on_s3() {
    for lambda in [Weight(vec![0, 1, 2]), Weight(vec![0, 2, 5]), Weight(vec![1, 3, 4])] {
        let s3 = Permutation::all(3);
        for v in &s3 {
            for w in &s3 {
                if bruhat_leq(v, w).unwrap() {
                    let dv = demazure_points(v, &lambda).unwrap().len();
                    let dw = demazure_points(w, &lambda).unwrap().len();
                    assert!(dv >= dw, "{v} <= {w} but {dv} < {dw} at {lambda}");
                }
            }
        }
    }
}

#[test]
fn pairing_matrix_is_identity_after_reindexing() {
    for n in [2, 3] {
        let w0 = Permutation::longest(n);
        let top = n * (n - 1) / 2;
        for w in Permutation::all(n) {
            for u in Permutation::all(n) {
                if w.length() + (top - u.length()) != top {
                    continue;
                }
                // column u stands for v = w0 u
                let v = w0.compose(&u).unwrap();
                let expect = if u == w { 1 } else { 0 };
                assert_eq!(kp_pairing(&w, &v, n).unwrap(), BigInt::from(expect));
            }
        }
    }
}

#[test]
fn volume_polynomial_matches_face_volumes() {
    let p = gz_volume_polynomial(3).unwrap();
    for lambda in strict_weights(3, 5) {
        assert_eq!(p.evaluate_int(lambda.entries()).unwrap(), face_volume(&KoganFace::full(3), &lambda).unwrap());
    }
    let p4 = gz_volume_polynomial(4).unwrap();
    let lambda = Weight(vec![0, 1, 3, 4]);
    assert_eq!(p4.evaluate_int(lambda.entries()).unwrap(), face_volume(&KoganFace::full(4), &lambda).unwrap());
}

#[test]
fn degrees_match_ehrhart_leading_terms() {
    for lambda in [Weight(vec![0, 1, 2]), Weight(vec![0, 2, 5])] {
        for w in Permutation::all(3) {
            let deg = flag_schubert_degree(&w, &lambda).unwrap();
            assert_eq!(BigInt::from(deg), ehrhart_degree(&w, &lambda), "{w} at {lambda}");
        }
    }
    let w = "2143".parse().unwrap();
    let lambda = Weight(vec![0, 1, 2, 3]);
    assert_eq!(BigInt::from(flag_schubert_degree(&w, &lambda).unwrap()), ehrhart_degree(&w, &lambda));
}
