//! Exact face volumes, the volume polynomial of `GZ(λ)` and the
//! Khovanskii–Pukhlikov pairing.

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{enumerate_reduced_kogan_faces, KoganFace, Weight};
use crate::comb::Permutation;
use crate::error::{domain, Result};
use crate::flag::schubert_polynomial;
use crate::poly::{rat, DiffOperator, MultiPoly};

/// `c · y + c_0` over the free coordinates `y`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Affine {
    coeffs: Vec<BigRational>,
    constant: BigRational,
}

impl Affine {
    fn constant(m: usize, c: BigRational) -> Self {
        Affine { coeffs: vec![BigRational::zero(); m], constant: c }
    }

    fn var(m: usize, k: usize) -> Self {
        let mut a = Self::constant(m, BigRational::zero());
        a.coeffs[k] = BigRational::one();
        a
    }

    fn sub(&self, other: &Affine) -> Affine {
        Affine {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
            constant: &self.constant - &other.constant,
        }
    }

    fn scale(&self, c: &BigRational) -> Affine {
        Affine { coeffs: self.coeffs.iter().map(|a| a * c).collect(), constant: &self.constant * c }
    }

    fn is_constant(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Positive multiple with leading nonzero entry of absolute value 1.
    fn normalized(&self) -> Affine {
        let lead = self.coeffs.iter().find(|c| !c.is_zero()).unwrap_or(&self.constant);
        if lead.is_zero() {
            return self.clone();
        }
        self.scale(&(BigRational::one() / lead.abs()))
    }

    fn to_poly(&self) -> MultiPoly {
        let m = self.coeffs.len();
        let mut p = MultiPoly::constant(m, self.constant.clone());
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                p = &p + &MultiPoly::var(k, m).scale(c);
            }
        }
        p
    }
}

/// `∫ f` over `{ y : g(y) >= 0 for every g }`, eliminating one coordinate at a time.
///
/// For the eliminated `t`, each pair of a lower bound `a` and an upper bound `b`
/// contributes `∫_a^b f dt` on the region where `a` is the largest lower bound,
/// `b` the smallest upper bound and `a <= b`.
fn integrate(f: &MultiPoly, constraints: &[Affine], active: &[usize]) -> BigRational {
    let mut set = BTreeSet::new();
    for g in constraints {
        if g.is_constant() {
            if g.constant.is_negative() {
                return BigRational::zero();
            }
        } else {
            set.insert(g.normalized());
        }
    }
    let cons: Vec<Affine> = set.into_iter().collect();
    if active.is_empty() {
        return f.as_constant().expect("all coordinates integrated out");
    }
    let split = |t: usize| {
        let lower: Vec<&Affine> = cons.iter().filter(|g| g.coeffs[t].is_positive()).collect();
        let upper: Vec<&Affine> = cons.iter().filter(|g| g.coeffs[t].is_negative()).collect();
        (lower, upper)
    };
    let &t = active
        .iter()
        .min_by_key(|&&t| {
            let (l, u) = split(t);
            l.len() * u.len()
        })
        .expect("nonempty");
    let (lower, upper) = split(t);
    assert!(!lower.is_empty() && !upper.is_empty(), "unbounded region");
    // c t + r >= 0 with c != 0 gives the bound t ≷ -r / c
    let bound = |g: &Affine| {
        let c = g.coeffs[t].clone();
        let mut r = g.clone();
        r.coeffs[t] = BigRational::zero();
        r.scale(&(-BigRational::one() / c))
    };
    let lows: Vec<Affine> = lower.iter().map(|g| bound(g)).collect();
    let ups: Vec<Affine> = upper.iter().map(|g| bound(g)).collect();
    let rest: Vec<Affine> = cons.iter().filter(|g| g.coeffs[t].is_zero()).cloned().collect();
    let remaining: Vec<usize> = active.iter().copied().filter(|&s| s != t).collect();
    let anti = f.antiderivative(t);
    let mut total = BigRational::zero();
    for (ai, a) in lows.iter().enumerate() {
        for (bi, b) in ups.iter().enumerate() {
            let mut next = rest.clone();
            next.extend(lows.iter().enumerate().filter(|&(k, _)| k != ai).map(|(_, a2)| a.sub(a2)));
            next.extend(ups.iter().enumerate().filter(|&(k, _)| k != bi).map(|(_, b2)| b2.sub(b)));
            next.push(b.sub(a));
            let g = &anti.substitute(t, &b.to_poly()) - &anti.substitute(t, &a.to_poly());
            total += integrate(&g, &next, &remaining);
        }
    }
    total
}

/// Volume of the face in its free coordinates `x_{i,j}`, `(i, j) ∉ F`.
///
/// Every eliminated coordinate equals another coordinate or an entry of `λ`,
/// so projecting to the free coordinates maps the lattice of the affine span
/// onto `Z^d` and this is the normalized lattice volume. A vertex has volume 1.
pub fn face_volume(face: &KoganFace, lambda: &Weight) -> Result<BigRational> {
    lambda.require_weak()?;
    let n = face.n();
    if lambda.n() != n {
        return domain(format!("face lives in GZ of size {n}, weight has {} entries", lambda.n()));
    }
    let free: Vec<(usize, usize)> =
        (1..n).flat_map(|i| (1..=n - i).map(move |j| (i, j))).filter(|p| !face.equalities().contains(p)).collect();
    let m = free.len();
    // value[i][j-1] as an affine form in the free coordinates
    let mut value: Vec<Vec<Affine>> = vec![lambda.entries().iter().map(|&l| Affine::constant(m, rat(l))).collect()];
    for i in 1..n {
        let row = (1..=n - i)
            .map(|j| match free.iter().position(|&p| p == (i, j)) {
                Some(k) => Affine::var(m, k),
                None => value[i - 1][j - 1].clone(),
            })
            .collect();
        value.push(row);
    }
    let mut cons = Vec::new();
    for i in 1..n {
        for j in 1..=n - i {
            cons.push(value[i][j - 1].sub(&value[i - 1][j - 1]));
            cons.push(value[i - 1][j].sub(&value[i][j - 1]));
        }
    }
    let active: Vec<usize> = (0..m).collect();
    Ok(integrate(&MultiPoly::one(m.max(1)), &cons, &active))
}

/// `∏_{i>j} (λ_i - λ_j) / (1! 2! ... (n-1)!)` in the variables `λ_1, ..., λ_n`.
pub fn gz_volume_polynomial(n: usize) -> Result<MultiPoly> {
    if n < 1 {
        return domain("gz_volume_polynomial needs n >= 1");
    }
    let mut p = MultiPoly::one(n);
    let mut den = BigInt::one();
    for i in 0..n {
        for j in 0..i {
            p = &p * &(&MultiPoly::var(i, n) - &MultiPoly::var(j, n));
        }
        den *= (1..=i as i64).product::<i64>();
    }
    let p = p.scale(&BigRational::new(BigInt::one(), den));
    if n <= 4 {
        let staircase: Vec<i64> = (0..n as i64).collect();
        let vol = face_volume(&KoganFace::full(n), &Weight(staircase.clone()))?;
        assert_eq!(p.evaluate_int(&staircase)?, vol, "normalizing constant disagrees with the integrated volume");
    }
    Ok(p)
}

/// `𝔖_w(D) 𝔖_v(D)` applied to the volume polynomial, with `x_i ↦ -∂/∂λ_i`.
pub fn kp_pairing(w: &Permutation, v: &Permutation, n: usize) -> Result<BigInt> {
    if w.n() != n || v.n() != n {
        return domain(format!("{w} and {v} must both lie in S_{n}"));
    }
    let top = n * (n - 1) / 2;
    if w.length() + v.length() != top {
        return domain(format!("ℓ({w}) + ℓ({v}) must equal {top}"));
    }
    let symbol = &schubert_polynomial(w).poly * &schubert_polynomial(v).poly;
    let result = DiffOperator::from_negated_variables(&symbol).apply(&gz_volume_polynomial(n)?);
    let c = result.as_constant().expect("complementary degrees give a constant");
    assert!(c.is_integer(), "non-integral pairing");
    let c = c.to_integer();
    let dual = Permutation::longest(n).compose(w)? == *v;
    assert_eq!(c, BigInt::from(dual as i64), "pairing must be δ(v, w0 w)");
    Ok(c)
}

/// `deg_λ X_w = (N - ℓ(w))! · Σ vol(F)` over reduced Kogan faces of `w`.
pub fn flag_schubert_degree(w: &Permutation, lambda: &Weight) -> Result<BigUint> {
    lambda.require_strict()?;
    let n = w.n();
    if lambda.n() != n {
        return domain(format!("{w} and {lambda} have different sizes"));
    }
    let d = n * (n - 1) / 2 - w.length();
    let mut vol = BigRational::zero();
    for face in enumerate_reduced_kogan_faces(w) {
        vol += face_volume(&face, lambda)?;
    }
    let fact: BigInt = (1..=d as u64).map(BigInt::from).product();
    let deg = vol * BigRational::from_integer(fact);
    assert!(deg.is_integer(), "degree must be an integer");
    Ok(deg.to_integer().to_biguint().expect("volumes are nonnegative"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wt(v: &[i64]) -> Weight {
        Weight(v.to_vec())
    }

    #[test]
    fn volumes() {
        assert_eq!(face_volume(&KoganFace::full(3), &wt(&[0, 1, 2])).unwrap(), rat(1));
        assert_eq!(face_volume(&KoganFace::vertex(3), &wt(&[0, 1, 2])).unwrap(), rat(1));
        assert_eq!(face_volume(&KoganFace::full(2), &wt(&[0, 5])).unwrap(), rat(5));
        // ∫∫ (y - x) with a = 2, b = 3: ab(a + b)/2 = 15
        assert_eq!(face_volume(&KoganFace::full(3), &wt(&[0, 2, 5])).unwrap(), rat(15));
        assert_eq!(face_volume(&KoganFace::full(4), &wt(&[0, 1, 2, 3])).unwrap(), rat(1));
    }

    #[test]
    fn volume_polynomial() {
        assert_eq!(gz_volume_polynomial(2).unwrap(), MultiPoly::from_int_terms(2, [(vec![0, 1], 1), (vec![1, 0], -1)]));
        let p3 = gz_volume_polynomial(3).unwrap();
        assert_eq!(p3.evaluate_int(&[0, 1, 2]).unwrap(), rat(1));
        for l in [[0, 2, 5], [1, 2, 4], [-1, 3, 4]] {
            assert_eq!(p3.evaluate_int(&l).unwrap(), face_volume(&KoganFace::full(3), &wt(&l)).unwrap());
        }
        assert_eq!(gz_volume_polynomial(1).unwrap(), MultiPoly::one(1));
    }

    #[test]
    fn pairing() {
        assert_eq!(kp_pairing(&Permutation::identity(2), &Permutation::simple(1, 2), 2).unwrap(), 1.into());
        assert_eq!(kp_pairing(&Permutation::identity(3), &Permutation::longest(3), 3).unwrap(), 1.into());
        let s1 = Permutation::simple(1, 2);
        assert!(kp_pairing(&s1, &s1, 2).is_err());
    }

    #[test]
    fn degrees() {
        assert_eq!(flag_schubert_degree(&Permutation::longest(3), &wt(&[0, 1, 2])).unwrap(), 1u32.into());
        for d in 1..5 {
            assert_eq!(flag_schubert_degree(&Permutation::identity(2), &wt(&[0, d])).unwrap(), (d as u32).into());
        }
        assert_eq!(flag_schubert_degree(&Permutation::identity(3), &wt(&[0, 1, 2])).unwrap(), 6u32.into());
        assert!(flag_schubert_degree(&Permutation::identity(3), &wt(&[0, 0, 2])).is_err());
    }
}
