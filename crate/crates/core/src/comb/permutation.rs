//! Permutations in one-line notation.
//!
//! Composition is `(a ∘ b)(i) = a(b(i))`. A word `s_{i_1} s_{i_2} ... s_{i_k}`
//! stands for `s_{i_1} ∘ s_{i_2} ∘ ... ∘ s_{i_k}`, so multiplying `w` on the
//! right by `s_i` swaps the entries in positions `i` and `i + 1`.

use std::fmt;
use std::str::FromStr;

use crate::error::{dimension, domain, Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// Builds `w` from its one-line notation `(w(1), ..., w(n))`.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v > n || seen[v] {
                return domain(format!("{images:?} is not a permutation of 1..{n}"));
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { images: (1..=n).collect() }
    }

    /// Simple transposition `s_i` exchanging `i` and `i + 1` (1-based).
    pub fn simple(i: usize, n: usize) -> Self {
        assert!(i >= 1 && i < n, "s_{i} is not defined in S_{n}");
        let mut w = Self::identity(n);
        w.images.swap(i - 1, i);
        w
    }

    /// Transposition `t_{jk}` exchanging `j` and `k` (1-based).
    pub fn transposition(j: usize, k: usize, n: usize) -> Self {
        let mut w = Self::identity(n);
        w.images.swap(j - 1, k - 1);
        w
    }

    /// The longest element `w_0 = (n, n-1, ..., 1)`.
    pub fn longest(n: usize) -> Self {
        Permutation { images: (1..=n).rev().collect() }
    }

    /// All of `S_n` in lexicographic order of one-line notation.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut cur: Vec<usize> = (1..=n).collect();
        let mut out = vec![Permutation { images: cur.clone() }];
        loop {
            let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else {
                return out;
            };
            let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
            cur.swap(i - 1, j);
            cur[i..].reverse();
            out.push(Permutation { images: cur.clone() });
        }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// `w(i)` for 1-based `i`.
    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.images;
        (0..w.len()).map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count()).sum()
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.n()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { images: inv }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.n() != other.n() {
            return dimension(format!("cannot compose S_{} with S_{}", self.n(), other.n()));
        }
        Ok(Permutation { images: other.images.iter().map(|&j| self.images[j - 1]).collect() })
    }

    /// `self ∘ s_i`: swaps positions `i` and `i + 1`.
    pub fn mul_simple(&self, i: usize) -> Permutation {
        let mut w = self.clone();
        w.images.swap(i - 1, i);
        w
    }

    /// `s_i ∘ self`: swaps the values `i` and `i + 1`.
    pub fn simple_mul(&self, i: usize) -> Permutation {
        Permutation {
            images: self
                .images
                .iter()
                .map(|&v| if v == i { i + 1 } else if v == i + 1 { i } else { v })
                .collect(),
        }
    }

    /// Right descents: positions `i` with `w(i) > w(i + 1)`.
    pub fn descents(&self) -> Vec<usize> {
        (1..self.n()).filter(|&i| self.images[i - 1] > self.images[i]).collect()
    }

    /// `w × 1 ∈ S_{n+1}`.
    pub fn embed(&self) -> Permutation {
        let mut images = self.images.clone();
        images.push(self.n() + 1);
        Permutation { images }
    }

    /// `code_i = #{ j > i : w(j) < w(i) }`.
    pub fn lehmer_code(&self) -> Vec<usize> {
        let w = &self.images;
        (0..w.len()).map(|i| (i + 1..w.len()).filter(|&j| w[j] < w[i]).count()).collect()
    }

    /// Rank function `r_w(p, q) = #{ i <= p : w(i) <= q }`.
    pub fn rank(&self, p: usize, q: usize) -> Result<usize> {
        let n = self.n();
        if p < 1 || p > n || q < 1 || q > n {
            return domain(format!("rank arguments ({p},{q}) outside 1..={n}"));
        }
        Ok(self.images[..p].iter().filter(|&&v| v <= q).count())
    }

    /// Reduced word built by repeatedly stripping the largest descent.
    pub fn reduced_word(&self) -> ReducedWord {
        self.reduced_word_by(|d| *d.last().unwrap())
    }

    /// Reduced word built by repeatedly stripping the smallest descent.
    pub fn reduced_word_smallest_descent(&self) -> ReducedWord {
        self.reduced_word_by(|d| d[0])
    }

    fn reduced_word_by(&self, pick: impl Fn(&[usize]) -> usize) -> ReducedWord {
        let mut w = self.clone();
        let mut rev = Vec::with_capacity(self.length());
        loop {
            let d = w.descents();
            if d.is_empty() {
                break;
            }
            let i = pick(&d);
            w = w.mul_simple(i);
            rev.push(i);
        }
        rev.reverse();
        ReducedWord { letters: rev }
    }

    /// Every reduced word, in lexicographic order of letters. Exponential; meant
    /// for small `n`.
    pub fn reduced_words(&self) -> Vec<ReducedWord> {
        fn rec(w: &Permutation, suffix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            let d = w.descents();
            if d.is_empty() {
                let mut word = suffix.clone();
                word.reverse();
                out.push(word);
                return;
            }
            for i in d {
                suffix.push(i);
                rec(&w.mul_simple(i), suffix, out);
                suffix.pop();
            }
        }
        let mut out = Vec::new();
        rec(self, &mut Vec::new(), &mut out);
        out.sort();
        out.into_iter().map(|letters| ReducedWord { letters }).collect()
    }
}

/// Index sets `i_1 < ... < i_l` with `s_{letters[i_1]} ... s_{letters[i_l]}` a
/// reduced word of `w`, in lexicographic order.
///
/// A letter is taken only if the partial product stays a reduced left factor of `w`.
pub fn reduced_subwords(w: &Permutation, letters: &[usize]) -> Vec<Vec<usize>> {
    fn rec(
        w: &Permutation,
        letters: &[usize],
        from: usize,
        u: &Permutation,
        chosen: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let target = w.length();
        let have = chosen.len();
        if have == target {
            if u == w {
                out.push(chosen.clone());
            }
            return;
        }
        if letters.len() - from < target - have {
            return;
        }
        for idx in from..letters.len() {
            let a = letters[idx];
            if u.image(a) > u.image(a + 1) {
                continue;
            }
            let next = u.mul_simple(a);
            let rest = next.inverse().compose(w).expect("same n");
            if rest.length() + have + 1 != target {
                continue;
            }
            chosen.push(idx);
            rec(w, letters, idx + 1, &next, chosen, out);
            chosen.pop();
        }
    }
    let mut out = Vec::new();
    rec(w, letters, 0, &Permutation::identity(w.n()), &mut Vec::new(), &mut out);
    out
}

/// Inverse of [`Permutation::lehmer_code`].
pub fn perm_from_code(code: &[usize], n: usize) -> Result<Permutation> {
    if code.len() > n {
        return domain(format!("code {code:?} longer than n = {n}"));
    }
    let mut avail: Vec<usize> = (1..=n).collect();
    let mut images = Vec::with_capacity(n);
    for i in 0..n {
        let c = code.get(i).copied().unwrap_or(0);
        if c > n - 1 - i {
            return domain(format!("code entry {c} at position {} exceeds {}", i + 1, n - 1 - i));
        }
        images.push(avail.remove(c));
    }
    Ok(Permutation { images })
}

/// Bruhat order via rank functions: `v <= w` iff `r_v(p,q) >= r_w(p,q)` everywhere.
pub fn bruhat_leq(v: &Permutation, w: &Permutation) -> Result<bool> {
    let n = v.n();
    if n != w.n() {
        return dimension(format!("Bruhat comparison of S_{} with S_{}", n, w.n()));
    }
    for p in 1..=n {
        for q in 1..=n {
            if v.rank(p, q)? < w.rank(p, q)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub fn compose(a: &Permutation, b: &Permutation) -> Result<Permutation> {
    a.compose(b)
}

pub fn reduced_word(w: &Permutation) -> ReducedWord {
    w.reduced_word()
}

impl fmt::Display for Permutation {
    /// Digit string for `n <= 9`, comma-separated list otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= 9 {
            for v in &self.images {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let s: Vec<String> = self.images.iter().map(usize::to_string).collect();
            write!(f, "{}", s.join(","))
        }
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts `1432`, `1,4,3,2` and the same wrapped in parentheses.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let t = t.strip_prefix('(').and_then(|u| u.strip_suffix(')')).unwrap_or(t);
        let bad = || Error::Parse(format!("bad permutation literal {s:?}"));
        let images: Vec<usize> = if t.contains(',') {
            t.split(',').map(|p| p.trim().parse::<usize>().map_err(|_| bad())).collect::<Result<_>>()?
        } else {
            t.chars().map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad)).collect::<Result<_>>()?
        };
        if images.is_empty() {
            return Err(bad());
        }
        Permutation::new(images).map_err(|_| bad())
    }
}

/// Word in the simple transpositions `s_1, ..., s_{n-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ReducedWord {
    pub letters: Vec<usize>,
}

impl ReducedWord {
    pub fn new(letters: Vec<usize>) -> Self {
        ReducedWord { letters }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `s_{i_1} ∘ ... ∘ s_{i_k}` in `S_n`.
    pub fn product(&self, n: usize) -> Result<Permutation> {
        let mut w = Permutation::identity(n);
        for &i in &self.letters {
            if i < 1 || i >= n {
                return domain(format!("letter s_{i} outside S_{n}"));
            }
            w = w.mul_simple(i);
        }
        Ok(w)
    }

    /// `true` iff the product has length equal to the number of letters.
    pub fn is_reduced(&self, n: usize) -> bool {
        self.product(n).is_ok_and(|w| w.length() == self.letters.len())
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.letters.iter().map(|i| format!("s{i}")).collect();
        write!(f, "{}", s.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn lengths() {
        assert_eq!(w("25413").length(), 6);
        assert_eq!(Permutation::identity(5).length(), 0);
        for n in 1..7 {
            assert_eq!(Permutation::longest(n).length(), n * (n - 1) / 2);
        }
    }

    #[test]
    fn codes() {
        assert_eq!(Permutation::identity(4).lehmer_code(), vec![0; 4]);
        assert_eq!(Permutation::longest(3).lehmer_code(), vec![2, 1, 0]);
        assert_eq!(w("25413").lehmer_code(), vec![1, 3, 2, 0, 0]);
        for p in Permutation::all(5) {
            let c = p.lehmer_code();
            assert_eq!(c.iter().sum::<usize>(), p.length());
            assert_eq!(perm_from_code(&c, 5).unwrap(), p);
        }
        assert!(perm_from_code(&[3, 0, 0], 3).is_err());
    }

    #[test]
    fn ranks() {
        let p = w("25413");
        assert_eq!(p.rank(5, 5).unwrap(), 5);
        assert_eq!(p.rank(2, 4).unwrap(), 1);
        let id = Permutation::identity(4);
        for a in 1..=4 {
            for b in 1..=4 {
                assert_eq!(id.rank(a, b).unwrap(), a.min(b));
            }
        }
        assert!(p.rank(0, 1).is_err());
        assert!(p.rank(1, 6).is_err());
    }

    #[test]
    fn bruhat_examples() {
        assert!(bruhat_leq(&w("132"), &w("312")).unwrap());
        assert!(!bruhat_leq(&w("312"), &w("231")).unwrap());
        assert!(!bruhat_leq(&w("231"), &w("312")).unwrap());
        for v in Permutation::all(4) {
            assert!(bruhat_leq(&Permutation::identity(4), &v).unwrap());
            assert!(bruhat_leq(&v, &Permutation::longest(4)).unwrap());
        }
        assert!(bruhat_leq(&w("12"), &w("123")).is_err());
    }

    #[test]
    fn bruhat_is_partial_order_on_s4() {
        let all = Permutation::all(4);
        let leq: Vec<Vec<bool>> =
            all.iter().map(|a| all.iter().map(|b| bruhat_leq(a, b).unwrap()).collect()).collect();
        for i in 0..24 {
            assert!(leq[i][i]);
            for j in 0..24 {
                if i != j && leq[i][j] {
                    assert!(!leq[j][i]);
                }
                for k in 0..24 {
                    if leq[i][j] && leq[j][k] {
                        assert!(leq[i][k]);
                    }
                }
            }
        }
    }

    #[test]
    fn s3_hasse_diagram() {
        // cover relations of S_3
        let all = Permutation::all(3);
        let mut covers = Vec::new();
        for a in &all {
            for b in &all {
                if bruhat_leq(a, b).unwrap() && b.length() == a.length() + 1 {
                    covers.push((a.to_string(), b.to_string()));
                }
            }
        }
        covers.sort();
        let expect: Vec<(String, String)> = [
            ("123", "132"), ("123", "213"), ("132", "231"), ("132", "312"),
            ("213", "231"), ("213", "312"), ("231", "321"), ("312", "321"),
        ]
        .iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect();
        assert_eq!(covers, expect);
    }

    #[test]
    fn reduced_words_multiply_back() {
        assert!(Permutation::identity(4).reduced_word().is_empty());
        for p in Permutation::all(5) {
            for word in [p.reduced_word(), p.reduced_word_smallest_descent()] {
                assert_eq!(word.len(), p.length());
                assert_eq!(word.product(5).unwrap(), p);
            }
        }
        let s1 = Permutation::simple(1, 3);
        assert_eq!(compose(&s1, &s1).unwrap(), Permutation::identity(3));
    }

    #[test]
    fn composition_convention() {
        // s2 s1 = (312) and s1 s2 = (231)
        let s1 = Permutation::simple(1, 3);
        let s2 = Permutation::simple(2, 3);
        assert_eq!(s2.compose(&s1).unwrap(), w("312"));
        assert_eq!(s1.compose(&s2).unwrap(), w("231"));
        assert_eq!(ReducedWord::new(vec![2, 1]).product(3).unwrap(), w("312"));
    }

    #[test]
    fn word_3213() {
        let word = ReducedWord::new(vec![3, 2, 1, 3]);
        assert!(word.is_reduced(4));
        assert_eq!(word.product(4).unwrap(), w("4132"));
        // (4231) is the transposition t_{14}; it has length 5
        assert_eq!(w("4231").length(), 5);
        assert_eq!(w("4231").reduced_word().len(), 5);
    }

    #[test]
    fn all_reduced_words_of_w0_s3() {
        let words: Vec<Vec<usize>> = Permutation::longest(3).reduced_words().into_iter().map(|r| r.letters).collect();
        assert_eq!(words, vec![vec![1, 2, 1], vec![2, 1, 2]]);
    }

    #[test]
    fn parsing() {
        assert_eq!(w("1432").images(), &[1, 4, 3, 2]);
        assert_eq!(w("(1,4,3,2)"), w("1432"));
        assert!("1224".parse::<Permutation>().is_err());
        assert!("".parse::<Permutation>().is_err());
        let big = Permutation::longest(10);
        assert_eq!(big.to_string(), "10,9,8,7,6,5,4,3,2,1");
        assert_eq!(big.to_string().parse::<Permutation>().unwrap(), big);
    }
}
