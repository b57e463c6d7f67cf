//! Pipe dreams (rc-graphs) and the Fomin–Kirillov formula.
//!
//! Only the cells `(i, j)` with `i + j <= n` are stored; on and below the
//! antidiagonal every tile is an elbow.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use crate::comb::{reduced_subwords, Permutation, ReducedWord};
use crate::error::{domain, Result};
use crate::poly::{rat, MultiPoly};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PipeDream {
    n: usize,
    crosses: BTreeSet<(usize, usize)>,
}

/// Result of pushing every strand through the grid at once.
struct Traced {
    /// `left[r-1]` is the strand leaving row `r` on the left edge.
    left: Vec<usize>,
    /// Strand pairs in the order their crossings are met.
    pairs: Vec<(usize, usize)>,
}

impl PipeDream {
    pub fn new(n: usize, crosses: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let crosses: BTreeSet<_> = crosses.into_iter().collect();
        if let Some(&(i, j)) = crosses.iter().find(|&&(i, j)| i < 1 || j < 1 || i + j > n) {
            return domain(format!("cross at ({i},{j}) lies outside the staircase of size {n}"));
        }
        Ok(PipeDream { n, crosses })
    }

    pub fn empty(n: usize) -> Self {
        PipeDream { n, crosses: BTreeSet::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn crosses(&self) -> &BTreeSet<(usize, usize)> {
        &self.crosses
    }

    pub fn is_cross(&self, i: usize, j: usize) -> bool {
        self.crosses.contains(&(i, j))
    }

    /// Crosses per row, rows `1..n`.
    pub fn row_counts(&self) -> Vec<u32> {
        let mut out = vec![0; self.n];
        for &(i, _) in &self.crosses {
            out[i - 1] += 1;
        }
        out
    }

    /// `d(P) = ∏ x_k^{crosses in row k}`.
    pub fn monomial(&self) -> MultiPoly {
        MultiPoly::monomial(self.row_counts(), rat(1))
    }

    /// Letters `s_{i+j-1}`, rows top to bottom and each row right to left.
    /// Their product is the traced permutation.
    pub fn reading_word(&self) -> ReducedWord {
        let mut letters = Vec::with_capacity(self.crosses.len());
        for i in 1..self.n {
            for j in (1..=self.n - i).rev() {
                if self.is_cross(i, j) {
                    letters.push(i + j - 1);
                }
            }
        }
        ReducedWord::new(letters)
    }

    fn trace(&self) -> Traced {
        let n = self.n;
        // from_top[c-1]: strand entering the current row at column c
        let mut from_top: Vec<usize> = (1..=n).collect();
        let mut left = Vec::with_capacity(n);
        let mut pairs = Vec::new();
        for r in 1..=n {
            let last = n + 1 - r;
            let mut from_right: Option<usize> = None;
            for c in (1..=last).rev() {
                let top = from_top[c - 1];
                // cross: top passes down, right passes left; elbow: top turns left, right turns down
                let (l, b) = if self.is_cross(r, c) {
                    let right = from_right.expect("a cross always has a right neighbour");
                    pairs.push((top.min(right), top.max(right)));
                    (right, Some(top))
                } else {
                    (top, from_right)
                };
                if let Some(b) = b {
                    from_top[c - 1] = b;
                }
                from_right = Some(l);
            }
            left.push(from_right.expect("row has at least one tile"));
        }
        Traced { left, pairs }
    }
}

/// Left-edge reading `π(P)`: `π(r)` is the strand leaving row `r`.
pub fn trace_permutation(p: &PipeDream) -> Permutation {
    Permutation::new(p.trace().left).expect("strands are a bijection")
}

/// No two strands cross twice.
pub fn is_reduced(p: &PipeDream) -> bool {
    let pairs = p.trace().pairs;
    let distinct: HashSet<_> = pairs.iter().collect();
    distinct.len() == pairs.len()
}

/// Every reduced pipe dream of `w`, sorted by cross set.
pub fn enumerate_reduced(w: &Permutation) -> Vec<PipeDream> {
    let n = w.n();
    let cells: Vec<(usize, usize)> =
        (1..n).flat_map(|i| (1..=n - i).rev().map(move |j| (i, j))).collect();
    let letters: Vec<usize> = cells.iter().map(|&(i, j)| i + j - 1).collect();
    let mut dreams: Vec<PipeDream> = reduced_subwords(w, &letters)
        .into_iter()
        .map(|idx| PipeDream::new(n, idx.into_iter().map(|k| cells[k])).expect("cells are in range"))
        .collect();
    dreams.sort();
    dreams
}

/// `Σ d(P)` over reduced pipe dreams of `w`, in `n` variables.
pub fn fk_polynomial(w: &Permutation) -> MultiPoly {
    let mut out = MultiPoly::zero(w.n());
    for p in enumerate_reduced(w) {
        out = &out + &p.monomial();
    }
    out
}

impl fmt::Display for PipeDream {
    /// `+` for a cross, `.` for an elbow, one line per row.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.n {
            let row: String = (1..=self.n + 1 - i).map(|j| if self.is_cross(i, j) { '+' } else { '.' }).collect();
            writeln!(f, "{row}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn figure_configuration() {
        let p = PipeDream::new(4, [(1, 3), (2, 1), (2, 2), (3, 1)]).unwrap();
        assert_eq!(trace_permutation(&p), perm("1342"));
        assert!(!is_reduced(&p));
        assert_eq!(p.reading_word().product(4).unwrap(), perm("1342"));
    }

    #[test]
    fn small_cases() {
        assert_eq!(trace_permutation(&PipeDream::empty(4)), Permutation::identity(4));
        assert!(is_reduced(&PipeDream::empty(4)));
        let one = PipeDream::new(2, [(1, 1)]).unwrap();
        assert_eq!(trace_permutation(&one), perm("21"));
        assert!(PipeDream::new(3, [(2, 2)]).is_err());
    }

    #[test]
    fn dreams_of_132() {
        let ds = enumerate_reduced(&perm("132"));
        let sets: Vec<Vec<_>> = ds.iter().map(|d| d.crosses().iter().copied().collect()).collect();
        assert_eq!(sets, vec![vec![(1, 2)], vec![(2, 1)]]);
        assert!(ds.iter().all(is_reduced));
        assert_eq!(fk_polynomial(&perm("132")), MultiPoly::from_int_terms(3, [(vec![1, 0, 0], 1), (vec![0, 1, 0], 1)]));
    }

    #[test]
    fn dreams_of_1432() {
        let ds = enumerate_reduced(&perm("1432"));
        assert_eq!(ds.len(), 5);
        let expect = MultiPoly::from_int_terms(
            4,
            [(vec![2, 1, 0, 0], 1), (vec![1, 2, 0, 0], 1), (vec![2, 0, 1, 0], 1), (vec![1, 1, 1, 0], 1), (vec![0, 2, 1, 0], 1)],
        );
        assert_eq!(fk_polynomial(&perm("1432")), expect);
        assert_eq!(enumerate_reduced(&Permutation::identity(3)), vec![PipeDream::empty(3)]);
        assert_eq!(fk_polynomial(&Permutation::identity(3)), MultiPoly::one(3));
    }

    #[test]
    fn reading_word_agrees_with_trace() {
        let n = 4;
        let cells: Vec<(usize, usize)> = (1..n).flat_map(|i| (1..=n - i).map(move |j| (i, j))).collect();
        for mask in 0u32..(1 << cells.len()) {
            let cs = cells.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, c)| *c);
            let p = PipeDream::new(n, cs).unwrap();
            let pi = trace_permutation(&p);
            assert_eq!(p.reading_word().product(n).unwrap(), pi);
            assert_eq!(is_reduced(&p), p.crosses().len() == pi.length());
        }
    }

    #[test]
    fn display() {
        let p = PipeDream::new(3, [(1, 2)]).unwrap();
        assert_eq!(p.to_string(), ".+.\n..\n.\n");
    }
}
