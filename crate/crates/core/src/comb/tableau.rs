use std::fmt;

use super::Partition;

/// Filling of a Young diagram, row by row.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tableau {
    shape: Partition,
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    /// Panics unless the row lengths match a partition.
    pub fn new(rows: Vec<Vec<u32>>) -> Self {
        let shape = Partition::new(rows.iter().map(|r| r.len() as u32).collect());
        Tableau { shape, rows }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Entries row by row, left to right.
    pub fn reading_word(&self) -> Vec<u32> {
        self.rows.iter().flatten().copied().collect()
    }

    pub fn is_semistandard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]));
        let cols_ok = self
            .rows
            .windows(2)
            .all(|w| w[1].iter().zip(&w[0]).all(|(below, above)| below > above));
        rows_ok && cols_ok && self.rows.iter().flatten().all(|&v| v >= 1)
    }

    pub fn is_standard(&self) -> bool {
        let mut entries = self.reading_word();
        entries.sort_unstable();
        self.is_semistandard()
            && self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]))
            && entries.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    /// Exponent of `x^T`: how often each of `1..=k` occurs.
    pub fn content(&self, k: usize) -> Vec<u32> {
        let mut e = vec![0u32; k];
        for &v in self.rows.iter().flatten() {
            e[v as usize - 1] += 1;
        }
        e
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(u32::to_string).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "{}", rows.join(" / "))
    }
}

/// All semistandard tableaux of shape `lambda` with entries in `1..=k`, in
/// lexicographic order of the reading word.
pub fn ssyt_enumerate(lambda: &Partition, k: usize) -> Vec<Tableau> {
    let mut out = Vec::new();
    if lambda.len() > k {
        return out;
    }
    let shape: Vec<usize> = lambda.parts().iter().map(|&p| p as usize).collect();
    let mut rows: Vec<Vec<u32>> = shape.iter().map(|&len| Vec::with_capacity(len)).collect();
    fn rec(shape: &[usize], k: u32, r: usize, rows: &mut Vec<Vec<u32>>, out: &mut Vec<Tableau>) {
        if r == shape.len() {
            out.push(Tableau::new(rows.clone()));
            return;
        }
        let c = rows[r].len();
        if c == shape[r] {
            rec(shape, k, r + 1, rows, out);
            return;
        }
        let left = if c > 0 { rows[r][c - 1] } else { 1 };
        let above = if r > 0 { rows[r - 1][c] + 1 } else { 1 };
        // entries in row r are at least r + 1, and the column below needs room
        let below_rows = shape[r + 1..].iter().take_while(|&&len| len > c).count() as u32;
        let hi = k - below_rows;
        for v in left.max(above)..=hi {
            rows[r].push(v);
            rec(shape, k, r, rows, out);
            rows[r].pop();
        }
    }
    rec(&shape, k as u32, 0, &mut rows, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn counts() {
        assert_eq!(ssyt_enumerate(&p(&[2, 1]), 3).len(), 8);
        assert!(ssyt_enumerate(&p(&[1, 1, 1]), 2).is_empty());
        let two: Vec<Vec<u32>> = ssyt_enumerate(&p(&[2]), 2).iter().map(Tableau::reading_word).collect();
        assert_eq!(two, vec![vec![1, 1], vec![1, 2], vec![2, 2]]);
        assert_eq!(ssyt_enumerate(&Partition::empty(), 3).len(), 1);
    }

    #[test]
    fn enumeration_is_sorted_and_valid() {
        for lambda in crate::comb::partitions_in_box(crate::comb::Rect::new(3, 3)) {
            let all = ssyt_enumerate(&lambda, 4);
            let words: Vec<Vec<u32>> = all.iter().map(Tableau::reading_word).collect();
            let mut sorted = words.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(words, sorted);
            assert!(all.iter().all(|t| t.is_semistandard() && t.shape() == &lambda));
        }
    }

    #[test]
    fn brute_force_agrees() {
        // every filling of (2,2) with entries in 1..=3
        let lambda = p(&[2, 2]);
        let mut count = 0;
        for a in 1..=3 {
            for b in 1..=3 {
                for c in 1..=3 {
                    for d in 1..=3 {
                        if Tableau::new(vec![vec![a, b], vec![c, d]]).is_semistandard() {
                            count += 1;
                        }
                    }
                }
            }
        }
        assert_eq!(ssyt_enumerate(&lambda, 3).len(), count);
    }

    #[test]
    fn standardness() {
        assert!(Tableau::new(vec![vec![1, 2], vec![3, 4]]).is_standard());
        assert!(Tableau::new(vec![vec![1, 3], vec![2, 4]]).is_standard());
        assert!(!Tableau::new(vec![vec![1, 4], vec![2, 3]]).is_standard());
        assert!(!Tableau::new(vec![vec![2, 1], vec![3, 4]]).is_standard());
    }
}
