//! Matrices of polynomials: determinants and minors.

use super::{PolyError, PolyRing, Polynomial};
use std::collections::HashMap;

/// A dense row-major matrix of polynomials over one ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Polynomial>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows*cols");
        PolyMatrix { rows, cols, entries }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        PolyMatrix { rows, cols, entries: vec![Polynomial::zero(); rows * cols] }
    }

    pub fn identity(ring: &PolyRing, n: usize) -> Self {
        let mut m = PolyMatrix::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = ring.one_poly();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Polynomial {
        &self.entries[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut Polynomial {
        &mut self.entries[r * self.cols + c]
    }

    pub fn column(&self, c: usize) -> Vec<Polynomial> {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    pub fn row(&self, r: usize) -> Vec<Polynomial> {
        (0..self.cols).map(|c| self.at(r, c).clone()).collect()
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn augment(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.rows, other.rows);
        let mut entries = Vec::with_capacity(self.rows * (self.cols + other.cols));
        for r in 0..self.rows {
            entries.extend_from_slice(&self.entries[r * self.cols..(r + 1) * self.cols]);
            entries.extend_from_slice(&other.entries[r * other.cols..(r + 1) * other.cols]);
        }
        PolyMatrix::new(self.rows, self.cols + other.cols, entries)
    }

    pub fn matmul(&self, ring: &PolyRing, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = PolyMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Polynomial::zero();
                for k in 0..self.cols {
                    acc = ring.add(&acc, &ring.mul(self.at(i, k), other.at(k, j)));
                }
                *out.at_mut(i, j) = acc;
            }
        }
        out
    }

    /// Exact determinant by division-free cofactor expansion, memoized over
    /// column subsets. Matrix sizes in this crate stay small (<= ~8).
    pub fn determinant(&self, ring: &PolyRing) -> Result<Polynomial, PolyError> {
        if self.rows != self.cols {
            return Err(PolyError::NonSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(ring.one_poly());
        }
        let cols: Vec<usize> = (0..n).collect();
        let mut memo: HashMap<u64, Polynomial> = HashMap::new();
        Ok(self.det_rec(ring, &cols, &mut memo))
    }

    /// Expands over the row `|cols|-1` of the submatrix formed by the first
    /// `|cols|` rows and the given columns.
    fn det_rec(&self, ring: &PolyRing, cols: &[usize], memo: &mut HashMap<u64, Polynomial>) -> Polynomial {
        let k = cols.len();
        if k == 0 {
            return ring.one_poly();
        }
        let key = cols.iter().fold(0u64, |acc, c| acc | (1u64 << c));
        if let Some(hit) = memo.get(&key) {
            return hit.clone();
        }
        let mut acc = Polynomial::zero();
        for (j, &c) in cols.iter().enumerate() {
            let entry = self.at(k - 1, c);
            if entry.is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols
                .iter()
                .copied()
                .filter(|&cc| cc != c)
                .collect();
            let sub = self.det_rec(ring, &rest, memo);
            let signed = if (k - 1 + j) % 2 == 0 { ring.mul(entry, &sub) } else { ring.neg(&ring.mul(entry, &sub)) };
            acc = ring.add(&acc, &signed);
        }
        memo.insert(key, acc.clone());
        acc
    }

    /// All k x k minors, in lexicographic order of (row-set, column-set).
    pub fn minors(&self, ring: &PolyRing, k: usize) -> Result<Vec<Polynomial>, PolyError> {
        if k == 0 || k > self.rows || k > self.cols {
            return Err(PolyError::MinorSize { k, rows: self.rows, cols: self.cols });
        }
        let row_sets = subsets_lex(self.rows, k);
        let col_sets = subsets_lex(self.cols, k);
        let mut out = Vec::with_capacity(row_sets.len() * col_sets.len());
        for rs in &row_sets {
            for cs in &col_sets {
                let entries: Vec<Polynomial> = rs
                    .iter()
                    .flat_map(|&r| cs.iter().map(move |&c| self.at(r, c).clone()))
                    .collect();
                let sub = PolyMatrix::new(k, k, entries);
                out.push(sub.determinant(ring)?);
            }
        }
        Ok(out)
    }
}

/// All size-k subsets of {0..n-1} as ascending index vectors, lexicographic.
pub fn subsets_lex(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        // advance to next combination
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_determinant() {
        let r = PolyRing::rationals(&["x", "y", "z"]);
        let m = PolyMatrix::identity(&r, 3);
        assert_eq!(m.determinant(&r).unwrap(), r.one_poly());
    }

    #[test]
    fn two_by_two_formula() {
        let r = PolyRing::rationals(&["x", "y", "z", "t"]);
        let m = PolyMatrix::new(
            2,
            2,
            vec![r.var(0), r.var(1), r.var(2), r.var(3)],
        );
        let det = m.determinant(&r).unwrap();
        assert_eq!(det, r.parse("x*t - y*z").unwrap());
    }

    #[test]
    fn repeated_row_vanishes() {
        let r = PolyRing::rationals(&["x", "y", "z", "t"]);
        let row: Vec<Polynomial> = vec![
            r.parse("x").unwrap(),
            r.parse("y+1").unwrap(),
            r.parse("z^2").unwrap(),
            r.parse("t").unwrap(),
        ];
        let mut entries = Vec::new();
        entries.extend(row.clone());
        entries.extend(vec![r.var(3), r.var(2), r.var(1), r.var(0)]);
        entries.extend(row.clone());
        entries.extend(vec![r.one_poly(), r.var(0), r.var(1), r.var(2)]);
        let m = PolyMatrix::new(4, 4, entries);
        assert!(m.determinant(&r).unwrap().is_zero());
    }

    #[test]
    fn non_square_rejected() {
        let r = PolyRing::rationals(&["x"]);
        let m = PolyMatrix::zero(2, 3);
        assert!(m.determinant(&r).is_err());
    }

    #[test]
    fn one_by_one_minors() {
        let r = PolyRing::rationals(&["x", "y", "z", "t"]);
        let m = PolyMatrix::new(2, 2, vec![r.var(0), r.var(1), r.var(2), r.var(3)]);
        let ms = m.minors(&r, 1).unwrap();
        assert_eq!(ms, vec![r.var(0), r.var(1), r.var(2), r.var(3)]);
    }

    #[test]
    fn two_by_two_minors_of_catalecticant() {
        let r = PolyRing::rationals(&["x", "y", "z", "t"]);
        let m = PolyMatrix::new(
            2,
            3,
            vec![r.var(0), r.var(1), r.var(2), r.var(1), r.var(2), r.var(3)],
        );
        let ms = m.minors(&r, 2).unwrap();
        assert_eq!(ms.len(), 3);
        assert_eq!(ms[0], r.parse("x*z - y^2").unwrap());
        assert_eq!(ms[1], r.parse("x*t - y*z").unwrap());
        assert_eq!(ms[2], r.parse("y*t - z^2").unwrap());
    }

    #[test]
    fn subset_enumeration_is_lex() {
        assert_eq!(
            subsets_lex(4, 2),
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        assert_eq!(subsets_lex(3, 0), vec![Vec::<usize>::new()]);
        assert!(subsets_lex(2, 3).is_empty());
    }
}
