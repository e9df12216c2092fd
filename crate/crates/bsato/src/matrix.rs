//! Exact linear algebra over the rationals: rank, reduced row echelon form,
//! linear solves and nullspaces by fraction-based Gaussian elimination.

use crate::rational::Rat;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl QMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Rat>) -> Self {
        assert_eq!(data.len(), rows * cols);
        QMatrix { rows, cols, data }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: &[Vec<Rat>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols);
            data.extend(r.iter().cloned());
        }
        QMatrix {
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rat {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rat) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rat] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> QMatrix {
        let mut out = QMatrix::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c).clone());
            }
        }
        out
    }

    /// Reduced row echelon form together with the pivot column indices.
    pub fn rref(&self) -> (QMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            for c in 0..m.cols {
                m.data.swap(row * m.cols + c, p * m.cols + c);
            }
            let inv = m.get(row, col).recip().unwrap();
            for c in 0..m.cols {
                let v = m.get(row, c) * &inv;
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r != row && !m.get(r, col).is_zero() {
                    let f = m.get(r, col).clone();
                    for c in 0..m.cols {
                        let v = m.get(r, c) - &(&f * m.get(row, c));
                        m.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// One solution of `self * x = rhs`, if any.
    pub fn solve(&self, rhs: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(rhs.len(), self.rows);
        let mut aug = QMatrix::zero(self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, self.cols, rhs[r].clone());
        }
        let (red, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None; // inconsistent
        }
        let mut x = vec![Rat::zero(); self.cols];
        for (i, &col) in pivots.iter().enumerate() {
            x[col] = red.get(i, self.cols).clone();
        }
        Some(x)
    }

    /// Basis of the right nullspace `{x : self * x = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<Rat>> {
        let (red, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::new();
        for &f in &free {
            let mut v = vec![Rat::zero(); self.cols];
            v[f] = Rat::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -red.get(i, f);
            }
            basis.push(v);
        }
        basis
    }
}

/// Rank of the span of a set of rational vectors.
pub fn span_rank(vectors: &[Vec<Rat>]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    QMatrix::from_rows(vectors).rank()
}

/// True if `v` lies in the span of `basis`.
pub fn in_span(basis: &[Vec<Rat>], v: &[Rat]) -> bool {
    let mut rows: Vec<Vec<Rat>> = basis.to_vec();
    let r0 = span_rank(&rows);
    rows.push(v.to_vec());
    span_rank(&rows) == r0
}

/// Row-space basis in reduced echelon form (canonical for subspace equality).
pub fn row_basis(vectors: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let (red, pivots) = QMatrix::from_rows(vectors).rref();
    (0..pivots.len()).map(|r| red.row(r).to_vec()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn m(rows: &[&[i64]]) -> QMatrix {
        let rows: Vec<Vec<Rat>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| rat(x, 1)).collect())
            .collect();
        QMatrix::from_rows(&rows)
    }

    #[test]
    fn rank_examples() {
        assert_eq!(m(&[&[1, 0], &[0, 1]]).rank(), 2);
        assert_eq!(m(&[&[1, 0, -1], &[1, 0, 1], &[2, 0, 0]]).rank(), 2);
        assert_eq!(m(&[&[0, 0], &[0, 0]]).rank(), 0);
    }

    #[test]
    fn solve_and_nullspace() {
        let a = m(&[&[1, 2], &[3, 4]]);
        let x = a.solve(&[rat(5, 1), rat(11, 1)]).unwrap();
        assert_eq!(x, vec![rat(1, 1), rat(2, 1)]);

        let b = m(&[&[1, 1, 1]]);
        let ns = b.nullspace();
        assert_eq!(ns.len(), 2);
        for v in ns {
            let s = v.iter().fold(Rat::zero(), |acc, x| acc + x);
            assert!(s.is_zero());
        }
    }
}
