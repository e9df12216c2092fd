//! Integer lattices represented by a row Hermite normal form, plus an
//! exact integer kernel routine used for primitive direction vectors.

use num::bigint::BigInt;
use num::{Integer, Signed, Zero};

/// A sublattice of Z^n, stored as HNF basis rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntLattice {
    cols: usize,
    basis: Vec<Vec<BigInt>>, // row HNF, pivot columns strictly increasing
    pivots: Vec<usize>,
}

impl IntLattice {
    pub fn from_rows(cols: usize, rows: &[Vec<BigInt>]) -> Self {
        for r in rows {
            assert_eq!(r.len(), cols);
        }
        let (basis, pivots) = row_hnf(cols, rows.to_vec());
        IntLattice { cols, basis, pivots }
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn basis(&self) -> &[Vec<BigInt>] {
        &self.basis
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Canonical representative of the coset `v + L`; constant on cosets.
    pub fn reduce(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols);
        let mut w = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            let lead = &row[p];
            if !w[p].is_zero() {
                let q = w[p].div_floor(lead);
                if !q.is_zero() {
                    for c in 0..self.cols {
                        w[c] -= &q * &row[c];
                    }
                }
            }
        }
        w
    }
}

/// Row Hermite normal form with positive pivots and pivot rows reduced
/// against each other; returns (rows, pivot columns).
fn row_hnf(cols: usize, mut rows: Vec<Vec<BigInt>>) -> (Vec<Vec<BigInt>>, Vec<usize>) {
    rows.retain(|r| r.iter().any(|x| !x.is_zero()));
    let mut basis: Vec<Vec<BigInt>> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    for mut v in rows {
        loop {
            let Some(p) = v.iter().position(|x| !x.is_zero()) else {
                break;
            };
            match pivots.iter().position(|&q| q == p) {
                Some(i) => {
                    // gcd-combine v into the existing pivot row
                    let (row, vv) = gcd_combine(&basis[i], &v, p);
                    basis[i] = row;
                    v = vv;
                }
                None => {
                    if v[p].is_negative() {
                        for x in v.iter_mut() {
                            *x = -std::mem::take(x);
                        }
                    }
                    let idx = pivots.iter().position(|&q| q > p).unwrap_or(pivots.len());
                    pivots.insert(idx, p);
                    basis.insert(idx, v);
                    break;
                }
            }
        }
    }
    // reduce entries above each pivot
    for i in (0..basis.len()).rev() {
        let p = pivots[i];
        for j in 0..i {
            let q = basis[j][p].div_floor(&basis[i][p]);
            if !q.is_zero() {
                for c in 0..cols {
                    let t = &q * &basis[i][c];
                    basis[j][c] -= t;
                }
            }
        }
    }
    (basis, pivots)
}

/// Replace (a, b), both with leading column p, by (g-row, remainder-row)
/// where the g-row has gcd(a[p], b[p]) at p and the remainder has 0 there.
fn gcd_combine(a: &[BigInt], b: &[BigInt], p: usize) -> (Vec<BigInt>, Vec<BigInt>) {
    let e = a[p].extended_gcd(&b[p]);
    let (g, x, y) = (e.gcd, e.x, e.y);
    let ca = &a[p] / &g;
    let cb = &b[p] / &g;
    let n = a.len();
    let mut row = vec![BigInt::zero(); n];
    let mut rem = vec![BigInt::zero(); n];
    for c in 0..n {
        row[c] = &x * &a[c] + &y * &b[c];
        rem[c] = &ca * &b[c] - &cb * &a[c];
    }
    (row, rem)
}

/// Basis of `{x in Z^n : M x = 0}` for an integer matrix given by rows.
/// Column-HNF elimination on M with a unimodular transform tracked on the
/// identity; columns of the transform hitting zero columns of M are the kernel.
pub fn integer_kernel(rows: &[Vec<BigInt>], cols: usize) -> Vec<Vec<BigInt>> {
    let m = rows.len();
    // work on columns: mat[c] is the c-th column of M
    let mut mat: Vec<Vec<BigInt>> = (0..cols)
        .map(|c| rows.iter().map(|r| r[c].clone()).collect())
        .collect();
    let mut u: Vec<Vec<BigInt>> = (0..cols)
        .map(|c| {
            (0..cols)
                .map(|i| if i == c { BigInt::from(1) } else { BigInt::zero() })
                .collect()
        })
        .collect();
    let mut lead = 0; // next column slot to fix a pivot in
    for r in 0..m {
        loop {
            let nz: Vec<usize> = (lead..cols).filter(|&c| !mat[c][r].is_zero()).collect();
            match nz.len() {
                0 => break,
                1 => {
                    mat.swap(lead, nz[0]);
                    u.swap(lead, nz[0]);
                    lead += 1;
                    break;
                }
                _ => {
                    // combine the two smallest-|entry| columns
                    let mut picks = nz;
                    picks.sort_by_key(|&c| mat[c][r].abs());
                    let (i, j) = (picks[0], picks[1]);
                    let q = mat[j][r].div_floor(&mat[i][r]);
                    for rr in 0..m {
                        let t = &q * &mat[i][rr];
                        mat[j][rr] -= t;
                    }
                    for rr in 0..cols {
                        let t = &q * &u[i][rr];
                        u[j][rr] -= t;
                    }
                }
            }
        }
    }
    (lead..cols).map(|c| u[c].clone()).collect()
}

/// Divide out the gcd of the entries; sign chosen so the first nonzero
/// entry is positive. Zero vectors pass through.
pub fn primitive(v: &[BigInt]) -> Vec<BigInt> {
    let mut g = BigInt::zero();
    for x in v {
        g = g.gcd(x);
    }
    if g.is_zero() {
        return v.to_vec();
    }
    let mut out: Vec<BigInt> = v.iter().map(|x| x / &g).collect();
    if out.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
        for x in out.iter_mut() {
            *x = -std::mem::take(x);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bv(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn hnf_membership() {
        let l = IntLattice::from_rows(2, &[bv(&[2, 0]), bv(&[0, 3])]);
        assert!(l.contains(&bv(&[4, -3])));
        assert!(!l.contains(&bv(&[1, 0])));
        assert_eq!(l.rank(), 2);
    }

    #[test]
    fn coset_reduce_is_constant_on_cosets() {
        let l = IntLattice::from_rows(2, &[bv(&[1, -1])]);
        let a = l.reduce(&bv(&[5, 2]));
        let b = l.reduce(&bv(&[7, 0]));
        assert_eq!(a, b);
        assert_ne!(a, l.reduce(&bv(&[5, 3])));
    }

    #[test]
    fn kernel_of_sum_map() {
        let k = integer_kernel(&[bv(&[1, 1, 1])], 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            let s: BigInt = v.iter().sum();
            assert!(s.is_zero());
        }
        // kernel vectors + pivot column generate Z^3 up to the right rank
        let l = IntLattice::from_rows(3, &k);
        assert_eq!(l.rank(), 2);
    }

    #[test]
    fn primitive_normalizes() {
        assert_eq!(primitive(&bv(&[-4, 6])), bv(&[2, -3]));
        assert_eq!(primitive(&bv(&[0, 0])), bv(&[0, 0]));
    }
}
