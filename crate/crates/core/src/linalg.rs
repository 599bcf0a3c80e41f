//! Exact linear algebra: fraction-free determinants of polynomial
//! matrices, Sylvester resultants, and null spaces of scalar matrices.

use crate::poly::QHPoly;
use crate::scalar::GaussRat;

/// Determinant by the Bareiss one-step fraction-free scheme. Every
/// division along the way is exact (each entry stays a minor of the
/// input matrix up to sign), so polynomial entries never leave the ring.
pub fn det_bareiss(mut m: Vec<Vec<QHPoly>>) -> QHPoly {
    let n = m.len();
    if n == 0 {
        return QHPoly::one();
    }
    for row in &m {
        assert_eq!(row.len(), n, "determinant needs a square matrix");
    }
    let mut sign = 1i32;
    let mut prev = QHPoly::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return QHPoly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = if num.is_zero() {
                    QHPoly::zero()
                } else {
                    num.div_exact(&prev).expect("fraction-free step divides exactly")
                };
            }
            m[i][k] = QHPoly::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

/// Sylvester resultant of p and q with respect to variable v. The first
/// deg(q) rows carry p's coefficients (descending), the remaining
/// deg(p) rows carry q's. Zero input gives zero; two polynomials both
/// constant in v give 1 (empty matrix).
pub fn resultant(p: &QHPoly, q: &QHPoly, v: usize) -> QHPoly {
    if p.is_zero() || q.is_zero() {
        return QHPoly::zero();
    }
    let pc = p.coeffs_in(v);
    let qc = q.coeffs_in(v);
    let m = pc.len() - 1;
    let n = qc.len() - 1;
    let size = m + n;
    let mut mat = vec![vec![QHPoly::zero(); size]; size];
    for r in 0..n {
        for (i, c) in pc.iter().rev().enumerate() {
            mat[r][r + i] = c.clone();
        }
    }
    for r in 0..m {
        for (i, c) in qc.iter().rev().enumerate() {
            mat[n + r][r + i] = c.clone();
        }
    }
    det_bareiss(mat)
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(mat: &mut Vec<Vec<GaussRat>>) -> Vec<usize> {
    let rows = mat.len();
    let cols = if rows == 0 { 0 } else { mat[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(pr) = (r..rows).find(|&i| !mat[i][c].is_zero()) else {
            continue;
        };
        mat.swap(r, pr);
        let inv = mat[r][c].inv();
        for j in c..cols {
            mat[r][j] = &mat[r][j] * &inv;
        }
        for i in 0..rows {
            if i != r && !mat[i][c].is_zero() {
                let f = mat[i][c].clone();
                for j in c..cols {
                    let t = &mat[r][j] * &f;
                    mat[i][j] = &mat[i][j] - &t;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    pivots
}

pub fn rank(mut mat: Vec<Vec<GaussRat>>) -> usize {
    rref(&mut mat).len()
}

/// Basis of the null space of the matrix (as row-vectors of length =
/// number of columns). One basis vector per free column, with entry 1
/// in that column.
pub fn kernel_basis(mut mat: Vec<Vec<GaussRat>>) -> Vec<Vec<GaussRat>> {
    let cols = if mat.is_empty() { 0 } else { mat[0].len() };
    let pivots = rref(&mut mat);
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = vec![GaussRat::zero(); cols];
        v[free] = GaussRat::one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -&mat[row][free];
        }
        basis.push(v);
    }
    basis
}

/// Determinant of a scalar matrix by Gaussian elimination; division is
/// exact over the field, so no fraction-free bookkeeping is needed.
pub fn det_scalar(mut m: Vec<Vec<GaussRat>>) -> GaussRat {
    let n = m.len();
    if n == 0 {
        return GaussRat::one();
    }
    for row in &m {
        assert_eq!(row.len(), n, "determinant needs a square matrix");
    }
    let mut det = GaussRat::one();
    for c in 0..n {
        let Some(pr) = (c..n).find(|&r| !m[r][c].is_zero()) else {
            return GaussRat::zero();
        };
        if pr != c {
            m.swap(c, pr);
            det = -det;
        }
        det = &det * &m[c][c];
        let inv = m[c][c].inv();
        for r in c + 1..n {
            if m[r][c].is_zero() {
                continue;
            }
            let f = &m[r][c] * &inv;
            for j in c..n {
                let t = &m[c][j] * &f;
                m[r][j] = &m[r][j] - &t;
            }
        }
    }
    det
}
