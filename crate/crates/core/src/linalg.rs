//! Small dense complex linear-algebra helpers on top of `nalgebra`.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

pub type CMatrix = DMatrix<Complex64>;
pub type CVector = DVector<Complex64>;

pub(crate) const ZERO: Complex64 = Complex64 { re: 0.0, im: 0.0 };
pub(crate) const ONE: Complex64 = Complex64 { re: 1.0, im: 0.0 };

pub fn identity(n: usize) -> CMatrix {
    CMatrix::identity(n, n)
}

/// Frobenius norm. Residuals are reported in this norm; it bounds the
/// operator norm from above.
pub fn frobenius(m: &CMatrix) -> f64 {
    m.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

pub fn vector_norm(v: &CVector) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// `||U^dagger U - I||`.
pub fn unitarity_residual(u: &CMatrix) -> f64 {
    frobenius(&(u.adjoint() * u - identity(u.ncols())))
}

pub fn hermitian_residual(m: &CMatrix) -> f64 {
    frobenius(&(m - m.adjoint()))
}

pub fn matrix_power(m: &CMatrix, mut exp: usize) -> CMatrix {
    let mut base = m.clone();
    let mut acc = identity(m.nrows());
    while exp > 0 {
        if exp & 1 == 1 {
            acc = &acc * &base;
        }
        exp >>= 1;
        if exp > 0 {
            base = &base * &base;
        }
    }
    acc
}

/// Eigendecomposition of the Hermitian part of `m`, eigenvalues ascending.
/// Column `k` of the returned matrix is the eigenvector of eigenvalue `k`.
pub fn hermitian_eigen(m: &CMatrix) -> (Vec<f64>, CMatrix) {
    let n = m.nrows();
    if n == 0 {
        return (Vec::new(), CMatrix::zeros(0, 0));
    }
    let h = (m + m.adjoint()).scale(0.5);
    let eig = h.symmetric_eigen();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let values = order.iter().map(|&k| eig.eigenvalues[k]).collect();
    let vectors = CMatrix::from_fn(n, n, |i, j| eig.eigenvectors[(i, order[j])]);
    (values, vectors)
}

/// Numerical rank: singular values above `rel_tol * max(1, sigma_max)`.
pub fn rank(m: &CMatrix, rel_tol: f64) -> usize {
    if m.nrows() == 0 || m.ncols() == 0 {
        return 0;
    }
    let sv = m.clone().singular_values();
    let top = sv.iter().cloned().fold(0.0f64, f64::max).max(1.0);
    sv.iter().filter(|&&s| s > rel_tol * top).count()
}

/// Spectral norm via the largest singular value.
pub fn spectral_norm(m: &CMatrix) -> f64 {
    if m.nrows() == 0 || m.ncols() == 0 {
        return 0.0;
    }
    m.clone().singular_values().iter().cloned().fold(0.0, f64::max)
}

/// Orthonormal basis for the column span of `m`, at most `max_rank` vectors.
///
/// Greedy pivoted Gram-Schmidt: at each step the remaining column with the
/// largest residual is taken (lowest index on ties), then orthogonalized
/// twice against the accepted vectors. Columns with residual norm below
/// `tol` are never accepted.
pub fn orthonormal_columns(m: &CMatrix, max_rank: usize, tol: f64) -> CMatrix {
    let n = m.nrows();
    let mut residuals: Vec<CVector> = m.column_iter().map(|c| c.into_owned()).collect();
    let mut basis: Vec<CVector> = Vec::new();
    while basis.len() < max_rank {
        let mut best: Option<(usize, f64)> = None;
        for (j, r) in residuals.iter().enumerate() {
            let norm = vector_norm(r);
            if best.is_none_or(|(_, b)| norm > b * (1.0 + 1e-12)) {
                best = Some((j, norm));
            }
        }
        let Some((j, norm)) = best else { break };
        if norm < tol {
            break;
        }
        let mut v = residuals[j].clone();
        for _ in 0..2 {
            for b in &basis {
                let coeff = b.dotc(&v);
                v -= b * coeff;
            }
        }
        let nv = vector_norm(&v);
        if nv < tol {
            break;
        }
        v /= Complex64::from(nv);
        for r in residuals.iter_mut() {
            let coeff = v.dotc(r);
            *r -= &v * coeff;
        }
        basis.push(v);
    }
    let mut out = CMatrix::zeros(n, basis.len());
    for (j, b) in basis.iter().enumerate() {
        out.set_column(j, b);
    }
    out
}

/// Diagonal matrix from complex entries.
pub fn diag(entries: &[Complex64]) -> CMatrix {
    CMatrix::from_diagonal(&CVector::from_column_slice(entries))
}

/// Sum of squared moduli of the off-diagonal entries, square-rooted.
pub fn off_diagonal_norm(m: &CMatrix) -> f64 {
    let mut acc = 0.0;
    for i in 0..m.nrows() {
        for j in 0..m.ncols() {
            if i != j {
                acc += m[(i, j)].norm_sqr();
            }
        }
    }
    acc.sqrt()
}

/// Row-major nested form, used for serialization.
pub fn to_rows(m: &CMatrix) -> Vec<Vec<Complex64>> {
    (0..m.nrows())
        .map(|i| (0..m.ncols()).map(|j| m[(i, j)]).collect())
        .collect()
}

pub fn from_rows(rows: &[Vec<Complex64>]) -> Option<CMatrix> {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, |r| r.len());
    if rows.iter().any(|r| r.len() != ncols) {
        return None;
    }
    Some(CMatrix::from_fn(nrows, ncols, |i, j| rows[i][j]))
}
