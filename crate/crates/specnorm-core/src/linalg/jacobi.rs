//! Cyclic Jacobi eigensolver for Hermitian matrices with complex two-sided
//! rotations. Accurate and simple at the dimensions this crate targets.

use num_complex::Complex64;

use super::ComplexMatrix;
use crate::error::{Error, Result};

const MAX_SWEEPS: u32 = 100;
const OFF_DIAG_TOL: f64 = 1e-12;

/// Off-diagonal Frobenius mass sqrt(sum_{i != j} |a_ij|^2).
fn off_diagonal_norm(a: &[Complex64], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[i * n + j].norm_sqr();
            }
        }
    }
    s.sqrt()
}

/// Diagonalize a Hermitian matrix. Returns eigenvalues sorted descending and
/// the unitary of matching eigenvector columns.
pub(super) fn jacobi_hermitian(m: &ComplexMatrix) -> Result<(Vec<f64>, ComplexMatrix)> {
    let n = m.dim();
    let mut a: Vec<Complex64> = m.entries().to_vec();
    let mut v: Vec<Complex64> = vec![Complex64::new(0.0, 0.0); n * n];
    for i in 0..n {
        v[i * n + i] = Complex64::new(1.0, 0.0);
    }

    let scale = m.frobenius_norm();
    if scale > 0.0 && n > 1 {
        let mut converged = false;
        for _sweep in 0..MAX_SWEEPS {
            if off_diagonal_norm(&a, n) <= OFF_DIAG_TOL * scale {
                converged = true;
                break;
            }
            for p in 0..n - 1 {
                for q in p + 1..n {
                    rotate(&mut a, &mut v, n, p, q);
                }
            }
        }
        if !converged && off_diagonal_norm(&a, n) > OFF_DIAG_TOL * scale {
            return Err(Error::NoConvergence { sweeps: MAX_SWEEPS });
        }
    }

    // Sort descending, carrying eigenvector columns along.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        a[j * n + j]
            .re
            .partial_cmp(&a[i * n + i].re)
            .expect("finite eigenvalues")
    });
    let values: Vec<f64> = order.iter().map(|&i| a[i * n + i].re).collect();
    let mut vecs = vec![Complex64::new(0.0, 0.0); n * n];
    for (new_col, &old_col) in order.iter().enumerate() {
        for row in 0..n {
            vecs[row * n + new_col] = v[row * n + old_col];
        }
    }
    Ok((values, ComplexMatrix::new(n, vecs)?))
}

/// One two-sided rotation zeroing the (p, q) entry: A <- J* A J with
/// J[p][p] = c, J[p][q] = s, J[q][p] = -conj(s), J[q][q] = c.
fn rotate(a: &mut [Complex64], v: &mut [Complex64], n: usize, p: usize, q: usize) {
    let apq = a[p * n + q];
    let g = apq.norm();
    if g == 0.0 {
        return;
    }
    let app = a[p * n + p].re;
    let aqq = a[q * n + q].re;
    let phase = apq / g;

    let tau = (aqq - app) / (2.0 * g);
    let t = if tau >= 0.0 {
        1.0 / (tau + (1.0 + tau * tau).sqrt())
    } else {
        -1.0 / (-tau + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = phase * (t * c);

    // Row update: rows p and q of J* A.
    for k in 0..n {
        let akp = a[p * n + k];
        let akq = a[q * n + k];
        a[p * n + k] = c * akp - s * akq;
        a[q * n + k] = s.conj() * akp + c * akq;
    }
    // Column update: columns p and q of (J* A) J.
    for k in 0..n {
        let akp = a[k * n + p];
        let akq = a[k * n + q];
        a[k * n + p] = c * akp - s.conj() * akq;
        a[k * n + q] = s * akp + c * akq;
    }
    // Restore exact Hermitian structure of the worked pair.
    a[p * n + p] = Complex64::new(a[p * n + p].re, 0.0);
    a[q * n + q] = Complex64::new(a[q * n + q].re, 0.0);
    a[p * n + q] = Complex64::new(0.0, 0.0);
    a[q * n + p] = Complex64::new(0.0, 0.0);

    // Accumulate V <- V J.
    for k in 0..n {
        let vkp = v[k * n + p];
        let vkq = v[k * n + q];
        v[k * n + p] = c * vkp - s.conj() * vkq;
        v[k * n + q] = s * vkp + c * vkq;
    }
}
