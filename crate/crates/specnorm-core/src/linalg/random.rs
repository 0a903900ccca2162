//! Seeded random test matrices: Haar-ish unitaries, Hermitian matrices, and
//! general complex matrices. Deterministic per seed via the counter RNG.

use num_complex::Complex64;

use super::{ComplexMatrix, HermitianMatrix};
use crate::error::{Error, Result};
use crate::rng;

/// Unitary obtained by orthonormalizing a complex Gaussian matrix.
/// Satisfies ||U*U - I||_F <= 1e-10 and is identical for identical seeds.
pub fn random_unitary(n: usize, seed: u64) -> Result<ComplexMatrix> {
    let mut cols: Vec<Vec<Complex64>> = (0..n)
        .map(|j| {
            (0..n)
                .map(|i| {
                    // Streams 8/9 keep these draws disjoint from the uniform
                    // box generators at the same seed.
                    let (re, im) = rng::standard_normal_pair(seed, i as u64, j as u64, 8);
                    Complex64::new(re, im)
                })
                .collect()
        })
        .collect();

    // Modified Gram-Schmidt, run twice to push orthogonality to roundoff.
    for _pass in 0..2 {
        for j in 0..n {
            for k in 0..j {
                let proj: Complex64 = (0..n).map(|i| cols[k][i].conj() * cols[j][i]).sum();
                for i in 0..n {
                    let ck = cols[k][i];
                    cols[j][i] -= proj * ck;
                }
            }
            let norm: f64 = cols[j].iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            if norm < 1e-12 {
                return Err(Error::InternalInconsistency(
                    "Gaussian matrix numerically singular during orthonormalization".into(),
                ));
            }
            for z in cols[j].iter_mut() {
                *z /= norm;
            }
        }
    }

    let mut data = vec![Complex64::new(0.0, 0.0); n * n];
    for (j, col) in cols.iter().enumerate() {
        for i in 0..n {
            data[i * n + j] = col[i];
        }
    }
    ComplexMatrix::new(n, data)
}

/// (G + G*)/2 where G has entries uniform on [-scale, scale]^2 in the complex
/// plane; exactly Hermitian by construction.
pub fn random_hermitian(n: usize, seed: u64, scale: f64) -> Result<HermitianMatrix> {
    if scale < 0.0 {
        return Err(Error::OutOfRange(format!("scale must be nonnegative, got {scale}")));
    }
    let g = uniform_box_matrix(n, seed, scale)?;
    let sym = g.add(&g.adjoint())?.scale(Complex64::new(0.5, 0.0));
    HermitianMatrix::new(sym)
}

/// General complex matrix with entries uniform on [-scale, scale]^2.
pub fn random_complex_matrix(n: usize, seed: u64, scale: f64) -> Result<ComplexMatrix> {
    if scale < 0.0 {
        return Err(Error::OutOfRange(format!("scale must be nonnegative, got {scale}")));
    }
    uniform_box_matrix(n, seed, scale)
}

fn uniform_box_matrix(n: usize, seed: u64, scale: f64) -> Result<ComplexMatrix> {
    let data = (0..n * n)
        .map(|idx| {
            let (i, j) = ((idx / n) as u64, (idx % n) as u64);
            let re = scale * (2.0 * rng::uniform_open01(seed, i, j, 0) - 1.0);
            let im = scale * (2.0 * rng::uniform_open01(seed, i, j, 1) - 1.0);
            Complex64::new(re, im)
        })
        .collect();
    ComplexMatrix::new(n, data)
}
