//! Complex matrix arithmetic, Hermitian eigendecomposition, and trace
//! evaluation of words in Z and Z*.

mod jacobi;
mod random;

pub use random::{random_complex_matrix, random_hermitian, random_unitary};

use std::sync::OnceLock;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Scalar field of the matrices.
pub type Complex = Complex64;

/// Hard cap on matrix dimension; everything here targets desk-scale inputs.
pub const MAX_DIM: usize = 64;

/// Relative tolerance for the Hermitian construction check.
pub const HERMITIAN_TOL: f64 = 1e-12;

/// Dense square complex matrix, row-major, immutable after construction.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    n: usize,
    data: Vec<Complex>,
}

impl ComplexMatrix {
    pub fn new(n: usize, data: Vec<Complex>) -> Result<Self> {
        if n == 0 || n > MAX_DIM {
            return Err(Error::OutOfRange(format!(
                "matrix dimension must be in 1..={MAX_DIM}, got {n}"
            )));
        }
        if data.len() != n * n {
            return Err(Error::OutOfRange(format!(
                "expected {} entries for a {n}x{n} matrix, got {}",
                n * n,
                data.len()
            )));
        }
        if data.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::OutOfRange("matrix entries must be finite".into()));
        }
        Ok(Self { n, data })
    }

    pub fn from_rows(rows: &[Vec<Complex>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::OutOfRange("matrix rows must all have length n".into()));
        }
        Self::new(n, rows.concat())
    }

    pub fn zeros(n: usize) -> Result<Self> {
        Self::new(n, vec![Complex::new(0.0, 0.0); n * n])
    }

    pub fn identity(n: usize) -> Result<Self> {
        let mut m = Self::zeros(n)?;
        for i in 0..n {
            m.data[i * n + i] = Complex::new(1.0, 0.0);
        }
        Ok(m)
    }

    pub fn diag_real(values: &[f64]) -> Result<Self> {
        let n = values.len();
        let mut m = Self::zeros(n)?;
        for (i, &v) in values.iter().enumerate() {
            m.data[i * n + i] = Complex::new(v, 0.0);
        }
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex {
        self.data[i * self.n + j]
    }

    pub fn entries(&self) -> &[Complex] {
        &self.data
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Ok(Self { n: self.n, data })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Ok(Self { n: self.n, data })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let n = self.n;
        let mut data = vec![Complex::new(0.0, 0.0); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a.re == 0.0 && a.im == 0.0 {
                    continue;
                }
                for j in 0..n {
                    data[i * n + j] += a * other.data[k * n + j];
                }
            }
        }
        Ok(Self { n, data })
    }

    pub fn scale(&self, c: Complex) -> Self {
        Self {
            n: self.n,
            data: self.data.iter().map(|z| z * c).collect(),
        }
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let n = self.n;
        let mut data = vec![Complex::new(0.0, 0.0); n * n];
        for i in 0..n {
            for j in 0..n {
                data[j * n + i] = self.data[i * n + j].conj();
            }
        }
        Self { n, data }
    }

    pub fn trace(&self) -> Complex {
        (0..self.n).map(|i| self.data[i * self.n + i]).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs_entry(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Largest deviation from A = A*.
    pub fn hermitian_deviation(&self) -> f64 {
        let n = self.n;
        let mut dev: f64 = 0.0;
        for i in 0..n {
            for j in i..n {
                dev = dev.max((self.data[i * n + j] - self.data[j * n + i].conj()).norm());
            }
        }
        dev
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { left: self.n, right: other.n });
        }
        Ok(())
    }
}

/// Eigenvalues of a Hermitian matrix, sorted descending.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenSpectrum {
    values: Vec<f64>,
}

impl EigenSpectrum {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::OutOfRange("spectrum must be nonempty".into()));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::OutOfRange("eigenvalues must be finite".into()));
        }
        if values.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::OutOfRange("eigenvalues must be sorted descending".into()));
        }
        Ok(Self { values })
    }

    /// Sorts the input descending first.
    pub fn from_unsorted(mut values: Vec<f64>) -> Result<Self> {
        values.sort_by(|a, b| b.partial_cmp(a).expect("finite eigenvalues"));
        Self::new(values)
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Power sum p_k = sum_i lambda_i^k.
    pub fn power_sum(&self, k: u32) -> f64 {
        self.values.iter().map(|&l| l.powi(k as i32)).sum()
    }
}

/// Validated Hermitian matrix carrying a lazily computed spectrum.
#[derive(Debug, Clone)]
pub struct HermitianMatrix {
    inner: ComplexMatrix,
    spectrum: OnceLock<EigenSpectrum>,
}

impl HermitianMatrix {
    pub fn new(inner: ComplexMatrix) -> Result<Self> {
        let dev = inner.hermitian_deviation();
        let tol = HERMITIAN_TOL * (1.0 + inner.max_abs_entry());
        if dev > tol {
            return Err(Error::NotHermitian { max_dev: dev, tol });
        }
        Ok(Self { inner, spectrum: OnceLock::new() })
    }

    pub fn diag(values: &[f64]) -> Result<Self> {
        Self::new(ComplexMatrix::diag_real(values)?)
    }

    pub fn zero(n: usize) -> Result<Self> {
        Self::new(ComplexMatrix::zeros(n)?)
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.inner
    }

    pub fn dim(&self) -> usize {
        self.inner.dim()
    }

    /// All eigenvalues, sorted descending; computed once and cached.
    pub fn eigenvalues(&self) -> Result<&EigenSpectrum> {
        if let Some(s) = self.spectrum.get() {
            return Ok(s);
        }
        let (values, _) = jacobi::jacobi_hermitian(&self.inner)?;
        let spectrum = EigenSpectrum::new(values)?;
        let _ = self.spectrum.set(spectrum);
        Ok(self.spectrum.get().expect("spectrum just set"))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        Self::new(self.inner.add(&other.inner)?)
    }

    pub fn scale_real(&self, c: f64) -> Self {
        Self {
            inner: self.inner.scale(Complex::new(c, 0.0)),
            spectrum: OnceLock::new(),
        }
    }
}

/// Eigenvalues of a Hermitian matrix, sorted descending.
pub fn hermitian_eigenvalues(a: &HermitianMatrix) -> Result<EigenSpectrum> {
    Ok(a.eigenvalues()?.clone())
}

/// Full decomposition A = V diag(lambda) V*; the spectrum is descending and
/// the columns of V are the matching eigenvectors.
pub fn hermitian_eigenpairs(a: &HermitianMatrix) -> Result<(EigenSpectrum, ComplexMatrix)> {
    let (values, vectors) = jacobi::jacobi_hermitian(a.matrix())?;
    Ok((EigenSpectrum::new(values)?, vectors))
}

/// Factor marks for a trace word.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mark {
    Plain,
    Adjoint,
}

impl Mark {
    pub fn complement(self) -> Self {
        match self {
            Mark::Plain => Mark::Adjoint,
            Mark::Adjoint => Mark::Plain,
        }
    }
}

/// tr(W_1 W_2 ... W_k) with W_j = Z for a plain mark and Z* for an adjoint.
pub fn trace_word(z: &ComplexMatrix, word: &[Mark]) -> Result<Complex> {
    if word.is_empty() {
        return Err(Error::EmptyWord);
    }
    let adj = z.adjoint();
    let factor = |m: Mark| match m {
        Mark::Plain => z,
        Mark::Adjoint => &adj,
    };
    let mut acc = factor(word[0]).clone();
    for &m in &word[1..] {
        acc = acc.mul(factor(m))?;
    }
    Ok(acc.trace())
}
