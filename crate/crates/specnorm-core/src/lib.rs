//! Random-vector matrix norms on Hermitian and general complex matrices,
//! evaluated through three mutually checking routes: a Monte Carlo
//! expectation engine for any real exponent d >= 1, and two exact engines
//! for even d built from cumulants (complete Bell polynomials and partition
//! sums over power-sum polynomials). A trace-polynomial extension carries
//! the norm from the Hermitian matrices to all complex matrices, and a
//! majorization toolkit (Hardy-Littlewood-Polya transfer, Birkhoff
//! decomposition, Ky Fan inequality) provides the constructive machinery
//! behind the weak-unitary-invariance classification.
//!
//! With the default `parallel` feature, the Monte Carlo and trace-average
//! kernels run on rayon; results are bit-identical to the sequential
//! fallback because work is split into fixed blocks combined in block order.

pub mod combinatorics;
pub mod distributions;
pub mod error;
pub mod exec;
pub mod extension;
pub mod linalg;
pub mod majorization;
pub mod norms;
pub mod rng;

pub use error::{Error, Result};
