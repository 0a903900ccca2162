//! The random-vector norm on Hermitian matrices, computed three ways:
//! a Monte Carlo estimate of (E|<X, lambda>|^d / Gamma(d+1))^(1/d) for any
//! real d >= 1, and for even integer d two exact engines driven by the
//! cumulants: the complete-Bell form and the partition/power-sum form.
//! Closed forms for the normal, Bernoulli, and Pareto special cases back
//! the engines as independent cross-checks.

use crate::combinatorics::{
    complete_bell, enumerate_partitions, factorial, gamma, multinomial,
};
use crate::distributions::Distribution;
use crate::error::{Error, Result};
use crate::exec::{self, Accumulator};
use crate::linalg::{EigenSpectrum, HermitianMatrix};

/// Minimum Monte Carlo sample count.
pub const MIN_MC_SAMPLES: u64 = 1_000;

/// Monte Carlo norm estimate with a delta-method standard error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormEstimate {
    pub value: f64,
    pub stderr: f64,
    pub samples: u64,
}

/// A distribution paired with a real exponent d >= 1.
#[derive(Debug, Clone, PartialEq)]
pub struct NormSpec {
    dist: Distribution,
    d: f64,
}

impl NormSpec {
    pub fn new(dist: Distribution, d: f64) -> Result<Self> {
        if !d.is_finite() || d < 1.0 {
            return Err(Error::OutOfRange(format!("exponent d must be >= 1, got {d}")));
        }
        if !dist.has_moments_up_to(d) {
            let alpha = dist.moment_bound().unwrap_or(f64::INFINITY);
            return Err(Error::MomentDoesNotExist { alpha, order: d.ceil() as u32 });
        }
        Ok(Self { dist, d })
    }

    pub fn dist(&self) -> &Distribution {
        &self.dist
    }

    pub fn d(&self) -> f64 {
        self.d
    }

    /// The exponent as an even integer >= 2, as the exact engines require.
    pub fn even_degree(&self) -> Result<u32> {
        even_degree(self.d)
    }
}

fn even_degree(d: f64) -> Result<u32> {
    if d.fract() == 0.0 && d >= 2.0 && d <= u32::MAX as f64 && (d as u64).is_multiple_of(2) {
        Ok(d as u32)
    } else {
        Err(Error::OddExponent { d })
    }
}

/// Take the d-th root of a quantity that is nonnegative in exact arithmetic:
/// negatives within roundoff clamp to zero, anything worse is an error.
fn root_of_nonnegative(inner: f64, d: f64, context: &str) -> Result<f64> {
    if inner < 0.0 {
        if inner >= -1e-12 {
            return Ok(0.0);
        }
        return Err(Error::InternalInconsistency(format!(
            "{context}: inner sum {inner:.6e} is negative beyond roundoff"
        )));
    }
    Ok(inner.powf(1.0 / d))
}

/// Mean and standard error of |<X, lambda>|^d over `n_samples` draws.
///
/// Work is split into fixed blocks with compensated partial sums combined in
/// block order, so the parallel and sequential paths agree bit for bit.
pub fn mc_abs_moment(
    lambda: &[f64],
    dist: &Distribution,
    d: f64,
    n_samples: u64,
    seed: u64,
) -> Result<(f64, f64)> {
    mc_abs_moment_impl(lambda, dist, d, n_samples, seed, true)
}

/// Sequential twin of [`mc_abs_moment`].
pub fn mc_abs_moment_seq(
    lambda: &[f64],
    dist: &Distribution,
    d: f64,
    n_samples: u64,
    seed: u64,
) -> Result<(f64, f64)> {
    mc_abs_moment_impl(lambda, dist, d, n_samples, seed, false)
}

fn mc_abs_moment_impl(
    lambda: &[f64],
    dist: &Distribution,
    d: f64,
    n_samples: u64,
    seed: u64,
    parallel: bool,
) -> Result<(f64, f64)> {
    if n_samples < MIN_MC_SAMPLES {
        return Err(Error::TooFewSamples { n: n_samples, min: MIN_MC_SAMPLES });
    }
    let blocks = n_samples.div_ceil(exec::MC_BLOCK) as usize;
    let block_stat = |b: usize| -> (f64, f64) {
        let lo = b as u64 * exec::MC_BLOCK;
        let hi = (lo + exec::MC_BLOCK).min(n_samples);
        let mut sw = Accumulator::new();
        let mut sw2 = Accumulator::new();
        for index in lo..hi {
            let mut dot = 0.0;
            for (p, &l) in lambda.iter().enumerate() {
                dot += l * dist.sample_value(seed, index, p as u64);
            }
            let w = dot.abs().powf(d);
            sw.add(w);
            sw2.add(w * w);
        }
        (sw.total(), sw2.total())
    };
    let partials = if parallel {
        exec::map_blocks(blocks, block_stat)
    } else {
        exec::map_blocks_seq(blocks, block_stat)
    };

    let mut sw = Accumulator::new();
    let mut sw2 = Accumulator::new();
    for (a, b) in partials {
        sw.add(a);
        sw2.add(b);
    }
    let nf = n_samples as f64;
    let mean = sw.total() / nf;
    let var = ((sw2.total() - nf * mean * mean) / (nf - 1.0)).max(0.0);
    Ok((mean, (var / nf).sqrt()))
}

/// Monte Carlo estimate of the norm at spectrum `lambda`; valid for any real
/// d >= 1 with enough moments.
pub fn norm_mc(
    lambda: &EigenSpectrum,
    spec: &NormSpec,
    n_samples: u64,
    seed: u64,
) -> Result<NormEstimate> {
    let (mean, se) = mc_abs_moment(lambda.values(), spec.dist(), spec.d(), n_samples, seed)?;
    finish_mc(mean, se, spec.d(), n_samples)
}

/// Sequential twin of [`norm_mc`]; bit-identical results.
pub fn norm_mc_seq(
    lambda: &EigenSpectrum,
    spec: &NormSpec,
    n_samples: u64,
    seed: u64,
) -> Result<NormEstimate> {
    let (mean, se) = mc_abs_moment_seq(lambda.values(), spec.dist(), spec.d(), n_samples, seed)?;
    finish_mc(mean, se, spec.d(), n_samples)
}

fn finish_mc(mean: f64, se: f64, d: f64, samples: u64) -> Result<NormEstimate> {
    if mean == 0.0 {
        return Ok(NormEstimate { value: 0.0, stderr: 0.0, samples });
    }
    let value = (mean / gamma(d + 1.0)?).powf(1.0 / d);
    // Delta method on the d-th root.
    let stderr = value * se / (d * mean);
    Ok(NormEstimate { value, stderr, samples })
}

/// Exact norm for even d via the complete Bell polynomial:
/// ((1/d!) B_d(kappa_1 p_1, ..., kappa_d p_d))^(1/d).
pub fn norm_exact_bell(a: &HermitianMatrix, spec: &NormSpec) -> Result<f64> {
    norm_exact_bell_spectrum(a.eigenvalues()?.values(), spec.dist(), spec.even_degree()?)
}

/// Spectrum-level Bell engine.
pub fn norm_exact_bell_spectrum(lambda: &[f64], dist: &Distribution, d: u32) -> Result<f64> {
    let d = even_degree(d as f64)?;
    let kappa = dist.cumulants(d)?;
    let x: Vec<f64> = (1..=d)
        .map(|k| kappa.get(k) * power_sum(lambda, k))
        .collect();
    let inner = complete_bell(&x)? / factorial(d as usize) as f64;
    root_of_nonnegative(inner, d as f64, "Bell engine")
}

/// Exact norm for even d via the partition sum:
/// (sum over pi of kappa_pi p_pi / y_pi)^(1/d).
pub fn norm_exact_partition(a: &HermitianMatrix, spec: &NormSpec) -> Result<f64> {
    norm_exact_partition_spectrum(a.eigenvalues()?.values(), spec.dist(), spec.even_degree()?)
}

/// Spectrum-level partition engine; also exposes the inner sum norm^d.
pub fn norm_exact_partition_spectrum(lambda: &[f64], dist: &Distribution, d: u32) -> Result<f64> {
    let inner = partition_sum_spectrum(lambda, dist, d)?;
    root_of_nonnegative(inner, d as f64, "partition engine")
}

/// The partition-form value of norm^d (before the root).
pub fn partition_sum_spectrum(lambda: &[f64], dist: &Distribution, d: u32) -> Result<f64> {
    let d = even_degree(d as f64)?;
    let kappa = dist.cumulants(d)?;
    let mut total = Accumulator::new();
    for pi in enumerate_partitions(d as usize)? {
        let mut term = 1.0 / pi.y() as f64;
        for &part in pi.parts() {
            term *= kappa.get(part as u32) * power_sum(lambda, part as u32);
        }
        total.add(term);
    }
    Ok(total.total())
}

fn power_sum(lambda: &[f64], k: u32) -> f64 {
    lambda.iter().map(|&l| l.powi(k as i32)).sum()
}

/// Closed form for iid normal entries:
/// norm^d = sum_{k=0}^{d/2} mu^{2k} (tr A)^{2k} / (2k)!
///          * sigma^{d-2k} ||A||_F^{d-2k} / (2^{d/2-k} (d/2-k)!).
pub fn closed_form_normal(a: &HermitianMatrix, mu: f64, sigma: f64, d: u32) -> Result<f64> {
    if !(sigma > 0.0) {
        return Err(Error::OutOfRange(format!("sigma must be positive, got {sigma}")));
    }
    let d = even_degree(d as f64)?;
    let lambda = a.eigenvalues()?;
    let tr = lambda.power_sum(1);
    let fro2 = lambda.power_sum(2); // ||A||_F^2 for Hermitian A
    let half = (d / 2) as usize;
    let mut inner = 0.0;
    for k in 0..=half {
        let mean_part = (mu * mu * tr * tr).powi(k as i32) / factorial(2 * k) as f64;
        let var_part = (sigma * sigma * fro2).powi((half - k) as i32)
            / (2f64.powi((half - k) as i32) * factorial(half - k) as f64);
        inner += mean_part * var_part;
    }
    root_of_nonnegative(inner, d as f64, "normal closed form")
}

/// Corrected Bernoulli closed form:
/// norm^d = (1/d!) sum over compositions i_1+...+i_n = d of
///          multinomial(d; i) q^(#nonzero i_k) prod lambda_k^(i_k).
pub fn closed_form_bernoulli(lambda: &EigenSpectrum, q: f64, d: u32) -> Result<f64> {
    if !(q > 0.0 && q < 1.0) {
        return Err(Error::OutOfRange(format!("bernoulli requires 0 < q < 1, got {q}")));
    }
    let d = even_degree(d as f64)?;
    let n = lambda.len();
    if n > 6 || d > 10 {
        return Err(Error::OutOfRange(format!(
            "bernoulli composition sum capped at n <= 6, d <= 10; got n={n}, d={d}"
        )));
    }
    let values = lambda.values();
    let mut total = Accumulator::new();
    let mut counts = vec![0usize; n];
    // Enumerate compositions of d into n nonnegative parts.
    fn walk(
        values: &[f64],
        counts: &mut Vec<usize>,
        pos: usize,
        remaining: usize,
        d: usize,
        q: f64,
        total: &mut Accumulator,
    ) {
        if pos + 1 == counts.len() {
            counts[pos] = remaining;
            let support = counts.iter().filter(|&&c| c > 0).count();
            let mut term = multinomial(d, counts) as f64 * q.powi(support as i32);
            for (k, &c) in counts.iter().enumerate() {
                term *= values[k].powi(c as i32);
            }
            total.add(term);
            return;
        }
        for c in 0..=remaining {
            counts[pos] = c;
            walk(values, counts, pos + 1, remaining - c, d, q, total);
        }
    }
    walk(values, &mut counts, 0, d as usize, d as usize, q, &mut total);
    let inner = total.total() / factorial(d as usize) as f64;
    root_of_nonnegative(inner, d as f64, "bernoulli closed form")
}

/// Pareto closed form at d = 2, n = 2, x_m = 1:
/// norm^2 = (alpha/2) (l1^2/(alpha-2) + 2 alpha l1 l2/(alpha-1)^2 + l2^2/(alpha-2)).
pub fn closed_form_pareto_2x2(lambda: (f64, f64), alpha: f64) -> Result<f64> {
    if alpha <= 2.0 {
        return Err(Error::AlphaTooSmall { alpha, min: 2.0 });
    }
    let (l1, l2) = lambda;
    let inner = 0.5
        * alpha
        * ((l1 * l1 + l2 * l2) / (alpha - 2.0)
            + 2.0 * alpha * l1 * l2 / ((alpha - 1.0) * (alpha - 1.0)));
    root_of_nonnegative(inner, 2.0, "pareto closed form")
}

/// Monte Carlo norm along a grid of exponents using common random numbers:
/// every grid point sees exactly the same sample vectors, so adjacent
/// estimates are positively coupled and the curve is smooth in d.
pub fn continuity_scan(
    a: &HermitianMatrix,
    dist: &Distribution,
    d_grid: &[f64],
    n_samples: u64,
    seed: u64,
) -> Result<Vec<NormEstimate>> {
    if d_grid.is_empty() {
        return Err(Error::OutOfRange("d grid must be nonempty".into()));
    }
    if d_grid.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::OutOfRange("d grid must be sorted ascending".into()));
    }
    let lambda = a.eigenvalues()?.clone();
    d_grid
        .iter()
        .map(|&d| {
            let spec = NormSpec::new(dist.clone(), d)?;
            norm_mc(&lambda, &spec, n_samples, seed)
        })
        .collect()
}
