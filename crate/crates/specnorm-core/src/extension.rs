//! Extension of the norm from Hermitian matrices to all of M_n via the
//! averaged trace polynomial T_pi: place d/2 adjoints among the d copies of
//! Z spread over trace factors shaped by a partition of d, and average over
//! all C(d, d/2) placements.

use num_complex::Complex64;

use crate::combinatorics::{binomial, Partition};
use crate::distributions::Distribution;
use crate::error::{Error, Result};
use crate::exec::{self, Accumulator};
use crate::linalg::ComplexMatrix;

/// Enumeration cap: C(12, 6) = 924 placements is the largest mask set.
pub const MAX_EXTENSION_DEGREE: u32 = 12;

/// Masks per parallel work block in the placement average.
const MASK_BLOCK: usize = 64;

/// A choice of adjoint positions: `mask` has bit p set when copy p (0-based)
/// of Z carries the adjoint. Exactly d/2 bits are set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AdjointPlacement {
    d: u32,
    mask: u32,
}

impl AdjointPlacement {
    pub fn new(d: u32, mask: u32) -> Result<Self> {
        if d == 0 || !d.is_multiple_of(2) || d > MAX_EXTENSION_DEGREE {
            return Err(Error::OddExponent { d: d as f64 });
        }
        if mask >= (1 << d) || mask.count_ones() != d / 2 {
            return Err(Error::OutOfRange(format!(
                "mask {mask:#b} must set exactly {}/2 of the low {d} bits",
                d
            )));
        }
        Ok(Self { d, mask })
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    pub fn mask(&self) -> u32 {
        self.mask
    }

    pub fn is_adjoint(&self, position: u32) -> bool {
        self.mask >> position & 1 == 1
    }

    /// All C(d, d/2) placements in ascending mask order.
    pub fn enumerate(d: u32) -> Result<Vec<AdjointPlacement>> {
        if d == 0 || !d.is_multiple_of(2) || d > MAX_EXTENSION_DEGREE {
            return Err(Error::OddExponent { d: d as f64 });
        }
        let masks: Vec<AdjointPlacement> = (0u32..1 << d)
            .filter(|m| m.count_ones() == d / 2)
            .map(|mask| AdjointPlacement { d, mask })
            .collect();
        debug_assert_eq!(masks.len() as u64, binomial(d as usize, d as usize / 2));
        Ok(masks)
    }
}

/// T_pi(Z): positions 0..d are assigned to trace factors as contiguous
/// blocks in partition order; the result of the full placement average does
/// not depend on that labeling.
pub fn trace_t(pi: &Partition, z: &ComplexMatrix) -> Result<f64> {
    trace_t_impl(pi, z, &contiguous_assignment(pi), true)
}

/// Sequential twin of [`trace_t`]; bit-identical results.
pub fn trace_t_seq(pi: &Partition, z: &ComplexMatrix) -> Result<f64> {
    trace_t_impl(pi, z, &contiguous_assignment(pi), false)
}

fn contiguous_assignment(pi: &Partition) -> Vec<usize> {
    let mut assignment = Vec::with_capacity(pi.weight());
    for (j, &part) in pi.parts().iter().enumerate() {
        assignment.extend(std::iter::repeat_n(j, part));
    }
    assignment
}

/// Placement average with an explicit position-to-factor assignment; the
/// permuted-assignment test exercises labeling independence through this.
#[cfg(test)]
fn trace_t_with_assignment(
    pi: &Partition,
    z: &ComplexMatrix,
    assignment: &[usize],
) -> Result<f64> {
    trace_t_impl(pi, z, assignment, true)
}

fn trace_t_impl(
    pi: &Partition,
    z: &ComplexMatrix,
    assignment: &[usize],
    parallel: bool,
) -> Result<f64> {
    let d = pi.weight() as u32;
    if !d.is_multiple_of(2) {
        return Err(Error::OddExponent { d: d as f64 });
    }
    if d > MAX_EXTENSION_DEGREE {
        return Err(Error::OutOfRange(format!(
            "trace average capped at d <= {MAX_EXTENSION_DEGREE}, got {d}"
        )));
    }
    debug_assert_eq!(assignment.len(), d as usize);

    let placements = AdjointPlacement::enumerate(d)?;
    let adj = z.adjoint();
    let parts = pi.parts();

    // Positions of each factor, in slot order.
    let mut factor_slots: Vec<Vec<u32>> = vec![Vec::new(); parts.len()];
    for (pos, &factor) in assignment.iter().enumerate() {
        factor_slots[factor].push(pos as u32);
    }
    for (slots, &part) in factor_slots.iter().zip(parts) {
        debug_assert_eq!(slots.len(), part);
    }

    let eval_mask = |placement: AdjointPlacement| -> Complex64 {
        let mut prod = Complex64::new(1.0, 0.0);
        for slots in &factor_slots {
            prod *= factor_trace(z, &adj, slots, placement);
        }
        prod
    };

    let blocks = placements.len().div_ceil(MASK_BLOCK);
    let block_sum = |b: usize| -> (f64, f64) {
        let lo = b * MASK_BLOCK;
        let hi = (lo + MASK_BLOCK).min(placements.len());
        let mut re = Accumulator::new();
        let mut im = Accumulator::new();
        for &placement in &placements[lo..hi] {
            let v = eval_mask(placement);
            re.add(v.re);
            im.add(v.im);
        }
        (re.total(), im.total())
    };
    let partials = if parallel {
        exec::map_blocks(blocks, block_sum)
    } else {
        exec::map_blocks_seq(blocks, block_sum)
    };
    let mut re = Accumulator::new();
    let mut im = Accumulator::new();
    for (r, i) in partials {
        re.add(r);
        im.add(i);
    }
    let count = placements.len() as f64;
    let value = re.total() / count;
    let imag = im.total() / count;
    if imag.abs() > 1e-9 * (1.0 + value.abs()) {
        return Err(Error::InternalInconsistency(format!(
            "trace average has imaginary part {imag:.3e} at value {value:.3e}"
        )));
    }
    Ok(value)
}

/// Trace of the word formed by one factor's slots under a placement.
fn factor_trace(
    z: &ComplexMatrix,
    adj: &ComplexMatrix,
    slots: &[u32],
    placement: AdjointPlacement,
) -> Complex64 {
    let pick = |slot: u32| -> &ComplexMatrix {
        if placement.is_adjoint(slot) {
            adj
        } else {
            z
        }
    };
    if slots.len() == 1 {
        return pick(slots[0]).trace();
    }
    let mut prod = pick(slots[0]).clone();
    for &s in &slots[1..slots.len() - 1] {
        prod = prod.mul(pick(s)).expect("same dimension");
    }
    // tr(P * L) without forming the product.
    let last = pick(slots[slots.len() - 1]);
    let n = z.dim();
    let mut tr = Complex64::new(0.0, 0.0);
    for i in 0..n {
        for k in 0..n {
            tr += prod.get(i, k) * last.get(k, i);
        }
    }
    tr
}

/// Extended norm on M_n for even d: (sum over pi of kappa_pi T_pi(Z) / y_pi)^(1/d).
/// Restricts to the Hermitian-matrix norm when Z = Z*.
pub fn norm_extended(z: &ComplexMatrix, dist: &Distribution, d: u32) -> Result<f64> {
    if d == 0 || !d.is_multiple_of(2) {
        return Err(Error::OddExponent { d: d as f64 });
    }
    if d > MAX_EXTENSION_DEGREE {
        return Err(Error::OutOfRange(format!(
            "extended norm capped at d <= {MAX_EXTENSION_DEGREE}, got {d}"
        )));
    }
    let kappa = dist.cumulants(d)?;
    let mut total = Accumulator::new();
    for pi in crate::combinatorics::enumerate_partitions(d as usize)? {
        let mut term = trace_t(&pi, z)? / pi.y() as f64;
        for &part in pi.parts() {
            term *= kappa.get(part as u32);
        }
        total.add(term);
    }
    let inner = total.total();
    if inner < 0.0 {
        if inner >= -1e-12 {
            return Ok(0.0);
        }
        return Err(Error::InternalInconsistency(format!(
            "extended norm^d = {inner:.6e} is negative beyond roundoff"
        )));
    }
    Ok(inner.powf(1.0 / d as f64))
}
