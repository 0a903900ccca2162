//! Majorization machinery: the predicate, the Hardy-Littlewood-Polya
//! doubly stochastic construction by T-transforms, Birkhoff decomposition by
//! greedy perfect matchings, and the Ky Fan partial-sum check.

use crate::error::{Error, Result};
use crate::linalg::HermitianMatrix;
use crate::rng;

/// Comparison tolerance for the majorization predicate.
pub const MAJORIZATION_TOL: f64 = 1e-10;

/// Entry threshold below which residual mass counts as zero when matching.
const MATCHING_TOL: f64 = 1e-12;

/// Square matrix with nonnegative entries whose rows and columns each sum
/// to 1 within 1e-10.
#[derive(Debug, Clone, PartialEq)]
pub struct DoublyStochastic {
    n: usize,
    data: Vec<f64>,
}

impl DoublyStochastic {
    pub fn new(n: usize, mut data: Vec<f64>) -> Result<Self> {
        if n == 0 || data.len() != n * n {
            return Err(Error::OutOfRange(format!(
                "expected {} entries for a {n}x{n} matrix, got {}",
                n * n,
                data.len()
            )));
        }
        for v in data.iter_mut() {
            if !v.is_finite() {
                return Err(Error::OutOfRange("entries must be finite".into()));
            }
            if *v < 0.0 {
                if *v < -1e-14 {
                    return Err(Error::OutOfRange(format!("negative entry {v:.3e}")));
                }
                *v = 0.0;
            }
        }
        for i in 0..n {
            let row: f64 = (0..n).map(|j| data[i * n + j]).sum();
            let col: f64 = (0..n).map(|j| data[j * n + i]).sum();
            if (row - 1.0).abs() > 1e-10 || (col - 1.0).abs() > 1e-10 {
                return Err(Error::OutOfRange(format!(
                    "row {i} sums to {row}, column {i} sums to {col}; both must be 1"
                )));
            }
        }
        Ok(Self { n, data })
    }

    pub fn identity(n: usize) -> Result<Self> {
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            data[i * n + i] = 1.0;
        }
        Self::new(n, data)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn entries(&self) -> &[f64] {
        &self.data
    }

    /// Matrix-vector product D v.
    pub fn apply(&self, v: &[f64]) -> Result<Vec<f64>> {
        if v.len() != self.n {
            return Err(Error::LengthMismatch { left: self.n, right: v.len() });
        }
        Ok((0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j) * v[j]).sum())
            .collect())
    }
}

/// One permutation with its convex weight: `permutation[i]` is the column
/// holding the 1 in row i, so (P v)[i] = v[permutation[i]].
#[derive(Debug, Clone, PartialEq)]
pub struct BirkhoffTerm {
    pub coefficient: f64,
    pub permutation: Vec<usize>,
}

impl BirkhoffTerm {
    pub fn apply(&self, v: &[f64]) -> Vec<f64> {
        self.permutation.iter().map(|&j| v[j]).collect()
    }
}

/// Convex combination of permutation matrices reconstructing a doubly
/// stochastic matrix; at most n^2 - n + 1 terms.
#[derive(Debug, Clone, PartialEq)]
pub struct BirkhoffDecomposition {
    pub terms: Vec<BirkhoffTerm>,
}

impl BirkhoffDecomposition {
    pub fn coefficient_sum(&self) -> f64 {
        self.terms.iter().map(|t| t.coefficient).sum()
    }

    /// Rebuild sum c_i P_i as a dense matrix.
    pub fn reconstruct(&self, n: usize) -> Vec<f64> {
        let mut data = vec![0.0; n * n];
        for term in &self.terms {
            for (i, &j) in term.permutation.iter().enumerate() {
                data[i * n + j] += term.coefficient;
            }
        }
        data
    }
}

/// True when x is majorized by y: equal totals and, after sorting, every
/// partial sum of the k largest entries of x is dominated by y's.
pub fn majorizes(x: &[f64], y: &[f64]) -> Result<bool> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch { left: x.len(), right: y.len() });
    }
    if x.is_empty() {
        return Ok(true);
    }
    let mut xs = x.to_vec();
    let mut ys = y.to_vec();
    xs.sort_by(|a, b| a.partial_cmp(b).expect("finite entries"));
    ys.sort_by(|a, b| a.partial_cmp(b).expect("finite entries"));
    // Nondecreasing order: prefixes hold the smallest entries, so the
    // majorized vector's prefix sums dominate.
    let (mut cx, mut cy) = (0.0, 0.0);
    for k in 0..xs.len() - 1 {
        cx += xs[k];
        cy += ys[k];
        if cx < cy - MAJORIZATION_TOL {
            return Ok(false);
        }
    }
    cx += xs[xs.len() - 1];
    cy += ys[ys.len() - 1];
    Ok((cx - cy).abs() <= MAJORIZATION_TOL)
}

/// Hardy-Littlewood-Polya construction: for x majorized by y, a doubly
/// stochastic D with D (sorted y) = sorted x (descending order), built as a
/// product of at most n - 1 T-transforms.
pub fn hlp_transfer(x: &[f64], y: &[f64]) -> Result<DoublyStochastic> {
    if !majorizes(x, y)? {
        return Err(Error::NotMajorized);
    }
    let n = x.len();
    let mut xs = x.to_vec();
    let mut ys = y.to_vec();
    xs.sort_by(|a, b| b.partial_cmp(a).expect("finite entries"));
    ys.sort_by(|a, b| b.partial_cmp(a).expect("finite entries"));

    let mut d = vec![0.0; n * n];
    for i in 0..n {
        d[i * n + i] = 1.0;
    }
    let mut v = ys.clone();
    for _step in 0..n {
        // First position still running above the target. Prefix-sum
        // domination puts the first true mismatch on the overfull side;
        // anything else is tolerance dust the final check absorbs.
        let Some(j) = (0..n).find(|&i| v[i] - xs[i] > 1e-12) else {
            break;
        };
        // Mass moves down to the first position running below target.
        let Some(k) = (j + 1..n).find(|&i| v[i] < xs[i] - 1e-15) else {
            break;
        };
        let delta = (v[j] - xs[j]).min(xs[k] - v[k]);
        let theta = delta / (v[j] - v[k]);
        v[j] -= delta;
        v[k] += delta;
        // D <- T D with T = (1 - theta) I + theta Q_jk.
        for c in 0..n {
            let dj = d[j * n + c];
            let dk = d[k * n + c];
            d[j * n + c] = (1.0 - theta) * dj + theta * dk;
            d[k * n + c] = theta * dj + (1.0 - theta) * dk;
        }
    }
    if (0..n).any(|i| (v[i] - xs[i]).abs() > 1e-9) {
        return Err(Error::InternalInconsistency(
            "T-transform chain did not reach the target vector".into(),
        ));
    }
    DoublyStochastic::new(n, d)
}

/// Greedy Birkhoff decomposition: find a perfect matching on the strictly
/// positive entries, peel off the minimum matched entry times that
/// permutation, repeat until the residual weight is below 1e-10.
pub fn birkhoff_decompose(d: &DoublyStochastic) -> Result<BirkhoffDecomposition> {
    let n = d.dim();
    let mut residual = d.entries().to_vec();
    let mut remaining = 1.0;
    let mut terms = Vec::new();
    while remaining > 1e-10 {
        let perm = perfect_matching(&residual, n).ok_or(Error::NoPerfectMatching)?;
        let c = perm
            .iter()
            .enumerate()
            .map(|(i, &j)| residual[i * n + j])
            .fold(f64::INFINITY, f64::min);
        debug_assert!(c > 0.0);
        for (i, &j) in perm.iter().enumerate() {
            residual[i * n + j] -= c;
        }
        terms.push(BirkhoffTerm { coefficient: c, permutation: perm });
        remaining -= c;
    }
    let decomposition = BirkhoffDecomposition { terms };
    let total = decomposition.coefficient_sum();
    if (total - 1.0).abs() > 1e-10 || decomposition.terms.len() > n * n - n + 1 {
        return Err(Error::InternalInconsistency(format!(
            "decomposition has {} terms with weight {total}",
            decomposition.terms.len()
        )));
    }
    Ok(decomposition)
}

/// Augmenting-path perfect matching on entries above the positivity
/// threshold. Returns row -> column, or None if no perfect matching exists.
fn perfect_matching(entries: &[f64], n: usize) -> Option<Vec<usize>> {
    fn try_assign(
        entries: &[f64],
        n: usize,
        row: usize,
        seen: &mut [bool],
        col_owner: &mut [Option<usize>],
    ) -> bool {
        for col in 0..n {
            if entries[row * n + col] > MATCHING_TOL && !seen[col] {
                seen[col] = true;
                let free = match col_owner[col] {
                    None => true,
                    Some(owner) => try_assign(entries, n, owner, seen, col_owner),
                };
                if free {
                    col_owner[col] = Some(row);
                    return true;
                }
            }
        }
        false
    }

    let mut col_owner: Vec<Option<usize>> = vec![None; n];
    for row in 0..n {
        let mut seen = vec![false; n];
        if !try_assign(entries, n, row, &mut seen, &mut col_owner) {
            return None;
        }
    }
    let mut perm = vec![0; n];
    for (col, owner) in col_owner.iter().enumerate() {
        perm[owner.expect("perfect matching")] = col;
    }
    Some(perm)
}

/// Ky Fan partial-sum check: every prefix sum of the spectrum of A + B is
/// dominated by the prefix sums of lambda(A) + lambda(B), with equality at
/// the full trace. Equivalent to lambda(A+B) majorized by lambda(A)+lambda(B).
pub fn ky_fan_check(a: &HermitianMatrix, b: &HermitianMatrix) -> Result<bool> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch { left: a.dim(), right: b.dim() });
    }
    let sum = a.add(b)?;
    let ls = sum.eigenvalues()?.values().to_vec();
    let la = a.eigenvalues()?.values();
    let lb = b.eigenvalues()?.values();
    let n = ls.len();
    let (mut cs, mut cab) = (0.0, 0.0);
    for k in 0..n {
        cs += ls[k];
        cab += la[k] + lb[k];
        if k + 1 < n {
            if cs > cab + 1e-8 {
                return Ok(false);
            }
        } else if (cs - cab).abs() > 1e-8 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Random pair (x, y) with x majorized by y: draw y, push it through a
/// random doubly stochastic matrix obtained by iterative proportional
/// fitting of a positive matrix.
pub fn majorization_pair_generator(n: usize, seed: u64) -> Result<(Vec<f64>, Vec<f64>)> {
    if n < 2 {
        return Err(Error::OutOfRange(format!("need n >= 2, got {n}")));
    }
    let y: Vec<f64> = (0..n)
        .map(|i| 2.0 * rng::uniform_open01(seed, 0, i as u64, 2) - 1.0)
        .collect();
    let mut m: Vec<f64> = (0..n * n)
        .map(|idx| rng::uniform_open01(seed, 1 + (idx / n) as u64, (idx % n) as u64, 3))
        .collect();
    // Sinkhorn/IPF: alternately normalize rows and columns.
    for _ in 0..200 {
        for i in 0..n {
            let s: f64 = (0..n).map(|j| m[i * n + j]).sum();
            for j in 0..n {
                m[i * n + j] /= s;
            }
        }
        for j in 0..n {
            let s: f64 = (0..n).map(|i| m[i * n + j]).sum();
            for i in 0..n {
                m[i * n + j] /= s;
            }
        }
    }
    let d = DoublyStochastic::new(n, m)?;
    let x = d.apply(&y)?;
    Ok((x, y))
}
