//! Integer partitions, complete Bell polynomials, complete homogeneous
//! symmetric polynomials, binomial coefficients, and the gamma function.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// Largest partition weight the enumerators accept. Keeps `y` and the
/// factorials inside u64 (20! < 2^63).
pub const MAX_PARTITION_WEIGHT: usize = 20;

/// A partition of a positive integer: nonincreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::OutOfRange("partition must have at least one part".into()));
        }
        if parts.contains(&0) {
            return Err(Error::OutOfRange("partition parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::OutOfRange("partition parts must be nonincreasing".into()));
        }
        let d: usize = parts.iter().sum();
        if d > MAX_PARTITION_WEIGHT {
            return Err(Error::OutOfRange(format!(
                "partition weight {d} exceeds maximum {MAX_PARTITION_WEIGHT}"
            )));
        }
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The integer being partitioned (sum of parts).
    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Multiplicity map: part value -> how many times it occurs.
    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// y = prod over part values i of (i!)^(m_i) * m_i!.
    pub fn y(&self) -> u64 {
        self.multiplicities()
            .iter()
            .map(|(&i, &m)| factorial(i).pow(m as u32) * factorial(m))
            .product()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All partitions of `d`, each exactly once, in reverse-lexicographic order
/// of the part vectors: (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
pub fn enumerate_partitions(d: usize) -> Result<Vec<Partition>> {
    if d == 0 || d > MAX_PARTITION_WEIGHT {
        return Err(Error::OutOfRange(format!(
            "partition weight must be in 1..={MAX_PARTITION_WEIGHT}, got {d}"
        )));
    }
    let mut out = Vec::new();
    let mut parts = vec![d];
    loop {
        out.push(Partition { parts: parts.clone() });
        // Strip trailing 1s, decrement the last part > 1, redistribute.
        let mut rem = 0;
        while parts.last() == Some(&1) {
            parts.pop();
            rem += 1;
        }
        let Some(last) = parts.last_mut() else { break };
        *last -= 1;
        rem += 1;
        let v = *last;
        while rem >= v {
            parts.push(v);
            rem -= v;
        }
        if rem > 0 {
            parts.push(rem);
        }
    }
    Ok(out)
}

/// y for a partition; see [`Partition::y`].
pub fn partition_y(pi: &Partition) -> u64 {
    pi.y()
}

/// n! for n <= 20 (exact in u64).
pub fn factorial(n: usize) -> u64 {
    assert!(n <= 20, "factorial overflow: {n}! does not fit in u64");
    (1..=n as u64).product()
}

/// Binomial coefficient; callers stay within the d <= 20 regime so u64 is exact.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for j in 0..k {
        acc = acc * (n - j) as u64 / (j + 1) as u64;
    }
    acc
}

/// Multinomial coefficient d! / (i_1! i_2! ... i_r!) with sum i_j = d.
pub fn multinomial(d: usize, counts: &[usize]) -> u64 {
    debug_assert_eq!(counts.iter().sum::<usize>(), d);
    let mut acc: u64 = 1;
    let mut seen = 0;
    for &c in counts {
        for j in 1..=c {
            acc = acc * (seen + j) as u64 / j as u64;
        }
        seen += c;
    }
    debug_assert_eq!(seen, d);
    acc
}

/// Complete Bell polynomial B_d(x_1, ..., x_d) by the binomial recurrence
/// B_{l+1} = sum_{k=0}^{l} C(l,k) B_{l-k} x_{k+1}, B_0 = 1.
pub fn complete_bell(x: &[f64]) -> Result<f64> {
    let d = x.len();
    if d == 0 || d > MAX_PARTITION_WEIGHT {
        return Err(Error::OutOfRange(format!(
            "Bell polynomial order must be in 1..={MAX_PARTITION_WEIGHT}, got {d}"
        )));
    }
    let mut b = vec![0.0; d + 1];
    b[0] = 1.0;
    for l in 0..d {
        let mut acc = 0.0;
        for k in 0..=l {
            acc += binomial(l, k) as f64 * b[l - k] * x[k];
        }
        b[l + 1] = acc;
    }
    Ok(b[d])
}

/// Complete homogeneous symmetric polynomial h_d by enumeration of
/// nondecreasing index tuples. Capped at d <= 12, n <= 8.
pub fn complete_homogeneous(lambda: &[f64], d: usize) -> Result<f64> {
    if d > 12 {
        return Err(Error::OutOfRange(format!("h_d enumeration capped at d <= 12, got {d}")));
    }
    if lambda.len() > 8 {
        return Err(Error::OutOfRange(format!(
            "h_d enumeration capped at n <= 8 variables, got {}",
            lambda.len()
        )));
    }
    if d == 0 {
        return Ok(1.0);
    }
    if lambda.is_empty() {
        return Ok(0.0);
    }
    fn walk(lambda: &[f64], start: usize, depth: usize, prod: f64) -> f64 {
        if depth == 0 {
            return prod;
        }
        (start..lambda.len())
            .map(|k| walk(lambda, k, depth - 1, prod * lambda[k]))
            .sum()
    }
    Ok(walk(lambda, 0, d, 1.0))
}

/// Lanczos coefficients, g = 7, 9 terms.
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

/// Gamma function on [1, inf) by the Lanczos approximation (g = 7, 9
/// coefficients); relative error below 1e-12 in the range the norms use.
pub fn gamma(x: f64) -> Result<f64> {
    if !(x >= 1.0) {
        return Err(Error::OutOfRange(format!("gamma requires x >= 1, got {x}")));
    }
    let z = x - 1.0;
    let mut a = LANCZOS[0];
    for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
        a += c / (z + i as f64);
    }
    let t = z + 7.5;
    Ok((2.0 * std::f64::consts::PI).sqrt() * t.powf(z + 0.5) * (-t).exp() * a)
}
