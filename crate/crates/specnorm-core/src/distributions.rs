//! Catalog of the random variables the norms are built on: exact moments,
//! cumulants via the binomial recursion, truncated MGF series, and
//! counter-based samplers.

use std::fmt;

use crate::combinatorics::{binomial, factorial};
use crate::error::{Error, Result};
use crate::rng;

/// Supported entry distributions. Parameters are validated at construction
/// so every value is nondegenerate.
#[derive(Debug, Clone, PartialEq)]
pub enum Distribution {
    Normal { mu: f64, sigma: f64 },
    /// Standard exponential, rate fixed at 1.
    Exponential,
    Bernoulli { q: f64 },
    Pareto { alpha: f64, xm: f64 },
}

impl Distribution {
    pub fn normal(mu: f64, sigma: f64) -> Result<Self> {
        if !(sigma > 0.0) || !mu.is_finite() || !sigma.is_finite() {
            return Err(Error::OutOfRange(format!(
                "normal requires finite mu and sigma > 0, got mu={mu}, sigma={sigma}"
            )));
        }
        Ok(Self::Normal { mu, sigma })
    }

    pub fn exponential() -> Self {
        Self::Exponential
    }

    pub fn bernoulli(q: f64) -> Result<Self> {
        if !(q > 0.0 && q < 1.0) {
            return Err(Error::OutOfRange(format!("bernoulli requires 0 < q < 1, got q={q}")));
        }
        Ok(Self::Bernoulli { q })
    }

    pub fn pareto(alpha: f64, xm: f64) -> Result<Self> {
        if !(alpha > 0.0) || !(xm > 0.0) || !alpha.is_finite() || !xm.is_finite() {
            return Err(Error::OutOfRange(format!(
                "pareto requires alpha > 0 and xm > 0, got alpha={alpha}, xm={xm}"
            )));
        }
        Ok(Self::Pareto { alpha, xm })
    }

    /// Parse the CLI spec grammar: `normal:mu=0,sigma=1`, `exp`,
    /// `bernoulli:q=0.5`, `pareto:alpha=4,xm=1`.
    pub fn parse_spec(s: &str) -> Result<Self> {
        let s = s.trim();
        let (head, args) = match s.split_once(':') {
            Some((h, a)) => (h, Some(a)),
            None => (s, None),
        };
        let mut kv = std::collections::BTreeMap::new();
        if let Some(args) = args {
            for piece in args.split(',') {
                let piece = piece.trim();
                if piece.is_empty() {
                    continue;
                }
                let (k, v) = piece
                    .split_once('=')
                    .ok_or_else(|| Error::Parse(format!("expected key=value, got `{piece}`")))?;
                let value: f64 = v
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("invalid number `{v}` for `{k}`")))?;
                kv.insert(k.trim().to_string(), value);
            }
        }
        let take = |kv: &mut std::collections::BTreeMap<String, f64>, key: &str| kv.remove(key);
        let dist = match head {
            "normal" => {
                let mu = take(&mut kv, "mu").unwrap_or(0.0);
                let sigma = take(&mut kv, "sigma").unwrap_or(1.0);
                Self::normal(mu, sigma)?
            }
            "exp" | "exponential" => Self::Exponential,
            "bernoulli" => {
                let q = take(&mut kv, "q")
                    .ok_or_else(|| Error::Parse("bernoulli requires q=<value>".into()))?;
                Self::bernoulli(q)?
            }
            "pareto" => {
                let alpha = take(&mut kv, "alpha")
                    .ok_or_else(|| Error::Parse("pareto requires alpha=<value>".into()))?;
                let xm = take(&mut kv, "xm").unwrap_or(1.0);
                Self::pareto(alpha, xm)?
            }
            other => return Err(Error::Parse(format!("unknown distribution `{other}`"))),
        };
        if let Some(key) = kv.keys().next() {
            return Err(Error::Parse(format!("unknown parameter `{key}` for `{head}`")));
        }
        Ok(dist)
    }

    pub fn label(&self) -> String {
        self.to_string()
    }

    /// Highest finite moment order, if bounded (Pareto only).
    pub fn moment_bound(&self) -> Option<f64> {
        match self {
            Self::Pareto { alpha, .. } => Some(*alpha),
            _ => None,
        }
    }

    /// True when all moments of order <= d exist.
    pub fn has_moments_up_to(&self, d: f64) -> bool {
        match self.moment_bound() {
            Some(alpha) => d < alpha,
            None => true,
        }
    }

    /// Exact raw moment E[X^r], r >= 1.
    pub fn moment(&self, r: u32) -> Result<f64> {
        if r == 0 {
            return Ok(1.0);
        }
        match self {
            Self::Normal { mu, sigma } => {
                // mu_r = mu mu_{r-1} + (r-1) sigma^2 mu_{r-2}
                let s2 = sigma * sigma;
                let (mut prev, mut cur) = (1.0, *mu);
                for k in 2..=r as u64 {
                    let next = mu * cur + (k - 1) as f64 * s2 * prev;
                    prev = cur;
                    cur = next;
                }
                Ok(cur)
            }
            Self::Exponential => {
                if r <= 20 {
                    Ok(factorial(r as usize) as f64)
                } else {
                    crate::combinatorics::gamma(r as f64 + 1.0)
                }
            }
            Self::Bernoulli { q } => Ok(*q),
            Self::Pareto { alpha, xm } => {
                if *alpha <= r as f64 {
                    return Err(Error::MomentDoesNotExist { alpha: *alpha, order: r });
                }
                Ok(alpha * xm.powi(r as i32) / (alpha - r as f64))
            }
        }
    }

    /// Raw moments mu_0..mu_d as a vector indexed by order.
    pub fn moments_up_to(&self, d: u32) -> Result<Vec<f64>> {
        (0..=d).map(|r| self.moment(r)).collect()
    }

    /// Cumulants kappa_1..kappa_d solving
    /// mu_r = sum_{l=0}^{r-1} C(r-1, l) mu_l kappa_{r-l} with mu_0 = 1.
    pub fn cumulants(&self, d: u32) -> Result<CumulantVector> {
        let mu = self.moments_up_to(d)?;
        Ok(CumulantVector::from_moments(&mu))
    }

    /// One draw determined entirely by (seed, index, position).
    pub fn sample_value(&self, seed: u64, index: u64, position: u64) -> f64 {
        match self {
            Self::Normal { mu, sigma } => {
                mu + sigma * rng::standard_normal(seed, index, position, 0)
            }
            Self::Exponential => {
                let u = rng::uniform_open01(seed, index, position, 0);
                -(1.0 - u).ln()
            }
            Self::Bernoulli { q } => {
                let u = rng::uniform_open01(seed, index, position, 0);
                if u < *q {
                    1.0
                } else {
                    0.0
                }
            }
            Self::Pareto { alpha, xm } => {
                let u = rng::uniform_open01(seed, index, position, 0);
                xm * (1.0 - u).powf(-1.0 / alpha)
            }
        }
    }

    /// n iid draws for sample `index`.
    pub fn sample_vector(&self, n: usize, seed: u64, index: u64) -> Vec<f64> {
        (0..n).map(|p| self.sample_value(seed, index, p as u64)).collect()
    }

    /// Coefficient of t^d in prod_i M(lambda_i t), the moment generating
    /// function of <X, lambda>, truncated at degree d.
    pub fn mgf_product_coefficient(&self, lambda: &[f64], d: u32) -> Result<f64> {
        if matches!(self, Self::Pareto { .. }) {
            return Err(Error::MgfUnavailable("Pareto".into()));
        }
        if d == 0 || !d.is_multiple_of(2) {
            return Err(Error::OddExponent { d: d as f64 });
        }
        if d > 20 {
            return Err(Error::OutOfRange(format!("MGF series capped at d <= 20, got {d}")));
        }
        let mu = self.moments_up_to(d)?;
        let deg = d as usize;
        // Series product, truncated at degree d.
        let mut coeffs = vec![0.0; deg + 1];
        coeffs[0] = 1.0;
        for &l in lambda {
            let factor: Vec<f64> = (0..=deg)
                .map(|k| mu[k] * l.powi(k as i32) / factorial(k) as f64)
                .collect();
            let mut next = vec![0.0; deg + 1];
            for a in 0..=deg {
                if coeffs[a] == 0.0 {
                    continue;
                }
                for b in 0..=deg - a {
                    next[a + b] += coeffs[a] * factor[b];
                }
            }
            coeffs = next;
        }
        Ok(coeffs[deg])
    }
}

impl fmt::Display for Distribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Normal { mu, sigma } => write!(f, "normal:mu={mu},sigma={sigma}"),
            Self::Exponential => write!(f, "exp"),
            Self::Bernoulli { q } => write!(f, "bernoulli:q={q}"),
            Self::Pareto { alpha, xm } => write!(f, "pareto:alpha={alpha},xm={xm}"),
        }
    }
}

/// Cumulants kappa_1..kappa_d.
#[derive(Debug, Clone, PartialEq)]
pub struct CumulantVector {
    kappa: Vec<f64>,
}

impl CumulantVector {
    /// Solve the binomial recursion for kappa given mu_0..mu_d.
    pub fn from_moments(mu: &[f64]) -> Self {
        let d = mu.len() - 1;
        let mut kappa = vec![0.0; d];
        for r in 1..=d {
            let mut acc = mu[r];
            for l in 1..r {
                acc -= binomial(r - 1, l) as f64 * mu[l] * kappa[r - l - 1];
            }
            kappa[r - 1] = acc;
        }
        Self { kappa }
    }

    /// Invert: reconstruct mu_0..mu_d from the cumulants.
    pub fn to_moments(&self) -> Vec<f64> {
        let d = self.kappa.len();
        let mut mu = vec![0.0; d + 1];
        mu[0] = 1.0;
        for r in 1..=d {
            mu[r] = (0..r)
                .map(|l| binomial(r - 1, l) as f64 * mu[l] * self.kappa[r - l - 1])
                .sum();
        }
        mu
    }

    pub fn order(&self) -> usize {
        self.kappa.len()
    }

    /// kappa_r, 1-indexed.
    pub fn get(&self, r: u32) -> f64 {
        self.kappa[r as usize - 1]
    }

    pub fn values(&self) -> &[f64] {
        &self.kappa
    }
}
