//! Verification suites behind `specnorm verify`: each suite replays one
//! family of invariants and reports per-check pass/fail with case counts and
//! the worst observed deviation.

use specnorm_core::combinatorics::gamma;
use specnorm_core::distributions::Distribution;
use specnorm_core::extension::norm_extended;
use specnorm_core::linalg::{
    random_complex_matrix, random_hermitian, random_unitary, trace_word, ComplexMatrix,
    HermitianMatrix, Mark,
};
use specnorm_core::majorization::{
    birkhoff_decompose, hlp_transfer, ky_fan_check, majorization_pair_generator, majorizes,
};
use specnorm_core::norms::{
    closed_form_bernoulli, closed_form_normal, closed_form_pareto_2x2, continuity_scan,
    mc_abs_moment, norm_exact_bell, norm_exact_partition, norm_exact_partition_spectrum,
    partition_sum_spectrum, NormSpec,
};

use crate::circle::{circle_samples, parse_circle_csv, table_to_csv, Method};
use crate::{CliError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Axioms,
    Engines,
    Extension,
    Majorization,
    Figures,
    Continuity,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Axioms,
        Suite::Engines,
        Suite::Extension,
        Suite::Majorization,
        Suite::Figures,
        Suite::Continuity,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Axioms => "axioms",
            Suite::Engines => "engines",
            Suite::Extension => "extension",
            Suite::Majorization => "majorization",
            Suite::Figures => "figures",
            Suite::Continuity => "continuity",
        }
    }
}

impl std::str::FromStr for Suite {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .iter()
            .copied()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| CliError::Usage(format!("unknown suite `{s}`")))
    }
}

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub cases: u64,
    pub max_dev: f64,
    pub tol: f64,
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub seed: u64,
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn render(&self) -> String {
        let mut out = format!("suite {} (seed {})\n", self.suite, self.seed);
        for c in &self.checks {
            out.push_str(&format!(
                "  [{}] {:<32} {:>6} cases   max dev {:.3e} (tol {:.1e})\n",
                if c.passed { "PASS" } else { "FAIL" },
                c.name,
                c.cases,
                c.max_dev,
                c.tol
            ));
        }
        out.push_str(&format!(
            "overall {}\n",
            if self.passed() { "PASS" } else { "FAIL" }
        ));
        out
    }
}

/// Running worst-case deviation for one named check.
struct Tracker {
    name: &'static str,
    tol: f64,
    cases: u64,
    max_dev: f64,
}

impl Tracker {
    fn new(name: &'static str, tol: f64) -> Self {
        Self { name, tol, cases: 0, max_dev: 0.0 }
    }

    fn observe(&mut self, dev: f64) {
        self.cases += 1;
        if dev > self.max_dev {
            self.max_dev = dev;
        }
    }

    fn observe_ok(&mut self, ok: bool) {
        self.observe(if ok { 0.0 } else { 1.0 });
    }

    fn finish(self) -> CheckResult {
        CheckResult {
            name: self.name.to_string(),
            passed: self.max_dev <= self.tol,
            cases: self.cases,
            max_dev: self.max_dev,
            tol: self.tol,
        }
    }
}

fn catalog() -> Vec<Distribution> {
    vec![
        Distribution::normal(1.0, 2.0).unwrap(),
        Distribution::Exponential,
        Distribution::bernoulli(0.3).unwrap(),
    ]
}

fn rel_dev(a: f64, b: f64) -> f64 {
    (a - b).abs() / (1.0 + a.abs().max(b.abs()))
}

pub fn run_verify(suite: Suite, seed: u64) -> Result<SuiteReport> {
    match suite {
        Suite::Axioms => run_axioms_with_gamma(seed, gamma),
        Suite::Engines => run_engines(seed),
        Suite::Extension => run_extension(seed),
        Suite::Majorization => run_majorization(seed),
        Suite::Figures => run_figures(seed),
        Suite::Continuity => run_continuity(seed),
    }
}

/// The gamma handle is injectable so a corrupted normalization is detectable
/// by the suite (negative-control test below).
fn run_axioms_with_gamma<G>(seed: u64, gamma_fn: G) -> Result<SuiteReport>
where
    G: Fn(f64) -> specnorm_core::Result<f64>,
{
    let dists = catalog();
    let mut homogeneity = Tracker::new("homogeneity", 1e-10);
    let mut triangle = Tracker::new("triangle-inequality", 1e-10);
    let mut positive = Tracker::new("positive-definiteness", 0.0);
    let mut normalization = Tracker::new("mc-gamma-normalization", 1.0);

    for trial in 0..200u64 {
        let dist = &dists[(trial % 3) as usize];
        let d = if trial % 2 == 0 { 2.0 } else { 4.0 };
        let spec = NormSpec::new(dist.clone(), d)?;
        let n = 2 + (trial as usize % 4);
        let a = random_hermitian(n, seed ^ (2 * trial), 1.0)?;
        let b = random_hermitian(n, seed ^ (2 * trial + 1), 1.0)?;

        let na = norm_exact_partition(&a, &spec)?;
        let nb = norm_exact_partition(&b, &spec)?;
        let nab = norm_exact_partition(&a.add(&b)?, &spec)?;
        triangle.observe((nab - na - nb).max(0.0));
        positive.observe_ok(na > 0.0 && nb > 0.0);

        if trial < 50 {
            for c in [-2.0, -0.5, 3.0] {
                let scaled = norm_exact_partition(&a.scale_real(c), &spec)?;
                homogeneity.observe((scaled - c.abs() * na).abs() / (1.0 + c.abs() * na));
            }
        }
    }

    // Monte Carlo route through the injected Gamma(d+1) against the exact
    // normal closed form.
    for (k, lambda) in [[1.0, -1.0], [1.0, 1.0], [0.3, 2.0]].iter().enumerate() {
        let d = 2.0;
        let a = HermitianMatrix::diag(lambda)?;
        let exact = closed_form_normal(&a, 0.0, 1.0, 2)?;
        let dist = Distribution::normal(0.0, 1.0)?;
        let (mean, se) = mc_abs_moment(lambda, &dist, d, 200_000, seed ^ (9000 + k as u64))?;
        let value = (mean / gamma_fn(d + 1.0)?).powf(1.0 / d);
        let stderr = value * se / (d * mean);
        normalization.observe((value - exact).abs() / (5.0 * stderr));
    }

    Ok(SuiteReport {
        suite: Suite::Axioms.name(),
        seed,
        checks: vec![
            homogeneity.finish(),
            triangle.finish(),
            positive.finish(),
            normalization.finish(),
        ],
    })
}

fn run_engines(seed: u64) -> Result<SuiteReport> {
    let dists = catalog();
    let mut bell_vs_partition = Tracker::new("bell-vs-partition", 1e-9);
    let mut partition_vs_mgf = Tracker::new("partition-vs-mgf-coefficient", 1e-9);
    for trial in 0..50u64 {
        let n = 2 + (trial as usize % 4);
        let a = random_hermitian(n, seed ^ (100 + trial), 1.0)?;
        let lambda = a.eigenvalues()?.values().to_vec();
        for dist in &dists {
            for d in [2u32, 4, 6, 8] {
                let spec = NormSpec::new(dist.clone(), d as f64)?;
                let bell = norm_exact_bell(&a, &spec)?;
                let part = norm_exact_partition(&a, &spec)?;
                bell_vs_partition.observe((bell - part).abs() / (1.0 + part));

                let coeff = dist.mgf_product_coefficient(&lambda, d)?;
                let psum = partition_sum_spectrum(&lambda, dist, d)?;
                partition_vs_mgf.observe(rel_dev(coeff, psum));
            }
        }
    }

    let mut closed_normal = Tracker::new("normal-closed-form", 1e-9);
    for trial in 0..20u64 {
        let n = 2 + (trial as usize % 4);
        let a = random_hermitian(n, seed ^ (300 + trial), 1.0)?;
        for mu in [-1.0, 0.0, 2.0] {
            for sigma in [0.5, 1.0, 3.0] {
                for d in [2u32, 4, 6] {
                    let spec = NormSpec::new(Distribution::normal(mu, sigma)?, d as f64)?;
                    let engine = norm_exact_partition(&a, &spec)?;
                    let closed = closed_form_normal(&a, mu, sigma, d)?;
                    closed_normal.observe((engine - closed).abs() / (1.0 + engine));
                }
            }
        }
    }

    let mut closed_bern = Tracker::new("bernoulli-closed-form", 1e-9);
    for trial in 0..10u64 {
        let n = 2 + (trial as usize % 3);
        let a = random_hermitian(n, seed ^ (400 + trial), 1.0)?;
        let lambda = a.eigenvalues()?;
        for q in [0.2, 0.5, 0.8] {
            for d in [2u32, 4, 6] {
                let dist = Distribution::bernoulli(q)?;
                let engine = norm_exact_partition_spectrum(lambda.values(), &dist, d)?;
                let closed = closed_form_bernoulli(lambda, q, d)?;
                closed_bern.observe((engine - closed).abs() / (1.0 + engine));
            }
        }
    }

    let mut closed_pareto = Tracker::new("pareto-closed-form", 1e-12);
    for alpha in [2.1, 3.0, 4.0, 10.0] {
        let dist = Distribution::pareto(alpha, 1.0)?;
        for trial in 0..10u64 {
            let l1 = 2.0 * specnorm_core::rng::uniform_open01(seed, 500 + trial, 0, 0) - 1.0;
            let l2 = 2.0 * specnorm_core::rng::uniform_open01(seed, 500 + trial, 1, 0) - 1.0;
            let engine = norm_exact_partition_spectrum(&[l1, l2], &dist, 2)?;
            let closed = closed_form_pareto_2x2((l1, l2), alpha)?;
            closed_pareto.observe((engine - closed).abs() / (1.0 + engine));
        }
    }

    Ok(SuiteReport {
        suite: Suite::Engines.name(),
        seed,
        checks: vec![
            bell_vs_partition.finish(),
            partition_vs_mgf.finish(),
            closed_normal.finish(),
            closed_bern.finish(),
            closed_pareto.finish(),
        ],
    })
}

/// The ten-term degree-4 trace polynomial for standard exponential entries.
fn exponential_d4_trace_polynomial(z: &ComplexMatrix) -> Result<f64> {
    use Mark::{Adjoint as A, Plain as P};
    let w = |marks: &[Mark]| trace_word(z, marks);
    let tp = w(&[P])?;
    let ta = w(&[A])?;
    let total = (tp * tp * ta * ta
        + ta * ta * w(&[P, P])?
        + 4.0 * tp * ta * w(&[A, P])?
        + 2.0 * w(&[A, P])? * w(&[A, P])?
        + tp * tp * w(&[A, A])?
        + w(&[P, P])? * w(&[A, A])?
        + 4.0 * ta * w(&[A, P, P])?
        + 4.0 * tp * w(&[A, A, P])?
        + 2.0 * w(&[A, P, A, P])?
        + 4.0 * w(&[A, A, P, P])?)
        / 24.0;
    Ok(total.re)
}

fn run_extension(seed: u64) -> Result<SuiteReport> {
    let dists = catalog();
    let mut restriction = Tracker::new("restriction-to-hermitian", 1e-9);
    for trial in 0..50u64 {
        let dist = &dists[(trial % 3) as usize];
        let n = 2 + (trial as usize % 3);
        let a = random_hermitian(n, seed ^ (600 + trial), 1.0)?;
        let lambda = a.eigenvalues()?.values().to_vec();
        for d in [2u32, 4, 6] {
            let ext = norm_extended(a.matrix(), dist, d)?;
            let herm = norm_exact_partition_spectrum(&lambda, dist, d)?;
            restriction.observe((ext - herm).abs() / (1.0 + herm));
        }
    }

    let mut exp_d4 = Tracker::new("exponential-d4-trace-polynomial", 1e-9);
    for trial in 0..50u64 {
        let n = 2 + (trial as usize % 3);
        let z = random_complex_matrix(n, seed ^ (700 + trial), 1.0)?;
        let ext = norm_extended(&z, &Distribution::Exponential, 4)?;
        let oracle = exponential_d4_trace_polynomial(&z)?;
        exp_d4.observe((ext.powi(4) - oracle).abs() / (1.0 + oracle.abs()));
    }

    let mut homogeneity = Tracker::new("complex-homogeneity", 1e-10);
    let mut invariance = Tracker::new("weak-unitary-invariance", 1e-8);
    let mut triangle = Tracker::new("triangle-inequality", 1e-10);
    for trial in 0..100u64 {
        let dist = &dists[(trial % 3) as usize];
        let d = if trial % 2 == 0 { 2 } else { 4 };
        let n = 2 + (trial as usize % 3);
        let z = random_complex_matrix(n, seed ^ (800 + 2 * trial), 1.0)?;
        let w = random_complex_matrix(n, seed ^ (800 + 2 * trial + 1), 1.0)?;
        let nz = norm_extended(&z, dist, d)?;
        let nw = norm_extended(&w, dist, d)?;
        let nzw = norm_extended(&z.add(&w)?, dist, d)?;
        triangle.observe((nzw - nz - nw).max(0.0));

        if trial < 50 {
            let c = num_complex::Complex64::new(1.0, -2.0);
            let scaled = norm_extended(&z.scale(c), dist, d)?;
            homogeneity.observe((scaled - c.norm() * nz).abs() / (1.0 + c.norm() * nz));

            let u = random_unitary(n, seed ^ (880 + trial))?;
            let conj = u.adjoint().mul(&z)?.mul(&u)?;
            let nc = norm_extended(&conj, dist, d)?;
            invariance.observe((nz - nc).abs() / (1.0 + nz));
        }
    }

    Ok(SuiteReport {
        suite: Suite::Extension.name(),
        seed,
        checks: vec![
            restriction.finish(),
            exp_d4.finish(),
            homogeneity.finish(),
            invariance.finish(),
            triangle.finish(),
        ],
    })
}

fn run_majorization(seed: u64) -> Result<SuiteReport> {
    let mut kyfan = Tracker::new("ky-fan-inequality", 0.0);
    for trial in 0..500u64 {
        let n = 2 + (trial as usize % 5);
        let a = random_hermitian(n, seed ^ (1000 + 2 * trial), 1.0)?;
        let b = random_hermitian(n, seed ^ (1000 + 2 * trial + 1), 1.0)?;
        kyfan.observe_ok(ky_fan_check(&a, &b)?);
    }

    let mut chain = Tracker::new("hlp-birkhoff-reconstruction", 1e-7);
    let mut bound = Tracker::new("birkhoff-term-bound", 0.0);
    let mut weight = Tracker::new("birkhoff-coefficient-sum", 1e-10);
    for trial in 0..100u64 {
        let n = 2 + (trial as usize % 4);
        let a = random_hermitian(n, seed ^ (3000 + 2 * trial), 1.0)?;
        let b = random_hermitian(n, seed ^ (3000 + 2 * trial + 1), 1.0)?;
        let t = a.add(&b)?.eigenvalues()?.values().to_vec();
        let s: Vec<f64> = a
            .eigenvalues()?
            .values()
            .iter()
            .zip(b.eigenvalues()?.values())
            .map(|(p, q)| p + q)
            .collect();
        let d = hlp_transfer(&t, &s)?;
        let dec = birkhoff_decompose(&d)?;
        bound.observe_ok(dec.terms.len() <= n * n - n + 1);
        weight.observe((dec.coefficient_sum() - 1.0).abs());
        let mut rebuilt = vec![0.0; n];
        for term in &dec.terms {
            for (slot, v) in term.apply(&s).iter().enumerate() {
                rebuilt[slot] += term.coefficient * v;
            }
        }
        let dev = rebuilt
            .iter()
            .zip(&t)
            .map(|(g, w)| (g - w).abs())
            .fold(0.0f64, f64::max);
        chain.observe(dev);
    }

    let mut generator = Tracker::new("pair-generator-contract", 0.0);
    let mut schur = Tracker::new("schur-convexity", 1e-12);
    let dists = catalog();
    for trial in 0..500u64 {
        let n = 2 + (trial as usize % 5);
        let (x, y) = majorization_pair_generator(n, seed ^ (4000 + trial))?;
        generator.observe_ok(majorizes(&x, &y)?);
        let dist = &dists[(trial % 3) as usize];
        let d = if trial % 2 == 0 { 2 } else { 4 };
        let fx = norm_exact_partition_spectrum(&x, dist, d)?;
        let fy = norm_exact_partition_spectrum(&y, dist, d)?;
        schur.observe((fx - fy).max(0.0));
    }

    Ok(SuiteReport {
        suite: Suite::Majorization.name(),
        seed,
        checks: vec![
            kyfan.finish(),
            chain.finish(),
            bound.finish(),
            weight.finish(),
            generator.finish(),
            schur.finish(),
        ],
    })
}

/// Complete homogeneous polynomial in two variables by direct summation;
/// independent of the capped enumeration in the library.
fn h2var(a: f64, b: f64, d: u32) -> f64 {
    (0..=d).map(|j| a.powi(j as i32) * b.powi((d - j) as i32)).sum()
}

fn run_figures(seed: u64) -> Result<SuiteReport> {
    let mut normal_round = Tracker::new("normal-d2-circle-round", 1e-9);
    let n01 = Distribution::normal(0.0, 1.0)?;
    let table = circle_samples(&n01, 2.0, 256, Method::Exact, 0, 0)?;
    for r in &table.rows {
        let radius = (r.x * r.x + r.y * r.y).sqrt();
        normal_round.observe((radius - 2f64.sqrt()).abs());
    }

    let mut exp_pointwise = Tracker::new("exponential-circle-vs-hd", 1e-9);
    let mut diagonal_radii = Vec::new();
    for d in [2u32, 4, 20] {
        let table = circle_samples(&Distribution::Exponential, d as f64, 128, Method::Exact, 0, 0)?;
        for r in &table.rows {
            let h = h2var(r.dir1, r.dir2, d);
            let want = h.powf(1.0 / d as f64);
            exp_pointwise.observe((r.norm - want).abs() / (1.0 + want));
        }
        // Boundary radius along the positive diagonal direction.
        let c = 0.5f64.sqrt();
        let norm = norm_exact_partition_spectrum(&[c, c], &Distribution::Exponential, d)?;
        diagonal_radii.push(1.0 / norm);
    }

    // Exact engine says the norm along (1,1)/sqrt(2) shrinks as d grows, so
    // the boundary radius is nondecreasing in d.
    let mut monotone = Tracker::new("exp-diagonal-radius-nondecreasing", 1e-9);
    for pair in diagonal_radii.windows(2) {
        monotone.observe((pair[0] - pair[1]).max(0.0));
    }

    let mut generated = Tracker::new("bernoulli-pareto-tables-generated", 0.0);
    let bern = Distribution::bernoulli(0.5)?;
    for d in [2u32, 4, 20] {
        let t = circle_samples(&bern, d as f64, 64, Method::Exact, 0, 0)?;
        generated.observe_ok(t.rows.len() == 64);
    }
    let pareto5 = Distribution::pareto(5.0, 1.0)?;
    for d in [2u32, 4] {
        let t = circle_samples(&pareto5, d as f64, 64, Method::Exact, 0, 0)?;
        generated.observe_ok(t.rows.len() == 64);
    }
    let t = circle_samples(&pareto5, 1.0, 32, Method::Mc, 50_000, seed ^ 77)?;
    generated.observe_ok(t.rows.len() == 32);

    let mut pareto_pointwise = Tracker::new("pareto-d2-circle-vs-closed-form", 1e-12);
    for alpha in [2.1, 3.0, 4.0, 10.0] {
        let dist = Distribution::pareto(alpha, 1.0)?;
        let t = circle_samples(&dist, 2.0, 64, Method::Exact, 0, 0)?;
        for r in &t.rows {
            let closed = closed_form_pareto_2x2((r.dir1, r.dir2), alpha)?;
            pareto_pointwise.observe((r.norm - closed).abs() / (1.0 + closed));
        }
    }

    let mut roundtrip = Tracker::new("csv-round-trip-bit-exact", 0.0);
    let csv = table_to_csv(&table);
    let back = parse_circle_csv(&csv)?;
    roundtrip.observe_ok(
        back.rows.len() == table.rows.len()
            && back
                .rows
                .iter()
                .zip(&table.rows)
                .all(|(a, b)| a.norm.to_bits() == b.norm.to_bits() && a.x.to_bits() == b.x.to_bits()),
    );

    Ok(SuiteReport {
        suite: Suite::Figures.name(),
        seed,
        checks: vec![
            normal_round.finish(),
            exp_pointwise.finish(),
            monotone.finish(),
            generated.finish(),
            pareto_pointwise.finish(),
            roundtrip.finish(),
        ],
    })
}

fn run_continuity(seed: u64) -> Result<SuiteReport> {
    let a = HermitianMatrix::diag(&[1.0, -1.0])?;
    let n01 = Distribution::normal(0.0, 1.0)?;
    let grid: Vec<f64> = (0..41).map(|k| 1.0 + 2.0 * k as f64 / 40.0).collect();
    let estimates = continuity_scan(&a, &n01, &grid, 1_000_000, seed)?;
    let mut jump = Tracker::new("max-adjacent-jump", 0.02);
    for pair in estimates.windows(2) {
        jump.observe((pair[1].value - pair[0].value).abs());
    }

    let b = HermitianMatrix::diag(&[1.0, 1.0])?;
    let scan = continuity_scan(&b, &Distribution::Exponential, &[2.0, 4.0], 1_000_000, seed ^ 1)?;
    let mut exact_hits = Tracker::new("exponential-grid-vs-exact", 1.0);
    for (est, want) in scan.iter().zip([3f64.sqrt(), 5f64.powf(0.25)]) {
        exact_hits.observe((est.value - want).abs() / (4.0 * est.stderr));
    }

    Ok(SuiteReport {
        suite: Suite::Continuity.name(),
        seed,
        checks: vec![jump.finish(), exact_hits.finish()],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_parse() {
        for suite in Suite::ALL {
            let parsed: Suite = suite.name().parse().unwrap();
            assert_eq!(parsed, suite);
        }
        assert!("nonsense".parse::<Suite>().is_err());
    }

    #[test]
    fn engines_suite_passes_and_reports_tight_deviation() {
        let report = run_verify(Suite::Engines, 1).unwrap();
        assert!(report.passed(), "{}", report.render());
        let agreement = &report.checks[0];
        assert!(agreement.max_dev <= 1e-9);
        assert!(report.render().contains("bell-vs-partition"));
    }

    #[test]
    fn axioms_suite_passes() {
        let report = run_verify(Suite::Axioms, 1).unwrap();
        assert!(report.passed(), "{}", report.render());
    }

    #[test]
    fn corrupted_gamma_is_detected() {
        // Negative control: inflating Gamma(d+1) must break the Monte Carlo
        // normalization check.
        let report = run_axioms_with_gamma(1, |x| gamma(x).map(|v| 1.5 * v)).unwrap();
        assert!(!report.passed(), "{}", report.render());
        let failing: Vec<&str> = report
            .checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.name.as_str())
            .collect();
        assert_eq!(failing, ["mc-gamma-normalization"]);
    }
}
