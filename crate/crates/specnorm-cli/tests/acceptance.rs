//! Acceptance suite: one test per criterion, each printing a pass/fail line
//! with the worst observed deviation.

use specnorm_cli::circle::{circle_samples, Method};
use specnorm_core::combinatorics::{complete_bell, complete_homogeneous, factorial};
use specnorm_core::distributions::Distribution;
use specnorm_core::extension::norm_extended;
use specnorm_core::linalg::{
    random_complex_matrix, random_hermitian, random_unitary, trace_word, ComplexMatrix,
    HermitianMatrix, Mark,
};
use specnorm_core::majorization::{
    birkhoff_decompose, hlp_transfer, ky_fan_check, majorization_pair_generator,
};
use specnorm_core::norms::{
    closed_form_bernoulli, closed_form_normal, closed_form_pareto_2x2, continuity_scan,
    norm_exact_bell, norm_exact_bell_spectrum, norm_exact_partition,
    norm_exact_partition_spectrum, norm_mc, partition_sum_spectrum, NormSpec,
};

fn report(criterion: &str, passed: bool, detail: &str) {
    println!(
        "criterion {criterion}: {} ({detail})",
        if passed { "PASS" } else { "FAIL" }
    );
    assert!(passed, "criterion {criterion} failed: {detail}");
}

fn standard_dists() -> Vec<Distribution> {
    vec![
        Distribution::normal(1.0, 2.0).unwrap(),
        Distribution::Exponential,
        Distribution::bernoulli(0.3).unwrap(),
    ]
}

fn matrices(count: u64, max_n: usize, seed: u64) -> Vec<HermitianMatrix> {
    (0..count)
        .map(|i| random_hermitian(2 + (i as usize % (max_n - 1)), seed + i, 1.0).unwrap())
        .collect()
}

#[test]
fn criterion_01_engine_triple_agreement() {
    let mats = matrices(50, 5, 10);
    let mut max_dev: f64 = 0.0;
    let mut cases = 0u32;
    for a in &mats {
        let lambda = a.eigenvalues().unwrap().values().to_vec();
        for dist in &standard_dists() {
            for d in [2u32, 4, 6, 8] {
                let spec = NormSpec::new(dist.clone(), d as f64).unwrap();
                let bell = norm_exact_bell(a, &spec).unwrap();
                let part = norm_exact_partition(a, &spec).unwrap();
                max_dev = max_dev.max((bell - part).abs() / (1.0 + part));

                // Series-coefficient route: the coefficient of t^d in the
                // MGF product is norm^d, and d! times it is the raw moment
                // E<X,lambda>^d = B_d(kappa_1 tr A, ..., kappa_d tr A^d).
                let coeff = dist.mgf_product_coefficient(&lambda, d).unwrap();
                let mgf_norm = coeff.powf(1.0 / d as f64);
                max_dev = max_dev.max((mgf_norm - part).abs() / (1.0 + part));

                let kappa = dist.cumulants(d).unwrap();
                let x: Vec<f64> = (1..=d)
                    .map(|k| kappa.get(k) * lambda.iter().map(|l| l.powi(k as i32)).sum::<f64>())
                    .collect();
                let bell_moment = complete_bell(&x).unwrap();
                let coeff_moment = factorial(d as usize) as f64 * coeff;
                max_dev = max_dev
                    .max((bell_moment - coeff_moment).abs() / (1.0 + coeff_moment.abs()));
                cases += 1;
            }
        }
    }
    report(
        "01 engine-triple-agreement",
        max_dev <= 1e-9,
        &format!("{cases} cases, max rel dev {max_dev:.3e}, tol 1e-9"),
    );
}

#[test]
fn criterion_02_monte_carlo_consistency() {
    let mats = matrices(10, 5, 10);
    let mut hits = 0u32;
    let mut trials = 0u32;
    for (i, a) in mats.iter().enumerate() {
        for (j, dist) in standard_dists().iter().enumerate() {
            for (k, d) in [2.0f64, 4.0].iter().enumerate() {
                let spec = NormSpec::new(dist.clone(), *d).unwrap();
                let exact = norm_exact_partition(a, &spec).unwrap();
                let seed = 40_000 + (i * 8 + j * 2 + k) as u64;
                let est = norm_mc(a.eigenvalues().unwrap(), &spec, 1_000_000, seed).unwrap();
                if (est.value - exact).abs() <= 4.0 * est.stderr {
                    hits += 1;
                }
                trials += 1;
            }
        }
    }
    report(
        "02 monte-carlo-consistency",
        trials == 60 && hits * 100 >= trials * 95,
        &format!("{hits}/{trials} trials within 4 stderr, need >= 95%"),
    );
}

#[test]
fn criterion_03_normal_closed_form() {
    let mats = matrices(50, 5, 300);
    let mut max_dev: f64 = 0.0;
    for a in &mats {
        for mu in [-1.0, 0.0, 2.0] {
            for sigma in [0.5, 1.0, 3.0] {
                for d in [2u32, 4, 6] {
                    let spec = NormSpec::new(Distribution::normal(mu, sigma).unwrap(), d as f64)
                        .unwrap();
                    let engine = norm_exact_partition(a, &spec).unwrap();
                    let closed = closed_form_normal(a, mu, sigma, d).unwrap();
                    max_dev = max_dev.max((engine - closed).abs() / (1.0 + engine));
                }
            }
        }
    }
    report(
        "03 normal-closed-form",
        max_dev <= 1e-9,
        &format!("50 matrices x 27 parameter combos, max rel dev {max_dev:.3e}, tol 1e-9"),
    );
}

#[test]
fn criterion_04_exponential_hd_and_extension() {
    let mats = matrices(50, 5, 500);
    let mut max_dev: f64 = 0.0;
    for a in &mats {
        let lambda = a.eigenvalues().unwrap().values().to_vec();
        for d in [2u32, 4, 6, 8] {
            let norm_d =
                partition_sum_spectrum(&lambda, &Distribution::Exponential, d).unwrap();
            let h = complete_homogeneous(&lambda, d as usize).unwrap();
            max_dev = max_dev.max((norm_d - h).abs() / (1.0 + h.abs()));
        }
    }

    // Degree-4 extension: the ten-term trace polynomial, written literally.
    let mut max_dev_ext: f64 = 0.0;
    for seed in 0..50u64 {
        let n = 2 + (seed as usize % 3);
        let z = random_complex_matrix(n, 600 + seed, 1.0).unwrap();
        let ext4 = norm_extended(&z, &Distribution::Exponential, 4).unwrap().powi(4);
        let oracle = exponential_d4_oracle(&z);
        max_dev_ext = max_dev_ext.max((ext4 - oracle).abs() / (1.0 + oracle.abs()));
    }
    report(
        "04 exponential-hd-and-extension",
        max_dev <= 1e-9 && max_dev_ext <= 1e-9,
        &format!(
            "norm^d vs h_d max rel dev {max_dev:.3e}; d=4 trace polynomial max rel dev {max_dev_ext:.3e}; tol 1e-9"
        ),
    );
}

fn exponential_d4_oracle(z: &ComplexMatrix) -> f64 {
    use Mark::{Adjoint as A, Plain as P};
    let w = |marks: &[Mark]| trace_word(z, marks).unwrap();
    let tp = w(&[P]);
    let ta = w(&[A]);
    let total = (tp * tp * ta * ta
        + ta * ta * w(&[P, P])
        + 4.0 * tp * ta * w(&[A, P])
        + 2.0 * w(&[A, P]) * w(&[A, P])
        + tp * tp * w(&[A, A])
        + w(&[P, P]) * w(&[A, A])
        + 4.0 * ta * w(&[A, P, P])
        + 4.0 * tp * w(&[A, A, P])
        + 2.0 * w(&[A, P, A, P])
        + 4.0 * w(&[A, A, P, P]))
        / 24.0;
    assert!(total.im.abs() <= 1e-9 * (1.0 + total.re.abs()));
    total.re
}

#[test]
fn criterion_05_bernoulli_closed_form() {
    let mats = matrices(30, 4, 700);
    let mut max_dev: f64 = 0.0;
    for a in &mats {
        let lambda = a.eigenvalues().unwrap();
        for q in [0.2, 0.5, 0.8] {
            for d in [2u32, 4, 6] {
                let dist = Distribution::bernoulli(q).unwrap();
                let engine = norm_exact_partition_spectrum(lambda.values(), &dist, d).unwrap();
                let closed = closed_form_bernoulli(lambda, q, d).unwrap();
                max_dev = max_dev.max((engine - closed).abs() / (1.0 + engine));
            }
        }
    }
    report(
        "05 bernoulli-closed-form",
        max_dev <= 1e-9,
        &format!("q in {{0.2,0.5,0.8}}, d in {{2,4,6}}, max rel dev {max_dev:.3e}, tol 1e-9"),
    );
}

#[test]
fn criterion_06_pareto_closed_form() {
    let pinned = closed_form_pareto_2x2((1.0, 1.0), 4.0).unwrap();
    let pinned_dev = (pinned * pinned - 34.0 / 9.0).abs();

    let mut max_dev: f64 = 0.0;
    for alpha in [2.1, 3.0, 4.0, 10.0] {
        let dist = Distribution::pareto(alpha, 1.0).unwrap();
        for lambda in [(1.0, 1.0), (1.0, -1.0), (0.3, 0.9), (-0.7, 0.2), (1.4, -0.6)] {
            let engine = norm_exact_partition_spectrum(&[lambda.0, lambda.1], &dist, 2).unwrap();
            let closed = closed_form_pareto_2x2(lambda, alpha).unwrap();
            max_dev = max_dev.max((engine - closed).abs() / (1.0 + engine));
        }
    }
    report(
        "06 pareto-closed-form",
        pinned_dev <= 1e-12 && max_dev <= 1e-12,
        &format!(
            "norm^2(1,1;alpha=4) off 34/9 by {pinned_dev:.3e}; engine vs closed max rel dev {max_dev:.3e}; tol 1e-12"
        ),
    );
}

#[test]
fn criterion_07_norm_axioms_and_invariance() {
    let dists = standard_dists();
    let mut worst_homog: f64 = 0.0;
    let mut worst_triangle: f64 = 0.0;
    let mut pd_failures = 0u32;
    let mut worst_wui: f64 = 0.0;

    for trial in 0..1000u64 {
        let dist = &dists[(trial % 3) as usize];
        let d = if trial % 2 == 0 { 2.0 } else { 4.0 };
        let spec = NormSpec::new(dist.clone(), d).unwrap();
        let n = 2 + (trial as usize % 4);
        let a = random_hermitian(n, 20_000 + 2 * trial, 1.0).unwrap();
        let b = random_hermitian(n, 20_000 + 2 * trial + 1, 1.0).unwrap();
        let engine = if trial % 4 < 2 { norm_exact_partition } else { norm_exact_bell };
        let na = engine(&a, &spec).unwrap();
        let nb = engine(&b, &spec).unwrap();
        let nab = engine(&a.add(&b).unwrap(), &spec).unwrap();
        worst_triangle = worst_triangle.max(nab - na - nb);
        if !(na > 0.0 && nb > 0.0) {
            pd_failures += 1;
        }
        if trial < 150 {
            for c in [-2.0, -0.5, 3.0] {
                let scaled = engine(&a.scale_real(c), &spec).unwrap();
                worst_homog =
                    worst_homog.max((scaled - c.abs() * na).abs() / (1.0 + c.abs() * na));
            }
        }
        if trial < 100 {
            let u = random_unitary(n, 23_000 + trial).unwrap();
            let conj =
                HermitianMatrix::new(u.adjoint().mul(a.matrix()).unwrap().mul(&u).unwrap())
                    .unwrap();
            let nc = engine(&conj, &spec).unwrap();
            worst_wui = worst_wui.max((na - nc).abs() / (1.0 + na));
        }
    }

    let mut worst_triangle_ext: f64 = 0.0;
    let mut pd_ext_failures = 0u32;
    let mut worst_wui_ext: f64 = 0.0;
    let mut worst_homog_ext: f64 = 0.0;
    for trial in 0..500u64 {
        let dist = &dists[(trial % 3) as usize];
        let d = if trial % 2 == 0 { 2 } else { 4 };
        let n = 2 + (trial as usize % 3);
        let z = random_complex_matrix(n, 25_000 + 2 * trial, 1.0).unwrap();
        let w = random_complex_matrix(n, 25_000 + 2 * trial + 1, 1.0).unwrap();
        let nz = norm_extended(&z, dist, d).unwrap();
        let nw = norm_extended(&w, dist, d).unwrap();
        let nzw = norm_extended(&z.add(&w).unwrap(), dist, d).unwrap();
        worst_triangle_ext = worst_triangle_ext.max(nzw - nz - nw);
        if !(nz > 0.0) {
            pd_ext_failures += 1;
        }
        if trial < 100 {
            let u = random_unitary(n, 28_000 + trial).unwrap();
            let conj = u.adjoint().mul(&z).unwrap().mul(&u).unwrap();
            let nc = norm_extended(&conj, dist, d).unwrap();
            worst_wui_ext = worst_wui_ext.max((nz - nc).abs() / (1.0 + nz));

            let c = num_complex::Complex64::new(-1.5, 2.0);
            let scaled = norm_extended(&z.scale(c), dist, d).unwrap();
            worst_homog_ext =
                worst_homog_ext.max((scaled - c.norm() * nz).abs() / (1.0 + c.norm() * nz));
        }
    }

    let passed = worst_homog <= 1e-10
        && worst_triangle <= 1e-10
        && pd_failures == 0
        && worst_wui <= 1e-8
        && worst_homog_ext <= 1e-10
        && worst_triangle_ext <= 1e-10
        && pd_ext_failures == 0
        && worst_wui_ext <= 1e-8;
    report(
        "07 norm-axioms-and-invariance",
        passed,
        &format!(
            "hermitian: homog {worst_homog:.3e}, triangle excess {worst_triangle:.3e}, pd fails {pd_failures}, wui {worst_wui:.3e}; \
             extension: homog {worst_homog_ext:.3e}, triangle excess {worst_triangle_ext:.3e}, pd fails {pd_ext_failures}, wui {worst_wui_ext:.3e}"
        ),
    );
}

#[test]
fn criterion_08_majorization_chain() {
    let mut kyfan_failures = 0u32;
    for trial in 0..500u64 {
        let n = 2 + (trial as usize % 5);
        let a = random_hermitian(n, 31_000 + 2 * trial, 1.0).unwrap();
        let b = random_hermitian(n, 31_000 + 2 * trial + 1, 1.0).unwrap();
        if !ky_fan_check(&a, &b).unwrap() {
            kyfan_failures += 1;
        }
    }

    let mut max_dev: f64 = 0.0;
    let mut bound_failures = 0u32;
    for trial in 0..100u64 {
        let n = 2 + (trial as usize % 4);
        let a = random_hermitian(n, 34_000 + 2 * trial, 1.0).unwrap();
        let b = random_hermitian(n, 34_000 + 2 * trial + 1, 1.0).unwrap();
        let t = a.add(&b).unwrap().eigenvalues().unwrap().values().to_vec();
        let s: Vec<f64> = a
            .eigenvalues()
            .unwrap()
            .values()
            .iter()
            .zip(b.eigenvalues().unwrap().values())
            .map(|(p, q)| p + q)
            .collect();
        let d = hlp_transfer(&t, &s).unwrap();
        let dec = birkhoff_decompose(&d).unwrap();
        if dec.terms.len() > n * n - n + 1 {
            bound_failures += 1;
        }
        let mut rebuilt = vec![0.0; n];
        for term in &dec.terms {
            for (slot, v) in term.apply(&s).iter().enumerate() {
                rebuilt[slot] += term.coefficient * v;
            }
        }
        for (got, want) in rebuilt.iter().zip(&t) {
            max_dev = max_dev.max((got - want).abs());
        }
    }
    report(
        "08 majorization-chain",
        kyfan_failures == 0 && bound_failures == 0 && max_dev <= 1e-7,
        &format!(
            "ky-fan fails {kyfan_failures}/500; reconstruction max dev {max_dev:.3e} (tol 1e-7); term-bound fails {bound_failures}/100"
        ),
    );
}

#[test]
fn criterion_09_schur_convexity() {
    let dists = [Distribution::normal(1.0, 2.0).unwrap(),
        Distribution::Exponential,
        Distribution::bernoulli(0.3).unwrap(),
        Distribution::pareto(10.0, 1.0).unwrap()];
    let mut worst: f64 = 0.0;
    let mut cases = 0u32;
    for trial in 0..1000u64 {
        let n = 2 + (trial as usize % 5);
        let (x, y) = majorization_pair_generator(n, 37_000 + trial).unwrap();
        let dist = &dists[(trial % 4) as usize];
        let d = if trial % 2 == 0 { 2 } else { 4 };
        for engine in [norm_exact_partition_spectrum, norm_exact_bell_spectrum] {
            let fx = engine(&x, dist, d).unwrap();
            let fy = engine(&y, dist, d).unwrap();
            worst = worst.max(fx - fy);
            cases += 1;
        }
    }
    report(
        "09 schur-convexity",
        worst <= 1e-12,
        &format!("{cases} engine evaluations over 1000 pairs, worst f(x)-f(y) = {worst:.3e}, tol 1e-12"),
    );
}

#[test]
fn criterion_10_figure_reproduction() {
    // Normal d = 2: the circle is round with Euclidean radius sqrt(2).
    let n01 = Distribution::normal(0.0, 1.0).unwrap();
    let table = circle_samples(&n01, 2.0, 256, Method::Exact, 0, 0).unwrap();
    let mut normal_dev: f64 = 0.0;
    for r in &table.rows {
        normal_dev = normal_dev.max(((r.x * r.x + r.y * r.y).sqrt() - 2f64.sqrt()).abs());
    }

    // Exponential d in {2, 4, 20}: tables generate and match an independent
    // two-variable h_d evaluation pointwise.
    let mut exp_dev: f64 = 0.0;
    for d in [2u32, 4, 20] {
        let t = circle_samples(&Distribution::Exponential, d as f64, 128, Method::Exact, 0, 0)
            .unwrap();
        assert_eq!(t.rows.len(), 128);
        for r in &t.rows {
            let h: f64 = (0..=d)
                .map(|j| r.dir1.powi(j as i32) * r.dir2.powi((d - j) as i32))
                .sum();
            let want = h.powf(1.0 / d as f64);
            exp_dev = exp_dev.max((r.norm - want).abs() / (1.0 + want));
        }
    }

    // Bernoulli q = 0.5 and Pareto alpha = 5 figure tables generate cleanly.
    let bern = Distribution::bernoulli(0.5).unwrap();
    let mut generated = true;
    for d in [2.0, 4.0, 20.0] {
        generated &= circle_samples(&bern, d, 64, Method::Exact, 0, 0).is_ok();
    }
    let pareto5 = Distribution::pareto(5.0, 1.0).unwrap();
    for d in [2.0, 4.0] {
        generated &= circle_samples(&pareto5, d, 64, Method::Exact, 0, 0).is_ok();
    }
    generated &= circle_samples(&pareto5, 1.0, 32, Method::Mc, 50_000, 9).is_ok();

    report(
        "10 figure-reproduction",
        normal_dev <= 1e-9 && exp_dev <= 1e-9 && generated,
        &format!(
            "normal radius dev {normal_dev:.3e} (tol 1e-9); exponential pointwise rel dev {exp_dev:.3e} (tol 1e-9); bernoulli/pareto tables generated: {generated}"
        ),
    );
}

#[test]
fn criterion_11_continuity_scan() {
    let a = HermitianMatrix::diag(&[1.0, -1.0]).unwrap();
    let dist = Distribution::normal(0.0, 1.0).unwrap();
    let grid: Vec<f64> = (0..41).map(|k| 1.0 + 2.0 * k as f64 / 40.0).collect();
    let estimates = continuity_scan(&a, &dist, &grid, 1_000_000, 77).unwrap();
    let mut max_jump: f64 = 0.0;
    for pair in estimates.windows(2) {
        max_jump = max_jump.max((pair[1].value - pair[0].value).abs());
    }
    report(
        "11 continuity-scan",
        max_jump <= 0.02,
        &format!("41 grid points on [1,3], N=1e6, max adjacent jump {max_jump:.4}, tol 0.02"),
    );
}
