//! Norm-axiom suites at desk scale for the exact Hermitian engines and the
//! extension to all complex matrices.

use specnorm_core::distributions::Distribution;
use specnorm_core::extension::norm_extended;
use specnorm_core::linalg::{
    random_complex_matrix, random_hermitian, random_unitary, HermitianMatrix,
};
use specnorm_core::majorization::majorization_pair_generator;
use specnorm_core::norms::{
    norm_exact_bell, norm_exact_bell_spectrum, norm_exact_partition,
    norm_exact_partition_spectrum, NormSpec,
};

fn catalog() -> Vec<Distribution> {
    vec![
        Distribution::normal(1.0, 2.0).unwrap(),
        Distribution::Exponential,
        Distribution::bernoulli(0.3).unwrap(),
    ]
}

#[test]
fn hermitian_homogeneity() {
    for (i, dist) in catalog().into_iter().enumerate() {
        for d in [2.0, 4.0] {
            let spec = NormSpec::new(dist.clone(), d).unwrap();
            for seed in 0..30u64 {
                let n = 2 + (seed as usize % 4);
                let a = random_hermitian(n, seed * 10 + i as u64, 1.0).unwrap();
                let base = norm_exact_partition(&a, &spec).unwrap();
                for c in [-2.0, -0.5, 3.0] {
                    let scaled = norm_exact_partition(&a.scale_real(c), &spec).unwrap();
                    let want = c.abs() * base;
                    assert!(
                        (scaled - want).abs() <= 1e-10 * (1.0 + want),
                        "{dist} d={d} seed={seed} c={c}: {scaled} vs {want}"
                    );
                }
            }
        }
    }
}

#[test]
fn hermitian_triangle_inequality() {
    let dists = catalog();
    let mut checked = 0u32;
    for trial in 0..1000u64 {
        let dist = &dists[(trial % 3) as usize];
        let d = if trial % 2 == 0 { 2.0 } else { 4.0 };
        let spec = NormSpec::new(dist.clone(), d).unwrap();
        let n = 2 + (trial as usize % 4);
        let a = random_hermitian(n, 2 * trial, 1.0).unwrap();
        let b = random_hermitian(n, 2 * trial + 1, 1.0).unwrap();
        let engine = if trial % 4 < 2 { norm_exact_partition } else { norm_exact_bell };
        let na = engine(&a, &spec).unwrap();
        let nb = engine(&b, &spec).unwrap();
        let nab = engine(&a.add(&b).unwrap(), &spec).unwrap();
        assert!(
            nab <= na + nb + 1e-10,
            "trial {trial} {dist} d={d}: {nab} > {na} + {nb}"
        );
        checked += 1;
    }
    assert_eq!(checked, 1000);
}

#[test]
fn hermitian_positive_definiteness() {
    let dists = catalog();
    for trial in 0..1000u64 {
        let dist = &dists[(trial % 3) as usize];
        let d = if trial % 2 == 0 { 2.0 } else { 4.0 };
        let spec = NormSpec::new(dist.clone(), d).unwrap();
        let n = 2 + (trial as usize % 4);
        let a = random_hermitian(n, 7000 + trial, 1.0).unwrap();
        assert!(a.matrix().max_abs_entry() > 0.0, "degenerate draw at {trial}");
        let v = norm_exact_partition(&a, &spec).unwrap();
        assert!(v > 0.0, "trial {trial} {dist} d={d}: norm not positive");
    }
}

#[test]
fn hermitian_weak_unitary_invariance() {
    let dists = catalog();
    for trial in 0..100u64 {
        let dist = &dists[(trial % 3) as usize];
        let d = if trial % 2 == 0 { 2.0 } else { 4.0 };
        let spec = NormSpec::new(dist.clone(), d).unwrap();
        let n = 2 + (trial as usize % 4);
        let a = random_hermitian(n, 500 + trial, 1.0).unwrap();
        let u = random_unitary(n, 900 + trial).unwrap();
        let conjugated = HermitianMatrix::new(
            u.adjoint().mul(a.matrix()).unwrap().mul(&u).unwrap(),
        )
        .unwrap();
        let va = norm_exact_partition(&a, &spec).unwrap();
        let vc = norm_exact_partition(&conjugated, &spec).unwrap();
        assert!(
            (va - vc).abs() <= 1e-8 * (1.0 + va),
            "trial {trial} {dist} d={d}: {va} vs {vc}"
        );
    }
}

#[test]
fn extension_restricts_to_hermitian_norm() {
    let dists = catalog();
    for trial in 0..50u64 {
        let dist = &dists[(trial % 3) as usize];
        let n = 2 + (trial as usize % 3);
        let a = random_hermitian(n, 1300 + trial, 1.0).unwrap();
        let lambda = a.eigenvalues().unwrap().values().to_vec();
        for d in [2u32, 4, 6] {
            let ext = norm_extended(a.matrix(), dist, d).unwrap();
            let herm = norm_exact_partition_spectrum(&lambda, dist, d).unwrap();
            assert!(
                (ext - herm).abs() <= 1e-9 * (1.0 + herm),
                "trial {trial} {dist} d={d}: {ext} vs {herm}"
            );
        }
    }
}

#[test]
fn extension_triangle_inequality() {
    let dists = catalog();
    for trial in 0..500u64 {
        let dist = &dists[(trial % 3) as usize];
        let d = if trial % 2 == 0 { 2 } else { 4 };
        let n = 2 + (trial as usize % 3);
        let z = random_complex_matrix(n, 3000 + 2 * trial, 1.0).unwrap();
        let w = random_complex_matrix(n, 3000 + 2 * trial + 1, 1.0).unwrap();
        let nz = norm_extended(&z, dist, d).unwrap();
        let nw = norm_extended(&w, dist, d).unwrap();
        let nzw = norm_extended(&z.add(&w).unwrap(), dist, d).unwrap();
        assert!(
            nzw <= nz + nw + 1e-10,
            "trial {trial} {dist} d={d}: {nzw} > {nz} + {nw}"
        );
    }
}

#[test]
fn extension_positive_definiteness() {
    let dists = catalog();
    for trial in 0..500u64 {
        let dist = &dists[(trial % 3) as usize];
        let d = if trial % 2 == 0 { 2 } else { 4 };
        let n = 2 + (trial as usize % 3);
        let z = random_complex_matrix(n, 5200 + trial, 1.0).unwrap();
        assert!(z.max_abs_entry() > 0.0);
        let v = norm_extended(&z, dist, d).unwrap();
        assert!(v > 0.0, "trial {trial} {dist} d={d}");
    }
}

#[test]
fn extension_weak_unitary_invariance() {
    let dists = catalog();
    for trial in 0..100u64 {
        let dist = &dists[(trial % 3) as usize];
        let d = if trial % 2 == 0 { 2 } else { 4 };
        let n = 2 + (trial as usize % 3);
        let z = random_complex_matrix(n, 6100 + trial, 1.0).unwrap();
        let u = random_unitary(n, 6400 + trial).unwrap();
        let conjugated = u.adjoint().mul(&z).unwrap().mul(&u).unwrap();
        let vz = norm_extended(&z, dist, d).unwrap();
        let vc = norm_extended(&conjugated, dist, d).unwrap();
        assert!(
            (vz - vc).abs() <= 1e-8 * (1.0 + vz),
            "trial {trial} {dist} d={d}: {vz} vs {vc}"
        );
    }
}

#[test]
fn schur_convexity_on_generated_pairs() {
    // Smaller sibling of the full acceptance run: 200 pairs, both engines.
    let dists = catalog();
    for trial in 0..200u64 {
        let dist = &dists[(trial % 3) as usize];
        let d = if trial % 2 == 0 { 2 } else { 4 };
        let n = 2 + (trial as usize % 5);
        let (x, y) = majorization_pair_generator(n, 7700 + trial).unwrap();
        for engine in [norm_exact_partition_spectrum, norm_exact_bell_spectrum] {
            let fx = engine(&x, dist, d).unwrap();
            let fy = engine(&y, dist, d).unwrap();
            assert!(
                fx <= fy + 1e-12,
                "trial {trial} {dist} d={d}: f(x)={fx} > f(y)={fy}"
            );
        }
    }
}
