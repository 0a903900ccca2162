//! Counter-based random number generation.
//!
//! Every draw is a pure function of `(seed, index, position, stream)`, so the
//! same tuple yields the same value no matter which thread asks for it or in
//! what order. This is what makes the Monte Carlo engines reproducible under
//! any parallel schedule.

/// splitmix64 finalizer.
#[inline]
fn mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Hash the counter tuple into a uniform 64-bit word.
#[inline]
pub fn counter_u64(seed: u64, index: u64, position: u64, stream: u64) -> u64 {
    let mut h = mix(seed ^ 0x9e37_79b9_7f4a_7c15);
    h = mix(h ^ index.wrapping_mul(0xa076_1d64_78bd_642f));
    h = mix(h ^ position.wrapping_mul(0xe703_7ed1_a0b4_28db));
    h = mix(h ^ stream.wrapping_mul(0x8ebc_6af0_9c88_c6e3));
    h
}

/// Uniform draw on the open interval (0, 1): 52 mantissa bits centered in
/// each half-open cell, so neither endpoint is ever returned and inverse-CDF
/// transforms cannot hit a log(0).
#[inline]
pub fn uniform_open01(seed: u64, index: u64, position: u64, stream: u64) -> f64 {
    let bits = counter_u64(seed, index, position, stream) >> 12;
    (bits as f64 + 0.5) * (1.0 / 4_503_599_627_370_496.0) // 2^-52
}

/// Standard-normal draw by Box-Muller. Consumes streams `stream` and
/// `stream + 1` of the position's counter.
#[inline]
pub fn standard_normal(seed: u64, index: u64, position: u64, stream: u64) -> f64 {
    let u1 = uniform_open01(seed, index, position, stream);
    let u2 = uniform_open01(seed, index, position, stream + 1);
    (-2.0 * u1.ln()).sqrt() * (std::f64::consts::TAU * u2).cos()
}

/// Both Box-Muller outputs; used where two independent normals per counter
/// are wanted (complex Gaussian matrix entries).
#[inline]
pub fn standard_normal_pair(seed: u64, index: u64, position: u64, stream: u64) -> (f64, f64) {
    let u1 = uniform_open01(seed, index, position, stream);
    let u2 = uniform_open01(seed, index, position, stream + 1);
    let r = (-2.0 * u1.ln()).sqrt();
    let (s, c) = (std::f64::consts::TAU * u2).sin_cos();
    (r * c, r * s)
}
