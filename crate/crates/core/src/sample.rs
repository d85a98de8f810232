//! Deterministic sampling of SU(2) inputs.

use num_complex::Complex;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::unitary::Unitary2;

/// RNG for one trial, split off a 64-bit master seed by stream counter so
/// trials are independent and order-insensitive.
pub fn trial_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Uniform SU(2) element with `phi = 0`: four independent standard normal
/// reals form two complex numbers, normalized to a unit pair.
pub fn random_su2<R: Rng + ?Sized>(rng: &mut R) -> Unitary2<f64> {
    loop {
        let (x0, y0, x1, y1): (f64, f64, f64, f64) = (
            rng.sample(StandardNormal),
            rng.sample(StandardNormal),
            rng.sample(StandardNormal),
            rng.sample(StandardNormal),
        );
        let norm = (x0 * x0 + y0 * y0 + x1 * x1 + y1 * y1).sqrt();
        if norm < 1e-6 {
            continue;
        }
        return Unitary2::new_unchecked(
            Complex::new(x0 / norm, y0 / norm),
            Complex::new(x1 / norm, y1 / norm),
            0.0,
        );
    }
}

/// SU(2) element with a prescribed off-diagonal magnitude and random phases.
pub fn random_su2_with_b_mag<R: Rng + ?Sized>(rng: &mut R, b_mag: f64) -> Unitary2<f64> {
    assert!((0.0..=1.0).contains(&b_mag));
    let a_mag = (1.0 - b_mag * b_mag).sqrt();
    let ta = rng.random_range(0.0..std::f64::consts::TAU);
    let tb = rng.random_range(0.0..std::f64::consts::TAU);
    Unitary2::new_unchecked(
        Complex::from_polar(a_mag, ta),
        Complex::from_polar(b_mag, tb),
        0.0,
    )
}
