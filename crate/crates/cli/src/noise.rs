//! Gaussian scatter on the correlation functions, clamped to physical states.

use bellcorr_core::BellDiagonalParams;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

/// Seeded generator used for all noise draws.
pub fn noise_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Adds N(0, sigma^2) to each `c_i` using a generator seeded with `seed`.
pub fn perturb_correlations(c: &BellDiagonalParams, sigma: f64, seed: u64) -> BellDiagonalParams {
    perturb_with(c, sigma, &mut noise_rng(seed))
}

/// Same as [`perturb_correlations`] but draws from `rng`.
///
/// # Panics
///
/// If `sigma` is negative or not finite.
pub fn perturb_with<R: Rng + ?Sized>(
    c: &BellDiagonalParams,
    sigma: f64,
    rng: &mut R,
) -> BellDiagonalParams {
    if sigma == 0.0 {
        return *c;
    }
    let normal = Normal::new(0.0, sigma).expect("sigma must be finite and non-negative");
    let noisy = c.to_array().map(|x| x + normal.sample(rng));
    clamp_to_tetrahedron(noisy)
}

/// Scales `c` by the largest `lambda <= 1` that keeps every Bell weight
/// `(1 + lambda l_k) / 4` non-negative.
pub fn clamp_to_tetrahedron(c: [f64; 3]) -> BellDiagonalParams {
    let [c1, c2, c3] = c;
    let lambda = [c1 - c2 + c3, -c1 + c2 + c3, c1 + c2 - c3, -c1 - c2 - c3]
        .into_iter()
        .filter(|&l| l < -1.0)
        .map(|l| -1.0 / l)
        .fold(1.0, f64::min);
    BellDiagonalParams::from_array(c.map(|x| x * lambda))
        .expect("scaled correlations lie in the tetrahedron")
}
