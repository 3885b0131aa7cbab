//! Seeded test functions: Gaussian mixtures and compactly supported bumps.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::grid::{Grid, SampledFunction};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GaussianComponent {
    pub amplitude: f64,
    pub center: f64,
    pub sigma: f64,
}

/// `Σ A_i exp(-(x - c_i)² / (2σ_i²))`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GaussianMixture {
    pub components: Vec<GaussianComponent>,
}

impl GaussianMixture {
    /// One to three components, `A ∈ [-2, 2]`, `c ∈ [-2, 2]`, `σ ∈ [0.5, 1]`.
    pub fn random(rng: &mut impl Rng) -> Self {
        let count = rng.random_range(1..=3);
        let components = (0..count)
            .map(|_| GaussianComponent {
                amplitude: rng.random_range(-2.0..=2.0),
                center: rng.random_range(-2.0..=2.0),
                sigma: rng.random_range(0.5..=1.0),
            })
            .collect();
        Self { components }
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.components
            .iter()
            .map(|c| {
                let z = (x - c.center) / c.sigma;
                c.amplitude * (-0.5 * z * z).exp()
            })
            .sum()
    }

    pub fn sample(&self, grid: Grid) -> Result<SampledFunction> {
        SampledFunction::from_fn(grid, |x| self.eval(x))
    }

    /// Exact `∫ f`, for checking quadrature.
    pub fn integral(&self) -> f64 {
        self.components
            .iter()
            .map(|c| c.amplitude * c.sigma * (2.0 * std::f64::consts::PI).sqrt())
            .sum()
    }
}

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `count` mixtures drawn from one seeded stream.
pub fn mixture_batch(seed: u64, count: usize) -> Vec<GaussianMixture> {
    let mut rng = rng_from_seed(seed);
    (0..count).map(|_| GaussianMixture::random(&mut rng)).collect()
}

/// `exp(-1/(1 - ((x - center)/radius)²))` inside the support, zero outside.
pub fn bump(x: f64, center: f64, radius: f64) -> f64 {
    let t = (x - center) / radius;
    if t.abs() < 1.0 {
        (-1.0 / (1.0 - t * t)).exp()
    } else {
        0.0
    }
}

pub fn sample_bump(grid: Grid, center: f64, radius: f64) -> Result<SampledFunction> {
    SampledFunction::from_fn(grid, |x| bump(x, center, radius))
}
