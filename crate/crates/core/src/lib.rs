//! Numerical realisation of the two-parameter Hartley-type transform
//! `(Hf)(y) = (2π)^{-1/2} ∫ (a cos xy + b sin xy) f(x) dx` and the
//! convolution `⊛` that it turns into pointwise multiplication, on
//! uniform symmetric grids.

mod chirp;

pub mod algebra;
pub mod bench;
pub mod convolution;
pub mod error;
pub mod grid;
pub mod io;
pub mod params;
pub mod report;
pub mod samples;
pub mod solvers;
pub mod transform;
pub mod verify;
pub mod wiener_levy;

pub use convolution::{
    convolve, convolve_direct, convolve_spectral, factorization_check, kernel,
    kernel_lq_estimate_check, titchmarsh_probe, ConvMethod,
};
pub use error::{Error, Result};
pub use grid::{lp_norm, Grid, Sampled, SampledFunction, Spectrum};
pub use params::TransformParams;
pub use report::VerificationReport;
pub use transform::{
    fourier_cos, fourier_sin, h_forward, h_forward_default, h_inverse, h_inverse_default,
    riemann_lebesgue_check, TransformMethod,
};
