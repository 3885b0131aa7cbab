//! The Fredholm equation `f + f⊛g = g⊛k` and the Cauchy problem
//! `k u_xx = u_t`, `u(x, 0) = φ(x)` on the line.

use std::f64::consts::PI;

use crate::algebra::{young_constant, YoungExponents};
use crate::convolution::{convolve_direct, convolve_spectral};
use crate::error::{Error, Result};
use crate::grid::{Grid, SampledFunction, Spectrum};
use crate::params::TransformParams;
use crate::report::VerificationReport;
use crate::transform::{h_forward_default, h_inverse_default};
use crate::wiener_levy::{check_nonvanishing, wiener_levy_eta, NonvanishingCertificate, DEFAULT_THRESHOLD};

#[derive(Debug, Clone)]
pub struct HeatProblem {
    pub diffusion: f64,
    pub time: f64,
    pub initial: SampledFunction,
    pub params: TransformParams,
}

impl HeatProblem {
    pub fn new(diffusion: f64, time: f64, initial: SampledFunction, params: TransformParams) -> Result<Self> {
        if !(diffusion.is_finite() && diffusion > 0.0) {
            return Err(Error::InvalidDiffusion(format!("diffusion must be finite and > 0, got {diffusion}")));
        }
        if !(time.is_finite() && time >= 0.0) {
            return Err(Error::InvalidTime(format!("time must be finite and >= 0, got {time}")));
        }
        Ok(Self { diffusion, time, initial, params })
    }
}

fn check_kt(t: f64, k: f64) -> Result<()> {
    if !(t.is_finite() && t > 0.0) {
        return Err(Error::InvalidTime(format!("the heat kernel needs t > 0, got {t}")));
    }
    if !(k.is_finite() && k > 0.0) {
        return Err(Error::InvalidDiffusion(format!("diffusion must be > 0, got {k}")));
    }
    Ok(())
}

/// `g_t(ξ) = e^{-ξ²/(4kt)} / √(kt)`.
pub fn gaussian_kernel(t: f64, k: f64, grid: Grid) -> Result<SampledFunction> {
    check_kt(t, k)?;
    let kt = k * t;
    SampledFunction::from_fn(grid, |x| (-x * x / (4.0 * kt)).exp() / kt.sqrt())
}

/// Closed-form `‖g_t‖_p = 2^{1/p} (π/p)^{1/(2p)} (kt)^{-(p-1)/(2p)}`.
pub fn gaussian_lp_norm(t: f64, k: f64, p: f64) -> Result<f64> {
    check_kt(t, k)?;
    if !(p.is_finite() && p >= 1.0) {
        return Err(Error::InvalidExponent(format!("p must be finite and >= 1, got {p}")));
    }
    let kt = k * t;
    Ok(2f64.powf(1.0 / p) * (PI / p).powf(1.0 / (2.0 * p)) * kt.powf(-(p - 1.0) / (2.0 * p)))
}

/// `e^{-kty²}` on the frequency grid.
pub fn heat_symbol(t: f64, k: f64, grid: Grid) -> Spectrum {
    Spectrum::from_raw(grid, grid.nodes().iter().map(|y| (-k * t * y * y).exp()).collect())
}

/// `u(·, t) = H⁻¹(e^{-kty²} Hφ)`; valid for every `t >= 0`.
pub fn solve_heat_spectral(prob: &HeatProblem) -> Result<SampledFunction> {
    prob.params.require_invertible()?;
    let phi_hat = h_forward_default(&prob.initial, &prob.params);
    let u_hat = phi_hat.mul(&heat_symbol(prob.time, prob.diffusion, *phi_hat.grid()))?;
    h_inverse_default(&u_hat, &prob.params)
}

/// `u(·, t) = (g_t ⊛ φ) / (a√2)`.
pub fn solve_heat_convolution(prob: &HeatProblem) -> Result<SampledFunction> {
    let a = prob.params.a();
    if a == 0.0 {
        return Err(Error::InvalidParams(
            "the convolution form of the heat solution fails when a = 0: Hg_t = a√2·e^{-kty²} vanishes"
                .into(),
        ));
    }
    if prob.time == 0.0 {
        return Err(Error::InvalidTime("the convolution form needs t > 0; g_t is singular at t = 0".into()));
    }
    let gt = gaussian_kernel(prob.time, prob.diffusion, *prob.initial.grid())?;
    Ok(convolve_spectral(&gt, &prob.initial, &prob.params)?.scale(1.0 / (a * 2f64.sqrt())))
}

/// `‖u(·, t)‖_r` against `𝒞(q) ‖g_t‖_p ‖φ‖_q / (|a|√2)`.
///
/// `p = q = r = 1` reduces to `(|3a²−b²| + 3(a²+b²)) / (4a²) · ‖φ‖₁`.
pub fn heat_estimate_report(prob: &HeatProblem, p: f64, q: f64, r: f64) -> Result<VerificationReport> {
    let exps = YoungExponents::convolution(p, q, r)?;
    let a = prob.params.a();
    if a == 0.0 {
        return Err(Error::InvalidParams("the heat estimate needs a != 0".into()));
    }
    let u = if prob.time == 0.0 { prob.initial.clone() } else { solve_heat_spectral(prob)? };
    let measured = u.lp_norm(exps.r)?;
    let gt_norm = gaussian_lp_norm(prob.time, prob.diffusion, exps.p)?;
    let bound = young_constant(&prob.params, exps.q)? * gt_norm * prob.initial.lp_norm(exps.q)?
        / (a.abs() * 2f64.sqrt());
    let tolerance = 1e-10 * (1.0 + bound);
    let name = format!("heat-estimate(p={},q={},r={})", exps.p, exps.q, exps.r);
    Ok(VerificationReport::upper_bound(name, measured, bound, tolerance)
        .with_diagnostic("outside_mass", u.outside_mass_fraction()))
}

#[derive(Debug, Clone)]
pub struct FredholmProblem {
    pub g: SampledFunction,
    pub k_rhs: SampledFunction,
    pub params: TransformParams,
}

impl FredholmProblem {
    pub fn new(g: SampledFunction, k_rhs: SampledFunction, params: TransformParams) -> Result<Self> {
        g.grid().ensure_same(k_rhs.grid())?;
        Ok(Self { g, k_rhs, params })
    }

    pub fn certificate(&self) -> NonvanishingCertificate {
        check_nonvanishing(&self.g, &self.params, DEFAULT_THRESHOLD)
    }
}

#[derive(Debug, Clone)]
pub struct FredholmSolution {
    pub f: SampledFunction,
    pub eta: SampledFunction,
    pub certificate: NonvanishingCertificate,
}

/// `f = η ⊛ k` with `Hη = Hg / (1 + Hg)`.
pub fn solve_fredholm(prob: &FredholmProblem) -> Result<FredholmSolution> {
    let eta = wiener_levy_eta(&prob.g, &prob.params)?;
    let f = convolve_spectral(&eta.function, &prob.k_rhs, &prob.params)?;
    Ok(FredholmSolution { f, eta: eta.function, certificate: eta.certificate })
}

/// Solves on the transform side in one step, `H⁻¹(Hg·Hk / (1 + Hg))`.
pub fn solve_fredholm_transform_side(prob: &FredholmProblem) -> Result<SampledFunction> {
    prob.params.require_invertible()?;
    let cert = prob.certificate();
    if !cert.is_valid() {
        return Err(Error::SingularSymbol {
            min_abs: cert.min_abs,
            node: cert.node_argmin,
            threshold: cert.threshold,
        });
    }
    let hg = h_forward_default(&prob.g, &prob.params);
    let hk = h_forward_default(&prob.k_rhs, &prob.params);
    let num = hg.mul(&hk)?;
    let den = hg.map(|v| 1.0 + v)?;
    let quotient = Spectrum::from_raw(
        *hg.grid(),
        num.values().iter().zip(den.values()).map(|(n, d)| n / d).collect(),
    );
    h_inverse_default(&quotient, &prob.params)
}

/// `‖f + f⊛g − g⊛k‖₁ / max(‖g⊛k‖₁, 1e-30)`, both products by direct quadrature.
pub fn fredholm_residual_report(
    prob: &FredholmProblem,
    f: &SampledFunction,
    tolerance: f64,
) -> Result<VerificationReport> {
    let fg = convolve_direct(f, &prob.g, &prob.params)?;
    let gk = convolve_direct(&prob.g, &prob.k_rhs, &prob.params)?;
    let residual = f.add_scaled(1.0, &fg)?.sub(&gk)?.lp_norm(1.0)?;
    let rel = residual / gk.lp_norm(1.0)?.max(1e-30);
    Ok(VerificationReport::discrepancy("fredholm-residual", rel, tolerance)
        .with_diagnostic("absolute_residual", residual))
}

/// `‖f‖₁ <= S / (4|a|√(2π)) · ‖η‖₁ ‖k‖₁`.
pub fn fredholm_bound_report(prob: &FredholmProblem, sol: &FredholmSolution) -> Result<VerificationReport> {
    let bound = prob.params.l1_constant()? * sol.eta.lp_norm(1.0)? * prob.k_rhs.lp_norm(1.0)?;
    let measured = sol.f.lp_norm(1.0)?;
    Ok(VerificationReport::upper_bound("fredholm-l1-bound", measured, bound, 1e-10 * (1.0 + bound))
        .with_diagnostic("conditioning", sol.certificate.conditioning()))
}
