//! Inversion in the unitised algebra: when `1 + Hg` has no zero, there are
//! integrable `ℓ` and `η = -ℓ` with
//!
//! ```text
//! Hℓ = -Hg / (1 + Hg),    Hη = Hg / (1 + Hg).
//! ```

use serde::{Deserialize, Serialize};

use crate::algebra::conv_power;
use crate::error::{Error, Result};
use crate::grid::{SampledFunction, Spectrum};
use crate::params::TransformParams;
use crate::report::VerificationReport;
use crate::transform::{h_forward_default, h_inverse_default};

pub const DEFAULT_THRESHOLD: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NonvanishingCertificate {
    /// `min_y |1 + (Hg)(y)|` over the frequency nodes.
    pub min_abs: f64,
    pub threshold: f64,
    pub node_argmin: f64,
}

impl NonvanishingCertificate {
    pub fn is_valid(&self) -> bool {
        self.min_abs > self.threshold
    }

    /// Amplification of the division by `1 + Hg`.
    pub fn conditioning(&self) -> f64 {
        1.0 / self.min_abs
    }

    fn require_valid(&self) -> Result<()> {
        if self.is_valid() {
            Ok(())
        } else {
            Err(Error::SingularSymbol {
                min_abs: self.min_abs,
                node: self.node_argmin,
                threshold: self.threshold,
            })
        }
    }
}

pub fn check_nonvanishing(
    g: &SampledFunction,
    params: &TransformParams,
    threshold: f64,
) -> NonvanishingCertificate {
    certificate_for(&h_forward_default(g, params), threshold)
}

fn certificate_for(spectrum: &Spectrum, threshold: f64) -> NonvanishingCertificate {
    let (j, min_abs) = spectrum
        .values()
        .iter()
        .map(|v| (1.0 + v).abs())
        .enumerate()
        .fold((0, f64::INFINITY), |best, (j, v)| if v < best.1 { (j, v) } else { best });
    NonvanishingCertificate { min_abs, threshold, node_argmin: spectrum.grid().node(j) }
}

#[derive(Debug, Clone)]
pub struct WienerLevyInverse {
    /// `ℓ` or `η` in the space domain.
    pub function: SampledFunction,
    /// The prescribed symbol `∓Hg / (1 + Hg)`.
    pub symbol: Spectrum,
    pub certificate: NonvanishingCertificate,
}

impl WienerLevyInverse {
    pub fn conditioning(&self) -> f64 {
        self.certificate.conditioning()
    }
}

fn construct(g: &SampledFunction, params: &TransformParams, sign: f64) -> Result<WienerLevyInverse> {
    params.require_invertible()?;
    let hg = h_forward_default(g, params);
    let certificate = certificate_for(&hg, DEFAULT_THRESHOLD);
    certificate.require_valid()?;
    let symbol = hg.map(|v| sign * v / (1.0 + v))?;
    let function = h_inverse_default(&symbol, params)?;
    Ok(WienerLevyInverse { function, symbol, certificate })
}

/// `ℓ = H⁻¹(-Hg / (1 + Hg))`.
pub fn wiener_levy_ell(g: &SampledFunction, params: &TransformParams) -> Result<WienerLevyInverse> {
    construct(g, params, -1.0)
}

/// `η = -ℓ`, so that `Hη = Hg / (1 + Hg)`.
pub fn wiener_levy_eta(g: &SampledFunction, params: &TransformParams) -> Result<WienerLevyInverse> {
    let ell = wiener_levy_ell(g, params)?;
    Ok(WienerLevyInverse {
        function: ell.function.scale(-1.0),
        symbol: ell.symbol.scale(-1.0),
        certificate: ell.certificate,
    })
}

/// `‖(1 + Hg)·Hη − Hg‖_∞`, with `Hη` re-transformed from the space-domain `η`.
pub fn eta_identity_check(
    g: &SampledFunction,
    eta: &SampledFunction,
    params: &TransformParams,
    tolerance: f64,
) -> Result<VerificationReport> {
    let hg = h_forward_default(g, params);
    let heta = h_forward_default(eta, params);
    let lhs = hg.map(|v| 1.0 + v)?.mul(&heta)?;
    let gap = lhs.sub(&hg)?.sup_norm();
    Ok(VerificationReport::discrepancy("wiener-levy-identity", gap, tolerance))
}

/// `Σ_{m=1}^{terms} (-1)^{m+1} g^{⊛m}`.
pub fn neumann_partial_sum(
    g: &SampledFunction,
    params: &TransformParams,
    terms: u32,
) -> Result<SampledFunction> {
    let mut sum = SampledFunction::zeros(*g.grid());
    for m in 1..=terms {
        let sign = if m % 2 == 1 { 1.0 } else { -1.0 };
        sum = sum.add_scaled(sign, &conv_power(g, m, params)?)?;
    }
    Ok(sum)
}

/// Compares `Hη` with the transform of the truncated Neumann series. The
/// bound is the geometric tail `s^{M+1} / (1 − s)`, `s = ‖Hg‖_∞ < 1`.
pub fn neumann_check(
    g: &SampledFunction,
    eta: &SampledFunction,
    params: &TransformParams,
    terms: u32,
) -> Result<VerificationReport> {
    let s = h_forward_default(g, params).sup_norm();
    let name = format!("neumann-series(M={terms})");
    if s >= 1.0 {
        return Ok(VerificationReport::upper_bound(name, f64::INFINITY, 0.0, 0.0)
            .failed("‖Hg‖_∞ >= 1: series does not converge"));
    }
    let partial = neumann_partial_sum(g, params, terms)?;
    let gap = h_forward_default(eta, params)
        .sub(&h_forward_default(&partial, params))?
        .sup_norm();
    let tail = s.powi(terms as i32 + 1) / (1.0 - s);
    Ok(VerificationReport::upper_bound(name, gap, tail, 1e-12).with_diagnostic("sup_hg", s))
}

/// Fewest Neumann terms whose geometric tail bound is at most `target`.
pub fn neumann_terms_for(sup_hg: f64, target: f64) -> Option<u32> {
    if !(0.0..1.0).contains(&sup_hg) {
        return None;
    }
    (1..=200).find(|&m| sup_hg.powi(m as i32 + 1) / (1.0 - sup_hg) <= target)
}
