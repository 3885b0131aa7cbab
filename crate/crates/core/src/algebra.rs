//! Algebra-level quantities: the scaled L1 norm, convolution powers, the
//! spectral radius via powers and via `sup |Hf|`, characters, and the
//! Young-type inequalities with their constants.

use serde::{Deserialize, Serialize};

use crate::convolution::convolve_direct;
use crate::error::{Error, Result};
use crate::grid::SampledFunction;
use crate::params::TransformParams;
use crate::report::VerificationReport;
use crate::transform::{h_forward_default, h_inverse_default};

const RELATION_TOL: f64 = 1e-12;
const INEQUALITY_TOL: f64 = 1e-10;

/// `‖f‖_α = α ‖f‖₁`, the norm under which `⊛` is submultiplicative.
pub fn alpha_norm(f: &SampledFunction, params: &TransformParams) -> Result<f64> {
    Ok(params.alpha()? * f.lp_norm(1.0)?)
}

/// `f^{⊛k}`, computed as `H⁻¹((Hf)^k)`.
pub fn conv_power(f: &SampledFunction, k: u32, params: &TransformParams) -> Result<SampledFunction> {
    params.require_invertible()?;
    if k == 0 {
        return Err(Error::InvalidExponent("convolution powers start at k = 1".into()));
    }
    let spectrum = h_forward_default(f, params);
    let power = spectrum.map(|v| v.powi(k as i32))?;
    h_inverse_default(&power, params)
}

/// `sup_y |(Hf)(y)|` over the frequency nodes.
pub fn spectral_radius_gelfand(f: &SampledFunction, params: &TransformParams) -> f64 {
    h_forward_default(f, params).sup_norm()
}

/// Smallest scale `c` for which `c‖·‖₁` is submultiplicative under `⊛` by
/// the L1 bound, i.e. `max(α, C)` with `C = α²` the L1 constant. It equals `α`
/// exactly when `C ≤ 1`; beyond that `α‖·‖₁` need not be submultiplicative.
pub fn submultiplicative_scale(params: &TransformParams) -> Result<f64> {
    let c = params.l1_constant()?;
    Ok(c.sqrt().max(c))
}

/// `‖f ⊛ g‖_α ≤ ‖f‖_α ‖g‖_α` with `f ⊛ g` supplied.
pub fn submultiplicative_report(
    conv: &SampledFunction,
    f: &SampledFunction,
    g: &SampledFunction,
    params: &TransformParams,
) -> Result<VerificationReport> {
    let lhs = alpha_norm(conv, params)?;
    let rhs = alpha_norm(f, params)? * alpha_norm(g, params)?;
    let c = params.l1_constant()?;
    let report = VerificationReport::upper_bound("submultiplicative", lhs, rhs, INEQUALITY_TOL * (1.0 + rhs))
        .with_diagnostic("l1_constant", c);
    Ok(if c > 1.0 {
        report.with_note("L1 constant exceeds 1: the bound does not follow from the L1 estimate")
    } else {
        report
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RadiusTrace {
    pub k_max: u32,
    /// `roots[k - 1] = ‖f^{⊛k}‖_α^{1/k}`
    pub roots: Vec<f64>,
    pub gelfand_value: f64,
    /// L1 share of `f^{⊛k}` outside `[-L/2, L/2]`; large values mean the
    /// grid is too narrow for the power.
    pub outside_mass: Vec<f64>,
}

impl RadiusTrace {
    pub fn root(&self, k: u32) -> f64 {
        self.roots[k as usize - 1]
    }

    pub fn relative_gap(&self) -> f64 {
        let last = *self.roots.last().expect("k_max >= 2");
        if self.gelfand_value == 0.0 {
            last
        } else {
            (last - self.gelfand_value).abs() / self.gelfand_value
        }
    }
}

/// `‖f^{⊛k}‖_α^{1/k}` for `k = 1..=k_max`, next to `‖Hf‖_∞`. Powers reuse
/// the previous `(Hf)^{k-1}`.
pub fn spectral_radius_trace(
    f: &SampledFunction,
    params: &TransformParams,
    k_max: u32,
) -> Result<RadiusTrace> {
    params.require_invertible()?;
    if k_max < 2 {
        return Err(Error::InvalidExponent(format!("k_max must be >= 2, got {k_max}")));
    }
    let alpha = params.alpha()?;
    let spectrum = h_forward_default(f, params);
    let mut power = spectrum.clone();
    let mut roots = Vec::with_capacity(k_max as usize);
    let mut outside_mass = Vec::with_capacity(k_max as usize);
    for k in 1..=k_max {
        if k > 1 {
            power = power.mul(&spectrum)?;
        }
        let fk = h_inverse_default(&power, params)?;
        roots.push((alpha * fk.lp_norm(1.0)?).powf(1.0 / k as f64));
        outside_mass.push(fk.outside_mass_fraction());
    }
    Ok(RadiusTrace { k_max, roots, gelfand_value: spectrum.sup_norm(), outside_mass })
}

/// The character `Φ_y(f) = (Hf)(y)` at frequency node `y`.
pub fn character_eval(f: &SampledFunction, y: f64, params: &TransformParams) -> Result<f64> {
    h_forward_default(f, params).at(y)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum YoungMode {
    /// `1/p + 1/q + 1/r = 2`, all in `(1, ∞)`.
    Trilinear,
    /// `1/p + 1/q = 1 + 1/r`, all in `[1, ∞]`.
    Convolution,
}

/// Exponents for the Young-type bounds: `f ∈ L_q`, `g ∈ L_p`, and `h ∈ L_r`
/// (trilinear) or the result in `L_r` (convolution).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct YoungExponents {
    pub p: f64,
    pub q: f64,
    pub r: f64,
    pub mode: YoungMode,
}

fn reciprocal(e: f64) -> f64 {
    if e.is_infinite() {
        0.0
    } else {
        1.0 / e
    }
}

impl YoungExponents {
    pub fn trilinear(p: f64, q: f64, r: f64) -> Result<Self> {
        for e in [p, q, r] {
            if !(e > 1.0 && e.is_finite()) {
                return Err(Error::ExponentRelationViolated(format!(
                    "trilinear exponents must lie in (1, ∞), got ({p}, {q}, {r})"
                )));
            }
        }
        let sum = 1.0 / p + 1.0 / q + 1.0 / r;
        if (sum - 2.0).abs() > RELATION_TOL {
            return Err(Error::ExponentRelationViolated(format!("1/p + 1/q + 1/r = {sum} ≠ 2")));
        }
        Ok(Self { p, q, r, mode: YoungMode::Trilinear })
    }

    pub fn convolution(p: f64, q: f64, r: f64) -> Result<Self> {
        for e in [p, q, r] {
            if e.is_nan() || e < 1.0 {
                return Err(Error::ExponentRelationViolated(format!(
                    "exponents must lie in [1, ∞], got ({p}, {q}, {r})"
                )));
            }
        }
        let lhs = reciprocal(p) + reciprocal(q);
        let rhs = 1.0 + reciprocal(r);
        if (lhs - rhs).abs() > RELATION_TOL {
            return Err(Error::ExponentRelationViolated(format!(
                "1/p + 1/q = {lhs} ≠ 1 + 1/r = {rhs}"
            )));
        }
        if r.is_infinite() && (p.is_infinite() || q.is_infinite()) {
            return Err(Error::ExponentRelationViolated(
                "r = ∞ needs conjugate p, q in (1, ∞)".into(),
            ));
        }
        Ok(Self { p, q, r, mode: YoungMode::Convolution })
    }
}

/// `C = (1/(|a|(2π)^{n/2})) ((|3a²−b²|^q + 3(a²+b²)^q)/4)^{1/q}`.
pub fn young_constant(params: &TransformParams, q: f64) -> Result<f64> {
    params.require_nonzero_a()?;
    if q.is_nan() || q < 1.0 {
        return Err(Error::InvalidExponent(format!("q must be >= 1, got {q}")));
    }
    let mean = params.kernel_power_sum(q) / 4.0;
    Ok(mean.powf(1.0 / q) / (params.a().abs() * params.normalization()))
}

/// `‖f ⊛ g‖_r ≤ C(q) ‖f‖_q ‖g‖_p`, the convolution taken from the kernel.
pub fn verify_young_conv(
    f: &SampledFunction,
    g: &SampledFunction,
    exps: &YoungExponents,
    params: &TransformParams,
) -> Result<VerificationReport> {
    if exps.mode != YoungMode::Convolution {
        return Err(Error::ExponentRelationViolated("convolution-mode exponents required".into()));
    }
    let conv = convolve_direct(f, g, params)?;
    young_conv_report(&conv, f, g, exps, params)
}

/// As [`verify_young_conv`] with `f ⊛ g` already computed.
pub fn young_conv_report(
    conv: &SampledFunction,
    f: &SampledFunction,
    g: &SampledFunction,
    exps: &YoungExponents,
    params: &TransformParams,
) -> Result<VerificationReport> {
    let measured = conv.lp_norm(exps.r)?;
    let bound = young_constant(params, exps.q)? * f.lp_norm(exps.q)? * g.lp_norm(exps.p)?;
    Ok(VerificationReport::upper_bound(
        format!("young-conv(p={}, q={}, r={})", exps.p, exps.q, exps.r),
        measured,
        bound,
        INEQUALITY_TOL * (1.0 + bound),
    ))
}

/// `|∫ (f ⊛ g) h| ≤ C(q) ‖f‖_q ‖g‖_p ‖h‖_r`.
pub fn verify_young_trilinear(
    f: &SampledFunction,
    g: &SampledFunction,
    h: &SampledFunction,
    exps: &YoungExponents,
    params: &TransformParams,
) -> Result<VerificationReport> {
    if exps.mode != YoungMode::Trilinear {
        return Err(Error::ExponentRelationViolated("trilinear-mode exponents required".into()));
    }
    let conv = convolve_direct(f, g, params)?;
    young_trilinear_report(&conv, f, g, h, exps, params)
}

pub fn young_trilinear_report(
    conv: &SampledFunction,
    f: &SampledFunction,
    g: &SampledFunction,
    h: &SampledFunction,
    exps: &YoungExponents,
    params: &TransformParams,
) -> Result<VerificationReport> {
    let measured = conv.mul(h)?.integral().abs();
    let bound = young_constant(params, exps.q)?
        * f.lp_norm(exps.q)?
        * g.lp_norm(exps.p)?
        * h.lp_norm(exps.r)?;
    Ok(VerificationReport::upper_bound(
        format!("young-trilinear(p={}, q={}, r={})", exps.p, exps.q, exps.r),
        measured,
        bound,
        INEQUALITY_TOL * (1.0 + bound),
    ))
}

/// Constant obtained by bounding the four kernel terms separately with the
/// classical Young inequality: `(|3a²−b²|^r + 3(a²+b²)^r) / (4|a|)`.
pub fn crude_constant(params: &TransformParams, r: f64) -> Result<f64> {
    params.require_nonzero_a()?;
    Ok(params.kernel_power_sum(r) / (4.0 * params.a().abs()))
}

/// Compares the sharp constant with the crude one for output exponent `r`.
/// The sharp constant is taken at `q = r` (with `p = 1`), the pairing that
/// satisfies `1/p + 1/q = 1 + 1/r` for every `r ≥ 1`.
pub fn crude_constant_compare(params: &TransformParams, r: f64) -> Result<VerificationReport> {
    if r.is_nan() || r < 1.0 || r.is_infinite() {
        return Err(Error::InvalidExponent(format!("r must be finite and >= 1, got {r}")));
    }
    let sharp = young_constant(params, r)?;
    let crude = crude_constant(params, r)?;
    Ok(VerificationReport::upper_bound(
        format!("sharp-vs-crude(a={}, b={}, r={r})", params.a(), params.b()),
        sharp,
        crude,
        0.0,
    ))
}
