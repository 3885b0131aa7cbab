//! The convolution
//!
//! ```text
//! (f ⊛ g)(x) = 1/(4a (2π)^{n/2}) ∫ K[f](x, v) g(v) dv
//! K[f](x, v) = (3a² − b²) f(x − v) + (a² + b²)[f(x + v) + f(−x + v) − f(−x − v)]
//! ```
//!
//! evaluated either directly from the kernel (`O(N²)`) or through the
//! factorisation `H(f ⊛ g) = Hf · Hg` followed by the inverse transform.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::{Grid, SampledFunction, Spectrum};
use crate::params::TransformParams;
use crate::report::VerificationReport;
use crate::transform::{h_forward_default, h_inverse, h_inverse_default, TransformMethod};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ConvMethod {
    /// Trapezoid quadrature of the four-shift kernel.
    #[serde(rename = "direct")]
    DirectKernel,
    /// Inverse transform of the product of transforms.
    #[default]
    #[serde(rename = "spectral")]
    SpectralFactorization,
}

/// `f` zero-extended to offsets `-2c..=2c`, enough for every `±x ± v`.
struct Extended {
    values: Vec<f64>,
    origin: isize,
}

impl Extended {
    fn new(f: &SampledFunction) -> Self {
        let c = f.grid().center();
        let mut values = vec![0.0; 4 * c + 1];
        values[c..=3 * c].copy_from_slice(f.values());
        Self { values, origin: 2 * c as isize }
    }

    #[inline]
    fn at(&self, m: isize) -> f64 {
        self.values[(m + self.origin) as usize]
    }
}

/// Evaluator of `K[f](x, v)` at grid nodes.
pub struct Kernel {
    ext: Extended,
    grid: Grid,
    direct: f64,
    reflected: f64,
}

impl Kernel {
    /// `K` at node offsets `i` (for `x`) and `j` (for `v`).
    #[inline]
    pub fn at_offsets(&self, i: isize, j: isize) -> f64 {
        let e = &self.ext;
        self.direct * e.at(i - j) + self.reflected * (e.at(i + j) + e.at(j - i) - e.at(-i - j))
    }

    /// `K(x, v)` for grid nodes `x`, `v`.
    pub fn eval(&self, x: f64, v: f64) -> Result<f64> {
        let c = self.grid.center() as isize;
        let i = self.grid.index_of(x).ok_or(Error::NodeNotOnGrid(x))? as isize - c;
        let j = self.grid.index_of(v).ok_or(Error::NodeNotOnGrid(v))? as isize - c;
        Ok(self.at_offsets(i, j))
    }
}

pub fn kernel(f: &SampledFunction, params: &TransformParams) -> Kernel {
    Kernel {
        ext: Extended::new(f),
        grid: *f.grid(),
        direct: params.direct_weight(),
        reflected: params.reflected_weight(),
    }
}

/// Direct kernel quadrature. Requires `a ≠ 0`.
pub fn convolve_direct(
    f: &SampledFunction,
    g: &SampledFunction,
    params: &TransformParams,
) -> Result<SampledFunction> {
    params.require_nonzero_a()?;
    f.grid().ensure_same(g.grid())?;
    let grid = *f.grid();
    let k = kernel(f, params);
    let c = grid.center() as isize;
    let weighted: Vec<f64> =
        g.values().iter().enumerate().map(|(j, v)| grid.weight(j) * v).collect();
    let prefactor = 1.0 / (4.0 * params.a() * params.normalization());
    let values = (-c..=c)
        .map(|i| {
            let mut sum = 0.0;
            for (j, wg) in weighted.iter().enumerate() {
                sum += k.at_offsets(i, j as isize - c) * wg;
            }
            prefactor * sum
        })
        .collect();
    SampledFunction::new(grid, values)
}

/// `H⁻¹(Hf · Hg)` on the self-dual grid. Requires `a ≠ 0` and `b ≠ 0`.
pub fn convolve_spectral(
    f: &SampledFunction,
    g: &SampledFunction,
    params: &TransformParams,
) -> Result<SampledFunction> {
    params.require_invertible()?;
    f.grid().ensure_same(g.grid())?;
    let product = h_forward_default(f, params).mul(&h_forward_default(g, params))?;
    h_inverse_default(&product, params)
}

pub fn convolve(
    f: &SampledFunction,
    g: &SampledFunction,
    params: &TransformParams,
    method: ConvMethod,
) -> Result<SampledFunction> {
    match method {
        ConvMethod::DirectKernel => convolve_direct(f, g, params),
        ConvMethod::SpectralFactorization => convolve_spectral(f, g, params),
    }
}

/// `‖H(f ⊛ g) − Hf·Hg‖_∞` with the convolution taken from the kernel.
pub fn factorization_check(
    f: &SampledFunction,
    g: &SampledFunction,
    params: &TransformParams,
    tolerance: f64,
) -> Result<VerificationReport> {
    let conv = convolve_direct(f, g, params)?;
    let lhs = h_forward_default(&conv, params);
    let rhs = h_forward_default(f, params).mul(&h_forward_default(g, params))?;
    let gap = lhs.sub(&rhs)?.sup_norm();
    Ok(VerificationReport::discrepancy("factorization", gap, tolerance)
        .with_diagnostic("sup_product", rhs.sup_norm()))
}

/// `∫ |K(x, v)|^q dx ≤ 4^{q−1}(|3a²−b²|^q + 3(a²+b²)^q)‖f‖_q^q` at node `v`.
pub fn kernel_lq_estimate_check(
    f: &SampledFunction,
    q: f64,
    v: f64,
    params: &TransformParams,
) -> Result<VerificationReport> {
    if q.is_nan() || q < 1.0 || q.is_infinite() {
        return Err(Error::InvalidExponent(format!("q must be finite and >= 1, got {q}")));
    }
    let grid = f.grid();
    let j = grid.index_of(v).ok_or(Error::NodeNotOnGrid(v))? as isize - grid.center() as isize;
    let k = kernel(f, params);
    let c = grid.center() as isize;
    let mut lhs = 0.0;
    for i in -c..=c {
        lhs += grid.weight((i + c) as usize) * k.at_offsets(i, j).abs().powf(q);
    }
    let bound = 4f64.powf(q - 1.0) * params.kernel_power_sum(q) * f.lp_norm(q)?.powf(q);
    Ok(VerificationReport::upper_bound(
        format!("kernel-lq-estimate(q={q}, v={v})"),
        lhs,
        bound,
        1e-12 * (1.0 + bound),
    ))
}

/// No zero divisors: for compactly supported, non-negligible `f` and `g`
/// the convolution must not vanish. Passes when `‖f ⊛ g‖_∞ > 1e-10`.
pub fn titchmarsh_probe(
    f: &SampledFunction,
    g: &SampledFunction,
    params: &TransformParams,
) -> Result<VerificationReport> {
    const FLOOR: f64 = 1e-10;
    let conv = convolve_direct(f, g, params)?;
    let sup = conv.sup_norm();
    let report = VerificationReport::lower_bound("titchmarsh", sup, FLOOR, 0.0)
        .with_diagnostic("l1_f", f.lp_norm(1.0)?)
        .with_diagnostic("l1_g", g.lp_norm(1.0)?)
        .with_diagnostic("outside_mass_f", f.outside_mass_fraction())
        .with_diagnostic("outside_mass_g", g.outside_mass_fraction());
    let degenerate = f.lp_norm(1.0)? <= 1e-6 || g.lp_norm(1.0)? <= 1e-6;
    let spread = f.outside_mass_fraction() > 1e-12 || g.outside_mass_fraction() > 1e-12;
    Ok(if degenerate {
        report.with_note("degenerate premise: a factor has negligible L1 mass")
    } else if spread {
        report.with_note("premise not met: support reaches beyond [-L/2, L/2]")
    } else {
        report
    })
}

/// One row of the identity-candidate trend: for the truncated symbol
/// `He = 1` on `[-L, L]`, the L1 norm of `e` and how far `e ⊛ f` (kernel
/// quadrature) is from `f`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IdentityTrendRow {
    pub half_width: f64,
    pub l1_norm: f64,
    pub defect: f64,
}

/// Truncated identity candidates on grids of fixed spacing and growing width.
/// Their L1 norms keep growing with the window, since `He = 1` has no
/// integrable preimage.
pub fn identity_candidate_trend(
    f: impl Fn(f64) -> f64,
    params: &TransformParams,
    spacing: f64,
    half_widths: &[f64],
) -> Result<Vec<IdentityTrendRow>> {
    half_widths
        .iter()
        .map(|&half_width| {
            let cells = (2.0 * half_width / spacing).round() as usize;
            let grid = Grid::new(half_width, cells + 1)?;
            let one = Spectrum::from_fn(grid, |_| 1.0)?;
            let e = h_inverse(&one, params, &grid, TransformMethod::Accelerated)?;
            let sampled = SampledFunction::from_fn(grid, &f)?;
            let conv = convolve_direct(&e, &sampled, params)?;
            Ok(IdentityTrendRow {
                half_width,
                l1_norm: e.lp_norm(1.0)?,
                defect: conv.sub(&sampled)?.sup_norm(),
            })
        })
        .collect()
}
