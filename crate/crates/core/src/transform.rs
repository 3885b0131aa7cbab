//! The transform `(Hf)(y) = (2π)^{-1/2} ∫ (a cos xy + b sin xy) f(x) dx`, its
//! inverse with kernel `(1/a) cos xy + (1/b) sin xy`, and the Fourier cosine
//! and sine components it is built from.
//!
//! Integrals are trapezoid sums over the source grid. Two evaluation
//! strategies give the same sums: direct quadrature (`O(N·M)`) and a
//! chirp-z evaluation (`O((N + M) log(N + M))`).

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::chirp::chirp_sums;
use crate::error::Result;
use crate::grid::{Grid, Sampled, SampledFunction, Spectrum};
use crate::params::TransformParams;
use crate::report::VerificationReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TransformMethod {
    /// Direct trapezoid sum at every output node.
    Quadrature,
    /// Chirp-z evaluation of the same trapezoid sums.
    #[default]
    Accelerated,
}

/// Cosine and sine sums `(2π)^{-1/2} Σ_j w_j v_j {cos, sin}(x_j y_i)`.
pub(crate) struct TrigSums {
    pub cos: Vec<f64>,
    pub sin: Vec<f64>,
}

pub(crate) fn trig_sums(values: &[f64], src: &Grid, dst: &Grid, method: TransformMethod) -> TrigSums {
    let scale = 1.0 / (2.0 * PI).sqrt();
    let weighted: Vec<f64> = values.iter().enumerate().map(|(j, v)| src.weight(j) * v).collect();
    match method {
        TransformMethod::Quadrature => quadrature_sums(&weighted, src, dst, scale),
        TransformMethod::Accelerated => {
            let theta = src.spacing() * dst.spacing();
            let sums = chirp_sums(&weighted, dst.center(), theta);
            TrigSums {
                cos: sums.iter().map(|s| scale * s.re).collect(),
                sin: sums.iter().map(|s| scale * s.im).collect(),
            }
        }
    }
}

// Pairs x and -x so that odd inputs give exactly zero cosine sums and even
// inputs exactly zero sine sums.
fn quadrature_sums(weighted: &[f64], src: &Grid, dst: &Grid, scale: f64) -> TrigSums {
    let c = src.center();
    let even: Vec<f64> = (0..=c)
        .map(|m| if m == 0 { weighted[c] } else { weighted[c + m] + weighted[c - m] })
        .collect();
    let odd: Vec<f64> = (0..=c)
        .map(|m| if m == 0 { 0.0 } else { weighted[c + m] - weighted[c - m] })
        .collect();
    let mut cos = Vec::with_capacity(dst.len());
    let mut sin = Vec::with_capacity(dst.len());
    for i in 0..dst.len() {
        let y = dst.node(i);
        let (mut sc, mut ss) = (0.0, 0.0);
        for m in 0..=c {
            let (s, co) = (src.node(c + m) * y).sin_cos();
            sc += co * even[m];
            ss += s * odd[m];
        }
        cos.push(scale * sc);
        sin.push(scale * ss);
    }
    TrigSums { cos, sin }
}

/// Fourier cosine transform `(F_c f)(y)` on `ygrid`.
pub fn fourier_cos(f: &SampledFunction, ygrid: &Grid, method: TransformMethod) -> Spectrum {
    let sums = trig_sums(f.values(), f.grid(), ygrid, method);
    Sampled::from_raw(*ygrid, sums.cos)
}

/// Fourier sine transform `(F_s f)(y)` on `ygrid`.
pub fn fourier_sin(f: &SampledFunction, ygrid: &Grid, method: TransformMethod) -> Spectrum {
    let sums = trig_sums(f.values(), f.grid(), ygrid, method);
    Sampled::from_raw(*ygrid, sums.sin)
}

/// `Hf = a F_c f + b F_s f` sampled on `ygrid`.
pub fn h_forward(
    f: &SampledFunction,
    params: &TransformParams,
    ygrid: &Grid,
    method: TransformMethod,
) -> Spectrum {
    let sums = trig_sums(f.values(), f.grid(), ygrid, method);
    let (a, b) = (params.a(), params.b());
    let values = sums.cos.iter().zip(&sums.sin).map(|(c, s)| a * c + b * s).collect();
    Sampled::from_raw(*ygrid, values)
}

/// `Hf` on the self-dual frequency grid (the space grid itself).
pub fn h_forward_default(f: &SampledFunction, params: &TransformParams) -> Spectrum {
    h_forward(f, params, f.grid(), TransformMethod::Accelerated)
}

/// Inverse transform with kernel `(1/a) cos xy + (1/b) sin xy`, sampled on
/// `xgrid`. Requires `a ≠ 0` and `b ≠ 0`.
pub fn h_inverse(
    spectrum: &Spectrum,
    params: &TransformParams,
    xgrid: &Grid,
    method: TransformMethod,
) -> Result<SampledFunction> {
    params.require_invertible()?;
    let sums = trig_sums(spectrum.values(), spectrum.grid(), xgrid, method);
    let (ia, ib) = (1.0 / params.a(), 1.0 / params.b());
    let values = sums.cos.iter().zip(&sums.sin).map(|(c, s)| ia * c + ib * s).collect();
    Ok(Sampled::from_raw(*xgrid, values))
}

/// Inverse onto the frequency grid itself, read as a space grid.
pub fn h_inverse_default(spectrum: &Spectrum, params: &TransformParams) -> Result<SampledFunction> {
    h_inverse(spectrum, params, spectrum.grid(), TransformMethod::Accelerated)
}

/// `‖Hf‖_∞ ≤ (2π)^{-n/2}(|a| + |b|)‖f‖₁`, with the largest `|Hf|` over the
/// outer 10% of frequency nodes as a decay diagnostic.
pub fn riemann_lebesgue_check(f: &SampledFunction, params: &TransformParams) -> VerificationReport {
    let spectrum = h_forward_default(f, params);
    let measured = spectrum.sup_norm();
    let l1 = f.lp_norm(1.0).expect("p = 1 is valid");
    let bound = (params.a().abs() + params.b().abs()) * l1 / params.normalization();
    let grid = spectrum.grid();
    let edge = 0.9 * grid.half_width();
    let edge_max = spectrum
        .values()
        .iter()
        .enumerate()
        .filter(|(j, _)| grid.node(*j).abs() >= edge)
        .fold(0.0_f64, |m, (_, v)| m.max(v.abs()));
    VerificationReport::upper_bound("riemann-lebesgue", measured, bound, 1e-12 * (1.0 + bound))
        .with_diagnostic("edge_max", edge_max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::Grid;

    fn grid() -> Grid {
        Grid::new(20.0, 2049).unwrap()
    }

    fn gauss2(g: Grid) -> SampledFunction {
        SampledFunction::from_fn(g, |x| 2.0 * (-x * x).exp()).unwrap()
    }

    fn odd_gauss(g: Grid) -> SampledFunction {
        SampledFunction::from_fn(g, |x| x * (-x * x).exp()).unwrap()
    }

    fn sup_diff(values: &[f64], f: impl Fn(f64) -> f64, g: &Grid) -> f64 {
        values.iter().enumerate().map(|(j, v)| (v - f(g.node(j))).abs()).fold(0.0, f64::max)
    }

    #[test]
    fn cosine_transform_of_gaussian() {
        let g = grid();
        for method in [TransformMethod::Quadrature, TransformMethod::Accelerated] {
            let fc = fourier_cos(&gauss2(g), &g, method);
            let err = sup_diff(fc.values(), |y| 2f64.sqrt() * (-y * y / 4.0).exp(), &g);
            assert!(err < 1e-6, "{method:?}: {err}");
        }
    }

    #[test]
    fn parity_kills_the_other_component() {
        let g = grid();
        let q = TransformMethod::Quadrature;
        assert_eq!(fourier_cos(&odd_gauss(g), &g, q).sup_norm(), 0.0);
        assert_eq!(fourier_sin(&gauss2(g), &g, q).sup_norm(), 0.0);
        let acc = TransformMethod::Accelerated;
        assert!(fourier_cos(&odd_gauss(g), &g, acc).sup_norm() < 1e-12);
        assert!(fourier_sin(&gauss2(g), &g, acc).sup_norm() < 1e-12);
    }

    #[test]
    fn zero_in_zero_out() {
        let g = Grid::new(5.0, 101).unwrap();
        let z = SampledFunction::zeros(g);
        let p = TransformParams::new(2.0, -1.0).unwrap();
        for method in [TransformMethod::Quadrature, TransformMethod::Accelerated] {
            assert_eq!(fourier_cos(&z, &g, method).sup_norm(), 0.0);
            assert_eq!(fourier_sin(&z, &g, method).sup_norm(), 0.0);
            assert_eq!(h_forward(&z, &p, &g, method).sup_norm(), 0.0);
            let back = h_inverse(&Spectrum::zeros(g), &p, &g, method).unwrap();
            assert_eq!(back.sup_norm(), 0.0);
        }
    }

    #[test]
    fn forward_gaussian_scales_with_a() {
        let g = grid();
        for (a, b) in [(1.0, 1.0), (2.0, 1.0)] {
            let p = TransformParams::new(a, b).unwrap();
            let h = h_forward_default(&gauss2(g), &p);
            let err = sup_diff(h.values(), |y| a * 2f64.sqrt() * (-y * y / 4.0).exp(), &g);
            assert!(err < 1e-6);
        }
    }

    #[test]
    fn inverse_of_gaussian_spectrum() {
        let g = grid();
        let p = TransformParams::new(1.0, 1.0).unwrap();
        let spec = Spectrum::from_fn(g, |y| 2f64.sqrt() * (-y * y / 4.0).exp()).unwrap();
        let f = h_inverse_default(&spec, &p).unwrap();
        assert!(sup_diff(f.values(), |x| 2.0 * (-x * x).exp(), &g) < 1e-5);
    }

    #[test]
    fn round_trip_odd_function() {
        let g = grid();
        let p = TransformParams::new(1.0, 2.0).unwrap();
        let f = odd_gauss(g);
        let back = h_inverse_default(&h_forward_default(&f, &p), &p).unwrap();
        assert!(back.sub(&f).unwrap().sup_norm() < 1e-5);
    }

    #[test]
    fn inverse_refuses_zero_coefficients() {
        let g = Grid::new(1.0, 5).unwrap();
        for (a, b) in [(0.0, 1.0), (1.0, 0.0)] {
            let p = TransformParams::new(a, b).unwrap();
            assert!(h_inverse_default(&Spectrum::zeros(g), &p).is_err());
        }
    }

    #[test]
    fn riemann_lebesgue_examples() {
        let g = grid();
        let p = TransformParams::new(1.0, 1.0).unwrap();
        let r = riemann_lebesgue_check(&gauss2(g), &p);
        assert!(r.pass);
        assert!((r.measured - 2f64.sqrt()).abs() < 1e-6);
        assert!((r.bound - 2.0 * 2f64.sqrt()).abs() < 1e-6);

        let r = riemann_lebesgue_check(&SampledFunction::zeros(g), &p);
        assert!(r.pass && r.measured == 0.0 && r.bound == 0.0);

        let boxf = SampledFunction::from_fn(g, |x| if x.abs() <= 1.0 { 1.0 } else { 0.0 }).unwrap();
        let r = riemann_lebesgue_check(&boxf, &TransformParams::new(1.0, 0.5).unwrap());
        assert!(r.pass && r.margin > 0.0);
    }
}
