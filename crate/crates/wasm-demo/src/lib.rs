//! Browser bindings for three operations: the transform of a chosen
//! profile, direct against spectral convolution, and the heat solution in
//! both of its forms.
//!
//! Each `*_curves` function is plain Rust so it can be tested natively; the
//! exported wrappers only convert errors for JavaScript.

use hconv::samples::{bump, mixture_batch};
use hconv::solvers::{solve_heat_convolution, solve_heat_spectral, HeatProblem};
use hconv::{convolve_direct, convolve_spectral, h_forward_default, Grid, SampledFunction, TransformParams};
use wasm_bindgen::prelude::*;

/// Abscissae with two curves sampled on them.
#[wasm_bindgen]
#[derive(Debug, Clone)]
pub struct Curves {
    x: Vec<f64>,
    first: Vec<f64>,
    second: Vec<f64>,
    discrepancy: f64,
}

#[wasm_bindgen]
impl Curves {
    #[wasm_bindgen(getter)]
    pub fn x(&self) -> Vec<f64> {
        self.x.clone()
    }

    #[wasm_bindgen(getter)]
    pub fn first(&self) -> Vec<f64> {
        self.first.clone()
    }

    #[wasm_bindgen(getter)]
    pub fn second(&self) -> Vec<f64> {
        self.second.clone()
    }

    /// `max |first − second|`.
    #[wasm_bindgen(getter)]
    pub fn discrepancy(&self) -> f64 {
        self.discrepancy
    }
}

impl Curves {
    fn new(x: Vec<f64>, first: SampledFunction, second: Vec<f64>) -> Self {
        let first = first.into_values();
        let discrepancy = first.iter().zip(&second).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
        Self { x, first, second, discrepancy }
    }
}

fn profile(name: &str, grid: Grid, seed: u32) -> Result<SampledFunction, String> {
    let f = match name {
        "gaussian" => SampledFunction::from_fn(grid, |x| 2.0 * (-x * x).exp()),
        "odd" => SampledFunction::from_fn(grid, |x| 2.0 * x * (-x * x).exp()),
        "bump" => SampledFunction::from_fn(grid, |x| bump(x, 0.0, 1.5)),
        "mixture" => mixture_batch(u64::from(seed), 1)[0].sample(grid),
        other => return Err(format!("unknown profile `{other}`")),
    };
    f.map_err(|e| e.to_string())
}

fn setup(a: f64, b: f64, half_width: f64, n: usize) -> Result<(TransformParams, Grid), String> {
    let params = TransformParams::new(a, b).map_err(|e| e.to_string())?;
    let grid = Grid::new(half_width, n).map_err(|e| e.to_string())?;
    Ok((params, grid))
}

/// The profile (`first`) and its transform (`second`).
pub fn transform_curves(a: f64, b: f64, shape: &str, seed: u32, n: usize) -> Result<Curves, String> {
    let (params, grid) = setup(a, b, 20.0, n)?;
    let f = profile(shape, grid, seed)?;
    let hf = h_forward_default(&f, &params).into_values();
    Ok(Curves { x: grid.nodes(), first: f.into_values(), second: hf, discrepancy: f64::NAN })
}

/// `f ⊛ f` from the kernel (`first`) and through the transform (`second`).
pub fn convolution_curves(a: f64, b: f64, shape: &str, seed: u32, n: usize) -> Result<Curves, String> {
    let (params, grid) = setup(a, b, 20.0, n)?;
    let f = profile(shape, grid, seed)?;
    let direct = convolve_direct(&f, &f, &params).map_err(|e| e.to_string())?;
    let spectral = convolve_spectral(&f, &f, &params).map_err(|e| e.to_string())?;
    Ok(Curves::new(grid.nodes(), direct, spectral.into_values()))
}

/// `u(·, t)` on the transform side (`first`) and as `g_t ⊛ φ / (a√2)` (`second`).
pub fn heat_curves(a: f64, b: f64, shape: &str, seed: u32, diffusion: f64, time: f64) -> Result<Curves, String> {
    let (params, grid) = setup(a, b, 20.0, 1025)?;
    let phi = profile(shape, grid, seed)?;
    let prob = HeatProblem::new(diffusion, time, phi, params).map_err(|e| e.to_string())?;
    let conv = solve_heat_convolution(&prob).map_err(|e| e.to_string())?;
    let spectral = solve_heat_spectral(&prob).map_err(|e| e.to_string())?;
    Ok(Curves::new(grid.nodes(), spectral, conv.into_values()))
}

#[wasm_bindgen]
pub fn transform(a: f64, b: f64, shape: &str, seed: u32, n: usize) -> Result<Curves, JsError> {
    transform_curves(a, b, shape, seed, n).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn convolution(a: f64, b: f64, shape: &str, seed: u32, n: usize) -> Result<Curves, JsError> {
    convolution_curves(a, b, shape, seed, n).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn heat(a: f64, b: f64, shape: &str, seed: u32, diffusion: f64, time: f64) -> Result<Curves, JsError> {
    heat_curves(a, b, shape, seed, diffusion, time).map_err(|e| JsError::new(&e))
}
