//! Timing of the direct `O(N²)` convolution against the spectral path.

use std::fmt::Write as _;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::convolution::{convolve_direct, convolve_spectral};
use crate::error::{Error, Result};
use crate::grid::{Grid, SampledFunction};
use crate::params::TransformParams;
use crate::samples::bump;

pub const DEFAULT_SIZES: &[usize] = &[257, 1025, 4097];
pub const REPEATS: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BenchRow {
    pub n: usize,
    /// Seconds, fastest of the repeats.
    pub direct_time: f64,
    pub spectral_time: f64,
    /// `‖direct − spectral‖_∞`.
    pub max_discrepancy: f64,
}

/// Small sizes keep repeating until this much time has been spent.
const MIN_TOTAL_SECONDS: f64 = 0.2;

// Interference from other processes only ever adds time, so the minimum is
// the least noisy estimate on a shared machine.
fn timed<T>(repeats: usize, mut run: impl FnMut() -> Result<T>) -> Result<(T, f64)> {
    let mut best = f64::INFINITY;
    let mut total = 0.0;
    let mut done = 0;
    let mut last = None;
    while done < repeats.max(1) || total < MIN_TOTAL_SECONDS {
        let start = Instant::now();
        let out = run()?;
        let t = start.elapsed().as_secs_f64();
        best = best.min(t);
        total += t;
        done += 1;
        last = Some(out);
    }
    Ok((last.expect("at least one repeat"), best))
}

/// Fixed smooth inputs, identical at every size.
pub fn bench_inputs(grid: Grid) -> Result<(SampledFunction, SampledFunction)> {
    let f = SampledFunction::from_fn(grid, |x| 2.0 * (-x * x).exp() - 0.5 * (-(x - 1.5) * (x - 1.5)).exp())?;
    let g = SampledFunction::from_fn(grid, |x| (-0.5 * (x + 1.0) * (x + 1.0)).exp() + 0.3 * bump(x, 0.0, 3.0))?;
    Ok((f, g))
}

pub fn bench_row(params: &TransformParams, half_width: f64, n: usize, repeats: usize) -> Result<BenchRow> {
    let grid = Grid::new(half_width, n)?;
    let (f, g) = bench_inputs(grid)?;
    let (direct, direct_time) = timed(repeats, || convolve_direct(&f, &g, params))?;
    let (spectral, spectral_time) = timed(repeats, || convolve_spectral(&f, &g, params))?;
    Ok(BenchRow { n, direct_time, spectral_time, max_discrepancy: direct.sub(&spectral)?.sup_norm() })
}

/// One row per size; sizes must be odd and ascending. An empty list gives an empty table.
pub fn bench(params: &TransformParams, half_width: f64, sizes: &[usize], repeats: usize) -> Result<Vec<BenchRow>> {
    if sizes.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidGrid("benchmark sizes must be strictly ascending".into()));
    }
    sizes.iter().map(|&n| bench_row(params, half_width, n, repeats)).collect()
}

/// `direct_time[i+1] / direct_time[i]`.
pub fn direct_time_ratios(rows: &[BenchRow]) -> Vec<f64> {
    rows.windows(2).map(|w| w[1].direct_time / w[0].direct_time).collect()
}

pub fn to_csv(rows: &[BenchRow]) -> String {
    let mut out = String::from("N,direct_time,spectral_time,max_discrepancy\n");
    for r in rows {
        writeln!(out, "{},{:.6e},{:.6e},{:.6e}", r.n, r.direct_time, r.spectral_time, r.max_discrepancy)
            .expect("writing to a String cannot fail");
    }
    out
}
