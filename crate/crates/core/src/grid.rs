//! Uniform symmetric grids, trapezoid quadrature and sampled values.
//!
//! Every grid has an odd number of nodes `x_j = (j - c)Δ`, `c = (N - 1)/2`,
//! so the centre node is exactly zero and `x → -x` permutes the nodes. The
//! four shifted arguments `±x ± v` of the convolution kernel are then exact
//! node offsets whenever `x` and `v` are nodes. Values outside `[-L, L]` are
//! treated as zero.

use std::fmt;
use std::marker::PhantomData;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Grid {
    half_width: f64,
    len: usize,
    spacing: f64,
}

impl Grid {
    /// Grid on `[-half_width, half_width]` with `len` nodes (odd, at least 3).
    pub fn new(half_width: f64, len: usize) -> Result<Self> {
        if !(half_width.is_finite() && half_width > 0.0) {
            return Err(Error::InvalidGrid(format!("half width must be positive, got {half_width}")));
        }
        if len < 3 || len % 2 == 0 {
            return Err(Error::InvalidGrid(format!("node count must be odd and >= 3, got {len}")));
        }
        let spacing = 2.0 * half_width / (len - 1) as f64;
        Ok(Self { half_width, len, spacing })
    }

    pub fn half_width(&self) -> f64 {
        self.half_width
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn spacing(&self) -> f64 {
        self.spacing
    }

    /// Index of the zero node.
    pub fn center(&self) -> usize {
        (self.len - 1) / 2
    }

    /// Node at signed offset `m` from the centre.
    pub fn node_at_offset(&self, m: isize) -> f64 {
        m as f64 * self.spacing
    }

    pub fn node(&self, j: usize) -> f64 {
        self.node_at_offset(j as isize - self.center() as isize)
    }

    pub fn nodes(&self) -> Vec<f64> {
        (0..self.len).map(|j| self.node(j)).collect()
    }

    /// Trapezoid weight of node `j`.
    pub fn weight(&self, j: usize) -> f64 {
        if j == 0 || j + 1 == self.len {
            0.5 * self.spacing
        } else {
            self.spacing
        }
    }

    pub fn weights(&self) -> Vec<f64> {
        (0..self.len).map(|j| self.weight(j)).collect()
    }

    /// Index of the node equal to `y` (within a relative 1e-9 of the spacing).
    pub fn index_of(&self, y: f64) -> Option<usize> {
        let m = (y / self.spacing).round();
        let c = self.center() as f64;
        if m.abs() > c || (m * self.spacing - y).abs() > 1e-9 * self.spacing {
            return None;
        }
        Some((m + c) as usize)
    }

    /// Same node count and spacing, bit for bit.
    pub fn same_as(&self, other: &Grid) -> bool {
        self.len == other.len && self.half_width.to_bits() == other.half_width.to_bits()
    }

    pub(crate) fn ensure_same(&self, other: &Grid) -> Result<()> {
        if self.same_as(other) {
            Ok(())
        } else {
            Err(Error::GridMismatch(format!(
                "(L={}, N={}) vs (L={}, N={})",
                self.half_width, self.len, other.half_width, other.len
            )))
        }
    }
}

/// Marker for samples in the space variable `x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Space;

/// Marker for samples in the frequency variable `y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Frequency;

/// Finite real samples on a [`Grid`], tagged with their domain.
#[derive(Clone, PartialEq)]
pub struct Sampled<D> {
    grid: Grid,
    values: Vec<f64>,
    _domain: PhantomData<D>,
}

/// Samples `f(x_j)` of a function on the space grid.
pub type SampledFunction = Sampled<Space>;
/// Samples `(Hf)(y_j)` of a transform on the frequency grid.
pub type Spectrum = Sampled<Frequency>;

impl<D> fmt::Debug for Sampled<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Sampled")
            .field("grid", &self.grid)
            .field("values", &format_args!("[{} values]", self.values.len()))
            .finish()
    }
}

impl<D> Sampled<D> {
    pub fn new(grid: Grid, values: Vec<f64>) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(Error::GridMismatch(format!(
                "{} values for a grid of {} nodes",
                values.len(),
                grid.len()
            )));
        }
        if let Some(i) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite(i));
        }
        Ok(Self { grid, values, _domain: PhantomData })
    }

    /// Caller guarantees length and finiteness.
    pub(crate) fn from_raw(grid: Grid, values: Vec<f64>) -> Self {
        debug_assert_eq!(values.len(), grid.len());
        Self { grid, values, _domain: PhantomData }
    }

    pub fn from_fn(grid: Grid, f: impl Fn(f64) -> f64) -> Result<Self> {
        Self::new(grid, grid.nodes().into_iter().map(f).collect())
    }

    pub fn zeros(grid: Grid) -> Self {
        Self::from_raw(grid, vec![0.0; grid.len()])
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    /// Value at signed node offset `m` from the centre, zero off the grid.
    pub fn at_offset(&self, m: isize) -> f64 {
        let j = m + self.grid.center() as isize;
        if j < 0 || j as usize >= self.values.len() {
            0.0
        } else {
            self.values[j as usize]
        }
    }

    /// Value at node `y`.
    pub fn at(&self, y: f64) -> Result<f64> {
        self.grid.index_of(y).map(|j| self.values[j]).ok_or(Error::NodeNotOnGrid(y))
    }

    pub fn map(&self, f: impl Fn(f64) -> f64) -> Result<Self> {
        Self::new(self.grid, self.values.iter().map(|&v| f(v)).collect())
    }

    pub fn scale(&self, c: f64) -> Self {
        Self::from_raw(self.grid, self.values.iter().map(|v| c * v).collect())
    }

    /// `self + c * other`
    pub fn add_scaled(&self, c: f64, other: &Self) -> Result<Self> {
        self.grid.ensure_same(&other.grid)?;
        let values = self.values.iter().zip(&other.values).map(|(x, y)| x + c * y).collect();
        Self::new(self.grid, values)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add_scaled(-1.0, other)
    }

    /// Pointwise product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.grid.ensure_same(&other.grid)?;
        let values = self.values.iter().zip(&other.values).map(|(x, y)| x * y).collect();
        Self::new(self.grid, values)
    }

    /// `x → -x`; exact because the node set is symmetric.
    pub fn reflect(&self) -> Self {
        let mut values = self.values.clone();
        values.reverse();
        Self::from_raw(self.grid, values)
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0.0)
    }

    /// Trapezoid `L_p` norm; `p = f64::INFINITY` gives the max norm.
    ///
    /// Symmetric node pairs are summed first, centre outwards, so reflecting
    /// the samples leaves the result bit-identical.
    pub fn lp_norm(&self, p: f64) -> Result<f64> {
        if p.is_nan() || p < 1.0 {
            return Err(Error::InvalidExponent(format!("p must be >= 1, got {p}")));
        }
        if p.is_infinite() {
            return Ok(self.values.iter().fold(0.0_f64, |m, v| m.max(v.abs())));
        }
        let pow = |v: f64| if p == 1.0 { v.abs() } else { v.abs().powf(p) };
        let c = self.grid.center();
        let mut sum = self.grid.weight(c) * pow(self.values[c]);
        for m in 1..=c {
            let pair = pow(self.values[c - m]) + pow(self.values[c + m]);
            sum += self.grid.weight(c + m) * pair;
        }
        Ok(if p == 1.0 { sum } else { sum.powf(1.0 / p) })
    }

    /// Max norm.
    pub fn sup_norm(&self) -> f64 {
        self.values.iter().fold(0.0_f64, |m, v| m.max(v.abs()))
    }

    /// Trapezoid integral of the samples.
    pub fn integral(&self) -> f64 {
        let c = self.grid.center();
        let mut sum = self.grid.weight(c) * self.values[c];
        for m in 1..=c {
            sum += self.grid.weight(c + m) * (self.values[c - m] + self.values[c + m]);
        }
        sum
    }

    /// Share of the L1 mass lying outside `[-L/2, L/2]`.
    pub fn outside_mass_fraction(&self) -> f64 {
        let total: f64 = self.weighted_abs().sum();
        if total == 0.0 {
            return 0.0;
        }
        let half = 0.5 * self.grid.half_width();
        let outside: f64 = self
            .weighted_abs()
            .enumerate()
            .filter(|(j, _)| self.grid.node(*j).abs() > half)
            .map(|(_, v)| v)
            .sum();
        outside / total
    }

    fn weighted_abs(&self) -> impl Iterator<Item = f64> + '_ {
        self.values.iter().enumerate().map(|(j, v)| self.grid.weight(j) * v.abs())
    }
}

/// Trapezoid `L_p` norm of a sampled function.
pub fn lp_norm<D>(f: &Sampled<D>, p: f64) -> Result<f64> {
    f.lp_norm(p)
}
