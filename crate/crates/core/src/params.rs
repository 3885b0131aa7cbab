use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Kernel coefficients `(a, b)` of the transform `a cos(xy) + b sin(xy)`,
/// together with the space dimension.
///
/// Only `n = 1` grids exist in this crate, but every normalisation constant
/// is written in terms of `n` so that it reads the same as the continuous
/// formula.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TransformParams {
    a: f64,
    b: f64,
    n: u32,
}

impl TransformParams {
    /// Requires finite coefficients with `a² + b² ≠ 0`.
    ///
    /// The Hartley pairs `a = ±b` are accepted here; none of the identities
    /// implemented in this crate depend on excluding them. Use
    /// [`TransformParams::strict`] to enforce `a ≠ ±b` as well.
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if !a.is_finite() || !b.is_finite() {
            return Err(Error::InvalidParams(format!("non-finite coefficients a={a}, b={b}")));
        }
        if a * a + b * b == 0.0 {
            return Err(Error::InvalidParams("a and b must not both vanish".into()));
        }
        Ok(Self { a, b, n: 1 })
    }

    /// Like [`TransformParams::new`], additionally rejecting `a = ±b`.
    pub fn strict(a: f64, b: f64) -> Result<Self> {
        let params = Self::new(a, b)?;
        if params.is_hartley_pair() {
            return Err(Error::InvalidParams(format!("a = ±b is excluded (a={a}, b={b})")));
        }
        Ok(params)
    }

    /// `a = ±b`: the classical Hartley kernel up to scale.
    pub fn is_hartley_pair(&self) -> bool {
        self.a == self.b || self.a == -self.b
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn dimension(&self) -> u32 {
        self.n
    }

    /// `(2π)^{n/2}`
    pub fn normalization(&self) -> f64 {
        (2.0 * PI).powf(self.n as f64 / 2.0)
    }

    /// Operations built on the `1/(4a)` convolution prefactor.
    pub fn require_nonzero_a(&self) -> Result<()> {
        if self.a == 0.0 {
            return Err(Error::InvalidParams("operation requires a ≠ 0".into()));
        }
        Ok(())
    }

    /// Operations that go through the inverse kernel `(1/a) cos + (1/b) sin`.
    pub fn require_invertible(&self) -> Result<()> {
        if self.a == 0.0 || self.b == 0.0 {
            return Err(Error::InvalidParams(format!(
                "inverse kernel needs a ≠ 0 and b ≠ 0 (a={}, b={})",
                self.a, self.b
            )));
        }
        Ok(())
    }

    /// Coefficient of the `f(x - v)` term of the convolution kernel.
    pub fn direct_weight(&self) -> f64 {
        3.0 * self.a * self.a - self.b * self.b
    }

    /// Coefficient shared by the three reflected terms of the kernel.
    pub fn reflected_weight(&self) -> f64 {
        self.a * self.a + self.b * self.b
    }

    /// `|3a² − b²|^q + 3(a² + b²)^q`
    pub fn kernel_power_sum(&self, q: f64) -> f64 {
        self.direct_weight().abs().powf(q) + 3.0 * self.reflected_weight().powf(q)
    }

    /// L1 constant of the convolution:
    /// `‖f ⊛ g‖₁ ≤ C ‖f‖₁ ‖g‖₁` with `C = (|3a²−b²| + 3(a²+b²)) / (4|a|(2π)^{n/2})`.
    pub fn l1_constant(&self) -> Result<f64> {
        self.require_nonzero_a()?;
        Ok(self.kernel_power_sum(1.0) / (4.0 * self.a.abs() * self.normalization()))
    }

    /// Scale factor of the algebra norm, `α = sqrt(l1_constant)`.
    pub fn alpha(&self) -> Result<f64> {
        self.l1_constant().map(f64::sqrt)
    }
}
