//! CSV sample files and TOML run configuration.
//!
//! A function file has the header `x,value` (a spectrum file `y,value`)
//! followed by one row per grid node. Values are written with 17
//! significant digits, which round-trips every `f64` exactly.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::{Grid, Sampled, SampledFunction, Spectrum};
use crate::params::TransformParams;

/// Tolerance names a config file may override, with their defaults.
pub const TOLERANCE_LADDER: &[(&str, f64)] = &[
    ("cross-method", 1e-6),
    ("commutativity", 1e-8),
    ("factorization", 1e-5),
    ("round-trip", 5e-5),
    ("wiener-levy", 1e-8),
    ("fredholm-residual", 1e-6),
    ("heat-agreement", 1e-5),
];

pub fn default_tolerance(name: &str) -> Option<f64> {
    TOLERANCE_LADDER.iter().find(|(n, _)| *n == name).map(|(_, v)| *v)
}

/// Renders samples as CSV text with the given abscissa label.
pub fn to_csv<D>(f: &Sampled<D>, label: &str) -> String {
    let mut out = format!("{label},value\n");
    for (x, v) in f.grid().nodes().iter().zip(f.values()) {
        writeln!(out, "{x:.16e},{v:.16e}").expect("writing to a String cannot fail");
    }
    out
}

/// Parses CSV text and infers the grid from the abscissae.
pub fn from_csv<D>(text: &str) -> Result<Sampled<D>> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    match lines.next() {
        Some((_, h)) if matches!(h.trim(), "x,value" | "y,value") => {}
        Some((i, h)) => {
            return Err(Error::Format { line: i + 1, msg: format!("expected header `x,value`, got `{h}`") })
        }
        None => return Err(Error::Format { line: 1, msg: "empty file".into() }),
    }
    let mut xs = Vec::new();
    let mut vs = Vec::new();
    for (i, line) in lines {
        let line_no = i + 1;
        let mut cols = line.split(',').map(str::trim);
        let (Some(xs_), Some(vs_), None) = (cols.next(), cols.next(), cols.next()) else {
            return Err(Error::Format { line: line_no, msg: "expected two columns".into() });
        };
        let parse = |s: &str| {
            s.parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| Error::Format { line: line_no, msg: format!("not a finite number: `{s}`") })
        };
        let x = parse(xs_)?;
        if let Some(&prev) = xs.last() {
            if x <= prev {
                return Err(Error::Format { line: line_no, msg: format!("abscissa {x} does not increase") });
            }
        }
        xs.push(x);
        vs.push(parse(vs_)?);
    }
    let grid = infer_grid(&xs)?;
    Sampled::new(grid, vs)
}

fn infer_grid(xs: &[f64]) -> Result<Grid> {
    let n = xs.len();
    if n < 3 || n % 2 == 0 {
        return Err(Error::GridMismatch(format!("row count must be odd and >= 3, got {n}")));
    }
    let half_width = xs[n - 1];
    let grid = Grid::new(half_width, n).map_err(|e| Error::GridMismatch(e.to_string()))?;
    let tol = 1e-12 * half_width.max(1.0);
    for (j, &x) in xs.iter().enumerate() {
        if (x - grid.node(j)).abs() > tol {
            return Err(Error::GridMismatch(format!(
                "row {} has x = {x}, expected node {}",
                j + 1,
                grid.node(j)
            )));
        }
    }
    Ok(grid)
}

pub fn write_function(path: impl AsRef<Path>, f: &SampledFunction) -> Result<()> {
    Ok(fs::write(path, to_csv(f, "x"))?)
}

pub fn read_function(path: impl AsRef<Path>) -> Result<SampledFunction> {
    from_csv(&fs::read_to_string(path)?)
}

pub fn write_spectrum(path: impl AsRef<Path>, s: &Spectrum) -> Result<()> {
    Ok(fs::write(path, to_csv(s, "y"))?)
}

pub fn read_spectrum(path: impl AsRef<Path>) -> Result<Spectrum> {
    from_csv(&fs::read_to_string(path)?)
}

/// Reads a file and requires it to live on `grid`.
pub fn read_on_grid<D>(path: impl AsRef<Path>, grid: &Grid) -> Result<Sampled<D>> {
    let f: Sampled<D> = from_csv(&fs::read_to_string(path)?)?;
    if !f.grid().same_as(grid) {
        return Err(Error::GridMismatch(format!(
            "file grid (L={}, N={}) differs from requested (L={}, N={})",
            f.grid().half_width(),
            f.grid().len(),
            grid.half_width(),
            grid.len()
        )));
    }
    Ok(f)
}

/// Optional run settings; command-line flags take precedence.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub a: Option<f64>,
    pub b: Option<f64>,
    #[serde(rename = "L")]
    pub half_width: Option<f64>,
    #[serde(rename = "N")]
    pub len: Option<usize>,
    #[serde(default)]
    pub tolerances: BTreeMap<String, f64>,
    pub seed: Option<u64>,
}

impl RunConfig {
    pub fn from_toml(text: &str) -> Result<Self> {
        let cfg: Self = toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_toml(&fs::read_to_string(path)?)
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in &self.tolerances {
            if default_tolerance(name).is_none() {
                return Err(Error::Config(format!("unknown tolerance `{name}`")));
            }
            if !(v.is_finite() && *v > 0.0) {
                return Err(Error::Config(format!("tolerance `{name}` must be positive")));
            }
        }
        if let (Some(a), Some(b)) = (self.a, self.b) {
            TransformParams::new(a, b)?;
        }
        if let (Some(l), Some(n)) = (self.half_width, self.len) {
            Grid::new(l, n)?;
        }
        Ok(())
    }

    pub fn tolerance(&self, name: &str) -> Option<f64> {
        self.tolerances.get(name).copied().or_else(|| default_tolerance(name))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gaussian() -> SampledFunction {
        SampledFunction::from_fn(Grid::new(20.0, 129).unwrap(), |x| (-x * x).exp() / 3.0).unwrap()
    }

    #[test]
    fn round_trip_is_bit_exact() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("f.csv");
        let f = gaussian();
        write_function(&path, &f).unwrap();
        let back = read_function(&path).unwrap();
        assert_eq!(back.values(), f.values());
        assert!(back.grid().same_as(f.grid()));
        assert!(std::fs::read_to_string(&path).unwrap().starts_with("x,value\n"));
    }

    #[test]
    fn non_monotone_rows() {
        let text = "x,value\n-1,0\n1,0\n0,0\n";
        assert_eq!(
            from_csv::<crate::grid::Space>(text).unwrap_err(),
            Error::Format { line: 4, msg: "abscissa 0 does not increase".into() }
        );
    }

    #[test]
    fn even_row_count() {
        let text = "x,value\n-1,0\n-0.5,0\n0.5,0\n1,0\n";
        assert!(matches!(from_csv::<crate::grid::Space>(text), Err(Error::GridMismatch(_))));
    }

    #[test]
    fn bad_rows() {
        assert!(matches!(from_csv::<crate::grid::Space>("t,v\n"), Err(Error::Format { line: 1, .. })));
        assert!(matches!(
            from_csv::<crate::grid::Space>("x,value\n-1,0\n0,abc\n1,0\n"),
            Err(Error::Format { line: 3, .. })
        ));
        assert!(matches!(
            from_csv::<crate::grid::Space>("x,value\n-1,0\n0.1,0\n1,0\n"),
            Err(Error::GridMismatch(_))
        ));
    }

    #[test]
    fn grid_requirement() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("f.csv");
        write_function(&path, &gaussian()).unwrap();
        let other = Grid::new(20.0, 131).unwrap();
        assert!(matches!(read_on_grid::<crate::grid::Space>(&path, &other), Err(Error::GridMismatch(_))));
    }

    #[test]
    fn config() {
        let cfg = RunConfig::from_toml("a = 1.0\nb = 2.0\nL = 20.0\nN = 1025\nseed = 7\n[tolerances]\ncross-method = 1e-7\n")
            .unwrap();
        assert_eq!(cfg.len, Some(1025));
        assert_eq!(cfg.tolerance("cross-method"), Some(1e-7));
        assert_eq!(cfg.tolerance("commutativity"), Some(1e-8));
        assert!(RunConfig::from_toml("[tolerances]\nbogus = 1.0\n").is_err());
        assert!(RunConfig::from_toml("N = 4\nL = 1.0\n").is_err());
        assert!(RunConfig::from_toml("colour = 1\n").is_err());
    }
}
