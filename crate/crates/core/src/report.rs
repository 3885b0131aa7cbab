use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Outcome of one identity or inequality check.
///
/// `margin` is the slack in the passing direction: `bound - measured` for
/// upper bounds and identities (where `bound` is the target discrepancy),
/// `measured - bound` for lower bounds. A report passes when
/// `margin >= -tolerance`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub name: String,
    pub measured: f64,
    pub bound: f64,
    pub margin: f64,
    pub pass: bool,
    pub tolerance: f64,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub diagnostics: BTreeMap<String, f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl VerificationReport {
    /// `measured <= bound` up to `tolerance`.
    pub fn upper_bound(name: impl Into<String>, measured: f64, bound: f64, tolerance: f64) -> Self {
        Self::build(name.into(), measured, bound, bound - measured, tolerance)
    }

    /// `measured >= bound` up to `tolerance`.
    pub fn lower_bound(name: impl Into<String>, measured: f64, bound: f64, tolerance: f64) -> Self {
        Self::build(name.into(), measured, bound, measured - bound, tolerance)
    }

    /// A discrepancy that should vanish; passes when `discrepancy <= tolerance`.
    pub fn discrepancy(name: impl Into<String>, discrepancy: f64, tolerance: f64) -> Self {
        Self::upper_bound(name, discrepancy, 0.0, tolerance)
    }

    fn build(name: String, measured: f64, bound: f64, margin: f64, tolerance: f64) -> Self {
        let pass = margin.is_finite() && margin >= -tolerance;
        Self {
            name,
            measured,
            bound,
            margin,
            pass,
            tolerance,
            diagnostics: BTreeMap::new(),
            note: None,
        }
    }

    pub fn with_diagnostic(mut self, key: impl Into<String>, value: f64) -> Self {
        self.diagnostics.insert(key.into(), value);
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn failed(mut self, note: impl Into<String>) -> Self {
        self.pass = false;
        self.note = Some(note.into());
        self
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {}: measured={:.6e} bound={:.6e} margin={:.3e} tol={:.1e}",
            if self.pass { "PASS" } else { "FAIL" },
            self.name,
            self.measured,
            self.bound,
            self.margin,
            self.tolerance
        )?;
        if let Some(note) = &self.note {
            write!(f, " ({note})")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn directions() {
        assert!(VerificationReport::upper_bound("u", 1.0, 2.0, 0.0).pass);
        assert!(!VerificationReport::upper_bound("u", 2.0, 1.0, 0.5).pass);
        assert!(VerificationReport::upper_bound("u", 1.0 + 1e-13, 1.0, 1e-12).pass);
        assert!(VerificationReport::lower_bound("l", 2.0, 1.0, 0.0).pass);
        assert!(!VerificationReport::lower_bound("l", 0.0, 1e-10, 0.0).pass);
        assert!(!VerificationReport::discrepancy("d", f64::NAN, 1.0).pass);
    }

    #[test]
    fn json_has_stable_fields() {
        let r = VerificationReport::discrepancy("d", 1e-9, 1e-6);
        let v: serde_json::Value = serde_json::to_value(&r).unwrap();
        for key in ["name", "measured", "bound", "margin", "pass", "tolerance"] {
            assert!(v.get(key).is_some(), "missing {key}");
        }
        assert!(v.get("diagnostics").is_none());
    }
}
