use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::Error;

pub type Params = BTreeMap<String, f64>;

pub fn params(pairs: &[(&str, f64)]) -> Params {
    pairs.iter().map(|&(k, v)| (k.to_string(), v)).collect()
}

/// One verified identity instance.
///
/// `passed` holds iff `rel_err <= tol` or `abs_err <= tol * atol_scale`.
/// When the right-hand side is exactly zero, `rel_err` falls back to `abs_err`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check_name: String,
    pub params: Params,
    pub lhs: f64,
    pub rhs: f64,
    pub abs_err: f64,
    pub rel_err: f64,
    pub tol: f64,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub notes: String,
    /// Multiplier of `tol` giving the absolute floor.
    #[serde(skip)]
    pub atol_scale: f64,
}

impl CheckReport {
    pub fn new(
        check_name: impl Into<String>,
        params: Params,
        lhs: f64,
        rhs: f64,
        tol: f64,
        atol_scale: f64,
    ) -> Self {
        let abs_err = (lhs - rhs).abs();
        let rel_err = if rhs != 0.0 {
            abs_err / rhs.abs()
        } else {
            abs_err
        };
        CheckReport {
            check_name: check_name.into(),
            params,
            lhs,
            rhs,
            abs_err,
            rel_err,
            tol,
            passed: rel_err <= tol || abs_err <= tol * atol_scale,
            notes: String::new(),
            atol_scale,
        }
    }

    /// Report for a check whose evaluation raised an error.
    pub fn from_error(
        check_name: impl Into<String>,
        params: Params,
        tol: f64,
        err: &Error,
    ) -> Self {
        CheckReport {
            check_name: check_name.into(),
            params,
            lhs: f64::NAN,
            rhs: f64::NAN,
            abs_err: f64::NAN,
            rel_err: f64::NAN,
            tol,
            passed: false,
            notes: err.to_string(),
            atol_scale: 0.0,
        }
    }

    /// Re-judges the report at a different tolerance.
    pub fn with_tol(mut self, tol: f64) -> Self {
        self.tol = tol;
        self.passed = self.rel_err <= tol || self.abs_err <= tol * self.atol_scale;
        self
    }

    pub fn with_note(mut self, note: impl AsRef<str>) -> Self {
        let note = note.as_ref();
        if !note.is_empty() {
            if !self.notes.is_empty() {
                self.notes.push_str("; ");
            }
            self.notes.push_str(note);
        }
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pass_rule() {
        let r = CheckReport::new("a", Params::new(), 1.0 + 1e-10, 1.0, 1e-9, 0.0);
        assert!(r.passed);
        assert!((r.abs_err - 1e-10).abs() < 1e-16);
        let r = CheckReport::new("b", Params::new(), 1e-3, 1.0, 1e-9, 1e9);
        assert!(r.passed);
        let r = CheckReport::new("c", Params::new(), 2e-10, 0.0, 1e-10, 1.0);
        assert!(!r.passed);
        assert_eq!(r.rel_err, r.abs_err);
        let r = CheckReport::new("d", Params::new(), f64::NAN, 1.0, 1e-9, 1.0);
        assert!(!r.passed);
        let r = CheckReport::new("e", Params::new(), 1.0 + 1e-8, 1.0, 1e-7, 0.0);
        assert!(r.passed && !r.clone().with_tol(1e-9).passed);
        assert!(r.with_tol(1e-9).with_tol(1e-7).passed);
        let e = CheckReport::from_error("f", Params::new(), 1e-9, &Error::Domain("x".into()));
        assert!(!e.with_tol(1.0).passed);
    }

    #[test]
    fn serializes_mandated_fields() {
        let r = CheckReport::new("x", params(&[("mu", 0.5)]), 1.0, 1.0, 1e-9, 0.0);
        let v = serde_json::to_value(&r).unwrap();
        for key in [
            "check_name",
            "params",
            "lhs",
            "rhs",
            "abs_err",
            "rel_err",
            "tol",
            "passed",
        ] {
            assert!(v.get(key).is_some(), "{key}");
        }
        assert!(v.get("notes").is_none());
        let e = CheckReport::from_error("y", Params::new(), 1e-9, &Error::Domain("bad".into()));
        assert!(!e.passed && e.notes.contains("DomainError"));
    }
}
