//! The record every identity check produces.

use std::collections::BTreeMap;

use serde::{Serialize, Serializer};

/// Outcome of one check.
///
/// `Pass`/`Fail` are used for checks whose outcome is part of the contract
/// (oracle agreements, algebraic identities). `Reported` marks identities
/// transcribed literally from the literature: the residual is measured and
/// shown, never asserted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Reported,
}

/// Whether a check contributes pass/fail verdicts or reported residuals.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckClass {
    PassFail,
    Reported,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Residual {
    /// Exact arithmetic gave an identically zero difference.
    ExactZero,
    /// Nonzero exact difference, in canonical text form.
    Exact(String),
    Numeric(f64),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Tolerance {
    Exact,
    Abs(f64),
}

/// Rounds to 15 significant digits so serialized reals do not depend on
/// the last bits of a floating-point sum.
pub fn round_sig15(v: f64) -> f64 {
    if !v.is_finite() || v == 0.0 {
        return v;
    }
    format!("{v:.14e}").parse().unwrap_or(v)
}

/// Real number in report text: 15 significant digits.
pub fn fmt_real(v: f64) -> String {
    if v == 0.0 {
        return "0".into();
    }
    if !v.is_finite() {
        return v.to_string();
    }
    format!("{v:.14e}")
}

fn serialize_real<S: Serializer>(v: f64, s: S) -> Result<S::Ok, S::Error> {
    if v.is_finite() {
        s.serialize_f64(round_sig15(v))
    } else {
        s.serialize_str(&v.to_string())
    }
}

impl Serialize for Residual {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Residual::ExactZero => s.serialize_str("0 (exact)"),
            Residual::Exact(text) => s.serialize_str(text),
            Residual::Numeric(v) => serialize_real(*v, s),
        }
    }
}

impl Serialize for Tolerance {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Tolerance::Exact => s.serialize_str("exact"),
            Tolerance::Abs(v) => serialize_real(*v, s),
        }
    }
}

impl Residual {
    pub fn render(&self) -> String {
        match self {
            Residual::ExactZero => "0 (exact)".into(),
            Residual::Exact(t) => t.clone(),
            Residual::Numeric(v) => fmt_real(*v),
        }
    }
}

impl Tolerance {
    pub fn render(&self) -> String {
        match self {
            Tolerance::Exact => "exact".into(),
            Tolerance::Abs(v) => fmt_real(*v),
        }
    }
}

/// One identity check: both sides, the residual, and the verdict.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub identity_id: String,
    pub parameters: BTreeMap<String, String>,
    pub lhs_rendered: String,
    pub rhs_rendered: String,
    pub abs_residual: Residual,
    pub verdict: Verdict,
    pub tolerance: Tolerance,
    pub notes: String,
}

impl VerificationReport {
    /// Exact comparison. `residual` is `None` when the difference is zero.
    pub fn exact(
        id: &str,
        class: CheckClass,
        lhs: String,
        rhs: String,
        residual: Option<String>,
    ) -> Self {
        let verdict = match (class, &residual) {
            (CheckClass::Reported, _) => Verdict::Reported,
            (CheckClass::PassFail, None) => Verdict::Pass,
            (CheckClass::PassFail, Some(_)) => Verdict::Fail,
        };
        VerificationReport {
            identity_id: id.to_string(),
            parameters: BTreeMap::new(),
            lhs_rendered: lhs,
            rhs_rendered: rhs,
            abs_residual: residual.map_or(Residual::ExactZero, Residual::Exact),
            verdict,
            tolerance: Tolerance::Exact,
            notes: String::new(),
        }
    }

    /// Numeric comparison against an absolute tolerance. NaN never passes.
    pub fn numeric(id: &str, class: CheckClass, lhs: String, rhs: String, residual: f64, tol: f64) -> Self {
        let verdict = match class {
            CheckClass::Reported => Verdict::Reported,
            CheckClass::PassFail if residual < tol => Verdict::Pass,
            CheckClass::PassFail => Verdict::Fail,
        };
        VerificationReport {
            identity_id: id.to_string(),
            parameters: BTreeMap::new(),
            lhs_rendered: lhs,
            rhs_rendered: rhs,
            abs_residual: Residual::Numeric(residual),
            verdict,
            tolerance: Tolerance::Abs(tol),
            notes: String::new(),
        }
    }

    pub fn with_param(mut self, key: &str, value: impl ToString) -> Self {
        self.parameters.insert(key.to_string(), value.to_string());
        self
    }

    pub fn with_notes(mut self, notes: impl Into<String>) -> Self {
        self.notes = notes.into();
        self
    }

    /// Forces a verdict, e.g. when a numeric check also has side conditions.
    pub fn with_verdict(mut self, verdict: Verdict) -> Self {
        self.verdict = verdict;
        self
    }

    /// True when the residual is zero (exact) or within tolerance (numeric).
    pub fn residual_within_tolerance(&self) -> bool {
        match (&self.abs_residual, self.tolerance) {
            (Residual::ExactZero, _) => true,
            (Residual::Exact(_), _) => false,
            (Residual::Numeric(r), Tolerance::Abs(t)) => *r < t,
            (Residual::Numeric(r), Tolerance::Exact) => *r == 0.0,
        }
    }
}

/// Shortens very long canonical renderings to a length plus a digest so
/// reports stay readable; short text passes through unchanged.
pub fn render_compact(text: &str, limit: usize) -> String {
    if text.len() <= limit {
        return text.to_string();
    }
    // FNV-1a, 64-bit.
    let digest = text
        .bytes()
        .fold(0xcbf2_9ce4_8422_2325_u64, |h, b| (h ^ u64::from(b)).wrapping_mul(0x0000_0100_0000_01b3));
    format!("{}… [{} chars, fnv1a64 {:016x}]", &text[..floor_char_boundary(text, limit / 2)], text.len(), digest)
}

fn floor_char_boundary(s: &str, mut i: usize) -> usize {
    while !s.is_char_boundary(i) {
        i -= 1;
    }
    i
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_zero_serializes_as_marker() {
        let r = VerificationReport::exact("eq26", CheckClass::PassFail, "a".into(), "a".into(), None);
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.contains("\"abs_residual\":\"0 (exact)\""));
        assert!(json.contains("\"verdict\":\"pass\""));
        assert!(json.contains("\"tolerance\":\"exact\""));
    }

    #[test]
    fn field_order_is_stable() {
        let r = VerificationReport::numeric("x", CheckClass::Reported, "1".into(), "2".into(), 1.0, 1e-10);
        let json = serde_json::to_string(&r).unwrap();
        let keys = ["identity_id", "parameters", "lhs_rendered", "rhs_rendered", "abs_residual", "verdict", "tolerance", "notes"];
        let positions: Vec<usize> = keys.iter().map(|k| json.find(&format!("\"{k}\"")).unwrap()).collect();
        assert!(positions.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn nan_fails_numeric_check() {
        let r = VerificationReport::numeric("x", CheckClass::PassFail, String::new(), String::new(), f64::NAN, 1.0);
        assert_eq!(r.verdict, Verdict::Fail);
    }

    #[test]
    fn compact_rendering_is_deterministic() {
        let long = "1 + u".repeat(200);
        let a = render_compact(&long, 100);
        assert_eq!(a, render_compact(&long, 100));
        assert!(a.len() < 120);
        assert_eq!(render_compact("short", 100), "short");
    }

    #[test]
    fn rounds_to_fifteen_digits() {
        assert_eq!(fmt_real(0.1 + 0.2), "3.00000000000000e-1");
        assert_eq!(round_sig15(0.1 + 0.2), 0.3);
    }
}
