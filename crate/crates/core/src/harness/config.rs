use std::path::PathBuf;

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::exactnum::{parse_rational, render_rational, ExactRational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    Markdown,
    Csv,
}

/// Suite settings. Read from JSON with the same field names; rationals are
/// written as strings such as `"1/3"` or `"-3"`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SuiteConfig {
    pub m_max: usize,
    /// Depth of the exact H_n tables.
    pub n_max: usize,
    pub fourier_n_schedule: Vec<usize>,
    #[serde(with = "rational_list")]
    pub u_samples: Vec<ExactRational>,
    #[serde(with = "rational_list")]
    pub x_samples: Vec<ExactRational>,
    pub tol_exact_numeric: f64,
    pub tol_convergence: f64,
    pub strict: bool,
    pub output_format: OutputFormat,
    pub output_path: Option<PathBuf>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        let q = |n: i64, d: i64| ExactRational::new(n.into(), d.into());
        SuiteConfig {
            m_max: 12,
            n_max: 32,
            fourier_n_schedule: vec![64, 256, 1024, 8192],
            u_samples: vec![q(-3, 1), q(-1, 1), q(1, 3), q(1, 2), q(2, 1)],
            x_samples: vec![q(1, 4), q(1, 3), q(1, 2), q(2, 3)],
            tol_exact_numeric: 1e-10,
            tol_convergence: 5e-2,
            strict: false,
            output_format: OutputFormat::Json,
            output_path: None,
        }
    }
}

/// Largest supported `m_max`/`n_max`; beyond this f64 evaluation of the
/// exact values loses meaning.
pub const DEPTH_LIMIT: usize = 60;

impl SuiteConfig {
    /// Every violated constraint, in field order.
    pub fn validate(&self) -> Vec<String> {
        let mut problems = Vec::new();
        if self.m_max < 1 || self.m_max > DEPTH_LIMIT {
            problems.push(format!("m_max must be in 1..={DEPTH_LIMIT}, got {}", self.m_max));
        }
        if self.n_max < 1 || self.n_max > DEPTH_LIMIT {
            problems.push(format!("n_max must be in 1..={DEPTH_LIMIT}, got {}", self.n_max));
        }
        if self.n_max < self.m_max + 1 {
            problems.push(format!("n_max ({}) must be at least m_max + 1 ({})", self.n_max, self.m_max + 1));
        }
        let schedule = &self.fourier_n_schedule;
        if schedule.is_empty() {
            problems.push("fourier_n_schedule must not be empty".into());
        }
        if schedule.iter().any(|n| !n.is_power_of_two()) {
            problems.push("fourier_n_schedule entries must be powers of two".into());
        }
        if schedule.windows(2).any(|w| w[0] >= w[1]) {
            problems.push("fourier_n_schedule must be strictly increasing".into());
        }
        if schedule.iter().any(|&n| n > 1 << 20) {
            problems.push("fourier_n_schedule entries must not exceed 2^20".into());
        }
        if self.u_samples.is_empty() {
            problems.push("u_samples must not be empty".into());
        }
        if self.u_samples.iter().any(One::is_one) {
            problems.push("u_samples must exclude 1 (pole of H_n)".into());
        }
        if self.x_samples.is_empty() {
            problems.push("x_samples must not be empty".into());
        }
        for x in &self.x_samples {
            if *x <= ExactRational::zero() || *x >= ExactRational::one() {
                problems.push(format!("x sample {} is not strictly inside (0, 1)", render_rational(x)));
            }
        }
        for (name, v) in [("tol_exact_numeric", self.tol_exact_numeric), ("tol_convergence", self.tol_convergence)] {
            if !(v.is_finite() && v > 0.0) {
                problems.push(format!("{name} must be a positive finite number, got {v}"));
            }
        }
        if self.tol_exact_numeric < 1e-13 {
            problems.push("tol_exact_numeric below 1e-13 is not attainable in double precision".into());
        }
        problems
    }
}

mod rational_list {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[ExactRational], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(render_rational))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<ExactRational>, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        raw.iter()
            .map(|t| parse_rational(t).map_err(serde::de::Error::custom))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_is_valid_and_round_trips() {
        let c = SuiteConfig::default();
        assert!(c.validate().is_empty());
        let text = serde_json::to_string(&c).unwrap();
        assert!(text.contains("\"1/3\""));
        let back: SuiteConfig = serde_json::from_str(&text).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn partial_json_fills_defaults() {
        let c: SuiteConfig = serde_json::from_str(r#"{"m_max": 6, "u_samples": ["2", "-1/2"]}"#).unwrap();
        assert_eq!(c.m_max, 6);
        assert_eq!(c.n_max, 32);
        assert_eq!(c.u_samples.len(), 2);
    }

    #[test]
    fn lists_every_violation() {
        let mut c = SuiteConfig::default();
        c.u_samples.push(ExactRational::one());
        c.x_samples.push(ExactRational::zero());
        c.fourier_n_schedule = vec![256, 64];
        let problems = c.validate();
        assert_eq!(problems.len(), 3, "{problems:?}");
    }

    #[test]
    fn rejects_bad_rational_text() {
        assert!(serde_json::from_str::<SuiteConfig>(r#"{"u_samples": ["1/0"]}"#).is_err());
        assert!(serde_json::from_str::<SuiteConfig>(r#"{"bogus": 1}"#).is_err());
    }
}
