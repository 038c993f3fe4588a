//! Suite orchestration: configuration, the identity registry, and report
//! emission. The CLI in `main.rs` is a thin layer over this module.

mod config;
mod render;

use std::str::FromStr;

pub use config::{OutputFormat, SuiteConfig, DEPTH_LIMIT};
pub use render::render_report;

use crate::error::{Error, Result};
use crate::fourier::{verify_fourier, FourierCheck, FourierParams};
use crate::frobenius::{check_frobenius_with, fe_number_table, FrobeniusCheck, FrobeniusNumberTable};
use crate::lerch::{verify_lerch, LerchCheck, LerchParams};
use crate::parallel::Backend;
use crate::report::{CheckClass, Residual, Tolerance, Verdict, VerificationReport};
use crate::stirling::{verify_stirling_with, StirlingCheck};

/// One registry entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Check {
    Frobenius(FrobeniusCheck),
    Stirling(StirlingCheck),
    Fourier(FourierCheck),
    Lerch(LerchCheck),
}

/// Every check the suite runs, in report order.
pub const REGISTRY: [Check; 22] = [
    Check::Frobenius(FrobeniusCheck::RecurrenceEq26),
    Check::Frobenius(FrobeniusCheck::Lemma1),
    Check::Frobenius(FrobeniusCheck::Lemma1UMinusOne),
    Check::Frobenius(FrobeniusCheck::AppellDerivative),
    Check::Frobenius(FrobeniusCheck::OracleMatch),
    Check::Frobenius(FrobeniusCheck::EulerSpecialization),
    Check::Stirling(StirlingCheck::Triangle),
    Check::Stirling(StirlingCheck::Eq10Factorization),
    Check::Stirling(StirlingCheck::CrossIdentity),
    Check::Stirling(StirlingCheck::Theorem3),
    Check::Stirling(StirlingCheck::Corollary4),
    Check::Fourier(FourierCheck::WBasisStructure),
    Check::Fourier(FourierCheck::CoeffConsistency),
    Check::Fourier(FourierCheck::Theorem1Convergence),
    Check::Fourier(FourierCheck::Corollary1),
    Check::Fourier(FourierCheck::Corollary3X1),
    Check::Lerch(LerchCheck::ShiftIdentity),
    Check::Lerch(LerchCheck::SpecialValues),
    Check::Lerch(LerchCheck::Corollary1Bilateral),
    Check::Lerch(LerchCheck::Eq14),
    Check::Lerch(LerchCheck::Theorem2),
    Check::Lerch(LerchCheck::Corollary2),
];

impl Check {
    pub fn id(self) -> &'static str {
        match self {
            Check::Frobenius(c) => c.id(),
            Check::Stirling(c) => c.id(),
            Check::Fourier(c) => c.id(),
            Check::Lerch(c) => c.id(),
        }
    }

    pub fn class(self) -> CheckClass {
        match self {
            Check::Frobenius(c) => c.class(),
            Check::Stirling(c) => c.class(),
            Check::Fourier(c) => c.class(),
            Check::Lerch(c) => c.class(),
        }
    }
}

impl FromStr for Check {
    type Err = Error;

    /// Accepts registry ids and the module-level aliases.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        FrobeniusCheck::from_str(s)
            .map(Check::Frobenius)
            .or_else(|_| StirlingCheck::from_str(s).map(Check::Stirling))
            .or_else(|_| FourierCheck::from_str(s).map(Check::Fourier))
            .or_else(|_| LerchCheck::from_str(s).map(Check::Lerch))
            .map_err(|_| Error::UnknownIdentity(s.to_string()))
    }
}

/// `"all"` or a comma-separated id list; the result follows registry order
/// without duplicates.
pub fn parse_suite(selection: &str) -> Result<Vec<Check>> {
    if selection.trim() == "all" {
        return Ok(REGISTRY.to_vec());
    }
    let wanted = selection
        .split(',')
        .filter(|t| !t.trim().is_empty())
        .map(Check::from_str)
        .collect::<Result<Vec<_>>>()?;
    if wanted.is_empty() {
        return Err(Error::InvalidParameter("empty suite".into()));
    }
    Ok(REGISTRY.into_iter().filter(|c| wanted.contains(c)).collect())
}

fn fourier_params(config: &SuiteConfig) -> FourierParams {
    let base = FourierParams::default();
    FourierParams {
        m_values: base.m_values.iter().copied().filter(|&m| m <= config.m_max).collect(),
        coeff_m_max: base.coeff_m_max.min(config.m_max),
        u_samples: config.u_samples.clone(),
        x_samples: config.x_samples.clone(),
        n_schedule: config.fourier_n_schedule.clone(),
        coeff_tol: config.tol_exact_numeric,
        convergence_tol: config.tol_convergence,
        ..base
    }
}

fn lerch_params(config: &SuiteConfig) -> LerchParams {
    let base = LerchParams::default();
    let m_max = config.m_max;
    LerchParams {
        eq14_m: base.eq14_m.iter().copied().filter(|&m| m as usize <= m_max).collect(),
        theorem2_m: base.theorem2_m.iter().copied().filter(|&m| m <= m_max).collect(),
        corollary2_m: base.corollary2_m.iter().copied().filter(|&m| m <= m_max).collect(),
        u_samples: config.u_samples.clone(),
        x_samples: config.x_samples.clone(),
        bilateral_n: *config.fourier_n_schedule.last().unwrap_or(&base.bilateral_n),
        ..base
    }
}

/// Depth used for each exact check; oracle-based checks stop where the
/// oracle gets expensive.
fn depth(check: Check, config: &SuiteConfig) -> usize {
    let (m, n) = (config.m_max, config.n_max);
    match check {
        Check::Frobenius(FrobeniusCheck::OracleMatch) => n.min(15),
        Check::Frobenius(FrobeniusCheck::EulerSpecialization) => n.min(20),
        Check::Frobenius(_) => n,
        Check::Stirling(StirlingCheck::Triangle) => m.min(10),
        Check::Stirling(StirlingCheck::Eq10Factorization | StirlingCheck::CrossIdentity) => m.max(15).min(n),
        Check::Stirling(_) => m,
        Check::Fourier(_) | Check::Lerch(_) => m,
    }
}

fn run_check(check: Check, config: &SuiteConfig, table: &FrobeniusNumberTable) -> Result<Vec<VerificationReport>> {
    let d = depth(check, config);
    match check {
        Check::Frobenius(c) => check_frobenius_with(c, d, table),
        Check::Stirling(c) => verify_stirling_with(c, d, table),
        Check::Fourier(c) => verify_fourier(c, &fourier_params(config), table),
        Check::Lerch(c) => verify_lerch(c, &lerch_params(config), table, Backend::default()),
    }
}

/// A check that could not run is recorded as a failure rather than
/// aborting the suite.
fn error_report(check: Check, err: &Error) -> VerificationReport {
    VerificationReport {
        identity_id: check.id().to_string(),
        parameters: Default::default(),
        lhs_rendered: String::new(),
        rhs_rendered: String::new(),
        abs_residual: Residual::Exact("not evaluated".into()),
        verdict: Verdict::Fail,
        tolerance: Tolerance::Exact,
        notes: format!("error: {err}"),
    }
}

/// Runs the selected checks. Entries execute concurrently; the output is
/// always in registry order.
pub fn run_suite(config: &SuiteConfig, checks: &[Check]) -> std::result::Result<Vec<VerificationReport>, Vec<String>> {
    let problems = config.validate();
    if !problems.is_empty() {
        return Err(problems);
    }
    let table = fe_number_table(config.n_max.max(config.m_max + 2));
    let per_check = Backend::default().map_slice(checks, |&c| run_check(c, config, &table));
    Ok(checks
        .iter()
        .zip(per_check)
        .flat_map(|(&c, res)| res.unwrap_or_else(|e| vec![error_report(c, &e)]))
        .collect())
}

/// 0 when every pass/fail check passed (and, in strict mode, every
/// reported residual is within its tolerance); 1 otherwise.
pub fn exit_status(reports: &[VerificationReport], strict: bool) -> i32 {
    let failed = reports.iter().any(|r| match r.verdict {
        Verdict::Pass => false,
        Verdict::Fail => true,
        Verdict::Reported => strict && !r.residual_within_tolerance(),
    });
    i32::from(failed)
}
