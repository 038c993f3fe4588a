//! Frobenius–Euler numbers and polynomials: exact construction, the Fourier
//! expansion of their antiperiodic extension, the link to the Lerch
//! transcendent, and Stirling-number identities, each checked against an
//! independent oracle by the verification harness.

pub mod error;
pub mod exactnum;

pub use error::{Error, Result};
pub mod frobenius;
pub mod report;
pub mod stirling;
pub mod fourier;
pub mod parallel;
pub mod lerch;
pub mod harness;
