use std::f64::consts::PI;
use std::num::NonZeroUsize;
use std::sync::OnceLock;

use gauss_quad::legendre::GaussLegendre;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::parallel::Backend;

/// Gauss–Legendre points per panel.
pub const NODES_PER_PANEL: usize = 32;
/// Upper limit on the number of panels before giving up.
pub const MAX_PANELS: usize = 1 << 14;

fn rule() -> &'static [(f64, f64)] {
    static RULE: OnceLock<Vec<(f64, f64)>> = OnceLock::new();
    RULE.get_or_init(|| {
        let gl = GaussLegendre::new(NonZeroUsize::new(NODES_PER_PANEL).expect("nonzero"));
        gl.as_node_weight_pairs().to_vec()
    })
}

/// Initial panel count for frequency `(2n+1) pi`: at least four panels per
/// oscillation period.
pub fn initial_panels(n: i64) -> usize {
    let periods = (2 * n + 1).unsigned_abs() as usize;
    8.max(4 * periods)
}

fn horner(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
}

/// Composite rule with `panels` equal panels on `[0, 1]` for
/// `int_0^1 p(x) e^{-i freq x} dx`.
pub fn composite(poly: &[f64], freq: f64, panels: usize, backend: Backend) -> Complex64 {
    let h = 1.0 / panels as f64;
    let nodes = rule();
    let per_panel = backend.map_range(0..panels as i64, |k| {
        let a = k as f64 * h;
        let mid = a + 0.5 * h;
        nodes.iter().fold(Complex64::new(0.0, 0.0), |acc, &(t, wt)| {
            let x = mid + 0.5 * h * t;
            acc + Complex64::from_polar(wt * horner(poly, x), -freq * x)
        }) * (0.5 * h)
    });
    per_panel.into_iter().fold(Complex64::new(0.0, 0.0), |acc, v| acc + v)
}

/// `int_0^1 p(x) e^{-(2n+1) pi i x} dx`, doubling the panel count until two
/// successive estimates differ by less than `tol`.
pub fn oscillatory_integral(poly: &[f64], n: i64, tol: f64, backend: Backend) -> Result<Complex64> {
    let freq = (2 * n + 1) as f64 * PI;
    let mut panels = initial_panels(n);
    let mut coarse = composite(poly, freq, panels, backend);
    loop {
        let fine = composite(poly, freq, 2 * panels, backend);
        let diff = (fine - coarse).norm();
        if diff < tol {
            return Ok(fine);
        }
        panels *= 2;
        if panels >= MAX_PANELS {
            return Err(Error::QuadratureTolerance {
                tol,
                achieved: diff,
                panels,
            });
        }
        coarse = fine;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integrates_constant_against_exponential() {
        // int_0^1 e^{-pi i x} dx = 2/(pi i)
        let v = oscillatory_integral(&[1.0], 0, 1e-13, Backend::Sequential).unwrap();
        assert!((v - Complex64::new(0.0, -2.0 / PI)).norm() < 1e-14);
    }

    #[test]
    fn panel_rule_scales_with_frequency() {
        assert_eq!(initial_panels(0), 8);
        assert_eq!(initial_panels(5), 44);
        assert_eq!(initial_panels(-6), 44);
    }

    #[test]
    fn unreachable_tolerance_errors() {
        let err = oscillatory_integral(&[1e6, -3e6, 2e6], 2, 1e-30, Backend::Sequential).unwrap_err();
        assert!(matches!(err, Error::QuadratureTolerance { .. }));
    }
}
