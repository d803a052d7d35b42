//! Composite Simpson rule for Gini's gamma,
//! `γ(C) = 4 ∫₀¹ [C(u,u) + C(u,1-u)] du - 2`.
//!
//! Piecewise-linear copulas have kinks along both diagonals, which drops the
//! effective rate to first order near them. Callers certifying against closed
//! forms use `m >= 2000`; [`CERTIFY_PANELS`] is the default.

use crate::copula::Bivariate;
use crate::error::{domain, Result};

pub const CERTIFY_PANELS: usize = 4000;

/// Simpson estimate of `γ(f)` with `m` panels (`m` even, `m >= 2`).
pub fn gamma_quadrature<F: Bivariate + ?Sized>(f: &F, m: usize) -> Result<f64> {
    let integral = diagonal_integral(f, m)?;
    Ok(4.0 * integral - 2.0)
}

/// `∫₀¹ [f(u,u) + f(u,1-u)] du` by composite Simpson.
pub fn diagonal_integral<F: Bivariate + ?Sized>(f: &F, m: usize) -> Result<f64> {
    simpson(|u| f.eval(u, u) + f.eval(u, 1.0 - u), m)
}

/// Composite Simpson on `[0,1]`.
pub fn simpson(g: impl Fn(f64) -> f64, m: usize) -> Result<f64> {
    if m < 2 || !m.is_multiple_of(2) {
        return Err(domain(format!(
            "Simpson rule needs an even panel count >= 2, got {m}"
        )));
    }
    let h = 1.0 / m as f64;
    let mut acc = g(0.0) + g(1.0);
    for k in 1..m {
        let w = if k % 2 == 1 { 4.0 } else { 2.0 };
        acc += w * g(k as f64 * h);
    }
    Ok(acc * h / 3.0)
}
