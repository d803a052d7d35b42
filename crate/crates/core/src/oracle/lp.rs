use serde::Serialize;

use super::checkerboard::{
    axis_overlaps, gamma_checkerboard_exact, gamma_coefficients, Checkerboard,
};
use super::simplex::{minimize, Solution};
use crate::bounds::GammaTarget;
use crate::copula::UnitPoint;
use crate::error::{domain, Error, Result};

/// Largest accepted `|γ(argument) - t|` for an optimal outcome.
pub const LP_GAMMA_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Min,
    Max,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LpStatus {
    Optimal,
    Infeasible,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LpOutcome {
    pub direction: Direction,
    /// `None` when infeasible.
    pub optimum: Option<f64>,
    pub argument: Option<Checkerboard>,
    pub status: LpStatus,
}

/// `2n` margin rows, each `n²` wide.
fn margin_rows(n: usize) -> (Vec<f64>, Vec<f64>) {
    let nn = n * n;
    let mut a = vec![0.0; 2 * n * nn];
    for i in 0..n {
        for j in 0..n {
            a[i * nn + i * n + j] = 1.0;
            a[(n + j) * nn + i * n + j] = 1.0;
        }
    }
    (a, vec![1.0 / n as f64; 2 * n])
}

fn iteration_cap(n: usize) -> usize {
    10 * n.pow(4)
}

/// Rounds the simplex output into a checkerboard and verifies it.
fn certify(n: usize, x: Vec<f64>) -> Result<Checkerboard> {
    let mass = x
        .into_iter()
        .map(|m| if m < 0.0 && m > -1e-12 { 0.0 } else { m })
        .collect();
    Checkerboard::new(n, mass)
        .map_err(|e| Error::Internal(format!("simplex output is not a checkerboard: {e}")))
}

/// Extreme value of `C(p)` over order-`n` checkerboards with `γ = t`.
pub fn lp_extreme(
    n: usize,
    p: UnitPoint,
    t: GammaTarget,
    direction: Direction,
) -> Result<LpOutcome> {
    if n < 1 {
        return Err(domain("checkerboard order must be at least 1"));
    }
    let fu = axis_overlaps(n, p.u());
    let fv = axis_overlaps(n, p.v());
    let sign = match direction {
        Direction::Min => 1.0,
        Direction::Max => -1.0,
    };
    let c: Vec<f64> = (0..n * n).map(|k| sign * fu[k / n] * fv[k % n]).collect();
    let (mut a, mut b) = margin_rows(n);
    a.extend(gamma_coefficients(n));
    b.push(t.value() + 2.0);

    match minimize(&c, &a, &b, iteration_cap(n))? {
        Solution::Infeasible => Ok(LpOutcome {
            direction,
            optimum: None,
            argument: None,
            status: LpStatus::Infeasible,
        }),
        Solution::Optimal { x, .. } => {
            let cb = certify(n, x)?;
            let g = gamma_checkerboard_exact(&cb);
            if (g - t.value()).abs() > LP_GAMMA_TOL {
                return Err(Error::Internal(format!(
                    "LP argument has gamma {g}, target {}",
                    t.value()
                )));
            }
            let optimum = super::checkerboard_eval(&cb, p.u(), p.v());
            Ok(LpOutcome {
                direction,
                optimum: Some(optimum),
                argument: Some(cb),
                status: LpStatus::Optimal,
            })
        }
    }
}

/// `(min γ, max γ)` over order-`n` checkerboards.
pub fn gamma_range(n: usize) -> Result<(f64, f64)> {
    if n < 1 {
        return Err(domain("checkerboard order must be at least 1"));
    }
    let g = gamma_coefficients(n);
    let (a, b) = margin_rows(n);
    let solve = |c: Vec<f64>| -> Result<f64> {
        match minimize(&c, &a, &b, iteration_cap(n))? {
            Solution::Optimal { x, .. } => Ok(gamma_checkerboard_exact(&certify(n, x)?)),
            Solution::Infeasible => Err(Error::Internal("margin constraints infeasible".into())),
        }
    };
    let lo = solve(g.clone())?;
    let hi = solve(g.iter().map(|x| -x).collect())?;
    Ok((lo, hi))
}
