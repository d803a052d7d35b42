//! The five candidate values `θ_i(u, v, t)`: for each piece of the gamma of
//! the lower point-bound copula, the largest root of `piece(θ) = t` with the
//! anchor `(a, b)` renamed to `(u, v)`.
//!
//! Every expression is written in terms of `u ∨ v` and `u ∧ v` only, so
//! swapping the arguments gives bit-identical results.

use super::GammaTarget;
use crate::copula::UnitPoint;

/// Radicands in `[-RADICAND_SLACK, 0)` are rounding noise around a double
/// root and are read as zero.
const RADICAND_SLACK: f64 = 1e-14;

fn sqrt_or_none(r: f64) -> Option<f64> {
    if r >= 0.0 {
        Some(r.sqrt())
    } else if r >= -RADICAND_SLACK {
        Some(0.0)
    } else {
        None
    }
}

/// `θ_i` for `i` in `1..=5`, or `None` when the radicand is negative (the
/// piece never reaches `t`). Panics if `i` is out of range.
pub fn theta_candidate(i: usize, p: UnitPoint, t: GammaTarget) -> Option<f64> {
    let (hi, lo) = ordered(p);
    theta_raw(i, hi, lo, t.value())
}

/// All five candidates, index 0 holding `θ₁`.
pub fn theta_candidates(p: UnitPoint, t: GammaTarget) -> [Option<f64>; 5] {
    let (hi, lo) = ordered(p);
    let t = t.value();
    [1, 2, 3, 4, 5].map(|i| theta_raw(i, hi, lo, t))
}

#[inline]
pub(super) fn ordered(p: UnitPoint) -> (f64, f64) {
    (p.u().max(p.v()), p.u().min(p.v()))
}

/// `(b + r)/k` with `r = √radicand`. For `b < 0` the conjugate form
/// `num/(r - b)`, where `num = (r² - b²)/k`, avoids cancellation.
fn largest_root(b: f64, radicand: f64, k: f64, num: f64) -> Option<f64> {
    sqrt_or_none(radicand).map(|r| if b < 0.0 { num / (r - b) } else { (b + r) / k })
}

/// `x` is `u ∨ v`, `m` is `u ∧ v`.
pub(super) fn theta_raw(i: usize, x: f64, m: f64, t: f64) -> Option<f64> {
    let s = x + m;
    let xm = x * m;
    let t1 = t + 1.0;
    match i {
        1 => {
            let d = s - 1.0;
            largest_root(d, d * d + t1, 2.0, t1 / 2.0)
        }
        2 => largest_root(
            3.0 * x + m - 2.0,
            s * s + 4.0 * (1.0 - x) * (1.0 - m) + 2.0 * t,
            4.0,
            (t + 4.0 * x * (1.0 - x)) / 2.0,
        ),
        3 => largest_root(
            4.0 * x + 2.0 * m - 3.0,
            16.0 * x * x + 4.0 * m * m - 24.0 * x - 12.0 * m + 16.0 * xm + 7.0 * t1 + 9.0,
            7.0,
            t1,
        ),
        4 => largest_root(
            5.0 * x + 3.0 * m - 4.0,
            4.0 * x * x + 16.0 * m * m - 12.0 * x - 24.0 * m + 16.0 * xm + 7.0 * t1 + 9.0,
            7.0,
            t + m * m - 2.0 * xm - 3.0 * x * x + 4.0 * x,
        ),
        5 => {
            let dm = x - m;
            largest_root(
                3.0 * (s - 1.0),
                3.0 * (5.0 * x * x + 5.0 * m * m - 6.0 * x - 6.0 * m + 2.0 * xm + 2.0 * t1 + 3.0),
                6.0,
                dm * dm + t1,
            )
        }
        _ => panic!("theta index {i} is not in 1..=5"),
    }
}
