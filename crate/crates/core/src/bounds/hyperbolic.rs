//! The set `S = {(u+v)² + 2uv - 6(u ∧ v) <= -1 - t}` on which `θ₅` binds for
//! `t >= 0`, its two diagonal corner points and the density of `θ₅` inside it.

use super::GammaTarget;
use crate::copula::UnitPoint;
use crate::error::{domain, Result};

/// Slack on the defining inequality when testing the closure of `S`.
const CLOSURE_SLACK: f64 = 1e-12;

fn s_excess(p: UnitPoint, t: GammaTarget) -> f64 {
    let (x, m) = (p.u().max(p.v()), p.u().min(p.v()));
    let s = x + m;
    s * s + 2.0 * x * m - 6.0 * m + 1.0 + t.value()
}

pub fn hyperbolic_set_contains(p: UnitPoint, t: GammaTarget) -> bool {
    s_excess(p, t) <= 0.0
}

/// The diagonal points `((3 ± √(3-6t))/6, same)` where the two arcs
/// bounding `S` meet. Defined for `t <= 1/2`.
pub fn hyperbolic_corner_points(t: GammaTarget) -> Result<(UnitPoint, UnitPoint)> {
    let r = 3.0 - 6.0 * t.value();
    if r < 0.0 {
        return Err(domain(format!(
            "corner points need t <= 1/2, got t = {}",
            t.value()
        )));
    }
    let c1 = (3.0 + r.sqrt()) / 6.0;
    let c2 = (3.0 - r.sqrt()) / 6.0;
    Ok((UnitPoint::new(c1, c1)?, UnitPoint::new(c2, c2)?))
}

/// `∂²θ₅/∂u∂v = √3 (t - 12uv + 6u + 6v - 2) / (3 Q^{3/2})` with
/// `Q = 5u² + 5v² - 6u - 6v + 2uv + 2t + 5`. Equals `t/3` at both corner
/// points.
pub fn mixed_partial_in_s(p: UnitPoint, t: GammaTarget) -> Result<f64> {
    if s_excess(p, t) > CLOSURE_SLACK {
        return Err(domain(format!(
            "({}, {}) is outside the closure of S for t = {}",
            p.u(),
            p.v(),
            t.value()
        )));
    }
    let (u, v, t) = (p.u(), p.v(), t.value());
    let q = 5.0 * u * u + 5.0 * v * v - 6.0 * u - 6.0 * v + 2.0 * u * v + 2.0 * t + 5.0;
    let num = 3f64.sqrt() * (t - 12.0 * u * v + 6.0 * u + 6.0 * v - 2.0);
    Ok(num / (3.0 * q.powf(1.5)))
}
