//! Closed-form best-possible bounds `G̲_t <= C <= Ḡ_t` over all copulas `C`
//! with Gini's gamma equal to `t`.
//!
//! The upper bound at `(u, v)` is the largest `θ` such that the smallest
//! copula through `(u, v, θ)` still has gamma at most `t`. The gamma of that
//! copula is a five-piece quadratic in `θ` ([`gamma_lower_pointbound`]), so
//! the answer is the largest root `θ_i` of one of the pieces, taken where
//! that root falls inside the piece's own domain ([`region_contains`]). The
//! lower bound follows by reflecting the first coordinate.

mod classify;
mod hyperbolic;
mod pointbound_gamma;
mod region;
mod supremum;
mod theta;
mod witness;

use serde::Serialize;

use crate::error::{domain, Result};

pub use classify::{classify_lower, classify_upper, BoundClassification};
pub use hyperbolic::{hyperbolic_corner_points, hyperbolic_set_contains, mixed_partial_in_s};
pub use pointbound_gamma::{
    branch_condition, branch_gamma, gamma_lower_pointbound, i1_closed, i2_closed, GammaBranchValue,
};
pub use region::{region_contains, region_nonempty};
pub use supremum::{
    lower_bound, upper_bound, LowerBound, ThetaReport, UpperBound, CLAMP_ALARM, SNAP_TOL,
};
pub use theta::{theta_candidate, theta_candidates};
pub use witness::{witness_copula, Witness};

/// Slack used when testing whether a root sits inside its piece's domain.
/// Points exactly on a piece boundary count for both neighbours.
pub const BRANCH_SLACK: f64 = 1e-12;

/// A target value of Gini's gamma, `-1 <= t <= 1`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize)]
#[serde(transparent)]
pub struct GammaTarget(f64);

impl GammaTarget {
    pub fn new(t: f64) -> Result<Self> {
        if !(-1.0..=1.0).contains(&t) {
            return Err(domain(format!("gamma target t = {t} is outside [-1, 1]")));
        }
        Ok(Self(t))
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.0
    }

    /// `-t`, the target of the reflected problem.
    pub fn negate(&self) -> Self {
        Self(-self.0)
    }
}
