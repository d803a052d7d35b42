//! Regions `R₁..R₅`: where the candidate `θ_i` is the binding value of the
//! upper bound.
//!
//! `(u, v)` belongs to `R_i` when `θ_i` exists, lies in `[W(u,v), u ∧ v]`,
//! and the anchor `(u ∨ v, u ∧ v)` with value `θ_i` falls inside the domain
//! of gamma piece `i`. Solving those conditions for `u ∨ v` gives the usual
//! inequality description of the regions; evaluating them directly avoids
//! carrying the solved radicals around.

use super::pointbound_gamma::branch_condition;
use super::theta::{ordered, theta_raw};
use super::{GammaTarget, BRANCH_SLACK};
use crate::copula::{frechet_lower, UnitPoint};

pub fn region_contains(i: usize, p: UnitPoint, t: GammaTarget) -> bool {
    let (hi, lo) = ordered(p);
    let w = frechet_lower(hi, lo);
    theta_raw(i, hi, lo, t.value()).is_some_and(|th| contains_raw(i, hi, lo, w, th))
}

#[inline]
pub(super) fn contains_raw(i: usize, hi: f64, lo: f64, w: f64, th: f64) -> bool {
    th >= w - BRANCH_SLACK
        && th <= lo + BRANCH_SLACK
        && branch_condition(i as u8, hi, lo, th, BRANCH_SLACK)
}

/// Searches a triangular grid over `u <= v` with about `samples` nodes for
/// a point of `R_i`.
pub fn region_nonempty(i: usize, t: GammaTarget, samples: usize) -> bool {
    // n(n+1)/2 >= samples
    let mut n = 1usize;
    while n * (n + 1) / 2 < samples.max(1) {
        n += 1;
    }
    let n = n.max(2);
    (0..=n).any(|a| {
        (a..=n).any(|b| {
            let p = UnitPoint::new(a as f64 / n as f64, b as f64 / n as f64).expect("grid node");
            region_contains(i, p, t)
        })
    })
}
