//! Closed-form Gini's gamma of the lower point-bound copula `C̲_{(a,b),θ}`.
//!
//! `γ = 4 (I₁ + I₂) - 2` with `I₁ = ∫ C̲(u, 1-u) du` and `I₂ = ∫ C̲(u, u) du`.
//! `I₁` has a single expression; `I₂` and therefore `γ` split into five
//! pieces according to where `a ∨ b` sits relative to `a ∧ b + θ`,
//! `(1 + θ)/2` and `1/2 + θ`.

use serde::Serialize;

use crate::copula::PointBoundSpec;
use crate::error::{Error, Result};

/// Piece index (1..=5) and value of the gamma of `C̲_{(a,b),θ}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GammaBranchValue {
    pub branch: u8,
    pub value: f64,
}

/// `I₁ = θ (1 - a - b + θ)`.
pub fn i1_closed(spec: &PointBoundSpec) -> f64 {
    let th = spec.theta();
    th * (1.0 - spec.a() - spec.b() + th)
}

/// `I₂` with the anchor ordered so that `b <= a`.
pub fn i2_closed(spec: &PointBoundSpec) -> f64 {
    let (a, b) = (spec.a().max(spec.b()), spec.a().min(spec.b()));
    let th = spec.theta();
    match select_branch(a, b, th) {
        1 => 0.25,
        2 => {
            let d = a - th - 0.5;
            0.25 + d * d
        }
        3 => (1.0 + 2.0 * th - 4.0 * a * th + 3.0 * th * th) / 4.0,
        4 => ((th + 1.0 - a - b) * (3.0 * th - 3.0 * a + b + 1.0) + 1.0) / 4.0,
        _ => (1.0 - (a - b) * (a - b)) / 4.0 + (1.0 - a - b) * th / 2.0 + th * th / 2.0,
    }
}

/// Domain of piece `i` at `(a ∨ b, a ∧ b, θ)`, widened by `slack`.
pub fn branch_condition(i: u8, hi: f64, lo: f64, th: f64, slack: f64) -> bool {
    let half_up = 0.5 + th;
    let mid = (1.0 + th) / 2.0;
    let shifted = lo + th;
    match i {
        1 => half_up <= hi + slack,
        2 => shifted.max(mid) <= hi + slack && hi <= half_up + slack,
        3 => shifted <= hi + slack && hi <= mid + slack,
        4 => mid <= hi + slack && hi <= shifted + slack,
        5 => hi <= shifted.min(mid) + slack,
        _ => panic!("branch index {i} is not in 1..=5"),
    }
}

/// The expression of piece `i` evaluated at `(a, b, θ)`, whatever the domain.
pub fn branch_gamma(i: u8, a: f64, b: f64, th: f64) -> f64 {
    let hi = a.max(b);
    let s = a + b;
    let common = 4.0 * th * th + 4.0 * th * (1.0 - s) - 1.0;
    match i {
        1 => common,
        2 => {
            let d = 2.0 * hi - 2.0 * th - 1.0;
            d * d + common
        }
        3 => 2.0 * th - 4.0 * hi * th + 3.0 * th * th + common,
        4 => {
            let d = s - 1.0 - 4.0 * th;
            d * d + 2.0 * (s - 1.0 - th) * (a - b).abs() - 9.0 * th * th - 1.0
        }
        5 => 6.0 * th * th + 6.0 * th * (1.0 - s) - (a - b) * (a - b) - 1.0,
        _ => panic!("branch index {i} is not in 1..=5"),
    }
}

/// First piece, in order 1..=5, whose domain contains `(hi, lo, θ)`.
fn select_branch(hi: f64, lo: f64, th: f64) -> u8 {
    (1..=5)
        .find(|&i| branch_condition(i, hi, lo, th, 0.0))
        .unwrap_or(0)
}

/// Closed-form `γ(C̲_{(a,b),θ})` with the piece that produced it.
pub fn gamma_lower_pointbound(spec: &PointBoundSpec) -> Result<GammaBranchValue> {
    let (a, b, th) = (spec.a(), spec.b(), spec.theta());
    let branch = select_branch(a.max(b), a.min(b), th);
    if branch == 0 {
        return Err(Error::Internal(format!(
            "no gamma piece covers (a, b, theta) = ({a}, {b}, {th})"
        )));
    }
    let value = branch_gamma(branch, a, b, th);
    Ok(GammaBranchValue { branch, value })
}
