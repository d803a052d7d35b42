//! Certification of the closed-form bounds by linear programming over
//! checkerboard copulas.
//!
//! On the uniform `n x n` grid both `C(u, v)` and `γ(C)` are affine in the
//! cell masses, so the extremes of `C(u, v)` under `γ(C) = t` form a small
//! LP. Checkerboards are copulas, hence the LP maximum never exceeds `Ḡ_t`
//! and the LP minimum never falls below `G̲_t`.

mod checkerboard;
mod lp;
mod simplex;

pub use checkerboard::{
    checkerboard_eval, gamma_checkerboard_exact, gamma_coefficients, Checkerboard, MARGIN_TOL,
};
pub use lp::{gamma_range, lp_extreme, Direction, LpOutcome, LpStatus, LP_GAMMA_TOL};
