//! Copula evaluators: the Fréchet–Hoeffding bounds, the product copula, the
//! point-constrained bound copulas, C-volumes and the first-coordinate
//! reflection.

use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};

/// Slack allowed when validating `W(a,b) <= θ <= M(a,b)`. Covers the rounding
/// of `a + b - 1` and of `θ` values produced by arithmetic on the bounds.
pub const ADMISSIBLE_SLACK: f64 = 1e-14;

/// A point of the unit square.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct UnitPoint {
    u: f64,
    v: f64,
}

impl UnitPoint {
    pub fn new(u: f64, v: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&u) || !(0.0..=1.0).contains(&v) {
            return Err(domain(format!("point ({u}, {v}) is outside [0,1]^2")));
        }
        Ok(Self { u, v })
    }

    #[inline]
    pub fn u(&self) -> f64 {
        self.u
    }

    #[inline]
    pub fn v(&self) -> f64 {
        self.v
    }

    /// The point with its coordinates swapped.
    pub fn transpose(&self) -> Self {
        Self {
            u: self.v,
            v: self.u,
        }
    }
}

/// A real function on the unit square, typically a copula or quasi-copula.
///
/// Implementations take raw coordinates and do no range checking; inputs are
/// expected to lie in `[0,1]`.
pub trait Bivariate {
    fn eval(&self, u: f64, v: f64) -> f64;

    fn eval_at(&self, p: UnitPoint) -> f64 {
        self.eval(p.u, p.v)
    }
}

impl<T: Bivariate + ?Sized> Bivariate for &T {
    fn eval(&self, u: f64, v: f64) -> f64 {
        (**self).eval(u, v)
    }
}

impl<T: Bivariate + ?Sized> Bivariate for Box<T> {
    fn eval(&self, u: f64, v: f64) -> f64 {
        (**self).eval(u, v)
    }
}

/// Adapter turning a closure into a [`Bivariate`].
#[derive(Clone, Copy)]
pub struct FnBivariate<F>(pub F);

impl<F: Fn(f64, f64) -> f64> Bivariate for FnBivariate<F> {
    fn eval(&self, u: f64, v: f64) -> f64 {
        (self.0)(u, v)
    }
}

/// The three copulas every other copula is compared against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Builtin {
    /// Lower Fréchet–Hoeffding bound `W(u,v) = max(0, u+v-1)`.
    W,
    /// Upper Fréchet–Hoeffding bound `M(u,v) = min(u,v)`.
    M,
    /// Independence copula `Π(u,v) = uv`.
    Pi,
}

impl Builtin {
    /// Closed-form Gini's gamma.
    pub fn gamma(&self) -> f64 {
        match self {
            Builtin::W => -1.0,
            Builtin::M => 1.0,
            Builtin::Pi => 0.0,
        }
    }
}

impl Bivariate for Builtin {
    #[inline]
    fn eval(&self, u: f64, v: f64) -> f64 {
        match self {
            Builtin::W => frechet_lower(u, v),
            Builtin::M => frechet_upper(u, v),
            Builtin::Pi => u * v,
        }
    }
}

#[inline]
pub fn frechet_lower(u: f64, v: f64) -> f64 {
    (u + v - 1.0).max(0.0)
}

#[inline]
pub fn frechet_upper(u: f64, v: f64) -> f64 {
    u.min(v)
}

pub fn eval_frechet_lower(p: UnitPoint) -> f64 {
    frechet_lower(p.u, p.v)
}

pub fn eval_frechet_upper(p: UnitPoint) -> f64 {
    frechet_upper(p.u, p.v)
}

pub fn eval_product(p: UnitPoint) -> f64 {
    p.u * p.v
}

#[inline]
fn pos(x: f64) -> f64 {
    x.max(0.0)
}

/// A prescribed copula value `θ` at the point `(a, b)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PointBoundSpec {
    a: f64,
    b: f64,
    theta: f64,
}

impl PointBoundSpec {
    /// Rejects `(a, b)` outside the unit square and `θ` outside
    /// `[W(a,b), M(a,b)]`.
    pub fn new(a: f64, b: f64, theta: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&a) || !(0.0..=1.0).contains(&b) {
            return Err(domain(format!("({a}, {b}) is outside [0,1]^2")));
        }
        if !theta.is_finite() {
            return Err(domain(format!("theta = {theta} is not finite")));
        }
        let lo = frechet_lower(a, b);
        let hi = frechet_upper(a, b);
        if theta < lo - ADMISSIBLE_SLACK {
            return Err(domain(format!(
                "theta = {theta} violates W(a,b) <= theta: W({a}, {b}) = {lo}"
            )));
        }
        if theta > hi + ADMISSIBLE_SLACK {
            return Err(domain(format!(
                "theta = {theta} violates theta <= M(a,b): M({a}, {b}) = {hi}"
            )));
        }
        Ok(Self { a, b, theta })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn lower(&self) -> LowerPointBound {
        LowerPointBound(*self)
    }

    pub fn upper(&self) -> UpperPointBound {
        UpperPointBound(*self)
    }
}

/// Smallest copula with `C(a,b) = θ`:
/// `max(0, u+v-1, θ - (a-u)⁺ - (b-v)⁺)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LowerPointBound(pub PointBoundSpec);

impl Bivariate for LowerPointBound {
    #[inline]
    fn eval(&self, u: f64, v: f64) -> f64 {
        let s = &self.0;
        frechet_lower(u, v).max(s.theta - pos(s.a - u) - pos(s.b - v))
    }
}

/// Largest copula with `C(a,b) = θ`:
/// `min(u, v, θ + (u-a)⁺ + (v-b)⁺)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UpperPointBound(pub PointBoundSpec);

impl Bivariate for UpperPointBound {
    #[inline]
    fn eval(&self, u: f64, v: f64) -> f64 {
        let s = &self.0;
        frechet_upper(u, v).min(s.theta + pos(u - s.a) + pos(v - s.b))
    }
}

pub fn eval_lower_pointbound(spec: PointBoundSpec, p: UnitPoint) -> f64 {
    spec.lower().eval_at(p)
}

pub fn eval_upper_pointbound(spec: PointBoundSpec, p: UnitPoint) -> f64 {
    spec.upper().eval_at(p)
}

/// The `f`-volume of `[u1,u2] x [v1,v2]`.
pub fn rect_volume<F: Bivariate + ?Sized>(
    f: &F,
    u1: f64,
    u2: f64,
    v1: f64,
    v2: f64,
) -> Result<f64> {
    for x in [u1, u2, v1, v2] {
        if !(0.0..=1.0).contains(&x) {
            return Err(domain(format!("rectangle corner {x} is outside [0,1]")));
        }
    }
    if u1 > u2 || v1 > v2 {
        return Err(domain(format!(
            "inverted rectangle [{u1},{u2}] x [{v1},{v2}]"
        )));
    }
    Ok(f.eval(u2, v2) - f.eval(u2, v1) - f.eval(u1, v2) + f.eval(u1, v1))
}

/// `(u, v) ↦ v - f(1-u, v)`: the copula of `(1-X, Y)` when `f` is the copula
/// of `(X, Y)`. Negates Gini's gamma.
#[derive(Debug, Clone, Copy)]
pub struct Reflected<F>(pub F);

impl<F: Bivariate> Bivariate for Reflected<F> {
    #[inline]
    fn eval(&self, u: f64, v: f64) -> f64 {
        v - self.0.eval(1.0 - u, v)
    }
}

pub fn reflect_first_coordinate<F: Bivariate>(f: F) -> Reflected<F> {
    Reflected(f)
}
