use serde::Serialize;

use super::region::contains_raw;
use super::theta::theta_raw;
use super::GammaTarget;
use crate::copula::{frechet_lower, Bivariate, UnitPoint};

/// Clamping into `[W, M]` by more than this sets [`ThetaReport::clamped`].
pub const CLAMP_ALARM: f64 = 1e-12;
/// Results this close to `W` or `M` are set equal to them.
pub const SNAP_TOL: f64 = 1e-13;

/// Everything computed on the way to `Ḡ_t(u, v)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ThetaReport {
    #[serde(flatten)]
    pub point: UnitPoint,
    pub t: GammaTarget,
    /// `θ₁..θ₅`; `None` where the radicand is negative.
    pub theta: [Option<f64>; 5],
    /// Region membership `χ_{θ_i}`.
    pub active: [bool; 5],
    /// Largest active `θ_i`, if any region is active.
    pub inner_max: Option<f64>,
    pub bound: f64,
    pub clamped: bool,
}

impl ThetaReport {
    /// Spread between the largest and smallest active candidate. Regions may
    /// overlap on shared boundaries, where the candidates should coincide.
    pub fn overlap_spread(&self) -> f64 {
        let active: Vec<f64> = self
            .theta
            .iter()
            .zip(self.active)
            .filter_map(|(th, on)| if on { *th } else { None })
            .collect();
        match (
            active.iter().copied().reduce(f64::max),
            active.iter().copied().reduce(f64::min),
        ) {
            (Some(hi), Some(lo)) => hi - lo,
            _ => 0.0,
        }
    }

    pub fn active_regions(&self) -> Vec<usize> {
        (0..5).filter(|&k| self.active[k]).map(|k| k + 1).collect()
    }
}

/// `Ḡ_t(u, v) = min(u, v, max of the active θ_i)`, or `min(u, v)` when no
/// region is active. The result is clamped into `[W(u,v), M(u,v)]`.
pub fn upper_bound(p: UnitPoint, t: GammaTarget) -> ThetaReport {
    let (u, v) = (p.u(), p.v());
    let (hi, lo) = (u.max(v), u.min(v));
    let w = frechet_lower(hi, lo).min(lo);
    let mut theta = [None; 5];
    let mut active = [false; 5];
    let mut inner_max: Option<f64> = None;
    for k in 0..5 {
        theta[k] = theta_raw(k + 1, hi, lo, t.value());
        if let Some(th) = theta[k] {
            if contains_raw(k + 1, hi, lo, w, th) {
                active[k] = true;
                inner_max = Some(inner_max.map_or(th, |m| m.max(th)));
            }
        }
    }
    let raw = match inner_max {
        Some(m) => lo.min(m),
        None => lo,
    };
    let mut bound = raw.clamp(w, lo);
    if bound - w <= SNAP_TOL {
        bound = w;
    } else if lo - bound <= SNAP_TOL {
        bound = lo;
    }
    ThetaReport {
        point: p,
        t,
        theta,
        active,
        inner_max,
        bound,
        clamped: (bound - raw).abs() > CLAMP_ALARM,
    }
}

/// `G̲_t(u, v) = v - Ḡ_{-t}(1 - u, v)`.
pub fn lower_bound(p: UnitPoint, t: GammaTarget) -> f64 {
    let q = UnitPoint::new(1.0 - p.u(), p.v()).expect("1 - u stays in [0,1]");
    p.v() - upper_bound(q, t.negate()).bound
}

/// `Ḡ_t` as a [`Bivariate`].
#[derive(Debug, Clone, Copy)]
pub struct UpperBound(pub GammaTarget);

impl Bivariate for UpperBound {
    fn eval(&self, u: f64, v: f64) -> f64 {
        upper_bound(
            UnitPoint::new(u, v).expect("evaluation point in [0,1]^2"),
            self.0,
        )
        .bound
    }
}

/// `G̲_t` as a [`Bivariate`].
#[derive(Debug, Clone, Copy)]
pub struct LowerBound(pub GammaTarget);

impl Bivariate for LowerBound {
    fn eval(&self, u: f64, v: f64) -> f64 {
        lower_bound(
            UnitPoint::new(u, v).expect("evaluation point in [0,1]^2"),
            self.0,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::copula::frechet_upper;

    fn pt(u: f64, v: f64) -> UnitPoint {
        UnitPoint::new(u, v).unwrap()
    }

    fn tg(t: f64) -> GammaTarget {
        GammaTarget::new(t).unwrap()
    }

    fn lattice(n: usize) -> impl Iterator<Item = (f64, f64)> {
        (0..=n).flat_map(move |i| (0..=n).map(move |j| (i as f64 / n as f64, j as f64 / n as f64)))
    }

    #[test]
    fn upper_at_minus_one_is_w() {
        for (u, v) in lattice(200) {
            let r = upper_bound(pt(u, v), tg(-1.0));
            assert_eq!(r.bound, frechet_lower(u, v).min(u.min(v)), "({u},{v})");
        }
    }

    #[test]
    fn upper_examples() {
        let r = upper_bound(pt(0.3, 0.6), tg(0.75));
        assert_eq!(r.bound, 0.3);
        assert!(r.inner_max.is_none());

        let r = upper_bound(pt(0.5, 0.5), tg(0.0));
        assert!((r.bound - 6f64.sqrt() / 6.0).abs() < 1e-15);
        assert_eq!(r.active_regions(), vec![5]);

        let r = upper_bound(pt(0.25, 0.75), tg(-1.0));
        assert_eq!(r.bound, 0.0);
        assert!(r.active[0]);
    }

    #[test]
    fn lower_examples() {
        for (u, v) in lattice(50) {
            assert!((lower_bound(pt(u, v), tg(1.0)) - frechet_upper(u, v)).abs() <= 1e-12);
        }
        assert!((lower_bound(pt(0.4, 0.7), tg(-0.75)) - 0.1).abs() < 1e-12);
        let want = 0.5 - 6f64.sqrt() / 6.0;
        assert!((lower_bound(pt(0.5, 0.5), tg(0.0)) - want).abs() < 1e-15);
        assert!((want - 0.0917517).abs() < 1e-7);
    }

    #[test]
    fn evaluators_agree_with_functions() {
        let up = UpperBound(tg(-0.3));
        let lo = LowerBound(tg(-0.3));
        assert_eq!(up.eval(0.2, 0.9), upper_bound(pt(0.2, 0.9), tg(-0.3)).bound);
        assert_eq!(lo.eval(0.2, 0.9), lower_bound(pt(0.2, 0.9), tg(-0.3)));
    }

    #[test]
    fn report_json_shape() {
        let r = upper_bound(pt(0.5, 0.5), tg(0.0));
        let js = serde_json::to_value(&r).unwrap();
        for key in [
            "u",
            "v",
            "t",
            "theta",
            "active",
            "inner_max",
            "bound",
            "clamped",
        ] {
            assert!(js.get(key).is_some(), "missing {key}");
        }
        assert_eq!(js["theta"].as_array().unwrap().len(), 5);
        let r = upper_bound(pt(0.3, 0.6), tg(0.75));
        let js = serde_json::to_value(&r).unwrap();
        assert!(js["inner_max"].is_null());
        // θ₂ does not exist at (0.55, 0.45), t = -1
        let r = upper_bound(pt(0.55, 0.45), tg(-1.0));
        let js = serde_json::to_value(&r).unwrap();
        assert!(js["theta"][1].is_null());
    }
}
