//! A copula in the class `{C : γ(C) = t}` that attains `Ḡ_t` at a given
//! point.

use super::pointbound_gamma::gamma_lower_pointbound;
use super::supremum::upper_bound;
use super::GammaTarget;
use crate::copula::{frechet_upper, Bivariate, LowerPointBound, PointBoundSpec, UnitPoint};
use crate::error::{Error, Result};
use crate::quadrature::{gamma_quadrature, CERTIFY_PANELS};

/// Tolerance on `|γ(witness) - t|`, measured by quadrature.
pub const WITNESS_GAMMA_TOL: f64 = 1e-6;
/// Tolerance on `|witness(u,v) - Ḡ_t(u,v)|`.
pub const WITNESS_VALUE_TOL: f64 = 1e-9;

/// Either a lower point-bound copula whose gamma is exactly `t`, or the
/// mixture `α M + (1-α) C̲_{(u,v), u∧v}`.
#[derive(Debug, Clone, Copy)]
pub enum Witness {
    PointBound(LowerPointBound),
    Mixture { alpha: f64, base: LowerPointBound },
}

impl Witness {
    /// Closed-form gamma; gamma is affine along the mixture.
    pub fn gamma(&self) -> Result<f64> {
        match self {
            Witness::PointBound(c) => Ok(gamma_lower_pointbound(&c.0)?.value),
            Witness::Mixture { alpha, base } => {
                let g0 = gamma_lower_pointbound(&base.0)?.value;
                Ok(alpha + (1.0 - alpha) * g0)
            }
        }
    }
}

impl Bivariate for Witness {
    fn eval(&self, u: f64, v: f64) -> f64 {
        match self {
            Witness::PointBound(c) => c.eval(u, v),
            Witness::Mixture { alpha, base } => {
                alpha * frechet_upper(u, v) + (1.0 - alpha) * base.eval(u, v)
            }
        }
    }
}

/// Builds the witness and checks it: `|γ - t| <= 1e-6` by Simpson quadrature
/// and `|C(u,v) - Ḡ_t(u,v)| <= 1e-9`. A failed check is an
/// [`Error::Internal`].
pub fn witness_copula(p: UnitPoint, t: GammaTarget) -> Result<Witness> {
    let (u, v) = (p.u(), p.v());
    let m = frechet_upper(u, v);
    let report = upper_bound(p, t);
    let target = t.value();

    let theta_star = report.inner_max.unwrap_or(m);
    let mut chosen = None;
    if theta_star <= m {
        let spec = PointBoundSpec::new(u, v, theta_star)?;
        if (gamma_lower_pointbound(&spec)?.value - target).abs() <= 1e-9 {
            chosen = Some(Witness::PointBound(spec.lower()));
        }
    }
    let witness = match chosen {
        Some(w) => w,
        None => {
            let base = PointBoundSpec::new(u, v, m)?;
            let g0 = gamma_lower_pointbound(&base)?.value;
            let alpha = if 1.0 - g0 <= f64::EPSILON {
                1.0
            } else {
                ((target - g0) / (1.0 - g0)).clamp(0.0, 1.0)
            };
            Witness::Mixture {
                alpha,
                base: base.lower(),
            }
        }
    };

    let gamma = gamma_quadrature(&witness, CERTIFY_PANELS)?;
    if (gamma - target).abs() > WITNESS_GAMMA_TOL {
        return Err(Error::Internal(format!(
            "witness at ({u}, {v}) has gamma {gamma}, target {target}: {witness:?}"
        )));
    }
    let value = witness.eval(u, v);
    if (value - report.bound).abs() > WITNESS_VALUE_TOL {
        return Err(Error::Internal(format!(
            "witness at ({u}, {v}) takes {value}, bound is {}: {witness:?}",
            report.bound
        )));
    }
    Ok(witness)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(u: f64, v: f64) -> UnitPoint {
        UnitPoint::new(u, v).unwrap()
    }

    fn tg(t: f64) -> GammaTarget {
        GammaTarget::new(t).unwrap()
    }

    #[test]
    fn centre_at_half() {
        let w = witness_copula(pt(0.5, 0.5), tg(0.5)).unwrap();
        assert!(matches!(w, Witness::PointBound(c) if c.0.theta() == 0.5));
        assert!((w.gamma().unwrap() - 0.5).abs() < 1e-15);
        assert_eq!(w.eval(0.5, 0.5), 0.5);
    }

    #[test]
    fn countermonotone_corner() {
        let w = witness_copula(pt(0.25, 0.75), tg(-1.0)).unwrap();
        assert!(matches!(w, Witness::PointBound(c) if c.0.theta() == 0.0));
        let g = gamma_quadrature(&w, CERTIFY_PANELS).unwrap();
        assert!((g + 1.0).abs() < 1e-6);
        assert_eq!(w.eval(0.25, 0.75), 0.0);
    }

    #[test]
    fn centre_at_zero() {
        let w = witness_copula(pt(0.5, 0.5), tg(0.0)).unwrap();
        assert!((w.eval(0.5, 0.5) - 6f64.sqrt() / 6.0).abs() < 1e-9);
        assert!(gamma_quadrature(&w, CERTIFY_PANELS).unwrap().abs() < 1e-6);
    }

    #[test]
    fn mixture_when_bound_is_m() {
        let w = witness_copula(pt(0.3, 0.6), tg(0.75)).unwrap();
        assert!(matches!(w, Witness::Mixture { .. }));
        assert!((w.eval(0.3, 0.6) - 0.3).abs() < 1e-12);
        assert!((w.gamma().unwrap() - 0.75).abs() < 1e-12);
    }
}
