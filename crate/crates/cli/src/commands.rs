use std::path::Path;

use rayon::prelude::*;
use serde_json::{json, Map, Value};

use gini_core::bounds::{
    classify_lower, classify_upper, gamma_lower_pointbound, hyperbolic_corner_points, i1_closed,
    i2_closed, lower_bound, region_contains, upper_bound, GammaTarget, LowerBound, UpperBound,
};
use gini_core::copula::{frechet_lower, frechet_upper, Builtin, PointBoundSpec, UnitPoint};
use gini_core::error::{Error, Result};
use gini_core::lattice::{check_properties, LatticeFunction, PropertyReport};
use gini_core::oracle::{gamma_checkerboard_exact, lp_extreme, Checkerboard, Direction, LpStatus};
use gini_core::quadrature::gamma_quadrature;

use crate::output::{with_sink, write_grid, write_regions};
use crate::{GridFormat, Outcome, Side};

/// Lattice tolerance used by `check`.
pub const CHECK_TOL: f64 = 1e-10;
/// Largest accepted gap between a closed-form gamma and its quadrature.
pub const GAMMA_AGREEMENT_TOL: f64 = 1e-6;
/// Slack in the oracle soundness inequalities.
pub const SOUNDNESS_SLACK: f64 = 1e-9;

fn params(v: Value) -> Map<String, Value> {
    match v {
        Value::Object(m) => m,
        _ => unreachable!("parameters are built from object literals"),
    }
}

fn outcome(parameters: Value, results: Value, checks_passed: bool) -> Outcome {
    Outcome {
        parameters: params(parameters),
        results,
        checks_passed,
        report_to_stderr: false,
    }
}

fn sample(t: GammaTarget, n: usize, side: Side) -> Result<LatticeFunction> {
    match side {
        Side::Upper => LatticeFunction::sample(&UpperBound(t), n),
        Side::Lower => LatticeFunction::sample(&LowerBound(t), n),
    }
}

fn require_grid(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::Domain("grid size must be at least 1".into()));
    }
    Ok(())
}

pub fn eval(t: f64, u: f64, v: f64, side: Side) -> Result<Outcome> {
    let tg = GammaTarget::new(t)?;
    let p = UnitPoint::new(u, v)?;
    let parameters = json!({ "t": t, "u": u, "v": v, "side": side });
    Ok(match side {
        Side::Upper => {
            let r = upper_bound(p, tg);
            let res = json!({
                "side": side,
                "bound": r.bound,
                "active_regions": r.active_regions(),
                "overlap_spread": r.overlap_spread(),
                "report": r,
            });
            outcome(parameters, res, !r.clamped)
        }
        Side::Lower => {
            let q = UnitPoint::new(1.0 - u, v)?;
            let r = upper_bound(q, tg.negate());
            let res = json!({
                "side": side,
                "bound": lower_bound(p, tg),
                "reflected": r,
                "reflected_active_regions": r.active_regions(),
            });
            outcome(parameters, res, !r.clamped)
        }
    })
}

pub fn grid(
    t: f64,
    n: usize,
    side: Side,
    out: Option<&Path>,
    format: GridFormat,
) -> Result<Outcome> {
    let tg = GammaTarget::new(t)?;
    require_grid(n)?;
    let g = sample(tg, n, side)?;
    with_sink(out, |w| write_grid(&g, format, w))?;
    let parameters = json!({
        "t": t, "n": n, "side": side, "format": format,
        "out": out.map(|p| p.display().to_string()),
    });
    let res = json!({ "rows": (n + 1) * (n + 1) });
    Ok(Outcome {
        report_to_stderr: out.is_none(),
        ..outcome(parameters, res, true)
    })
}

fn parse_real(s: &str, what: &str) -> Result<f64> {
    s.parse()
        .map_err(|_| Error::Parse(format!("{what}: cannot read {s:?} as a number")))
}

pub fn gamma(spec: &[String], panels: usize) -> Result<Outcome> {
    let kind = spec[0].to_ascii_lowercase();
    let args = &spec[1..];
    let arity = |k: usize| -> Result<()> {
        if args.len() != k {
            return Err(Error::Parse(format!(
                "`{kind}` takes {k} argument(s), got {}",
                args.len()
            )));
        }
        Ok(())
    };
    let parameters = json!({ "copula": spec, "panels": panels });
    let (closed, quad, extra) = match kind.as_str() {
        "w" | "m" | "pi" => {
            arity(0)?;
            let b = match kind.as_str() {
                "w" => Builtin::W,
                "m" => Builtin::M,
                _ => Builtin::Pi,
            };
            (b.gamma(), gamma_quadrature(&b, panels)?, json!({}))
        }
        "pointbound" => {
            arity(3)?;
            let a = parse_real(&args[0], "a")?;
            let b = parse_real(&args[1], "b")?;
            let th = parse_real(&args[2], "theta")?;
            let s = PointBoundSpec::new(a, b, th)?;
            let g = gamma_lower_pointbound(&s)?;
            let extra = json!({ "branch": g.branch, "i1": i1_closed(&s), "i2": i2_closed(&s) });
            (g.value, gamma_quadrature(&s.lower(), panels)?, extra)
        }
        "checkerboard" => {
            arity(1)?;
            let cb = Checkerboard::load(Path::new(&args[0]))?;
            let extra = json!({ "n": cb.n() });
            (
                gamma_checkerboard_exact(&cb),
                gamma_quadrature(&cb, panels)?,
                extra,
            )
        }
        other => {
            return Err(Error::Parse(format!(
                "unknown copula {other:?}; expected w, m, pi, pointbound or checkerboard"
            )))
        }
    };
    let diff = (closed - quad).abs();
    let mut res = json!({ "closed": closed, "quadrature": quad, "abs_diff": diff });
    if let (Value::Object(r), Value::Object(e)) = (&mut res, extra) {
        r.extend(e);
    }
    Ok(outcome(parameters, res, diff <= GAMMA_AGREEMENT_TOL))
}

pub fn classify(t: f64) -> Result<Outcome> {
    let tg = GammaTarget::new(t)?;
    let (up, lo) = (classify_upper(tg), classify_lower(tg));
    let res = json!({
        "upper": up, "lower": lo,
        "upper_is_copula": up.is_copula(), "lower_is_copula": lo.is_copula(),
    });
    Ok(outcome(json!({ "t": t }), res, true))
}

/// Chebyshev distance, in lattice cells, from the centre of the most negative
/// cell to the nearer corner of the hyperbolic set.
fn distance_to_corners(r: &PropertyReport, n: usize, t: GammaTarget) -> Option<f64> {
    let (p1, p2) = hyperbolic_corner_points(t).ok()?;
    let ci = r.min_volume_rect[0] as f64 + 0.5;
    let cj = r.min_volume_rect[2] as f64 + 0.5;
    let nf = n as f64;
    let d = |p: UnitPoint| (ci - nf * p.u()).abs().max((cj - nf * p.v()).abs());
    Some(d(p1).min(d(p2)))
}

pub fn check(t: f64, n: usize) -> Result<Outcome> {
    let tg = GammaTarget::new(t)?;
    require_grid(n)?;
    let up = sample(tg, n, Side::Upper)?;
    let lo = sample(tg, n, Side::Lower)?;
    let (ru, rl) = rayon::join(
        || check_properties(&up, CHECK_TOL),
        || check_properties(&lo, CHECK_TOL),
    );

    let sandwich = (0..=n)
        .into_par_iter()
        .map(|i| {
            let x = up.coord(i);
            (0..=n)
                .map(|j| {
                    let y = up.coord(j);
                    let (a, b) = (lo.get(i, j), up.get(i, j));
                    (frechet_lower(x, y) - a)
                        .max(a - b)
                        .max(b - frechet_upper(x, y))
                })
                .fold(f64::NEG_INFINITY, f64::max)
        })
        .reduce(|| f64::NEG_INFINITY, f64::max);

    let (cu, cl) = (classify_upper(tg), classify_lower(tg));
    let upper_ok = ru.is_quasicopula && ru.is_copula == cu.is_copula();
    let lower_ok = rl.is_quasicopula && rl.is_copula == cl.is_copula();
    let sandwich_ok = sandwich <= 1e-12;
    let res = json!({
        "tol": CHECK_TOL,
        "upper": {
            "classification": cu,
            "properties": ru,
            "consistent": upper_ok,
            "min_cell_distance_to_corners": if ru.is_copula { None } else { distance_to_corners(&ru, n, tg) },
        },
        "lower": {
            "classification": cl,
            "properties": rl,
            "consistent": lower_ok,
        },
        "sandwich_max_violation": sandwich,
        "sandwich_ok": sandwich_ok,
    });
    Ok(outcome(
        json!({ "t": t, "grid": n }),
        res,
        upper_ok && lower_ok && sandwich_ok,
    ))
}

pub fn oracle(t: f64, n: usize, u: f64, v: f64) -> Result<Outcome> {
    let tg = GammaTarget::new(t)?;
    let p = UnitPoint::new(u, v)?;
    if n == 0 {
        return Err(Error::Domain(
            "checkerboard order must be at least 1".into(),
        ));
    }
    let parameters = json!({ "t": t, "n": n, "u": u, "v": v });
    let (hi, lo) = rayon::join(
        || lp_extreme(n, p, tg, Direction::Max),
        || lp_extreme(n, p, tg, Direction::Min),
    );
    let (hi, lo) = (hi?, lo?);
    let upper = upper_bound(p, tg).bound;
    let lower = lower_bound(p, tg);
    if hi.status == LpStatus::Infeasible || lo.status == LpStatus::Infeasible {
        let res = json!({ "status": LpStatus::Infeasible, "upper": upper, "lower": lower });
        return Ok(outcome(parameters, res, true));
    }
    let (lp_max, lp_min) = (hi.optimum.expect("optimal"), lo.optimum.expect("optimal"));
    let sound = lp_max <= upper + SOUNDNESS_SLACK && lp_min >= lower - SOUNDNESS_SLACK;
    let res = json!({
        "status": LpStatus::Optimal,
        "lp_max": lp_max,
        "lp_min": lp_min,
        "upper": upper,
        "lower": lower,
        "gap_upper": upper - lp_max,
        "gap_lower": lp_min - lower,
        "sound": sound,
    });
    Ok(outcome(parameters, res, sound))
}

pub fn regions(t: f64, n: usize, out: Option<&Path>) -> Result<Outcome> {
    let tg = GammaTarget::new(t)?;
    require_grid(n)?;
    let rows: Vec<[bool; 5]> = (0..(n + 1) * (n + 1))
        .into_par_iter()
        .map(|k| {
            let p = UnitPoint::new(
                (k / (n + 1)) as f64 / n as f64,
                (k % (n + 1)) as f64 / n as f64,
            )
            .expect("lattice node");
            [1, 2, 3, 4, 5].map(|i| region_contains(i, p, tg))
        })
        .collect();
    with_sink(out, |w| write_regions(n, &rows, w))?;
    let mut counts = [0usize; 5];
    for r in &rows {
        for (c, b) in counts.iter_mut().zip(r) {
            *c += usize::from(*b);
        }
    }
    let parameters = json!({ "t": t, "n": n, "out": out.map(|p| p.display().to_string()) });
    let res = json!({ "counts": counts, "nonempty": counts.map(|c| c > 0) });
    Ok(Outcome {
        report_to_stderr: out.is_none(),
        ..outcome(parameters, res, true)
    })
}
