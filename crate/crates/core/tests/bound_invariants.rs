use proptest::prelude::*;

use gini_core::bounds::{
    branch_condition, branch_gamma, gamma_lower_pointbound, lower_bound, region_contains,
    theta_candidates, upper_bound, GammaTarget, BRANCH_SLACK,
};
use gini_core::copula::{frechet_lower, frechet_upper, PointBoundSpec, UnitPoint};

fn pt(u: f64, v: f64) -> UnitPoint {
    UnitPoint::new(u, v).unwrap()
}

fn tg(t: f64) -> GammaTarget {
    GammaTarget::new(t).unwrap()
}

/// `max{θ ∈ [W, M] : γ(C̲_{(u,v),θ}) <= t}` by bisection; gamma is
/// nondecreasing in θ.
fn bisect_upper(u: f64, v: f64, t: f64) -> f64 {
    let (w, m) = (frechet_lower(u, v), frechet_upper(u, v));
    let g = |th: f64| {
        gamma_lower_pointbound(&PointBoundSpec::new(u, v, th).unwrap())
            .unwrap()
            .value
    };
    if g(m) <= t {
        return m;
    }
    if g(w) > t {
        return w;
    }
    let (mut lo, mut hi) = (w, m);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if g(mid) <= t {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

fn unit() -> impl Strategy<Value = f64> {
    0.0..=1.0f64
}

fn target() -> impl Strategy<Value = f64> {
    -1.0..=1.0f64
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn matches_bisection(u in unit(), v in unit(), t in target()) {
        let got = upper_bound(pt(u, v), tg(t)).bound;
        let want = bisect_upper(u, v, t);
        prop_assert!((got - want).abs() <= 1e-9, "({u},{v},{t}): {got} vs {want}");
    }

    #[test]
    fn sandwiched_by_frechet_bounds(u in unit(), v in unit(), t in target()) {
        let up = upper_bound(pt(u, v), tg(t)).bound;
        let lo = lower_bound(pt(u, v), tg(t));
        prop_assert!(frechet_lower(u, v) <= lo + 1e-15);
        prop_assert!(lo <= up + 1e-15);
        prop_assert!(up <= frechet_upper(u, v) + 1e-15);
    }

    #[test]
    fn symmetric_in_arguments(u in unit(), v in unit(), t in target()) {
        prop_assert_eq!(upper_bound(pt(u, v), tg(t)).bound, upper_bound(pt(v, u), tg(t)).bound);
        prop_assert!((lower_bound(pt(u, v), tg(t)) - lower_bound(pt(v, u), tg(t))).abs() <= 1e-15);
    }

    #[test]
    fn nondecreasing_in_t(u in unit(), v in unit(), t1 in target(), t2 in target()) {
        let (a, b) = (t1.min(t2), t1.max(t2));
        prop_assert!(upper_bound(pt(u, v), tg(a)).bound <= upper_bound(pt(u, v), tg(b)).bound + 1e-12);
        prop_assert!(lower_bound(pt(u, v), tg(a)) <= lower_bound(pt(u, v), tg(b)) + 1e-12);
    }

    #[test]
    fn grounded_with_uniform_margins(x in unit(), t in target()) {
        for (u, v, want) in [(x, 0.0, 0.0), (0.0, x, 0.0), (x, 1.0, x), (1.0, x, x)] {
            prop_assert!((upper_bound(pt(u, v), tg(t)).bound - want).abs() <= 1e-12);
            prop_assert!((lower_bound(pt(u, v), tg(t)) - want).abs() <= 1e-12);
        }
    }

    #[test]
    fn lipschitz_between_nearby_points(u in unit(), v in unit(), du in -0.05..0.05f64, dv in -0.05..0.05f64, t in target()) {
        let (u2, v2) = ((u + du).clamp(0.0, 1.0), (v + dv).clamp(0.0, 1.0));
        let a = upper_bound(pt(u, v), tg(t)).bound;
        let b = upper_bound(pt(u2, v2), tg(t)).bound;
        prop_assert!((a - b).abs() <= (u - u2).abs() + (v - v2).abs() + 1e-12);
    }

    #[test]
    fn active_candidates_agree(u in unit(), v in unit(), t in target()) {
        let r = upper_bound(pt(u, v), tg(t));
        prop_assert!(r.overlap_spread() <= 1e-9, "spread {}", r.overlap_spread());
        prop_assert!(!r.clamped);
        for i in 1..=5 {
            prop_assert_eq!(region_contains(i, pt(u, v), tg(t)), r.active[i - 1]);
        }
    }

    #[test]
    fn active_roots_solve_their_piece(u in unit(), v in unit(), t in target()) {
        let th = theta_candidates(pt(u, v), tg(t));
        for i in upper_bound(pt(u, v), tg(t)).active_regions() {
            let g = branch_gamma(i as u8, u, v, th[i - 1].unwrap());
            prop_assert!((g - t).abs() <= 1e-9);
        }
    }

    #[test]
    fn pieces_agree_where_domains_meet(hi in unit(), lo in unit(), frac in unit()) {
        let (hi, lo) = (hi.max(lo), hi.min(lo));
        let th = frechet_lower(hi, lo) + frac * (lo - frechet_lower(hi, lo));
        let vals: Vec<f64> = (1..=5u8)
            .filter(|&i| branch_condition(i, hi, lo, th, BRANCH_SLACK))
            .map(|i| branch_gamma(i, hi, lo, th))
            .collect();
        prop_assert!(!vals.is_empty());
        for w in vals.windows(2) {
            prop_assert!((w[0] - w[1]).abs() <= 1e-9);
        }
    }

    #[test]
    fn pointbound_gamma_in_range(a in unit(), b in unit(), frac in unit()) {
        let w = frechet_lower(a, b);
        let th = w + frac * (frechet_upper(a, b) - w);
        let g = gamma_lower_pointbound(&PointBoundSpec::new(a, b, th).unwrap()).unwrap();
        prop_assert!((-1.0 - 1e-12..=1.0 + 1e-12).contains(&g.value));
    }
}

#[test]
fn bisection_on_a_lattice() {
    for t in [-0.95, -0.6, -0.3, -0.05, 0.1, 0.4] {
        for i in 0..=40 {
            for j in 0..=40 {
                let (u, v) = (i as f64 / 40.0, j as f64 / 40.0);
                let got = upper_bound(pt(u, v), tg(t)).bound;
                assert!((got - bisect_upper(u, v, t)).abs() <= 1e-9, "({u},{v},{t})");
            }
        }
    }
}
