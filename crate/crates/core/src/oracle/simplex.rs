//! Dense two-phase simplex on `min c·x, A x = b, x >= 0` with Bland's rule.

use crate::error::{Error, Result};

const PIVOT_EPS: f64 = 1e-10;
const COST_EPS: f64 = 1e-11;
/// Phase-one optimum above this means the constraints cannot be met.
pub(crate) const FEASIBILITY_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub(crate) enum Solution {
    Optimal { x: Vec<f64>, objective: f64 },
    Infeasible,
}

struct Tableau {
    /// `rows` constraint rows then the objective row, each `cols + 1` wide
    /// with the right-hand side last.
    t: Vec<f64>,
    rows: usize,
    cols: usize,
    basis: Vec<usize>,
    iterations: usize,
    cap: usize,
}

impl Tableau {
    #[inline]
    fn w(&self) -> usize {
        self.cols + 1
    }

    #[inline]
    fn at(&self, r: usize, c: usize) -> f64 {
        self.t[r * self.w() + c]
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let w = self.w();
        let p = self.at(r, c);
        for k in 0..w {
            self.t[r * w + k] /= p;
        }
        let (before, rest) = self.t.split_at_mut(r * w);
        let (prow, after) = rest.split_at_mut(w);
        let eliminate = |row: &mut [f64]| {
            let f = row[c];
            if f != 0.0 {
                for (x, y) in row.iter_mut().zip(prow.iter()) {
                    *x -= f * y;
                }
                row[c] = 0.0;
            }
        };
        before.chunks_mut(w).for_each(eliminate);
        after.chunks_mut(w).for_each(eliminate);
        self.basis[r] = c;
    }

    /// Runs Bland's rule over columns `0..allowed`; the objective row is last.
    fn optimize(&mut self, allowed: usize) -> Result<()> {
        let obj = self.rows;
        loop {
            let Some(c) = (0..allowed).find(|&c| self.at(obj, c) < -COST_EPS) else {
                return Ok(());
            };
            let mut best: Option<(f64, usize, usize)> = None;
            for r in 0..self.rows {
                let a = self.at(r, c);
                if a > PIVOT_EPS {
                    let ratio = self.at(r, self.cols) / a;
                    let better = match best {
                        None => true,
                        Some((br, _, bv)) => {
                            ratio < br - 1e-14 || (ratio <= br + 1e-14 && self.basis[r] < bv)
                        }
                    };
                    if better {
                        best = Some((ratio, r, self.basis[r]));
                    }
                }
            }
            let Some((_, r, _)) = best else {
                return Err(Error::Internal("linear program is unbounded".into()));
            };
            self.iterations += 1;
            if self.iterations > self.cap {
                return Err(Error::Stall {
                    iterations: self.iterations,
                });
            }
            self.pivot(r, c);
        }
    }

    fn drop_row(&mut self, r: usize) {
        let w = self.w();
        self.t.drain(r * w..(r + 1) * w);
        self.basis.remove(r);
        self.rows -= 1;
    }
}

/// Minimizes `c·x` subject to `A x = b`, `x >= 0`. `a` is row-major with
/// `b.len()` rows. Fails with [`Error::Stall`] after `cap` pivots.
pub(crate) fn minimize(c: &[f64], a: &[f64], b: &[f64], cap: usize) -> Result<Solution> {
    let n = c.len();
    let m = b.len();
    if a.len() != n * m {
        return Err(Error::Internal(format!(
            "constraint matrix is not {m} x {n}"
        )));
    }
    let cols = n + m;
    let w = cols + 1;
    let mut t = vec![0.0; (m + 1) * w];
    for r in 0..m {
        let sign = if b[r] < 0.0 { -1.0 } else { 1.0 };
        for k in 0..n {
            t[r * w + k] = sign * a[r * n + k];
        }
        t[r * w + n + r] = 1.0;
        t[r * w + cols] = sign * b[r];
    }
    // phase one: minimize the sum of artificials, priced out of the basis
    for r in 0..m {
        for k in 0..w {
            if !(n..cols).contains(&k) {
                t[m * w + k] -= t[r * w + k];
            }
        }
    }
    let mut tab = Tableau {
        t,
        rows: m,
        cols,
        basis: (n..cols).collect(),
        iterations: 0,
        cap,
    };
    tab.optimize(cols)?;
    if -tab.at(tab.rows, cols) > FEASIBILITY_TOL {
        return Ok(Solution::Infeasible);
    }

    // drive remaining artificials out; rows where that fails are redundant
    let mut r = 0;
    while r < tab.rows {
        if tab.basis[r] >= n {
            match (0..n).find(|&k| tab.at(r, k).abs() > PIVOT_EPS) {
                Some(k) => {
                    tab.pivot(r, k);
                    r += 1;
                }
                None => tab.drop_row(r),
            }
        } else {
            r += 1;
        }
    }

    // phase two objective row, priced out against the basis
    let obj = tab.rows;
    let w = tab.w();
    let objective_row = &mut tab.t[obj * w..(obj + 1) * w];
    objective_row.fill(0.0);
    objective_row[..n].copy_from_slice(c);
    for r in 0..tab.rows {
        let f = c[tab.basis[r]];
        if f != 0.0 {
            for k in 0..w {
                let v = tab.t[r * w + k];
                tab.t[obj * w + k] -= f * v;
            }
        }
    }
    tab.optimize(n)?;

    let mut x = vec![0.0; n];
    for r in 0..tab.rows {
        x[tab.basis[r]] = tab.at(r, cols);
    }
    let objective = c.iter().zip(&x).map(|(c, x)| c * x).sum();
    Ok(Solution::Optimal { x, objective })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn optimal(s: Solution) -> (Vec<f64>, f64) {
        match s {
            Solution::Optimal { x, objective } => (x, objective),
            Solution::Infeasible => panic!("expected an optimum"),
        }
    }

    #[test]
    fn small_program() {
        // min -x - 2y  s.t. x + y + s = 4, x + 3y + r = 6
        let c = [-1.0, -2.0, 0.0, 0.0];
        let a = [1.0, 1.0, 1.0, 0.0, 1.0, 3.0, 0.0, 1.0];
        let (x, obj) = optimal(minimize(&c, &a, &[4.0, 6.0], 100).unwrap());
        assert!((obj + 5.0).abs() < 1e-12);
        assert!((x[0] - 3.0).abs() < 1e-12 && (x[1] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn infeasible_program() {
        // x + y = 1 and x + y = 2
        let a = [1.0, 1.0, 1.0, 1.0];
        assert_eq!(
            minimize(&[0.0, 0.0], &a, &[1.0, 2.0], 100).unwrap(),
            Solution::Infeasible
        );
    }

    #[test]
    fn redundant_row_is_dropped() {
        // 2x2 transportation problem: all four margins, one redundant
        let a = [
            1.0, 1.0, 0.0, 0.0, //
            0.0, 0.0, 1.0, 1.0, //
            1.0, 0.0, 1.0, 0.0, //
            0.0, 1.0, 0.0, 1.0,
        ];
        let b = [0.5; 4];
        let (x, obj) = optimal(minimize(&[0.0, 1.0, 1.0, 0.0], &a, &b, 100).unwrap());
        assert!(obj.abs() < 1e-12);
        assert!((x[0] - 0.5).abs() < 1e-12 && (x[3] - 0.5).abs() < 1e-12);
    }

    #[test]
    fn negative_rhs_is_flipped() {
        // -x = -2, min x
        let (x, obj) = optimal(minimize(&[1.0], &[-1.0], &[-2.0], 10).unwrap());
        assert!((x[0] - 2.0).abs() < 1e-15 && (obj - 2.0).abs() < 1e-15);
    }

    #[test]
    fn stall_is_reported() {
        let c = [-1.0, -2.0, 0.0, 0.0];
        let a = [1.0, 1.0, 1.0, 0.0, 1.0, 3.0, 0.0, 1.0];
        assert!(matches!(
            minimize(&c, &a, &[4.0, 6.0], 0),
            Err(Error::Stall { .. })
        ));
    }
}
