use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::copula::Bivariate;
use crate::error::{domain, Error, Result};

/// Tolerance on row and column sums.
pub const MARGIN_TOL: f64 = 1e-12;

/// A copula with constant density on each cell of the uniform `n x n` grid.
///
/// `mass[i * n + j]` is the mass of `[i/n, (i+1)/n] x [j/n, (j+1)/n]`; every
/// row and column sums to `1/n`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Checkerboard {
    n: usize,
    mass: Vec<f64>,
}

impl Checkerboard {
    pub fn new(n: usize, mass: Vec<f64>) -> Result<Self> {
        let cb = Self { n, mass };
        cb.validate()?;
        Ok(cb)
    }

    /// `Π` at order `n`.
    pub fn uniform(n: usize) -> Result<Self> {
        let w = 1.0 / (n * n) as f64;
        Self::new(n, vec![w; n * n])
    }

    /// Mass `1/n` on each diagonal cell.
    pub fn diagonal(n: usize) -> Result<Self> {
        let mut mass = vec![0.0; n * n];
        for i in 0..n {
            mass[i * n + i] = 1.0 / n as f64;
        }
        Self::new(n, mass)
    }

    /// Mass `1/n` on each anti-diagonal cell.
    pub fn anti_diagonal(n: usize) -> Result<Self> {
        Self::diagonal(n).map(|d| d.reflect_first())
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.n;
        if n == 0 {
            return Err(domain("checkerboard order must be at least 1"));
        }
        if self.mass.len() != n * n {
            return Err(domain(format!(
                "order {n} needs {} masses, got {}",
                n * n,
                self.mass.len()
            )));
        }
        if let Some((k, m)) = self
            .mass
            .iter()
            .enumerate()
            .find(|(_, m)| m.is_nan() || **m < 0.0)
        {
            return Err(domain(format!("cell ({}, {}) has mass {m}", k / n, k % n)));
        }
        let target = 1.0 / n as f64;
        for i in 0..n {
            let row: f64 = self.mass[i * n..(i + 1) * n].iter().sum();
            let col: f64 = (0..n).map(|r| self.mass[r * n + i]).sum();
            if (row - target).abs() > MARGIN_TOL {
                return Err(domain(format!("row {i} sums to {row}, expected {target}")));
            }
            if (col - target).abs() > MARGIN_TOL {
                return Err(domain(format!(
                    "column {i} sums to {col}, expected {target}"
                )));
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mass(&self) -> &[f64] {
        &self.mass
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.mass[i * self.n + j]
    }

    /// The checkerboard of `(1 - X, Y)`: rows in reverse order.
    pub fn reflect_first(&self) -> Self {
        let n = self.n;
        let mut mass = vec![0.0; n * n];
        for i in 0..n {
            mass[i * n..(i + 1) * n].copy_from_slice(&self.mass[(n - 1 - i) * n..(n - i) * n]);
        }
        Self { n, mass }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let cb: Self = serde_json::from_str(text)?;
        cb.validate()?;
        Ok(cb)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::from_json(&text).map_err(|e| match e {
            Error::Domain(msg) => Error::Domain(format!("{}: {msg}", path.display())),
            other => other,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("checkerboard serializes")
    }
}

/// Fractions of cell `k` covered by `[0, x]` along one axis, `clamp(n x - k, 0, 1)`.
pub(crate) fn axis_overlaps(n: usize, x: f64) -> Vec<f64> {
    let nx = n as f64 * x;
    (0..n).map(|k| (nx - k as f64).clamp(0.0, 1.0)).collect()
}

/// `C(u,v) = Σ mass_ij · overlap_i(u) · overlap_j(v)`.
pub fn checkerboard_eval(cb: &Checkerboard, u: f64, v: f64) -> f64 {
    let n = cb.n;
    let fu = axis_overlaps(n, u);
    let fv = axis_overlaps(n, v);
    let mut acc = 0.0;
    for (i, a) in fu.iter().enumerate() {
        if *a == 0.0 {
            break;
        }
        let row = &cb.mass[i * n..(i + 1) * n];
        for (j, b) in fv.iter().enumerate() {
            if *b == 0.0 {
                break;
            }
            acc += row[j] * a * b;
        }
    }
    acc
}

impl Bivariate for Checkerboard {
    fn eval(&self, u: f64, v: f64) -> f64 {
        checkerboard_eval(self, u, v)
    }
}

/// Coefficients `g` with `γ(C) = Σ g_ij mass_ij - 2` for every order-`n`
/// checkerboard.
///
/// `g_ij = 4 (A_ij + B_ij)` where `A_ij = ∫ overlap_i(u) overlap_j(u) du` and
/// `B_ij = ∫ overlap_i(u) overlap_j(1-u) du`, both integrated exactly:
///
/// - `A_ii = (n - i - 2/3)/n`, `A_ij = (n - max(i,j) - 1/2)/n` for `i != j`;
/// - with `k = n - 1 - j`: `B_ij = (k - i)/n` if `i < k`, `1/(6n)` if `i = k`,
///   `0` otherwise.
pub fn gamma_coefficients(n: usize) -> Vec<f64> {
    let nf = n as f64;
    let mut g = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..n {
            let a = if i == j {
                (nf - i as f64 - 2.0 / 3.0) / nf
            } else {
                (nf - i.max(j) as f64 - 0.5) / nf
            };
            let k = n - 1 - j;
            let b = match i.cmp(&k) {
                std::cmp::Ordering::Less => (k - i) as f64 / nf,
                std::cmp::Ordering::Equal => 1.0 / (6.0 * nf),
                std::cmp::Ordering::Greater => 0.0,
            };
            g[i * n + j] = 4.0 * (a + b);
        }
    }
    g
}

/// Exact `γ` of a checkerboard through [`gamma_coefficients`].
pub fn gamma_checkerboard_exact(cb: &Checkerboard) -> f64 {
    let g = gamma_coefficients(cb.n);
    g.iter().zip(&cb.mass).map(|(g, m)| g * m).sum::<f64>() - 2.0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature::{gamma_quadrature, CERTIFY_PANELS};

    #[test]
    fn uniform_is_product() {
        let cb = Checkerboard::new(1, vec![1.0]).unwrap();
        for (u, v) in [(0.3, 0.4), (0.9, 0.1), (1.0, 0.5)] {
            assert!((checkerboard_eval(&cb, u, v) - u * v).abs() < 1e-15);
        }
        let cb = Checkerboard::uniform(5).unwrap();
        assert!((checkerboard_eval(&cb, 0.37, 0.81) - 0.37 * 0.81).abs() < 1e-15);
    }

    #[test]
    fn diagonal_order_two() {
        let cb = Checkerboard::diagonal(2).unwrap();
        assert!((checkerboard_eval(&cb, 0.5, 0.5) - 0.5).abs() < 1e-15);
        // cell (0,0) contributes 1/2 * (1/2) * 1, cell (1,1) nothing
        assert!((checkerboard_eval(&cb, 0.25, 0.75) - 0.25).abs() < 1e-15);
    }

    /// Direct accumulation of the uniform density over a fine sub-grid.
    fn dense_cdf(cb: &Checkerboard, u: f64, v: f64, sub: usize) -> f64 {
        let n = cb.n();
        let steps = n * sub;
        let h = 1.0 / steps as f64;
        let mut acc = 0.0;
        for a in 0..steps {
            for b in 0..steps {
                let (x, y) = ((a as f64 + 0.5) * h, (b as f64 + 0.5) * h);
                if x <= u && y <= v {
                    acc += cb.get(a / sub, b / sub) / (sub * sub) as f64;
                }
            }
        }
        acc
    }

    #[test]
    fn eval_matches_dense_accumulation() {
        let cb = Checkerboard::diagonal(2).unwrap();
        assert!((dense_cdf(&cb, 0.25, 0.75, 40) - 0.25).abs() < 1e-12);
        let cb = Checkerboard::new(
            3,
            vec![
                0.2,
                0.1,
                1.0 / 30.0,
                0.1,
                0.1,
                0.4 / 3.0,
                1.0 / 30.0,
                0.4 / 3.0,
                1.0 / 6.0,
            ],
        )
        .unwrap();
        for (u, v) in [(0.5, 0.5), (0.25, 0.75), (0.9, 0.1)] {
            let d = dense_cdf(&cb, u, v, 60);
            assert!((checkerboard_eval(&cb, u, v) - d).abs() < 1e-3, "({u},{v})");
        }
    }

    #[test]
    fn gamma_examples() {
        assert!(gamma_checkerboard_exact(&Checkerboard::uniform(1).unwrap()).abs() < 1e-15);
        let d = gamma_checkerboard_exact(&Checkerboard::diagonal(2).unwrap());
        assert!((d - 2.0 / 3.0).abs() < 1e-12);
        let a = gamma_checkerboard_exact(&Checkerboard::anti_diagonal(2).unwrap());
        assert!((a + 2.0 / 3.0).abs() < 1e-12);
        for n in [1, 3, 7] {
            let g = gamma_checkerboard_exact(&Checkerboard::uniform(n).unwrap());
            assert!(g.abs() < 1e-12, "order {n}: {g}");
        }
    }

    #[test]
    fn coefficients_match_quadrature() {
        for cb in [
            Checkerboard::diagonal(2).unwrap(),
            Checkerboard::anti_diagonal(5).unwrap(),
        ] {
            let q = gamma_quadrature(&cb, CERTIFY_PANELS).unwrap();
            assert!((q - gamma_checkerboard_exact(&cb)).abs() < 1e-8);
        }
    }

    #[test]
    fn validation() {
        assert!(Checkerboard::new(2, vec![0.5, 0.0, 0.0, 0.49]).is_err());
        assert!(Checkerboard::new(2, vec![0.6, -0.1, -0.1, 0.6]).is_err());
        assert!(Checkerboard::new(2, vec![0.5, 0.0, 0.0]).is_err());
        assert!(Checkerboard::from_json(r#"{"n":2,"mass":[0.5,0,0,0.5]}"#).is_ok());
        assert!(Checkerboard::from_json(r#"{"n":2,"mass":[0.5,0.1,0,0.5]}"#).is_err());
    }

    #[test]
    fn reflection_negates_gamma() {
        let cb = Checkerboard::new(
            3,
            vec![
                0.2,
                0.1,
                1.0 / 30.0,
                0.1,
                0.1,
                0.4 / 3.0,
                1.0 / 30.0,
                0.4 / 3.0,
                1.0 / 6.0,
            ],
        )
        .unwrap();
        let r = cb.reflect_first();
        r.validate().unwrap();
        assert!((gamma_checkerboard_exact(&cb) + gamma_checkerboard_exact(&r)).abs() < 1e-12);
        for (u, v) in [(0.3, 0.8), (0.55, 0.2)] {
            assert!((r.eval(u, v) - (v - cb.eval(1.0 - u, v))).abs() < 1e-12);
        }
    }
}
