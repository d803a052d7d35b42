//! Uniform-lattice samples of a bivariate function and the grid checks for
//! the copula and quasi-copula axioms.
//!
//! A [`LatticeFunction`] stores node values `f(i/N, j/N)`. The checks work on
//! those nodes only: boundary conditions on the edge nodes, forward
//! differences for monotonicity, single-step moves for the Lipschitz bound
//! and single-cell volumes for 2-increasingness. Cell volumes exactly
//! characterize 2-increasingness of the bilinear interpolant, since larger
//! lattice rectangles are sums of cells.

use std::io::{BufRead, Write};

use rayon::prelude::*;
use serde::Serialize;

use crate::copula::Bivariate;
use crate::error::{domain, Error, Result};
use crate::format::fmt12;

/// Values of a bivariate function on the `(N+1) x (N+1)` uniform lattice.
#[derive(Debug, Clone, PartialEq)]
pub struct LatticeFunction {
    n: usize,
    /// Row-major, `values[i * (n + 1) + j] = f(i/N, j/N)`.
    values: Vec<f64>,
}

impl LatticeFunction {
    pub fn from_values(n: usize, values: Vec<f64>) -> Result<Self> {
        if n == 0 {
            return Err(domain("lattice needs at least one cell per axis"));
        }
        if values.len() != (n + 1) * (n + 1) {
            return Err(domain(format!(
                "expected {} lattice values for N = {n}, got {}",
                (n + 1) * (n + 1),
                values.len()
            )));
        }
        Ok(Self { n, values })
    }

    /// Samples `f` at every lattice node. Rows are evaluated in parallel.
    pub fn sample<F: Bivariate + Sync + ?Sized>(f: &F, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(domain("lattice needs at least one cell per axis"));
        }
        let side = n + 1;
        let mut values = vec![0.0; side * side];
        values
            .par_chunks_mut(side)
            .enumerate()
            .for_each(|(i, row)| {
                let u = node(i, n);
                for (j, slot) in row.iter_mut().enumerate() {
                    *slot = f.eval(u, node(j, n));
                }
            });
        Ok(Self { n, values })
    }

    /// Cells per axis.
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.values[i * (self.n + 1) + j]
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Coordinate of node `k`.
    pub fn coord(&self, k: usize) -> f64 {
        node(k, self.n)
    }

    /// Volume of cell `[i/N, (i+1)/N] x [j/N, (j+1)/N]`.
    #[inline]
    pub fn cell_volume(&self, i: usize, j: usize) -> f64 {
        self.get(i + 1, j + 1) - self.get(i + 1, j) - self.get(i, j + 1) + self.get(i, j)
    }

    /// Writes `u,v,value` rows in row-major order, 12 significant digits.
    pub fn write_csv<W: Write>(&self, mut out: W) -> Result<()> {
        writeln!(out, "u,v,value")?;
        let side = self.n + 1;
        for i in 0..side {
            let u = fmt12(self.coord(i));
            for j in 0..side {
                writeln!(
                    out,
                    "{},{},{}",
                    u,
                    fmt12(self.coord(j)),
                    fmt12(self.get(i, j))
                )?;
            }
        }
        Ok(())
    }

    /// Reads the format produced by [`write_csv`](Self::write_csv). The
    /// lattice size is inferred from the row count and the coordinates are
    /// checked against it.
    pub fn read_csv<R: BufRead>(input: R) -> Result<Self> {
        let mut lines = input.lines();
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty lattice file".into()))??;
        if header.trim() != "u,v,value" {
            return Err(Error::Parse(format!("unexpected header {header:?}")));
        }
        let mut rows = Vec::new();
        for (k, line) in lines.enumerate() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let mut it = line.split(',').map(|s| s.trim().parse::<f64>());
            let mut next = || -> Result<f64> {
                it.next()
                    .ok_or_else(|| Error::Parse(format!("line {}: too few fields", k + 2)))?
                    .map_err(|e| Error::Parse(format!("line {}: {e}", k + 2)))
            };
            rows.push((next()?, next()?, next()?));
        }
        let side = (rows.len() as f64).sqrt().round() as usize;
        if side < 2 || side * side != rows.len() {
            return Err(Error::Parse(format!(
                "{} rows is not a square lattice",
                rows.len()
            )));
        }
        let n = side - 1;
        let tol = 1e-10;
        for (k, &(u, v, _)) in rows.iter().enumerate() {
            let (i, j) = (k / side, k % side);
            if (u - node(i, n)).abs() > tol || (v - node(j, n)).abs() > tol {
                return Err(Error::Parse(format!(
                    "row {}: ({u}, {v}) is not lattice node ({i}, {j}) of N = {n}",
                    k + 1
                )));
            }
        }
        Self::from_values(n, rows.into_iter().map(|r| r.2).collect())
    }
}

#[inline]
fn node(k: usize, n: usize) -> f64 {
    k as f64 / n as f64
}

/// Result of [`check_properties`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PropertyReport {
    /// Largest deviation from `f(x,0) = f(0,x) = 0`, `f(x,1) = f(1,x) = x`.
    pub boundary_max_err: f64,
    /// Most negative forward difference along either axis.
    pub monotonicity_min_step: f64,
    /// Largest `|Δf| - Δu - Δv` over single lattice steps; positive values
    /// violate the Lipschitz condition.
    pub lipschitz_max_excess: f64,
    pub min_volume: f64,
    /// `[i1, i2, j1, j2]`: lattice indices of the cell with the smallest
    /// volume.
    pub min_volume_rect: [usize; 4],
    pub is_quasicopula: bool,
    pub is_copula: bool,
}

#[derive(Debug, Clone, Copy)]
struct Partial {
    mono: f64,
    lip: f64,
    vol: f64,
    cell: (usize, usize),
}

impl Partial {
    fn identity() -> Self {
        Self {
            mono: f64::INFINITY,
            lip: f64::NEG_INFINITY,
            vol: f64::INFINITY,
            cell: (0, 0),
        }
    }

    fn merge(self, o: Self) -> Self {
        // ties go to the lexicographically smaller cell so the reduction
        // does not depend on how rayon splits the rows
        let take_other = o.vol < self.vol || (o.vol == self.vol && o.cell < self.cell);
        Self {
            mono: self.mono.min(o.mono),
            lip: self.lip.max(o.lip),
            vol: if take_other { o.vol } else { self.vol },
            cell: if take_other { o.cell } else { self.cell },
        }
    }
}

/// Grid check of the copula / quasi-copula axioms.
///
/// `is_quasicopula` requires boundary error, negative steps and Lipschitz
/// excess all within `tol`; `is_copula` additionally needs every cell volume
/// to be at least `-tol`.
pub fn check_properties(g: &LatticeFunction, tol: f64) -> PropertyReport {
    let n = g.n;
    let h = 1.0 / n as f64;

    let mut boundary = 0.0f64;
    for k in 0..=n {
        let x = g.coord(k);
        boundary = boundary
            .max(g.get(k, 0).abs())
            .max(g.get(0, k).abs())
            .max((g.get(k, n) - x).abs())
            .max((g.get(n, k) - x).abs());
    }

    let acc = (0..=n)
        .into_par_iter()
        .map(|i| {
            let mut p = Partial::identity();
            for j in 0..=n {
                let here = g.get(i, j);
                if i < n {
                    let d = g.get(i + 1, j) - here;
                    p.mono = p.mono.min(d);
                    p.lip = p.lip.max(d.abs() - h);
                }
                if j < n {
                    let d = g.get(i, j + 1) - here;
                    p.mono = p.mono.min(d);
                    p.lip = p.lip.max(d.abs() - h);
                }
                if i < n && j < n {
                    let vol = g.cell_volume(i, j);
                    if vol < p.vol {
                        p.vol = vol;
                        p.cell = (i, j);
                    }
                }
            }
            p
        })
        .reduce(Partial::identity, Partial::merge);

    let is_quasicopula = boundary <= tol && acc.mono >= -tol && acc.lip <= tol;
    let is_copula = is_quasicopula && acc.vol >= -tol;
    let (ci, cj) = acc.cell;
    PropertyReport {
        boundary_max_err: boundary,
        monotonicity_min_step: acc.mono,
        lipschitz_max_excess: acc.lip,
        min_volume: acc.vol,
        min_volume_rect: [ci, ci + 1, cj, cj + 1],
        is_quasicopula,
        is_copula,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::copula::{Builtin, FnBivariate};

    #[test]
    fn upper_frechet_is_a_copula() {
        let g = LatticeFunction::sample(&Builtin::M, 100).unwrap();
        let r = check_properties(&g, 1e-12);
        assert!(r.is_copula && r.is_quasicopula);
        assert!(r.min_volume >= 0.0);
        assert!(r.boundary_max_err == 0.0);
    }

    #[test]
    fn hand_built_w_matches_sampled_w() {
        let n = 50;
        let vals = (0..=n)
            .flat_map(|i| (0..=n).map(move |j| ((i + j) as f64 / n as f64 - 1.0).max(0.0)))
            .collect();
        let hand = LatticeFunction::from_values(n, vals).unwrap();
        let sampled = LatticeFunction::sample(&Builtin::W, n).unwrap();
        let a = check_properties(&hand, 1e-12);
        let b = check_properties(&sampled, 1e-12);
        assert!(a.is_copula);
        assert_eq!(a.is_copula, b.is_copula);
        assert!((a.min_volume - b.min_volume).abs() < 1e-15);
    }

    fn from_masses(mass: &[[f64; 3]; 3]) -> LatticeFunction {
        let mut vals = vec![0.0; 16];
        for i in 1..=3 {
            for j in 1..=3 {
                vals[i * 4 + j] = vals[(i - 1) * 4 + j] + vals[i * 4 + j - 1]
                    - vals[(i - 1) * 4 + j - 1]
                    + mass[i - 1][j - 1];
            }
        }
        LatticeFunction::from_values(3, vals).unwrap()
    }

    #[test]
    fn detects_boundary_violation() {
        let g = LatticeFunction::sample(&FnBivariate(|u: f64, v: f64| u * v + 0.01), 10).unwrap();
        let r = check_properties(&g, 1e-9);
        assert!((r.boundary_max_err - 0.01).abs() < 1e-12);
        assert!(!r.is_quasicopula && !r.is_copula);
    }

    #[test]
    fn signed_mass_gives_proper_quasicopula() {
        let third = 1.0 / 3.0;
        let g = from_masses(&[[0.0, third, 0.0], [third, -third, third], [0.0, third, 0.0]]);
        let r = check_properties(&g, 1e-12);
        assert!(r.is_quasicopula);
        assert!(!r.is_copula);
        assert!((r.min_volume + third).abs() < 1e-15);
        assert_eq!(r.min_volume_rect, [1, 2, 1, 2]);
    }

    #[test]
    fn detects_lipschitz_violation() {
        // N = 2 with the centre node lifted above what one step allows
        let vals = vec![0.0, 0.0, 0.0, 0.0, 0.6, 0.5, 0.0, 0.5, 1.0];
        let g = LatticeFunction::from_values(2, vals).unwrap();
        let r = check_properties(&g, 1e-12);
        assert!((r.lipschitz_max_excess - 0.1).abs() < 1e-12);
        assert!(r.monotonicity_min_step < 0.0);
        assert!(!r.is_quasicopula);
    }

    #[test]
    fn csv_round_trip_preserves_lattice() {
        let g = LatticeFunction::sample(&Builtin::Pi, 7).unwrap();
        let mut buf = Vec::new();
        g.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.starts_with("u,v,value\n0,0,0\n"));
        assert_eq!(text.lines().count(), 1 + 64);
        let back = LatticeFunction::read_csv(&buf[..]).unwrap();
        assert_eq!(back.n(), 7);
        for (a, b) in g.values().iter().zip(back.values()) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn csv_rejects_malformed() {
        assert!(LatticeFunction::read_csv(&b"x,y\n"[..]).is_err());
        assert!(LatticeFunction::read_csv(&b"u,v,value\n0,0,0\n0,1,0\n1,0,0\n"[..]).is_err());
        let shuffled = b"u,v,value\n0,0,0\n1,0,0\n0,1,0\n1,1,1\n";
        assert!(LatticeFunction::read_csv(&shuffled[..]).is_err());
    }
}
