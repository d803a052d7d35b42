//! Gini's rank association coefficient for a sample of rank pairs.

use std::io::BufRead;

use crate::error::{domain, Error, Result};

/// `n` pairs of ranks `(R_i, S_i)`; each coordinate is a permutation of `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankSample {
    pairs: Vec<(usize, usize)>,
}

impl RankSample {
    pub fn new(pairs: Vec<(usize, usize)>) -> Result<Self> {
        let n = pairs.len();
        if n == 0 {
            return Err(domain("rank sample is empty"));
        }
        let mut problems = Vec::new();
        for (name, col) in [("R", 0usize), ("S", 1)] {
            let mut seen = vec![0usize; n + 1];
            let mut out_of_range = Vec::new();
            for p in &pairs {
                let r = if col == 0 { p.0 } else { p.1 };
                if (1..=n).contains(&r) {
                    seen[r] += 1;
                } else {
                    out_of_range.push(r);
                }
            }
            let dup: Vec<usize> = (1..=n).filter(|&r| seen[r] > 1).collect();
            let missing: Vec<usize> = (1..=n).filter(|&r| seen[r] == 0).collect();
            if !dup.is_empty() {
                problems.push(format!("{name} duplicates {dup:?}"));
            }
            if !missing.is_empty() {
                problems.push(format!("{name} missing {missing:?}"));
            }
            if !out_of_range.is_empty() {
                problems.push(format!("{name} out of range {out_of_range:?}"));
            }
        }
        if !problems.is_empty() {
            return Err(domain(format!(
                "ranks are not permutations of 1..={n}: {}",
                problems.join("; ")
            )));
        }
        Ok(Self { pairs })
    }

    /// Ranks the observations of a sample without ties.
    pub fn from_observations(xy: &[(f64, f64)]) -> Result<Self> {
        let ranks = |key: &dyn Fn(&(f64, f64)) -> f64| -> Result<Vec<usize>> {
            let mut idx: Vec<usize> = (0..xy.len()).collect();
            idx.sort_by(|&a, &b| key(&xy[a]).total_cmp(&key(&xy[b])));
            if idx.windows(2).any(|w| key(&xy[w[0]]) == key(&xy[w[1]])) {
                return Err(domain("sample contains ties"));
            }
            let mut r = vec![0; xy.len()];
            for (pos, &i) in idx.iter().enumerate() {
                r[i] = pos + 1;
            }
            Ok(r)
        };
        let r = ranks(&|p| p.0)?;
        let s = ranks(&|p| p.1)?;
        Self::new(r.into_iter().zip(s).collect())
    }

    pub fn n(&self) -> usize {
        self.pairs.len()
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Reads a CSV with header `r,s` and one rank pair per line.
    pub fn read_csv<R: BufRead>(input: R) -> Result<Self> {
        let mut lines = input.lines();
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty rank file".into()))??;
        if header.trim() != "r,s" {
            return Err(Error::Parse(format!("unexpected header {header:?}")));
        }
        let mut pairs = Vec::new();
        for (k, line) in lines.enumerate() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let (r, s) = line
                .split_once(',')
                .ok_or_else(|| Error::Parse(format!("line {}: expected `r,s`", k + 2)))?;
            let parse = |x: &str| {
                x.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("line {}: {e}", k + 2)))
            };
            pairs.push((parse(r)?, parse(s)?));
        }
        Self::new(pairs)
    }
}

/// `γₙ = Σ (|n+1-R_i-S_i| - |R_i-S_i|) / ⌊n²/2⌋`.
pub fn gamma_rank_statistic(s: &RankSample) -> f64 {
    let n = s.n() as i64;
    let sum: i64 = s
        .pairs
        .iter()
        .map(|&(r, q)| {
            let (r, q) = (r as i64, q as i64);
            (n + 1 - r - q).abs() - (r - q).abs()
        })
        .sum();
    if n == 1 {
        // ⌊1/2⌋ = 0 and the numerator is 0 as well
        return 0.0;
    }
    sum as f64 / (n * n / 2) as f64
}
