use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use gini_core::format::fmt12;
use gini_core::lattice::LatticeFunction;
use gini_core::Result;

use crate::GridFormat;

/// Runs `write` against `path`, or stdout when `path` is `None`.
pub fn with_sink(
    path: Option<&Path>,
    write: impl FnOnce(&mut dyn Write) -> Result<()>,
) -> Result<()> {
    match path {
        Some(p) => {
            let mut w = BufWriter::new(File::create(p)?);
            write(&mut w)?;
            w.flush()?;
        }
        None => {
            let stdout = io::stdout();
            let mut w = BufWriter::new(stdout.lock());
            write(&mut w)?;
            w.flush()?;
        }
    }
    Ok(())
}

pub fn write_grid(g: &LatticeFunction, format: GridFormat, out: &mut dyn Write) -> Result<()> {
    match format {
        GridFormat::Csv => g.write_csv(out),
        GridFormat::Json => {
            let n = g.n();
            write!(out, "{{\"n\":{n},\"rows\":[")?;
            for i in 0..=n {
                for j in 0..=n {
                    let sep = if i == 0 && j == 0 { "" } else { "," };
                    write!(
                        out,
                        "{sep}[{},{},{}]",
                        fmt12(g.coord(i)),
                        fmt12(g.coord(j)),
                        fmt12(g.get(i, j))
                    )?;
                }
            }
            writeln!(out, "]}}")?;
            Ok(())
        }
    }
}

/// `u,v,r1..r5` with memberships written as 0/1.
pub fn write_regions(n: usize, rows: &[[bool; 5]], out: &mut dyn Write) -> Result<()> {
    writeln!(out, "u,v,r1,r2,r3,r4,r5")?;
    let step = |k: usize| fmt12(k as f64 / n as f64);
    for i in 0..=n {
        for j in 0..=n {
            let m = rows[i * (n + 1) + j];
            write!(out, "{},{}", step(i), step(j))?;
            for b in m {
                write!(out, ",{}", u8::from(b))?;
            }
            writeln!(out)?;
        }
    }
    Ok(())
}
