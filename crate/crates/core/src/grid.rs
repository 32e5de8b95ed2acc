//! Command-line syntax for grids (`1..5,1..5`) and multi-indices (`2,1`).

use crate::error::{Error, Result};
use crate::multi::MultiIndex;

/// Largest number of grid points accepted.
pub const MAX_GRID_POINTS: u64 = 1_000_000;

fn err<T>(col: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse { line: 1, col, msg: msg.into() })
}

fn number(s: &str, col: usize) -> Result<u32> {
    let t = s.trim();
    if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
        return err(col, format!("expected a nonnegative integer, found `{s}`"));
    }
    t.parse().or_else(|_| err(col, format!("`{t}` is out of range")))
}

/// Splits on commas, yielding each piece with its 1-based column.
fn pieces(s: &str) -> impl Iterator<Item = (&str, usize)> {
    let mut col = 1;
    s.split(',').map(move |p| {
        let here = col;
        col += p.len() + 1;
        (p, here)
    })
}

/// Per-axis ranges `a..b` (or single values), comma separated. With `arity`
/// given, a single range is replicated across all axes.
pub fn parse_grid(s: &str, arity: Option<usize>) -> Result<Vec<MultiIndex>> {
    let mut ranges = Vec::new();
    for (p, col) in pieces(s) {
        let (lo, hi) = match p.split_once("..") {
            Some((a, b)) => (number(a, col)?, number(b, col + a.len() + 2)?),
            None => {
                let v = number(p, col)?;
                (v, v)
            }
        };
        if lo > hi {
            return err(col, format!("empty range {lo}..{hi}"));
        }
        ranges.push((lo, hi));
    }
    if let Some(r) = arity {
        if ranges.len() == 1 && r > 1 {
            ranges = vec![ranges[0]; r];
        } else if ranges.len() != r {
            return err(1, format!("grid has {} axes, expected {r}", ranges.len()));
        }
    }
    let points = ranges
        .iter()
        .try_fold(1u64, |acc, (lo, hi)| acc.checked_mul((hi - lo) as u64 + 1))
        .filter(|&n| n <= MAX_GRID_POINTS);
    if points.is_none() {
        return err(1, format!("grid exceeds {MAX_GRID_POINTS} points"));
    }
    Ok(MultiIndex::grid(&ranges))
}

/// `n_1,...,n_r`.
pub fn parse_multi_index(s: &str) -> Result<MultiIndex> {
    pieces(s).map(|(p, col)| number(p, col)).collect::<Result<Vec<_>>>().map(MultiIndex::new)
}
