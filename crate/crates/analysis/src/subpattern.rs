//! Strand-deletion subpatterns and generation slices.

use std::collections::HashMap;
use std::fmt;

use sca_core::{CellContent, Generation, GridPattern};

use crate::period::Period;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SubpatternError {
    /// `k` must lie in `1..=n`.
    OutOfRange { k: usize, strands: usize },
    /// The kept strands never return to their starting ranks.
    NoReturn,
}

impl fmt::Display for SubpatternError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SubpatternError::OutOfRange { k, strands } => {
                write!(f, "k = {k} is outside 1..={strands}")
            }
            SubpatternError::NoReturn => write!(f, "kept strands do not return to their ranks"),
        }
    }
}

impl std::error::Error for SubpatternError {}

/// Upper bound on the laps traced before giving up; strand ranks permute,
/// so the true bound is the order of that permutation.
const MAX_LAPS: usize = 720;

/// Keeps only the strands whose rank in the first generation is in `keep`,
/// following them through crossings, and returns the minimal period of what
/// remains.
pub fn strand_subpattern(p: &Period, keep: &[usize]) -> Result<Period, SubpatternError> {
    let n = p.strand_count();
    let start: Vec<i64> = p.generations()[0].strands().iter().map(|s| s.0).collect();
    // `pos[label]` is the current position of the strand that started at rank `label`.
    let mut pos = start.clone();
    let mut kept_gens = Vec::new();
    let k = p.len();
    for lap in 1..=MAX_LAPS {
        for i in 0..k {
            let g = p.generation((lap - 1) * k + i);
            let at: HashMap<i64, usize> = pos.iter().enumerate().map(|(l, &x)| (x, l)).collect();
            kept_gens.push(filter_generation(&g, |x| keep.contains(&at[&x])));
            let moves: HashMap<i64, i64> = g
                .strands()
                .into_iter()
                .map(|(x, s)| (x, s.displacement()))
                .collect();
            for x in pos.iter_mut() {
                *x += moves[x];
            }
        }
        let drift = lap as i64 * p.shift();
        let mut ranks: Vec<(i64, usize)> = pos.iter().copied().zip(0..n).collect();
        ranks.sort_unstable();
        debug_assert!(ranks.iter().zip(&start).all(|((x, _), s)| *x == s + drift));
        if keep.iter().all(|&l| keep.contains(&ranks[l].1)) {
            return Ok(Period::new(kept_gens, drift).minimal());
        }
    }
    Err(SubpatternError::NoReturn)
}

fn filter_generation(g: &Generation, keep: impl Fn(i64) -> bool) -> Generation {
    let cells = g
        .cells()
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let x = g.cell_position(i);
            let l = c.left().filter(|_| keep(x));
            let r = c.right().filter(|_| keep(x + 1));
            let orientation = match c {
                CellContent::Crossing(o) => *o,
                _ => sca_core::Orientation::Z,
            };
            CellContent::from_slots(l, r, orientation)
                .expect("removing strands keeps cells admissible")
        })
        .collect();
    Generation::new(g.base(), cells)
}

fn check_k(p: &Period, k: usize) -> Result<usize, SubpatternError> {
    let n = p.strand_count();
    if k == 0 || k > n {
        return Err(SubpatternError::OutOfRange { k, strands: n });
    }
    Ok(n)
}

/// The `k` strands lowest in the first generation.
pub fn left_subpattern(p: &Period, k: usize) -> Result<Period, SubpatternError> {
    check_k(p, k)?;
    strand_subpattern(p, &(0..k).collect::<Vec<_>>())
}

/// The `k` strands highest in the first generation.
pub fn right_subpattern(p: &Period, k: usize) -> Result<Period, SubpatternError> {
    let n = check_k(p, k)?;
    strand_subpattern(p, &(n - k..n).collect::<Vec<_>>())
}

/// Generations `i..=j` (1-based, inclusive).
pub fn slice(p: &GridPattern, i: usize, j: usize) -> Option<GridPattern> {
    if i == 0 || i > j {
        return None;
    }
    let gens: Vec<Generation> = p.generations().skip(i - 1).take(j - i + 1).collect();
    (gens.len() == j - i + 1).then(|| GridPattern::finite(gens))
}
