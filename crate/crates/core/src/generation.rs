//! One row of cells on the absolute brick lattice.

use std::fmt;
use std::str::FromStr;

use crate::cell::{CellContent, Symbol};
use crate::error::ParseError;

/// A trimmed row of cells.
///
/// `base` is the absolute position of the left slot of the first stored
/// cell, so stored cell `i` spans positions `base + 2i` and `base + 2i + 1`.
/// Its parity is the generation's phase; consecutive generations of a
/// pattern alternate phase.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Generation {
    base: i64,
    cells: Vec<CellContent>,
}

impl Generation {
    /// Builds a generation, dropping empty cells at both ends. A row with no
    /// strands keeps `base` so that its phase survives.
    pub fn new(base: i64, cells: Vec<CellContent>) -> Self {
        let first = cells.iter().position(|c| !c.is_empty());
        let Some(first) = first else {
            return Generation {
                base,
                cells: Vec::new(),
            };
        };
        let last = cells.iter().rposition(|c| !c.is_empty()).unwrap_or(first);
        Generation {
            base: base + 2 * first as i64,
            cells: cells[first..=last].to_vec(),
        }
    }

    pub fn empty(base: i64) -> Self {
        Generation {
            base,
            cells: Vec::new(),
        }
    }

    pub fn base(&self) -> i64 {
        self.base
    }

    pub fn cells(&self) -> &[CellContent] {
        &self.cells
    }

    /// Position parity of the cell boundaries (0 or 1).
    pub fn phase(&self) -> i64 {
        self.base.rem_euclid(2)
    }

    /// Number of stored cells; 0 for a strandless row.
    pub fn width(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// The cell sequence with its absolute placement forgotten.
    pub fn key(&self) -> &[CellContent] {
        &self.cells
    }

    /// Cell whose left slot sits at `pos`. Positions off this generation's
    /// phase, or outside the stored run, read as empty.
    pub fn cell_at(&self, pos: i64) -> CellContent {
        let off = pos - self.base;
        if off < 0 || off % 2 != 0 {
            return CellContent::Empty;
        }
        self.cells
            .get((off / 2) as usize)
            .copied()
            .unwrap_or_default()
    }

    /// Left-slot position of stored cell `i`.
    pub fn cell_position(&self, i: usize) -> i64 {
        self.base + 2 * i as i64
    }

    /// Every strand as (position, symbol), ordered by position.
    pub fn strands(&self) -> Vec<(i64, Symbol)> {
        let mut out = Vec::with_capacity(self.cells.len() + 1);
        for (i, c) in self.cells.iter().enumerate() {
            let p = self.cell_position(i);
            if let Some(s) = c.left() {
                out.push((p, s));
            }
            if let Some(s) = c.right() {
                out.push((p + 1, s));
            }
        }
        out
    }

    pub fn strand_count(&self) -> usize {
        self.cells.iter().map(|c| c.strand_count()).sum()
    }

    pub fn leftmost_strand(&self) -> Option<i64> {
        self.strands().first().map(|s| s.0)
    }

    pub fn rightmost_strand(&self) -> Option<i64> {
        self.strands().last().map(|s| s.0)
    }

    pub fn has_crossing(&self) -> bool {
        self.cells.iter().any(|c| c.is_crossing())
    }

    /// The same row moved `dx` positions to the right.
    pub fn translated(&self, dx: i64) -> Generation {
        Generation {
            base: self.base + dx,
            cells: self.cells.clone(),
        }
    }

    /// Reflection through position 0 (position `p` goes to `-p`).
    pub fn mirrored(&self) -> Generation {
        if self.cells.is_empty() {
            return Generation::empty(-self.base - 1);
        }
        let last = self.base + 2 * self.cells.len() as i64 - 1;
        Generation {
            base: -last,
            cells: self.cells.iter().rev().map(|c| c.mirrored()).collect(),
        }
    }

    /// Builds a row from (position, symbol) pairs. Fails if two strands share
    /// a position or a cell would be one of the forbidden mixed forms.
    pub fn from_strands(phase: i64, strands: &[(i64, Symbol)]) -> Option<Generation> {
        use crate::cell::Orientation;
        if strands.is_empty() {
            return Some(Generation::empty(phase.rem_euclid(2)));
        }
        let cell_of = |p: i64| p - (p - phase).rem_euclid(2);
        let lo = strands.iter().map(|s| cell_of(s.0)).min()?;
        let hi = strands.iter().map(|s| cell_of(s.0)).max()?;
        let m = ((hi - lo) / 2 + 1) as usize;
        let mut slots: Vec<[Option<Symbol>; 2]> = vec![[None, None]; m];
        for &(p, s) in strands {
            let c = cell_of(p);
            let slot = &mut slots[((c - lo) / 2) as usize][(p - c) as usize];
            if slot.is_some() {
                return None;
            }
            *slot = Some(s);
        }
        let cells = slots
            .into_iter()
            .map(|[l, r]| CellContent::from_slots(l, r, Orientation::Z))
            .collect::<Option<Vec<_>>>()?;
        Some(Generation::new(lo, cells))
    }
}

impl fmt::Display for Generation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "@{}", self.base)?;
        for c in &self.cells {
            write!(f, " {c}")?;
        }
        Ok(())
    }
}

impl FromStr for Generation {
    type Err = ParseError;

    /// Parses `@<base> tok tok ...`. Columns in errors are 1-based; the line
    /// is left as 0 for the caller to fill in.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut parts = token_spans(s);
        let Some((col, head)) = parts.next() else {
            return Err(ParseError::new(0, 1, "", "expected `@<base>`"));
        };
        let base = head
            .strip_prefix('@')
            .and_then(|b| b.parse::<i64>().ok())
            .ok_or_else(|| ParseError::new(0, col, head, "expected `@<base>`"))?;
        let cells = parts
            .map(|(col, tok)| tok.parse::<CellContent>().map_err(|e| e.at(0, col)))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Generation::new(base, cells))
    }
}

fn token_spans(s: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut rest = s;
    let mut offset = 0;
    std::iter::from_fn(move || {
        let skip = rest.len() - rest.trim_start().len();
        offset += skip;
        rest = &rest[skip..];
        if rest.is_empty() {
            return None;
        }
        let end = rest.find(char::is_whitespace).unwrap_or(rest.len());
        let tok = &rest[..end];
        let col = offset + 1;
        offset += end;
        rest = &rest[end..];
        Some((col, tok))
    })
}
