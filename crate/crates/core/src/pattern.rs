//! Grid patterns: finite lists of generations, optionally followed by a
//! rule-driven infinite tail.

use std::fmt;

use crate::cell::CellContent;
use crate::error::ParseError;
use crate::evolve::{config_at, evolve};
use crate::generation::Generation;
use crate::rule::{CrossingRule, TurningRule};

/// An infinite pattern generated from `initial`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Stream {
    pub initial: Generation,
    pub turning: TurningRule,
    pub crossing: CrossingRule,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GridPattern {
    head: Vec<Generation>,
    tail: Option<Stream>,
}

impl GridPattern {
    pub fn finite(gens: Vec<Generation>) -> Self {
        GridPattern {
            head: gens,
            tail: None,
        }
    }

    pub fn stream(initial: Generation, turning: TurningRule, crossing: CrossingRule) -> Self {
        GridPattern {
            head: Vec::new(),
            tail: Some(Stream {
                initial,
                turning,
                crossing,
            }),
        }
    }

    /// The explicitly listed generations (all of them for a finite pattern).
    pub fn head(&self) -> &[Generation] {
        &self.head
    }

    pub fn tail(&self) -> Option<&Stream> {
        self.tail.as_ref()
    }

    pub fn is_finite(&self) -> bool {
        self.tail.is_none()
    }

    /// Number of generations, or `None` if infinite.
    pub fn len(&self) -> Option<usize> {
        self.is_finite().then_some(self.head.len())
    }

    pub fn is_empty(&self) -> bool {
        self.len() == Some(0)
    }

    pub fn generations(&self) -> Box<dyn Iterator<Item = Generation> + '_> {
        let head = self.head.iter().cloned();
        match &self.tail {
            None => Box::new(head),
            Some(s) => Box::new(head.chain(evolve(s.initial.clone(), s.turning, s.crossing))),
        }
    }

    /// The first `n` generations as a finite pattern.
    pub fn take(&self, n: usize) -> GridPattern {
        GridPattern::finite(self.generations().take(n).collect())
    }

    pub fn into_generations(self) -> Vec<Generation> {
        assert!(self.is_finite(), "cannot list an infinite pattern");
        self.head
    }

    /// Checks continuity of the listed generations and the junction with the
    /// tail. The tail itself is continuous by construction.
    pub fn continuity_check(&self) -> Result<(), Violation> {
        continuity_check(&self.head)?;
        if let (Some(last), Some(s)) = (self.head.last(), &self.tail) {
            check_pair(last, &s.initial).map_err(|(cell, reason)| Violation {
                generation: self.head.len(),
                cell,
                reason,
            })?;
        }
        Ok(())
    }
}

/// `a` followed by `b`. Panics if `a` is infinite.
pub fn compose(a: &GridPattern, b: &GridPattern) -> GridPattern {
    assert!(a.is_finite(), "the first operand of compose must be finite");
    let mut head = a.head.clone();
    head.extend(b.head.iter().cloned());
    GridPattern {
        head,
        tail: b.tail.clone(),
    }
}

/// `a` composed with itself `h` times.
pub fn power(a: &GridPattern, h: usize) -> GridPattern {
    (0..h).fold(GridPattern::default(), |acc, _| compose(&acc, a))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ViolationReason {
    /// Child and parent have the same phase.
    Phase,
    /// A child slot is filled although no parent strand reaches it.
    UnexpectedStrand,
    /// A parent strand reaches a child slot that is empty.
    MissingStrand,
}

/// First place where a pattern fails to be continuous.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    /// Index of the child generation (0-based).
    pub generation: usize,
    /// Absolute position of the offending child cell's left slot.
    pub cell: i64,
    pub reason: ViolationReason,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = match self.reason {
            ViolationReason::Phase => "generation does not alternate phase",
            ViolationReason::UnexpectedStrand => "strand with no parent",
            ViolationReason::MissingStrand => "parent strand does not continue",
        };
        write!(
            f,
            "generation {}, cell @{}: {what}",
            self.generation, self.cell
        )
    }
}

/// Checks one parent/child pair, returning the offending child cell.
pub fn check_pair(parent: &Generation, child: &Generation) -> Result<(), (i64, ViolationReason)> {
    if parent.is_empty() && child.is_empty() {
        return Ok(());
    }
    if parent.phase() == child.phase() {
        return Err((child.base(), ViolationReason::Phase));
    }
    // Candidate child cells: everything a parent can feed plus the child's own run.
    let mut lo = parent.base() - 1;
    let mut hi = parent.base() + 2 * parent.width() as i64 - 1;
    if !child.is_empty() {
        lo = lo.min(child.base());
        hi = hi.max(child.cell_position(child.width() - 1));
    }
    let mut q = lo;
    while q <= hi {
        let (want_l, want_r) = config_at(parent, q).occupancy();
        let cell: CellContent = child.cell_at(q);
        let (has_l, has_r) = (cell.left().is_some(), cell.right().is_some());
        if (has_l && !want_l) || (has_r && !want_r) {
            return Err((q, ViolationReason::UnexpectedStrand));
        }
        if (want_l && !has_l) || (want_r && !has_r) {
            return Err((q, ViolationReason::MissingStrand));
        }
        q += 2;
    }
    Ok(())
}

/// Continuity of a finite list; single generations are always continuous.
pub fn continuity_check(gens: &[Generation]) -> Result<(), Violation> {
    for (i, w) in gens.windows(2).enumerate() {
        check_pair(&w[0], &w[1]).map_err(|(cell, reason)| Violation {
            generation: i + 1,
            cell,
            reason,
        })?;
    }
    Ok(())
}

/// Parses one generation per line. Blank lines and `#` comments are skipped;
/// consecutive generations must alternate phase.
pub fn parse_generations(text: &str) -> Result<Vec<Generation>, ParseError> {
    let mut out: Vec<Generation> = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        let body = line.split('#').next().unwrap_or("");
        if body.trim().is_empty() {
            continue;
        }
        let g: Generation = body.parse().map_err(|e: ParseError| {
            let col = e.column;
            e.at(line_no, col)
        })?;
        if let Some(prev) = out.last() {
            if prev.phase() == g.phase() {
                let col = line.find('@').map_or(1, |c| c + 1);
                let tok = body.split_whitespace().next().unwrap_or("");
                return Err(ParseError::new(
                    line_no,
                    col,
                    tok,
                    "generation does not alternate phase",
                ));
            }
        }
        out.push(g);
    }
    Ok(out)
}

/// One generation per line, in the format read by [`parse_generations`].
pub fn serialize_generations(gens: &[Generation]) -> String {
    gens.iter().map(|g| format!("{g}\n")).collect()
}
