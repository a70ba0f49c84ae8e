//! Periods, period detection and speed.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use sca_core::{step, CellContent, CrossingRule, Generation, GenericRule, Symbol, TurningRule};

use crate::infer::{infer_crossing_rule, infer_turning_rule, NoRule};

/// Unreduced speed: leftward displacement over one period.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Speed {
    pub displacement: i64,
    pub period_len: usize,
}

impl Speed {
    /// The speed as a reduced fraction with a positive denominator.
    pub fn valuation(self) -> (i64, i64) {
        let den = self.period_len as i64;
        let g = gcd(self.displacement.abs(), den).max(1);
        (self.displacement / g, den / g)
    }

    pub fn signum(self) -> i64 {
        self.displacement.signum()
    }

    pub fn is_unit(self) -> bool {
        self.displacement.unsigned_abs() == self.period_len as u64
    }

    /// Compares valuations exactly.
    pub fn same_valuation(self, other: Speed) -> bool {
        self.displacement * other.period_len as i64 == other.displacement * self.period_len as i64
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl fmt::Display for Speed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.displacement, self.period_len)
    }
}

/// Why a list of generations cannot be laid out as one period.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LayoutError {
    Empty,
    /// Generation `index` is not where the strands of its predecessor go.
    Misplaced {
        index: usize,
    },
}

impl fmt::Display for LayoutError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LayoutError::Empty => write!(f, "empty period"),
            LayoutError::Misplaced { index } => {
                write!(f, "generation {index} does not follow from its predecessor")
            }
        }
    }
}

impl std::error::Error for LayoutError {}

/// Positions the strands of `g` reach in the next generation.
fn moved_positions(g: &Generation) -> Vec<i64> {
    let mut v: Vec<i64> = g
        .strands()
        .iter()
        .map(|(p, s)| p + s.displacement())
        .collect();
    v.sort_unstable();
    v
}

fn positions(g: &Generation) -> Vec<i64> {
    g.strands().iter().map(|s| s.0).collect()
}

/// Where `next` must sit (as a translation of itself) to follow `prev`.
fn follow_offset(prev: &Generation, next: &Generation) -> Option<i64> {
    let want = moved_positions(prev);
    let have = positions(next);
    if want.len() != have.len() {
        return None;
    }
    let dx = match (want.first(), have.first()) {
        (Some(a), Some(b)) => a - b,
        _ => {
            // Two strandless rows: only the phase is constrained.
            return Some(if prev.phase() == next.phase() { 1 } else { 0 });
        }
    };
    let ok = want.iter().zip(&have).all(|(a, b)| *a == b + dx)
        && prev.phase() != (next.phase() + dx).rem_euclid(2);
    ok.then_some(dx)
}

/// One period of a periodic pattern on the absolute lattice.
///
/// `gens[0]` is translated to base 0. The generation after the last one is
/// `gens[0]` moved by `shift` positions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Period {
    gens: Vec<Generation>,
    shift: i64,
}

impl Period {
    /// Panics on an empty list.
    pub fn new(gens: Vec<Generation>, shift: i64) -> Self {
        assert!(!gens.is_empty(), "a period has at least one generation");
        let dx = -gens[0].base();
        Period {
            gens: gens.iter().map(|g| g.translated(dx)).collect(),
            shift,
        }
    }

    /// Lays out absolute generations; the wrap-around placement is derived
    /// from the strand moves of the last one.
    pub fn from_generations(gens: Vec<Generation>) -> Result<Self, LayoutError> {
        let (first, last) = match (gens.first(), gens.last()) {
            (Some(f), Some(l)) => (f, l),
            _ => return Err(LayoutError::Empty),
        };
        for (i, w) in gens.windows(2).enumerate() {
            if follow_offset(&w[0], &w[1]) != Some(0) {
                return Err(LayoutError::Misplaced { index: i + 1 });
            }
        }
        let shift = follow_offset(last, first).ok_or(LayoutError::Misplaced { index: 0 })?;
        Ok(Period::new(gens, shift))
    }

    /// Lays out per-row normalized cell sequences by threading strand moves.
    pub fn from_keys(keys: &[Vec<CellContent>]) -> Result<Self, LayoutError> {
        if keys.is_empty() {
            return Err(LayoutError::Empty);
        }
        let mut gens = vec![Generation::new(0, keys[0].clone())];
        for (i, key) in keys.iter().enumerate().skip(1) {
            let raw = Generation::new(0, key.clone());
            let prev = gens.last().expect("nonempty");
            let dx = follow_offset(prev, &raw).ok_or(LayoutError::Misplaced { index: i })?;
            gens.push(raw.translated(dx));
        }
        Period::from_generations(gens)
    }

    pub fn generations(&self) -> &[Generation] {
        &self.gens
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn strand_count(&self) -> usize {
        self.gens[0].strand_count()
    }

    /// Widest generation, in cells.
    pub fn width(&self) -> usize {
        self.gens.iter().map(|g| g.width()).max().unwrap_or(0)
    }

    pub fn has_crossing(&self) -> bool {
        self.gens.iter().any(|g| g.has_crossing())
    }

    /// Leftward drift over one period.
    pub fn speed(&self) -> Speed {
        Speed {
            displacement: -self.shift,
            period_len: self.len(),
        }
    }

    /// Generation `i` of the infinite pattern, for any `i >= 0`.
    pub fn generation(&self, i: usize) -> Generation {
        let k = self.len();
        self.gens[i % k].translated((i / k) as i64 * self.shift)
    }

    /// `m` consecutive copies, each placed where the previous one leads.
    pub fn unrolled(&self, m: usize) -> Vec<Generation> {
        (0..m * self.len()).map(|i| self.generation(i)).collect()
    }

    /// Rotation starting at generation `r`.
    pub fn rotated(&self, r: usize) -> Period {
        let k = self.len();
        let gens = (r..r + k).map(|i| self.generation(i)).collect();
        Period::new(gens, self.shift)
    }

    pub fn cyclic_permutations(&self) -> Vec<Period> {
        (0..self.len()).map(|r| self.rotated(r)).collect()
    }

    /// Distinct rotations.
    pub fn shift_set(&self) -> BTreeSet<Period> {
        self.cyclic_permutations().into_iter().collect()
    }

    /// The rotation whose serialized form is least.
    pub fn canonical_rotation(&self) -> Period {
        self.cyclic_permutations()
            .into_iter()
            .min_by_key(|p| p.to_string())
            .expect("nonempty")
    }

    /// The shortest repeating block.
    pub fn minimal(&self) -> Period {
        let k = self.len();
        for l in (1..=k).filter(|l| k % l == 0) {
            let d = self
                .gens
                .get(l)
                .map_or(self.shift, |g| g.base() - self.gens[0].base());
            let repeats = (0..k - l).all(|i| self.gens[i + l] == self.gens[i].translated(d));
            if repeats && d * (k / l) as i64 == self.shift {
                return Period::new(self.gens[..l].to_vec(), d);
            }
        }
        self.clone()
    }

    /// Generic turning rule of the infinite pattern (two laps cover every
    /// transition, including the wrap).
    pub fn turning_rule(&self) -> Result<GenericRule, NoRule> {
        infer_turning_rule(&self.unrolled(2))
    }

    pub fn crossing_rule(&self) -> Result<GenericRule, NoRule> {
        infer_crossing_rule(&self.unrolled(2))
    }

    /// Mirror image; the shift changes sign.
    pub fn mirrored(&self) -> Period {
        Period::new(
            self.gens.iter().map(|g| g.mirrored()).collect(),
            -self.shift,
        )
    }
}

impl fmt::Display for Period {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        f.write_str(&parts.join(";"))
    }
}

/// Strand-`k` end index of one generation (1-based `k`): `l` gives 1, `r`
/// gives -1, straights and crossing members give 0.
pub fn end_index(g: &Generation, k: usize) -> i64 {
    let strands = g.strands();
    let (pos, sym) = strands[k - 1];
    let crossing = g
        .cell_at(pos - (pos - g.base()).rem_euclid(2))
        .is_crossing();
    if crossing {
        return 0;
    }
    -sym.displacement()
}

/// Sum of strand-1 end indices over a list of generations.
pub fn global_end_index(gens: &[Generation]) -> i64 {
    gens.iter().map(|g| end_index(g, 1)).sum()
}

/// Result of simulating until a generation repeats.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodInfo {
    pub preperiod: usize,
    pub period: Period,
    /// Generations simulated, including the repeat.
    pub observed: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NotFound {
    pub budget: usize,
}

impl fmt::Display for NotFound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "no repeated generation within {} steps", self.budget)
    }
}

impl std::error::Error for NotFound {}

/// Steps `init` up to `budget` times and returns the first cycle.
pub fn find_period(
    init: &Generation,
    t: TurningRule,
    c: CrossingRule,
    budget: usize,
) -> Result<PeriodInfo, NotFound> {
    let mut seen: HashMap<Vec<CellContent>, usize> = HashMap::new();
    let mut gens = vec![init.clone()];
    seen.insert(init.key().to_vec(), 0);
    for i in 1..=budget {
        let next = step(&gens[i - 1], t, c);
        if let Some(&d) = seen.get(next.key()) {
            let shift = next.base() - gens[d].base();
            gens.truncate(i);
            let cycle = gens.split_off(d);
            return Ok(PeriodInfo {
                preperiod: d,
                period: Period::new(cycle, shift),
                observed: i + 1,
            });
        }
        seen.insert(next.key().to_vec(), i);
        gens.push(next);
    }
    Err(NotFound { budget })
}

/// Shortest prefix `a` with `a` repeated (and drifted) equal to the list.
pub fn per_of_list(gens: &[Generation]) -> Vec<Generation> {
    let k = gens.len();
    for l in (1..k).filter(|l| k % l == 0) {
        let d = gens[l].base() - gens[0].base();
        if (0..k - l).all(|i| gens[i + l] == gens[i].translated(d)) {
            return gens[..l].to_vec();
        }
    }
    gens.to_vec()
}

/// Displacement of every strand after one period, traced through crossings.
pub fn strand_displacements(p: &Period) -> Vec<i64> {
    let n = p.strand_count();
    let mut pos: Vec<i64> = p.gens[0].strands().iter().map(|s| s.0).collect();
    let start = pos.clone();
    for g in &p.gens {
        let moves: HashMap<i64, Symbol> = g.strands().into_iter().collect();
        for x in pos.iter_mut() {
            *x += moves[x].displacement();
        }
    }
    (0..n).map(|i| start[i] - pos[i]).collect()
}
