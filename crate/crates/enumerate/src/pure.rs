//! Pure gliders, one strand at a time.
//!
//! Every pure `(n+1)`-stranded glider has a pure `n`-stranded leading
//! subpattern, so `V_{n+1}` is found by placing one more strand next to each
//! generation of each member of `V_n` and running every completion of its
//! turning rule with the zero crossing rule.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use sca_analysis::{
    is_nested_under, null_chain_any_rotation, rule_is_pure, GliderDescription, Period,
};
use sca_core::{step, CellContent, CrossingRule, Generation, TurningRule};
use serde::Serialize;

use crate::oracle::{oracle_enumerate, OracleConfig};

/// Extensions of `alpha` by one strand to the right of its last strand: a
/// straight completing a lone `[s,n]` to `[s,s]`, or a single-strand cell one
/// or two cells further right. Every result is at most three cells wider.
pub fn beta_candidates(alpha: &Generation) -> Vec<Generation> {
    use CellContent::*;
    let Some(&last) = alpha.cells().last() else {
        return Vec::new();
    };
    let mut out = Vec::new();
    if last == LeftStraight {
        let mut cells = alpha.cells().to_vec();
        *cells.last_mut().expect("nonempty") = DoubleStraight;
        out.push(Generation::new(alpha.base(), cells));
    }
    for gap in 0..2 {
        for new in [LeftStraight, RightStraight, RightTurn, LeftTurn] {
            let mut cells = alpha.cells().to_vec();
            cells.extend(std::iter::repeat(Empty).take(gap));
            cells.push(new);
            out.push(Generation::new(alpha.base(), cells));
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PureConfig {
    /// Scales the default generation budget `(8^(2+w) + 1) * p`.
    pub budget_multiplier: u64,
}

impl Default for PureConfig {
    fn default() -> Self {
        PureConfig {
            budget_multiplier: 1,
        }
    }
}

impl PureConfig {
    pub fn budget(&self, d: &GliderDescription) -> u64 {
        let w = d.width as u32;
        8u64.saturating_pow(2 + w)
            .saturating_add(1)
            .saturating_mul(d.period.len() as u64)
            .saturating_mul(self.budget_multiplier)
    }
}

/// Why extension runs were discarded.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Rejections {
    pub crossing: u64,
    /// The leading strands stopped following the shorter glider.
    pub divergence: u64,
    /// No repeated generation within the budget.
    pub budget: u64,
    pub not_glider: u64,
    pub not_nested: u64,
    pub impure: u64,
}

impl Rejections {
    fn add(&mut self, o: &Rejections) {
        self.crossing += o.crossing;
        self.divergence += o.divergence;
        self.budget += o.budget;
        self.not_glider += o.not_glider;
        self.not_nested += o.not_nested;
        self.impure += o.impure;
    }
}

/// Descriptions of pure gliders on a fixed number of strands, every shift
/// included.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VSet {
    pub strands: usize,
    pub descriptions: BTreeSet<GliderDescription>,
}

impl VSet {
    pub fn new(strands: usize, descriptions: impl IntoIterator<Item = GliderDescription>) -> Self {
        VSet {
            strands,
            descriptions: descriptions.into_iter().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.descriptions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.descriptions.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &GliderDescription> {
        self.descriptions.iter()
    }

    pub fn contains(&self, d: &GliderDescription) -> bool {
        self.descriptions.contains(d)
    }

    /// `(least rotation, turning rule)` per shift class.
    pub fn classes(&self) -> BTreeSet<(String, String)> {
        self.descriptions
            .iter()
            .map(|d| {
                (
                    d.period.canonical_rotation().to_string(),
                    d.turning.to_string(),
                )
            })
            .collect()
    }
}

/// The pure one-stranded gliders, taken from the exhaustive search.
pub fn v1() -> VSet {
    let found = oracle_enumerate(&OracleConfig::new(1, 2, 64));
    let descriptions = found
        .classes
        .into_iter()
        .filter(|c| c.speed.displacement != 0)
        .filter(|c| rule_is_pure(&c.turning, c.speed) == Ok(true))
        .filter_map(|c| GliderDescription::of(c.period).ok())
        .flat_map(|d| d.shifts());
    VSet::new(1, descriptions)
}

/// A run's recurrence structure: generations up to the first repeat.
#[derive(Debug, Clone)]
struct Orbit {
    gens: Vec<Generation>,
    pre: usize,
    shift: i64,
}

impl Orbit {
    fn compute(init: &Generation, t: TurningRule, limit: u64) -> Option<Orbit> {
        let mut seen: HashMap<Vec<CellContent>, usize> = HashMap::new();
        let mut gens = vec![init.clone()];
        seen.insert(init.key().to_vec(), 0);
        while (gens.len() as u64) <= limit {
            let next = step(gens.last().expect("nonempty"), t, CrossingRule::ZERO);
            if let Some(&pre) = seen.get(next.key()) {
                let shift = next.base() - gens[pre].base();
                return Some(Orbit { gens, pre, shift });
            }
            seen.insert(next.key().to_vec(), gens.len());
            gens.push(next);
        }
        None
    }

    fn cycle_len(&self) -> usize {
        self.gens.len() - self.pre
    }

    fn at(&self, k: usize) -> Generation {
        if k < self.pre {
            return self.gens[k].clone();
        }
        let (j, p) = (k - self.pre, self.cycle_len());
        self.gens[self.pre + j % p].translated((j / p) as i64 * self.shift)
    }
}

fn last_cell(g: &Generation) -> i64 {
    g.cell_position(g.width() - 1)
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Whether the new strand, sitting at least one empty cell right of the
/// leading strands at step `k`, drifts away and never comes back. While
/// separated the two parts evolve independently, so the answer follows from
/// the two orbits alone.
fn separates_forever(alpha: &Orbit, k: usize, b: &Generation, t: TurningRule) -> bool {
    let pos = last_cell(b);
    let lone = Generation::new(pos, vec![*b.cells().last().expect("nonempty")]);
    let Some(lone) = Orbit::compute(&lone, t, 64) else {
        return false;
    };
    let (pa, pl) = (alpha.cycle_len(), lone.cycle_len());
    let lcm = pa / gcd(pa, pl) * pl;
    let settle = lone.pre.max(alpha.pre.saturating_sub(k));
    let gap = |j: usize| last_cell(&lone.at(j)) - last_cell(&alpha.at(k + j));
    let drift = gap(settle + lcm) - gap(settle);
    drift > 0 && (0..settle + lcm).all(|j| gap(j) >= 4)
}

enum Outcome {
    Repeat(Period),
    Crossing,
    Divergence,
    Budget,
}

fn run_candidate(
    alpha: &Orbit,
    n: usize,
    beta: &Generation,
    t: TurningRule,
    budget: u64,
) -> Outcome {
    let mut seen: HashMap<Vec<CellContent>, usize> = HashMap::new();
    let mut gens: Vec<Generation> = Vec::new();
    let mut b = beta.clone();
    let mut was_isolated = false;
    for k in 0.. {
        if b.has_crossing() {
            return Outcome::Crossing;
        }
        let a = alpha.at(k);
        let strands = b.strands();
        if strands.len() != n + 1 || strands[..n] != a.strands()[..] {
            return Outcome::Divergence;
        }
        if let Some(&d) = seen.get(b.key()) {
            let shift = b.base() - gens[d].base();
            return Outcome::Repeat(Period::new(gens.split_off(d), shift));
        }
        if k as u64 >= budget {
            return Outcome::Budget;
        }
        let isolated = last_cell(&b) - last_cell(&a) >= 4;
        if isolated && !was_isolated && separates_forever(alpha, k, &b, t) {
            return Outcome::Budget;
        }
        was_isolated = isolated;
        seen.insert(b.key().to_vec(), gens.len());
        let next = step(&b, t, CrossingRule::ZERO);
        gens.push(std::mem::replace(&mut b, next));
    }
    unreachable!("the loop only exits by returning")
}

/// All descriptions reachable from one positive seed under one completion.
fn extend_one(
    seed: &GliderDescription,
    t: TurningRule,
    budget: u64,
) -> (Vec<GliderDescription>, Rejections) {
    let mut rej = Rejections::default();
    let mut out = Vec::new();
    let alpha = seed.period.generation(0);
    let n = alpha.strand_count();
    let candidates = beta_candidates(&alpha);
    let Some(orbit) = Orbit::compute(&alpha, t, budget) else {
        rej.budget += candidates.len() as u64;
        return (out, rej);
    };
    for beta in candidates {
        let h = match run_candidate(&orbit, n, &beta, t, budget) {
            Outcome::Repeat(h) => h,
            Outcome::Crossing => {
                rej.crossing += 1;
                continue;
            }
            Outcome::Divergence => {
                rej.divergence += 1;
                continue;
            }
            Outcome::Budget => {
                rej.budget += 1;
                continue;
            }
        };
        if h.speed().displacement == 0 || null_chain_any_rotation(&h).is_some() {
            rej.not_glider += 1;
            continue;
        }
        let Ok(rule) = is_nested_under(&h) else {
            rej.not_nested += 1;
            continue;
        };
        if rule_is_pure(&rule, h.speed()) != Ok(true) {
            rej.impure += 1;
            continue;
        }
        let d = GliderDescription {
            width: h.width(),
            turning: rule,
            period: h,
        };
        out.extend(d.shifts());
    }
    (out, rej)
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Extension {
    pub vset: VSet,
    pub rejected: Rejections,
}

/// `V_{n+1}` from `V_n`. Negative members are handled by extending their
/// mirror images and mirroring the results back.
pub fn extend_pure(v: &VSet, cfg: &PureConfig) -> Extension {
    // Positive seed -> (wanted as is, wanted mirrored).
    let mut seeds: BTreeMap<GliderDescription, (bool, bool)> = BTreeMap::new();
    for d in v.iter() {
        match d.period.speed().signum() {
            1 => seeds.entry(d.clone()).or_default().0 = true,
            -1 => seeds.entry(d.mirrored()).or_default().1 = true,
            _ => {}
        }
    }
    let seeds: Vec<(GliderDescription, (bool, bool))> = seeds.into_iter().collect();
    let tasks: Vec<(usize, TurningRule)> = seeds
        .iter()
        .enumerate()
        .flat_map(|(i, (d, _))| {
            d.turning
                .turning_completions()
                .into_iter()
                .map(move |t| (i, t))
        })
        .collect();
    let results: Vec<(usize, Vec<GliderDescription>, Rejections)> = tasks
        .par_iter()
        .map(|&(i, t)| {
            let seed = &seeds[i].0;
            let (found, rej) = extend_one(seed, t, cfg.budget(seed));
            (i, found, rej)
        })
        .collect();
    let mut out = BTreeSet::new();
    let mut rejected = Rejections::default();
    for (i, found, rej) in results {
        let (plain, mirrored) = seeds[i].1;
        rejected.add(&rej);
        for d in found {
            if mirrored {
                out.insert(d.mirrored());
            }
            if plain {
                out.insert(d);
            }
        }
    }
    Extension {
        vset: VSet {
            strands: v.strands + 1,
            descriptions: out,
        },
        rejected,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PureRun {
    pub vset: VSet,
    /// Summed over every extension round.
    pub rejected: Rejections,
    pub wall_time: Duration,
}

/// `V_n`, starting from the one-stranded gliders.
pub fn enumerate_pure(n: usize, cfg: &PureConfig) -> PureRun {
    assert!(n >= 1, "at least one strand");
    let start = Instant::now();
    let mut v = v1();
    let mut rejected = Rejections::default();
    for _ in 1..n {
        let ext = extend_pure(&v, cfg);
        rejected.add(&ext.rejected);
        v = ext.vset;
    }
    PureRun {
        vset: v,
        rejected,
        wall_time: start.elapsed(),
    }
}

/// Machine-readable summary of a run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PureSummary {
    pub n: usize,
    pub count: usize,
    pub rejected: Rejections,
    pub wall_time: f64,
}

impl PureRun {
    pub fn summary(&self) -> PureSummary {
        PureSummary {
            n: self.vset.strands,
            count: self.vset.len(),
            rejected: self.rejected,
            wall_time: self.wall_time.as_secs_f64(),
        }
    }
}
