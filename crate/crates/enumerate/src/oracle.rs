//! Exhaustive search over small initial generations and all rules.
//!
//! Rule bits are fixed lazily: a run only branches on a bit the first time a
//! step needs it, which visits every concrete (turning, crossing) pair's
//! trajectory while sharing common prefixes.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use sca_analysis::{null_chain_any_rotation, Period, Speed};
use sca_core::evolve::{child_positions, config_at, crossing_bit_at, rule_bit_at};
use sca_core::{CellContent, Generation, GenericRule, Orientation, RuleKind, Symbol, Trit};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleConfig {
    pub strands: usize,
    pub max_width: usize,
    /// Steps simulated before a run is abandoned.
    pub budget: usize,
    pub turning_filter: GenericRule,
    pub crossing_filter: GenericRule,
    /// Restricts the initial generations searched; `None` means all.
    pub initial: Option<Vec<Generation>>,
}

impl OracleConfig {
    pub fn new(strands: usize, max_width: usize, budget: usize) -> Self {
        assert!(strands >= 1 && max_width >= 1 && budget >= 1);
        OracleConfig {
            strands,
            max_width,
            budget,
            turning_filter: GenericRule::unconstrained(RuleKind::Turning),
            crossing_filter: GenericRule::unconstrained(RuleKind::Crossing),
            initial: None,
        }
    }
}

/// One shift class of repeating patterns.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct OracleClass {
    /// Least rotation by serialized form.
    pub period: Period,
    pub turning: GenericRule,
    pub crossing: GenericRule,
    pub speed: Speed,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct OracleStats {
    pub initial_generations: usize,
    /// Distinct (initial, partial rule) runs that ended.
    pub runs: usize,
    pub budget_exhausted: usize,
    pub null_chain: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct OracleResult {
    pub classes: Vec<OracleClass>,
    pub stats: OracleStats,
}

/// All trimmed generations at base 0 with `n` strands and at most `w` cells.
pub fn initial_generations(n: usize, w: usize) -> Vec<Generation> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(n: usize, w: usize, cur: &mut Vec<CellContent>, out: &mut Vec<Generation>) {
        let used: usize = cur.iter().map(|c| c.strand_count()).sum();
        if used == n && cur.last().is_some_and(|c| !c.is_empty()) {
            out.push(Generation::new(0, cur.clone()));
        }
        if cur.len() == w || used >= n {
            return;
        }
        for c in CellContent::ALL {
            if cur.is_empty() && c.is_empty() {
                continue;
            }
            if used + c.strand_count() > n {
                continue;
            }
            cur.push(c);
            rec(n, w, cur, out);
            cur.pop();
        }
    }
    rec(n, w, &mut cur, &mut out);
    out
}

/// A rule bit a step needs but the partial rules leave open.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Need {
    Turning(usize),
    Crossing(usize),
}

/// `step` under partially determined rules.
pub fn step_partial(g: &Generation, t: &GenericRule, c: &GenericRule) -> Result<Generation, Need> {
    if g.is_empty() {
        return Ok(Generation::empty(g.base() + 1));
    }
    let mut cells = Vec::with_capacity(g.width() + 1);
    for q in child_positions(g) {
        let (has_l, has_r) = config_at(g, q).occupancy();
        if !(has_l || has_r) {
            cells.push(CellContent::Empty);
            continue;
        }
        let bit = rule_bit_at(g, q);
        let turn = match t.get(bit) {
            Trit::Any => return Err(Need::Turning(bit)),
            tr => tr == Trit::One,
        };
        let cell = if !turn {
            CellContent::from_slots(
                has_l.then_some(Symbol::Straight),
                has_r.then_some(Symbol::Straight),
                Orientation::Z,
            )
        } else if has_l && has_r {
            let bit = crossing_bit_at(g, q);
            match c.get(bit) {
                Trit::Any => return Err(Need::Crossing(bit)),
                tr => Some(CellContent::Crossing(Orientation::from_bit(
                    tr == Trit::One,
                ))),
            }
        } else {
            CellContent::from_slots(
                has_l.then_some(Symbol::Right),
                has_r.then_some(Symbol::Left),
                Orientation::Z,
            )
        };
        cells.push(cell.expect("admissible"));
    }
    Ok(Generation::new(g.base() - 1, cells))
}

/// Outcome of one fully explored run.
#[derive(Debug, Clone)]
pub enum RunEnd {
    Cycle {
        period: Period,
        turning: GenericRule,
        crossing: GenericRule,
    },
    Budget,
}

/// Explores every rule completion from `init`, calling `emit` once per run.
pub fn explore(
    init: &Generation,
    t: GenericRule,
    c: GenericRule,
    budget: usize,
    emit: &mut dyn FnMut(RunEnd),
) {
    let mut seen = HashMap::new();
    seen.insert(init.key().to_vec(), 0usize);
    explore_from(vec![init.clone()], seen, t, c, budget, emit);
}

fn explore_from(
    mut gens: Vec<Generation>,
    mut seen: HashMap<Vec<CellContent>, usize>,
    mut t: GenericRule,
    mut c: GenericRule,
    budget: usize,
    emit: &mut dyn FnMut(RunEnd),
) {
    loop {
        if gens.len() > budget {
            emit(RunEnd::Budget);
            return;
        }
        let last = gens.last().expect("nonempty");
        match step_partial(last, &t, &c) {
            Ok(next) => {
                if let Some(&d) = seen.get(next.key()) {
                    let shift = next.base() - gens[d].base();
                    let period = Period::new(gens.split_off(d), shift);
                    emit(RunEnd::Cycle {
                        period,
                        turning: t,
                        crossing: c,
                    });
                    return;
                }
                seen.insert(next.key().to_vec(), gens.len());
                gens.push(next);
            }
            Err(need) => {
                let fix = |value: bool, t: &GenericRule, c: &GenericRule| match need {
                    Need::Turning(b) => t.with_bit(b, value).ok().map(|t| (t, *c)),
                    Need::Crossing(b) => c.with_bit(b, value).ok().map(|c| (*t, c)),
                };
                if let Some((t1, c1)) = fix(true, &t, &c) {
                    explore_from(gens.clone(), seen.clone(), t1, c1, budget, emit);
                }
                match fix(false, &t, &c) {
                    Some((t0, c0)) => {
                        t = t0;
                        c = c0;
                    }
                    None => return,
                }
            }
        }
    }
}

/// Repeating patterns (cycles with no null chain in any rotation), one per
/// shift class, in canonical order. Results do not depend on the thread pool.
pub fn oracle_enumerate(cfg: &OracleConfig) -> OracleResult {
    let inits = cfg
        .initial
        .clone()
        .unwrap_or_else(|| initial_generations(cfg.strands, cfg.max_width));
    let per_init: Vec<(BTreeMap<String, OracleClass>, OracleStats)> = inits
        .par_iter()
        .map(|init| {
            let mut classes = BTreeMap::new();
            let mut stats = OracleStats::default();
            let mut emit = |end: RunEnd| {
                stats.runs += 1;
                match end {
                    RunEnd::Budget => stats.budget_exhausted += 1,
                    RunEnd::Cycle { period, .. } => {
                        let canon = period.canonical_rotation();
                        let key = canon.to_string();
                        if classes.contains_key(&key) {
                            return;
                        }
                        if null_chain_any_rotation(&canon).is_some() {
                            stats.null_chain += 1;
                            return;
                        }
                        if let Some(class) = classify_period(canon) {
                            classes.insert(key, class);
                        }
                    }
                }
            };
            explore(
                init,
                cfg.turning_filter,
                cfg.crossing_filter,
                cfg.budget,
                &mut emit,
            );
            (classes, stats)
        })
        .collect();
    let mut merged = BTreeMap::new();
    let mut stats = OracleStats {
        initial_generations: inits.len(),
        ..Default::default()
    };
    for (classes, s) in per_init {
        stats.runs += s.runs;
        stats.budget_exhausted += s.budget_exhausted;
        stats.null_chain += s.null_chain;
        merged.extend(classes);
    }
    OracleResult {
        classes: merged.into_values().collect(),
        stats,
    }
}

fn classify_period(period: Period) -> Option<OracleClass> {
    let turning = period.turning_rule().ok()?;
    let crossing = period.crossing_rule().ok()?;
    let speed = period.speed();
    Some(OracleClass {
        period,
        turning,
        crossing,
        speed,
    })
}
