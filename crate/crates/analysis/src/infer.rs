//! Recovering generic turning and crossing rules from observed generations.

use std::collections::BTreeSet;
use std::fmt;

use sca_core::evolve::{config_at, crossing_bit_at, rule_bit_at};
use sca_core::pattern::{check_pair, Violation};
use sca_core::{bit_name, CellContent, Class, Generation, GenericRule, RuleKind, Trit};

/// Why no generic rule fits a pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NoRule {
    /// Some parent strand fails to continue, or a child strand has no parent.
    Discontinuous(Violation),
    /// The listed bits were observed both as 0 and as 1.
    Conflict { bits: Vec<usize> },
}

impl fmt::Display for NoRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NoRule::Discontinuous(v) => write!(f, "discontinuous: {v}"),
            NoRule::Conflict { bits } => {
                let names: Vec<String> = bits
                    .iter()
                    .map(|&b| format!("{b} ({})", bit_name(b)))
                    .collect();
                write!(f, "conflict at bits {}", names.join(", "))
            }
        }
    }
}

impl std::error::Error for NoRule {}

/// Child classes observed for each turning-rule bit.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Evidence {
    pub sets: [BTreeSet<Class>; 9],
}

impl Evidence {
    fn conflicts(&self) -> Vec<usize> {
        (0..9)
            .filter(|&i| self.sets[i].contains(&Class::S) && self.sets[i].contains(&Class::T))
            .collect()
    }
}

/// Child positions a parent can feed, joined with the child's own run.
fn scan_range(parent: &Generation, child: &Generation) -> impl Iterator<Item = i64> {
    let mut lo = parent.base() - 1;
    let mut hi = parent.base() + 2 * parent.width() as i64 - 1;
    if !child.is_empty() {
        lo = lo.min(child.base());
        hi = hi.max(child.cell_position(child.width() - 1));
    }
    (0..=((hi - lo) / 2)).map(move |i| lo + 2 * i)
}

fn continuity(gens: &[Generation]) -> Result<(), NoRule> {
    for (i, w) in gens.windows(2).enumerate() {
        check_pair(&w[0], &w[1]).map_err(|(cell, reason)| {
            NoRule::Discontinuous(Violation {
                generation: i + 1,
                cell,
                reason,
            })
        })?;
    }
    Ok(())
}

/// The per-bit class sets. `E` lands only in set 4, from empty children of
/// empty configurations.
pub fn turning_evidence(gens: &[Generation]) -> Result<Evidence, NoRule> {
    continuity(gens)?;
    let mut ev = Evidence::default();
    for w in gens.windows(2) {
        let (parent, child) = (&w[0], &w[1]);
        for q in scan_range(parent, child) {
            let (has_l, has_r) = config_at(parent, q).occupancy();
            let bit = rule_bit_at(parent, q);
            if has_l || has_r {
                ev.sets[bit].insert(child.cell_at(q).class());
            } else if bit == 4 {
                ev.sets[4].insert(Class::E);
            }
        }
    }
    Ok(ev)
}

/// Generic turning rule of a finite list of generations.
pub fn infer_turning_rule(gens: &[Generation]) -> Result<GenericRule, NoRule> {
    let ev = turning_evidence(gens)?;
    let bits = ev.conflicts();
    if !bits.is_empty() {
        return Err(NoRule::Conflict { bits });
    }
    let mut trits = [Trit::Any; 9];
    for (i, set) in ev.sets.iter().enumerate() {
        if set.contains(&Class::T) {
            trits[i] = Trit::One;
        } else if set.contains(&Class::S) {
            trits[i] = Trit::Zero;
        }
    }
    trits[4] = Trit::Zero;
    Ok(GenericRule::new(RuleKind::Turning, trits).expect("bit 4 is 0"))
}

/// Generic crossing rule: each crossing fixes the bit addressed by the cells
/// beside its parents (Z = 1, S = 0).
pub fn infer_crossing_rule(gens: &[Generation]) -> Result<GenericRule, NoRule> {
    continuity(gens)?;
    let mut seen: [BTreeSet<bool>; 9] = Default::default();
    for w in gens.windows(2) {
        let (parent, child) = (&w[0], &w[1]);
        for (i, cell) in child.cells().iter().enumerate() {
            if let CellContent::Crossing(o) = cell {
                let q = child.cell_position(i);
                seen[crossing_bit_at(parent, q)].insert(o.bit());
            }
        }
    }
    let bits: Vec<usize> = (0..9).filter(|&i| seen[i].len() == 2).collect();
    if !bits.is_empty() {
        return Err(NoRule::Conflict { bits });
    }
    let mut trits = [Trit::Any; 9];
    for (i, s) in seen.iter().enumerate() {
        if let Some(&b) = s.iter().next() {
            trits[i] = Trit::from_bool(b);
        }
    }
    Ok(GenericRule::new(RuleKind::Crossing, trits).expect("crossing rules have no fixed bit"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gens(lines: &[&str]) -> Vec<Generation> {
        lines.iter().map(|l| l.parse().unwrap()).collect()
    }

    #[test]
    fn worked_example() {
        let p = gens(&["@0 -s -l", "@1 rl", "@0 -s s-"]);
        assert_eq!(infer_turning_rule(&p).unwrap().to_string(), "XX1X00X0X");
        let ev = turning_evidence(&p).unwrap();
        assert_eq!(ev.sets[2], BTreeSet::from([Class::T]));
        assert_eq!(ev.sets[5], BTreeSet::from([Class::S]));
        assert_eq!(ev.sets[7], BTreeSet::from([Class::S]));
    }

    #[test]
    fn conflicting_example() {
        let p = gens(&[
            "@0 s- r- -s RL",
            "@-1 -l -- r- RL s-",
            "@-2 -s -- -- ss ss",
            "@-1 r- -- -s rl r-",
        ]);
        assert_eq!(
            infer_turning_rule(&p),
            Err(NoRule::Conflict { bits: vec![3, 6] })
        );
        let ev = turning_evidence(&p).unwrap();
        let both = BTreeSet::from([Class::S, Class::T]);
        assert_eq!(ev.sets[3], both);
        assert_eq!(ev.sets[6], both);
        for i in [0, 1, 2] {
            assert_eq!(ev.sets[i], BTreeSet::from([Class::T]));
        }
        for i in [5, 7, 8] {
            assert_eq!(ev.sets[i], BTreeSet::from([Class::S]));
        }
    }

    #[test]
    fn left_turn_pair() {
        let p = gens(&["@0 -l", "@-1 -l"]);
        assert_eq!(infer_turning_rule(&p).unwrap().to_string(), "XXXX01XXX");
    }

    #[test]
    fn single_generation_constrains_only_bit_four() {
        let p = gens(&["@0 ss rl -l"]);
        assert_eq!(infer_turning_rule(&p).unwrap().to_string(), "XXXX0XXXX");
        assert_eq!(infer_crossing_rule(&p).unwrap().to_string(), "XXXXXXXXX");
    }

    #[test]
    fn discontinuity_is_reported() {
        let p = gens(&["@0 r- -l", "@1 RL", "@0 s- s-"]);
        assert!(matches!(
            infer_turning_rule(&p),
            Err(NoRule::Discontinuous(_))
        ));
    }

    #[test]
    fn crossing_orientation_sets_bit_four() {
        let z = gens(&["@0 -s s-", "@1 rl"]);
        assert_eq!(infer_crossing_rule(&z).unwrap().to_string(), "XXXX1XXXX");
        let s = gens(&["@0 -s s-", "@1 RL"]);
        assert_eq!(infer_crossing_rule(&s).unwrap().to_string(), "XXXX0XXXX");
    }
}
