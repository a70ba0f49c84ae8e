//! Matching oracle output against the built-in expected tables.

use std::fmt;

use crate::oracle::{oracle_enumerate, OracleClass, OracleConfig, OracleStats};
use crate::tables::{TableEntry, ONE_STRAND, TWO_STRAND};

/// Oracle parameters used to classify `n`-stranded patterns.
pub fn classify_config(n: usize) -> OracleConfig {
    match n {
        1 => OracleConfig::new(1, 2, 64),
        2 => OracleConfig::new(2, 3, 256),
        _ => panic!("classification tables exist for 1 and 2 strands only"),
    }
}

pub fn expected_table(n: usize) -> &'static [TableEntry] {
    match n {
        1 => &ONE_STRAND,
        2 => &TWO_STRAND,
        _ => panic!("classification tables exist for 1 and 2 strands only"),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Match {
    pub entry: TableEntry,
    pub class: OracleClass,
}

/// One disagreement between the table and the search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Mismatch {
    /// A table entry whose period the search did not produce.
    Missing(TableEntry),
    /// Same period, different rule or speed.
    Differs {
        entry: TableEntry,
        class: OracleClass,
    },
    /// A class found by the search that the table does not list.
    Unlisted(OracleClass),
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mismatch::Missing(e) => write!(
                f,
                "missing item {}: {} turn={} cross={} speed={}/{}",
                e.item, e.rows, e.turning, e.crossing, e.displacement, e.period_len
            ),
            Mismatch::Differs { entry, class } => write!(
                f,
                "item {} differs: expected turn={} cross={} speed={}/{}, found turn={} cross={} speed={}",
                entry.item,
                entry.turning,
                entry.crossing,
                entry.displacement,
                entry.period_len,
                class.turning,
                class.crossing,
                class.speed
            ),
            Mismatch::Unlisted(c) => write!(
                f,
                "unlisted class: {} turn={} cross={} speed={}",
                c.period, c.turning, c.crossing, c.speed
            ),
        }
    }
}

/// Outcome of matching, whether or not it is exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub strands: usize,
    pub matched: Vec<Match>,
    pub mismatches: Vec<Mismatch>,
    pub found: usize,
    pub expected: usize,
    pub stats: OracleStats,
}

impl Classification {
    pub fn is_exact(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Raised when the search and the table disagree; carries both sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MismatchReport(pub Classification);

impl fmt::Display for MismatchReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = &self.0;
        write!(
            f,
            "{}/{} table classes matched, {} classes found, {} mismatches",
            c.matched.len(),
            c.expected,
            c.found,
            c.mismatches.len()
        )
    }
}

impl std::error::Error for MismatchReport {}

/// Matches `found` one-to-one against `table` by shift class, then compares
/// rules and unreduced speed.
pub fn match_table(
    strands: usize,
    table: &[TableEntry],
    found: &[OracleClass],
    stats: OracleStats,
) -> Classification {
    let mut matched = Vec::new();
    let mut mismatches = Vec::new();
    let mut used = vec![false; found.len()];
    for entry in table {
        let key = match entry.period() {
            Ok(p) => p.canonical_rotation().to_string(),
            Err(_) => {
                mismatches.push(Mismatch::Missing(*entry));
                continue;
            }
        };
        let hit = found.iter().position(|c| c.period.to_string() == key);
        match hit {
            None => mismatches.push(Mismatch::Missing(*entry)),
            Some(i) => {
                used[i] = true;
                let class = found[i].clone();
                let same = class.turning == entry.turning_rule()
                    && class.crossing == entry.crossing_rule()
                    && class.speed == entry.speed();
                if same {
                    matched.push(Match {
                        entry: *entry,
                        class,
                    });
                } else {
                    mismatches.push(Mismatch::Differs {
                        entry: *entry,
                        class,
                    });
                }
            }
        }
    }
    for (c, u) in found.iter().zip(&used) {
        if !u {
            mismatches.push(Mismatch::Unlisted(c.clone()));
        }
    }
    Classification {
        strands,
        matched,
        mismatches,
        found: found.len(),
        expected: table.len(),
        stats,
    }
}

/// Runs the search for `n` strands and matches it against the table.
pub fn classify_small(n: usize) -> Result<Classification, MismatchReport> {
    let result = oracle_enumerate(&classify_config(n));
    let c = match_table(n, expected_table(n), &result.classes, result.stats);
    if c.is_exact() {
        Ok(c)
    } else {
        Err(MismatchReport(c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_strand_is_exact() {
        let c = classify_small(1).unwrap();
        assert_eq!(c.matched.len(), 6);
        assert_eq!(c.found, 6);
    }

    #[test]
    fn table_periods_lay_out() {
        for e in ONE_STRAND.iter().chain(TWO_STRAND.iter()) {
            let p = e.period().unwrap();
            assert_eq!(p.speed(), e.speed(), "item {}", e.item);
        }
    }
}
