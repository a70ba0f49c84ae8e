//! Glider verdicts: repetition, speed, purity and nestedness.

use std::fmt;

use sca_core::{GenericRule, Trit};

use crate::infer::NoRule;
use crate::nullchain::null_chain_any_rotation;
use crate::period::{Period, Speed};
use crate::subpattern::{left_subpattern, right_subpattern, SubpatternError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GliderReport {
    pub is_repeating: bool,
    pub is_glider: bool,
    pub speed: Speed,
    pub width: usize,
    pub turning: Result<GenericRule, NoRule>,
    pub crossing: Result<GenericRule, NoRule>,
    /// `None` for speed 0 or when no turning rule exists.
    pub pure: Option<bool>,
    pub nested_rule: Option<GenericRule>,
    /// Rotation index and left-slot positions of a null chain.
    pub null_chain: Option<(usize, Vec<i64>)>,
}

/// Everything measured about one period. A null chain starting in any
/// generation of the period disqualifies it.
pub fn analyze(p: &Period) -> GliderReport {
    let chain = null_chain_any_rotation(p);
    let speed = p.speed();
    let is_repeating = chain.is_none();
    let is_glider = is_repeating && speed.displacement != 0;
    GliderReport {
        is_repeating,
        is_glider,
        speed,
        width: p.width(),
        turning: p.turning_rule(),
        crossing: p.crossing_rule(),
        pure: is_pure(p).ok(),
        nested_rule: if is_glider {
            is_nested_under(p).ok()
        } else {
            None
        },
        null_chain: chain,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PurityError {
    ZeroSpeed,
    NoRule(NoRule),
}

impl fmt::Display for PurityError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PurityError::ZeroSpeed => write!(f, "purity is undefined at speed 0"),
            PurityError::NoRule(e) => write!(f, "no turning rule: {e}"),
        }
    }
}

impl std::error::Error for PurityError {}

/// Positive gliders are pure when SE may be 0; negative ones when ES may be 0.
pub fn is_pure(p: &Period) -> Result<bool, PurityError> {
    let rule = p.turning_rule().map_err(PurityError::NoRule)?;
    rule_is_pure(&rule, p.speed())
}

pub fn rule_is_pure(rule: &GenericRule, speed: Speed) -> Result<bool, PurityError> {
    let bit = match speed.signum() {
        1 => 1,
        -1 => 3,
        _ => return Err(PurityError::ZeroSpeed),
    };
    Ok(rule.get(bit) != Trit::One)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NotNestedReason {
    ZeroSpeed,
    Subpattern(SubpatternError),
    /// The subpattern has a null chain or speed 0.
    NotGlider,
    NoRule(NoRule),
    /// Subpattern rules disagree at these bits.
    Contradiction(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NotNested {
    /// Strand count of the first failing subpattern.
    pub k: usize,
    pub reason: NotNestedReason,
}

impl fmt::Display for NotNested {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "not nested at k = {}: ", self.k)?;
        match &self.reason {
            NotNestedReason::ZeroSpeed => write!(f, "speed 0"),
            NotNestedReason::Subpattern(e) => write!(f, "{e}"),
            NotNestedReason::NotGlider => write!(f, "subpattern is not a glider"),
            NotNestedReason::NoRule(e) => write!(f, "{e}"),
            NotNestedReason::Contradiction(bits) => write!(f, "rules disagree at bits {bits:?}"),
        }
    }
}

impl std::error::Error for NotNested {}

/// The k-strand subpattern on the leading side (left for positive speed).
pub fn leading_subpattern(p: &Period, k: usize) -> Result<Period, SubpatternError> {
    if p.speed().displacement >= 0 {
        left_subpattern(p, k)
    } else {
        right_subpattern(p, k)
    }
}

/// Meet of the turning rules of every leading subpattern, each of which must
/// be a glider.
pub fn is_nested_under(p: &Period) -> Result<GenericRule, NotNested> {
    let n = p.strand_count();
    if p.speed().displacement == 0 {
        return Err(NotNested {
            k: n,
            reason: NotNestedReason::ZeroSpeed,
        });
    }
    let mut meet: Option<GenericRule> = None;
    for k in 1..=n {
        let fail = |reason| NotNested { k, reason };
        let sub = leading_subpattern(p, k).map_err(|e| fail(NotNestedReason::Subpattern(e)))?;
        if sub.speed().displacement == 0 || null_chain_any_rotation(&sub).is_some() {
            return Err(fail(NotNestedReason::NotGlider));
        }
        let rule = sub
            .turning_rule()
            .map_err(|e| fail(NotNestedReason::NoRule(e)))?;
        meet = Some(match meet {
            None => rule,
            Some(m) => m
                .meet(&rule)
                .map_err(|c| fail(NotNestedReason::Contradiction(c.bits)))?,
        });
    }
    Ok(meet.expect("at least one strand"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::period::find_period;
    use sca_core::{CrossingRule, Generation, TurningRule};

    fn period(init: &str, t: &str) -> Period {
        let t: TurningRule = t.parse().unwrap();
        let g: Generation = init.parse().unwrap();
        find_period(&g, t, CrossingRule::ZERO, 500).unwrap().period
    }

    #[test]
    fn speed_one_is_pure_and_nested() {
        let p = period("@0 -l -l -l", "000001001");
        let r = analyze(&p);
        assert!(r.is_glider);
        assert_eq!(r.pure, Some(true));
        assert_eq!(r.nested_rule.unwrap().to_string(), "XXXX01XX1");
    }

    #[test]
    fn speed_zero_is_not_a_glider() {
        let p = period("@0 s-", "000000000");
        let r = analyze(&p);
        assert!(r.is_repeating);
        assert!(!r.is_glider);
        assert_eq!(is_pure(&p), Err(PurityError::ZeroSpeed));
    }

    #[test]
    fn gapped_row_is_not_repeating() {
        let g: Generation = "@0 -l -l -- -l".parse().unwrap();
        let p = Period::from_generations(vec![g]).unwrap();
        let r = analyze(&p);
        assert!(!r.is_repeating);
        assert!(!r.is_glider);
    }

    #[test]
    fn one_third_glider_is_nested_under_its_rule() {
        let p = period("@0 s-", "000100000");
        assert_eq!(p.len(), 3);
        let r = is_nested_under(&p).unwrap();
        assert_eq!(r, p.turning_rule().unwrap());
        assert_eq!(r.to_string(), "X0X100XXX");
    }
}
