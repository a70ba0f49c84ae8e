//! Structural facts about repeating patterns, as executable checks.
//!
//! Every check takes one period and returns `Err` with a short description
//! when the fact fails. A period outside a fact's hypotheses passes.

use sca_core::{step, CellContent, CrossingRule, Generation, Symbol, Trit, TurningRule};

use crate::glider::{is_nested_under, is_pure, leading_subpattern};
use crate::infer::{infer_crossing_rule, infer_turning_rule};
use crate::nullchain::null_chain_any_rotation;
use crate::period::{strand_displacements, Period};

pub type Check = Result<(), String>;

/// Nonzero speed and no null chain in any rotation.
pub fn is_glider(p: &Period) -> bool {
    p.speed().displacement != 0 && null_chain_any_rotation(p).is_none()
}

fn noncrossing_glider(p: &Period) -> bool {
    !p.has_crossing() && is_glider(p)
}

fn regenerates(p: &Period, t: TurningRule, c: CrossingRule) -> bool {
    (0..p.len()).all(|i| step(&p.generation(i), t, c) == p.generation(i + 1))
}

/// The inferred rules admit the generating rules (when known), and every
/// completion of them steps each generation of the period to the next.
pub fn inference_consistency(p: &Period, generating: Option<(TurningRule, CrossingRule)>) -> Check {
    let t = p
        .turning_rule()
        .map_err(|e| format!("no turning rule: {e}"))?;
    let c = p
        .crossing_rule()
        .map_err(|e| format!("no crossing rule: {e}"))?;
    if let Some((gt, gc)) = generating {
        if !t.admits(gt.bits()) {
            return Err(format!(
                "inferred {t} rejects generating rule {}",
                gt.to_generic()
            ));
        }
        if !c.admits(gc.bits()) {
            return Err(format!(
                "inferred {c} rejects generating rule {}",
                gc.to_generic()
            ));
        }
    }
    // Turning and crossing bits are consulted independently, so sweeping
    // each family against one fixed completion of the other covers all.
    let ts = t.turning_completions();
    let cs = c.crossing_completions();
    for &tc in &ts {
        if !regenerates(p, tc, cs[0]) {
            return Err(format!(
                "completion {} does not regenerate",
                tc.to_generic()
            ));
        }
    }
    for &cc in &cs {
        if !regenerates(p, ts[0], cc) {
            return Err(format!(
                "completion {} does not regenerate",
                cc.to_generic()
            ));
        }
    }
    Ok(())
}

/// Every rotation has the same turning rule.
pub fn shift_invariance(p: &Period) -> Check {
    let base = p.turning_rule();
    for r in 1..p.len() {
        if p.rotated(r).turning_rule() != base {
            return Err(format!("rotation {r} changes the turning rule"));
        }
    }
    Ok(())
}

/// Two laps already fix the turning rule: three, four and five agree.
pub fn two_laps_suffice(p: &Period) -> Check {
    let two = infer_turning_rule(&p.unrolled(2));
    for k in 3..=5 {
        if infer_turning_rule(&p.unrolled(k)) != two {
            return Err(format!("{k} laps give a different turning rule"));
        }
    }
    Ok(())
}

/// Every run of consecutive generations from two laps is itself consistent
/// with the rules that produced the pattern. Without known rules, the least
/// completions of the inferred ones stand in.
pub fn slice_closure(p: &Period, generating: Option<(TurningRule, CrossingRule)>) -> Check {
    let (t, c) = match generating {
        Some(r) => r,
        None => {
            let t = p
                .turning_rule()
                .map_err(|e| format!("no turning rule: {e}"))?;
            let c = p
                .crossing_rule()
                .map_err(|e| format!("no crossing rule: {e}"))?;
            (t.turning_completions()[0], c.crossing_completions()[0])
        }
    };
    let gens = p.unrolled(2);
    for i in 0..gens.len() {
        for j in i + 1..=gens.len() {
            let part = &gens[i..j];
            let ok_t = infer_turning_rule(part).is_ok_and(|r| r.admits(t.bits()));
            let ok_c = infer_crossing_rule(part).is_ok_and(|r| r.admits(c.bits()));
            if !(ok_t && ok_c) {
                return Err(format!("generations {i}..{j} reject the rules"));
            }
        }
    }
    Ok(())
}

/// In a non-crossing glider every strand drifts as far as the whole.
pub fn glider_speed(p: &Period) -> Check {
    if !noncrossing_glider(p) {
        return Ok(());
    }
    let d = p.speed().displacement;
    let moved = strand_displacements(p);
    if moved.iter().any(|&m| m != d) {
        return Err(format!("strand displacements {moved:?}, glider {d}"));
    }
    Ok(())
}

/// A non-crossing glider without unit speed leaves bits ET and TE unset.
pub fn et_te_unset(p: &Period) -> Check {
    if !noncrossing_glider(p) || p.speed().is_unit() {
        return Ok(());
    }
    let rule = p
        .turning_rule()
        .map_err(|e| format!("no turning rule: {e}"))?;
    for bit in [5, 7] {
        if rule.get(bit) == Trit::One {
            return Err(format!("bit {bit} is forced to 1 in {rule}"));
        }
    }
    Ok(())
}

/// A positive non-crossing glider without unit speed never has three
/// adjacent `[n,l]` cells in one generation; negative ones never three
/// adjacent `[r,n]` cells.
pub fn no_three_adjacent_turns(p: &Period) -> Check {
    if !noncrossing_glider(p) || p.speed().is_unit() {
        return Ok(());
    }
    let turn = if p.speed().displacement > 0 {
        CellContent::LeftTurn
    } else {
        CellContent::RightTurn
    };
    for (i, g) in p.generations().iter().enumerate() {
        if g.cells().windows(3).any(|w| w.iter().all(|&c| c == turn)) {
            return Err(format!("generation {i} ({g}) has three adjacent turns"));
        }
    }
    Ok(())
}

/// A non-crossing glider with fewer than three generations per period has
/// every strand turning the same way at every step.
pub fn short_period_unit_speed(p: &Period) -> Check {
    if !noncrossing_glider(p) || p.len() >= 3 {
        return Ok(());
    }
    let want = if p.speed().displacement > 0 {
        Symbol::Left
    } else {
        Symbol::Right
    };
    let all = p
        .generations()
        .iter()
        .flat_map(Generation::strands)
        .all(|(_, s)| s == want);
    if !all || !p.speed().is_unit() {
        return Err(format!("short period {p} is not all {want:?}"));
    }
    Ok(())
}

/// Left-slot position of the cell holding the strand at `x`.
fn cell_of(g: &Generation, x: i64) -> i64 {
    x - (x - g.phase()).rem_euclid(2)
}

/// In a pure glider of `n+1` strands, the trailing strand comes within two
/// cells of its neighbour in every window as long as one period of the
/// leading `n`-strand subpattern.
pub fn pigeonhole(p: &Period) -> Check {
    let n = p.strand_count();
    if n < 2 || !noncrossing_glider(p) || is_pure(p) != Ok(true) {
        return Ok(());
    }
    let h = leading_subpattern(p, n - 1).map_err(|e| format!("no leading subpattern: {e}"))?;
    let window = h.minimal().len();
    let positive = p.speed().displacement > 0;
    let close = |i: usize| {
        let g = p.generation(i);
        let xs: Vec<i64> = g.strands().iter().map(|s| s.0).collect();
        let (a, b) = if positive {
            (xs[n - 2], xs[n - 1])
        } else {
            (xs[0], xs[1])
        };
        (cell_of(&g, b) - cell_of(&g, a)) / 2 <= 2
    };
    for start in 0..p.len() {
        if !(start..start + window).any(close) {
            return Err(format!(
                "trailing strand stays away for {window} generations from {start}"
            ));
        }
    }
    Ok(())
}

/// For non-crossing gliders, purity and nestedness coincide.
pub fn pure_iff_nested(p: &Period) -> Check {
    if !noncrossing_glider(p) {
        return Ok(());
    }
    let pure = is_pure(p) == Ok(true);
    let nested = is_nested_under(p).is_ok();
    if pure != nested {
        return Err(format!("pure = {pure}, nested = {nested}"));
    }
    Ok(())
}

/// A named check over periods whose generating rules may be known.
pub struct Property {
    pub name: &'static str,
    pub check: fn(&Period, Option<(TurningRule, CrossingRule)>) -> Check,
}

/// Every check, in a fixed order.
pub const ALL: [Property; 10] = [
    Property {
        name: "inference consistency",
        check: inference_consistency,
    },
    Property {
        name: "shift invariance",
        check: |p, _| shift_invariance(p),
    },
    Property {
        name: "two-lap stabilization",
        check: |p, _| two_laps_suffice(p),
    },
    Property {
        name: "slice closure",
        check: slice_closure,
    },
    Property {
        name: "equal strand speeds",
        check: |p, _| glider_speed(p),
    },
    Property {
        name: "ET and TE unset",
        check: |p, _| et_te_unset(p),
    },
    Property {
        name: "no three adjacent turns",
        check: |p, _| no_three_adjacent_turns(p),
    },
    Property {
        name: "short periods are unit speed",
        check: |p, _| short_period_unit_speed(p),
    },
    Property {
        name: "pigeonhole proximity",
        check: |p, _| pigeonhole(p),
    },
    Property {
        name: "pure iff nested",
        check: |p, _| pure_iff_nested(p),
    },
];
