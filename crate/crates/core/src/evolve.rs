//! The forward map.

use crate::cell::{bit_index, CellContent, Class, Orientation, Symbol};
use crate::generation::Generation;
use crate::pattern::GridPattern;
use crate::rule::{CrossingRule, TurningRule};

/// Effective classes of a child's two parents after deleting the strands that
/// continue elsewhere.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Config {
    pub left: Class,
    pub right: Class,
    pub bit: usize,
}

impl Config {
    /// Whether the child's left and right slots receive a strand.
    pub fn occupancy(self) -> (bool, bool) {
        (self.left != Class::E, self.right != Class::E)
    }
}

/// Configuration of the child cell lying between `left` and `right`.
pub fn effective_config(left: CellContent, right: CellContent) -> Config {
    let l = match (left.left(), left.right()) {
        (_, Some(Symbol::Straight)) => Class::S,
        (Some(Symbol::Right), _) => Class::T,
        _ => Class::E,
    };
    let r = match (right.left(), right.right()) {
        (Some(Symbol::Straight), _) => Class::S,
        (_, Some(Symbol::Left)) => Class::T,
        _ => Class::E,
    };
    Config {
        left: l,
        right: r,
        bit: bit_index(l, r),
    }
}

/// Configuration of the child whose left slot is at `q`, read from `parent`.
pub fn config_at(parent: &Generation, q: i64) -> Config {
    effective_config(parent.cell_at(q - 1), parent.cell_at(q + 1))
}

/// Turning-rule bit that decides the child at `q`: the whole-cell classes of
/// its two parents, whether or not their strands feed this child.
pub fn rule_bit_at(parent: &Generation, q: i64) -> usize {
    bit_index(parent.cell_at(q - 1).class(), parent.cell_at(q + 1).class())
}

/// Crossing-rule bit consulted for a crossing born at child position `q`:
/// the raw classes of the cells beside its two parents.
pub fn crossing_bit_at(parent: &Generation, q: i64) -> usize {
    bit_index(parent.cell_at(q - 3).class(), parent.cell_at(q + 3).class())
}

/// Child positions that can receive strands from `parent`.
pub fn child_positions(parent: &Generation) -> impl Iterator<Item = i64> {
    let start = parent.base() - 1;
    let count = parent.width() as i64 + 1;
    (0..count).map(move |i| start + 2 * i)
}

/// One generation of evolution. Which slots of a child are filled follows
/// from strand movement; whether the child turns is the turning-rule bit of
/// its parents' raw classes.
pub fn step(g: &Generation, t: TurningRule, c: CrossingRule) -> Generation {
    if g.is_empty() {
        return Generation::empty(g.base() + 1);
    }
    let cells = child_positions(g)
        .map(|q| {
            let (has_l, has_r) = config_at(g, q).occupancy();
            if !(has_l || has_r) {
                return CellContent::Empty;
            }
            if !t.bit(rule_bit_at(g, q)) {
                return CellContent::from_slots(
                    has_l.then_some(Symbol::Straight),
                    has_r.then_some(Symbol::Straight),
                    Orientation::Z,
                )
                .expect("straight cells are always admissible");
            }
            if has_l && has_r {
                return CellContent::Crossing(Orientation::from_bit(c.bit(crossing_bit_at(g, q))));
            }
            CellContent::from_slots(
                has_l.then_some(Symbol::Right),
                has_r.then_some(Symbol::Left),
                Orientation::Z,
            )
            .expect("single turns are always admissible")
        })
        .collect();
    Generation::new(g.base() - 1, cells)
}

/// `count` generations starting from `init`.
pub fn generate(init: &Generation, t: TurningRule, c: CrossingRule, count: usize) -> GridPattern {
    assert!(count >= 1, "generate needs at least one generation");
    let mut out = Vec::with_capacity(count);
    out.push(init.clone());
    for _ in 1..count {
        let next = step(out.last().expect("nonempty"), t, c);
        out.push(next);
    }
    GridPattern::finite(out)
}

/// Rule-driven iterator over generations, starting with `init`.
pub fn evolve(
    init: Generation,
    t: TurningRule,
    c: CrossingRule,
) -> impl Iterator<Item = Generation> {
    std::iter::successors(Some(init), move |g| Some(step(g, t, c)))
}
