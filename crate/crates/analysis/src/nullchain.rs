//! Null chains: strand-free cell paths through one period that separate the
//! pattern into parts that never meet.

use std::collections::HashMap;

use crate::period::Period;

/// Left-slot positions of a null chain, one cell per generation of the
/// period, starting in its first generation. Searches empty cells within one
/// cell of each generation's strand span.
pub fn null_chain(p: &Period) -> Option<Vec<i64>> {
    let gens = p.generations();
    let g0 = &gens[0];
    let (lo, hi) = (g0.leftmost_strand()?, g0.rightmost_strand()?);
    // Starts: empty cells of gen 0 with a strand strictly on each side.
    let mut layer: Vec<i64> = (0..g0.width() as i64)
        .map(|i| g0.base() + 2 * i)
        .filter(|&q| g0.cell_at(q).is_empty() && lo < q && hi > q + 1)
        .collect();
    let mut parents: Vec<HashMap<i64, i64>> = Vec::new();
    for g in &gens[1..] {
        if g.is_empty() {
            return None;
        }
        let (min, max) = (g.base() - 2, g.cell_position(g.width() - 1) + 2);
        let mut next: HashMap<i64, i64> = HashMap::new();
        for &q in &layer {
            for c in [q - 1, q + 1] {
                if (min..=max).contains(&c) && g.cell_at(c).is_empty() {
                    next.entry(c).or_insert(q);
                }
            }
        }
        if next.is_empty() {
            return None;
        }
        let mut keys: Vec<i64> = next.keys().copied().collect();
        keys.sort_unstable();
        layer = keys;
        parents.push(next);
    }
    let mut chain = vec![*layer.first()?];
    for level in parents.iter().rev() {
        let last = *chain.last().expect("nonempty");
        chain.push(level[&last]);
    }
    chain.reverse();
    Some(chain)
}

/// A null chain starting in any generation of the period.
pub fn null_chain_any_rotation(p: &Period) -> Option<(usize, Vec<i64>)> {
    (0..p.len()).find_map(|r| null_chain(&p.rotated(r)).map(|c| (r, c)))
}
