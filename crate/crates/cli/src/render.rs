//! Text and SVG pictures of generation lists.

use std::fmt::Write;

use sca_core::{CellContent, Generation, Orientation, Symbol};

fn glyph(s: Symbol) -> char {
    match s {
        Symbol::Straight => '|',
        Symbol::Right => '\\',
        Symbol::Left => '/',
    }
}

fn span(gens: &[Generation]) -> Option<(i64, i64)> {
    let mut lo = i64::MAX;
    let mut hi = i64::MIN;
    for g in gens.iter().filter(|g| !g.is_empty()) {
        lo = lo.min(g.base());
        hi = hi.max(g.cell_position(g.width() - 1) + 1);
    }
    (lo <= hi).then_some((lo, hi))
}

/// One text row per generation. Slot position `x` sits in column
/// `2 * (x - min)`; a crossing is drawn in the odd column between its slots.
pub fn ascii(gens: &[Generation]) -> String {
    let Some((lo, hi)) = span(gens) else {
        return String::new();
    };
    let cols = (2 * (hi - lo) + 1) as usize;
    let mut out = String::new();
    for g in gens {
        let mut row = vec![' '; cols];
        for (i, cell) in g.cells().iter().enumerate() {
            let col = (2 * (g.cell_position(i) - lo)) as usize;
            match cell {
                CellContent::Crossing(o) => {
                    row[col + 1] = if *o == Orientation::Z { 'X' } else { '%' };
                }
                c => {
                    if let Some(s) = c.left() {
                        row[col] = glyph(s);
                    }
                    if let Some(s) = c.right() {
                        row[col + 2] = glyph(s);
                    }
                }
            }
        }
        let line: String = row.into_iter().collect();
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

const DX: f64 = 20.0;
const DY: f64 = 30.0;

/// Each strand is a segment from its slot to the slot it reaches in the next
/// generation. At a crossing the under strand is drawn with a gap.
pub fn svg(gens: &[Generation]) -> String {
    let Some((lo, hi)) = span(gens) else {
        return String::new();
    };
    let width = (hi - lo + 2) as f64 * DX;
    let height = (gens.len() + 1) as f64 * DY;
    let x = |pos: f64| (pos - lo as f64 + 1.0) * DX;
    let y = |row: f64| (row + 0.5) * DY;
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    )
    .unwrap();
    out.push_str(r#"<g stroke="black" stroke-width="2" stroke-linecap="round">"#);
    out.push('\n');
    for (row, g) in gens.iter().enumerate() {
        let r = row as f64;
        for (i, cell) in g.cells().iter().enumerate() {
            let q = g.cell_position(i) as f64;
            if let CellContent::Crossing(o) = cell {
                // The right-moving strand runs q -> q+1, the left-moving one q+1 -> q.
                let (over, under) = match o {
                    Orientation::Z => ((q + 1.0, q), (q, q + 1.0)),
                    Orientation::S => ((q, q + 1.0), (q + 1.0, q)),
                };
                line(&mut out, x(over.0), y(r), x(over.1), y(r + 1.0));
                let (mx, my) = ((x(under.0) + x(under.1)) / 2.0, y(r + 0.5));
                let (ax, bx) = (x(under.0), x(under.1));
                line(
                    &mut out,
                    ax,
                    y(r),
                    ax + (mx - ax) * 0.6,
                    y(r) + (my - y(r)) * 0.6,
                );
                line(
                    &mut out,
                    bx + (mx - bx) * 0.6,
                    y(r + 1.0) + (my - y(r + 1.0)) * 0.6,
                    bx,
                    y(r + 1.0),
                );
                continue;
            }
            for (slot, sym) in [(0.0, cell.left()), (1.0, cell.right())] {
                if let Some(s) = sym {
                    let from = q + slot;
                    let to = from - s.displacement() as f64;
                    line(&mut out, x(from), y(r), x(to), y(r + 1.0));
                }
            }
        }
    }
    out.push_str("</g>\n</svg>\n");
    out
}

fn line(out: &mut String, x1: f64, y1: f64, x2: f64, y2: f64) {
    writeln!(out, r#"<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>"#).unwrap();
}
