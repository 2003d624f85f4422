//! Deterministic SVG drawings of lattice states.
//!
//! Columns run N-1..0 from left to right, rows 1..r from top to bottom.
//! Every edge gets a circle at its midpoint; colored edges are drawn thick.

use std::fmt::Write;

use fivevertex::lattice::{LatticeState, Spin};

const CELL: i64 = 48;
const MARGIN: i64 = 48;
const DOT: i64 = 9;

/// Stroke color of path `c`.
pub fn palette(c: usize) -> String {
    match c {
        1 => "#d62728".into(),
        2 => "#1f77b4".into(),
        3 => "#2ca02c".into(),
        4 => "#ff7f0e".into(),
        _ => {
            let hue = ((c - 5) as f64 * 137.508) % 360.0;
            format!("hsl({hue:.1},65%,45%)")
        }
    }
}

struct Layout {
    r: i64,
    n: i64,
}

impl Layout {
    /// x of the vertex in column `col`.
    fn col_x(&self, col: usize) -> i64 {
        MARGIN + (self.n - col as i64) * CELL - CELL / 2
    }

    /// y of the vertex in row `row`.
    fn row_y(&self, row: usize) -> i64 {
        MARGIN + row as i64 * CELL - CELL / 2
    }

    /// x of horizontal slot `s` (slot 0 is the right boundary).
    fn slot_x(&self, s: usize) -> i64 {
        MARGIN + (self.n - s as i64) * CELL
    }

    /// y of vertical slot `k` (slot 0 is the top boundary).
    fn vslot_y(&self, k: usize) -> i64 {
        MARGIN + k as i64 * CELL
    }

    fn h_segment(&self, s: usize) -> (i64, i64) {
        let left = if s as i64 == self.n { self.slot_x(s) } else { self.col_x(s) };
        let right = if s == 0 { self.slot_x(0) } else { self.col_x(s - 1) };
        (left, right)
    }

    fn v_segment(&self, k: usize) -> (i64, i64) {
        let top = if k == 0 { self.vslot_y(0) } else { self.row_y(k) };
        let bottom = if k as i64 == self.r { self.vslot_y(k) } else { self.row_y(k + 1) };
        (top, bottom)
    }
}

fn spin_label(s: Spin) -> String {
    match s {
        Spin::Plus => "+".into(),
        Spin::Color(c) => c.to_string(),
    }
}

pub fn render_svg(s: &LatticeState) -> String {
    let spec = s.spec();
    let (r, n) = (spec.r(), spec.n());
    let lay = Layout { r: r as i64, n: n as i64 };
    let width = 2 * MARGIN + n as i64 * CELL;
    let height = 2 * MARGIN + r as i64 * CELL;
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(
        out,
        r#"<desc>lambda={:?} w={} family={}</desc>"#,
        spec.lambda, spec.w, spec.family
    );
    let _ = writeln!(out, r##"<rect x="0" y="0" width="{width}" height="{height}" fill="#ffffff"/>"##);

    // grid
    let _ = writeln!(out, r##"<g class="grid" stroke="#999999" stroke-width="1">"##);
    for row in 1..=r {
        let y = lay.row_y(row);
        let _ = writeln!(out, r#"<line x1="{}" y1="{y}" x2="{}" y2="{y}"/>"#, lay.slot_x(n), lay.slot_x(0));
    }
    for col in 0..n {
        let x = lay.col_x(col);
        let _ = writeln!(out, r#"<line x1="{x}" y1="{}" x2="{x}" y2="{}"/>"#, lay.vslot_y(0), lay.vslot_y(r));
    }
    let _ = writeln!(out, "</g>");

    // column labels on top, row labels on the right
    let _ = writeln!(out, r##"<g class="labels" font-family="monospace" font-size="12" fill="#333333" text-anchor="middle">"##);
    for col in 0..n {
        let _ = writeln!(out, r#"<text x="{}" y="{}">{col}</text>"#, lay.col_x(col), MARGIN - 22);
    }
    for row in 1..=r {
        let _ = writeln!(out, r#"<text x="{}" y="{}">{row}</text>"#, lay.slot_x(0) + 24, lay.row_y(row) + 4);
    }
    let _ = writeln!(out, "</g>");

    // colored paths, one group per color
    for c in 1..=r {
        let enter = (0..n).find(|&col| s.v(0, col) == Spin::Color(c));
        let exit = (1..=r).find(|&row| s.h(row, 0) == Spin::Color(c));
        let fmt_opt = |o: Option<usize>| o.map_or("none".to_string(), |v| v.to_string());
        let _ = writeln!(
            out,
            r#"<g class="path" data-color="{c}" data-enter-column="{}" data-exit-row="{}" stroke="{}" stroke-width="5" stroke-linecap="round">"#,
            fmt_opt(enter),
            fmt_opt(exit),
            palette(c)
        );
        for row in 1..=r {
            for slot in 0..=n {
                if s.h(row, slot) == Spin::Color(c) {
                    let (x1, x2) = lay.h_segment(slot);
                    let y = lay.row_y(row);
                    let _ = writeln!(out, r#"<line x1="{x1}" y1="{y}" x2="{x2}" y2="{y}"/>"#);
                }
            }
        }
        for k in 0..=r {
            for col in 0..n {
                if s.v(k, col) == Spin::Color(c) {
                    let (y1, y2) = lay.v_segment(k);
                    let x = lay.col_x(col);
                    let _ = writeln!(out, r#"<line x1="{x}" y1="{y1}" x2="{x}" y2="{y2}"/>"#);
                }
            }
        }
        let _ = writeln!(out, "</g>");
    }

    // spin circles at edge midpoints
    let _ = writeln!(out, r##"<g class="spins" font-family="monospace" font-size="10" text-anchor="middle">"##);
    let mut dot = |x: i64, y: i64, spin: Spin| {
        let fill = match spin {
            Spin::Plus => "#ffffff".to_string(),
            Spin::Color(c) => palette(c),
        };
        let ink = if spin == Spin::Plus { "#000000" } else { "#ffffff" };
        let _ = writeln!(
            out,
            r##"<circle cx="{x}" cy="{y}" r="{DOT}" fill="{fill}" stroke="#000000" stroke-width="1"/><text x="{x}" y="{}" fill="{ink}">{}</text>"##,
            y + 3,
            spin_label(spin)
        );
    };
    for row in 1..=r {
        for slot in 0..=n {
            let (x1, x2) = lay.h_segment(slot);
            dot((x1 + x2) / 2, lay.row_y(row), s.h(row, slot));
        }
    }
    for k in 0..=r {
        for col in 0..n {
            let (y1, y2) = lay.v_segment(k);
            dot(lay.col_x(col), (y1 + y2) / 2, s.v(k, col));
        }
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(out, "</svg>");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn palette_is_fixed() {
        assert_eq!(palette(1), "#d62728");
        assert_eq!(palette(4), "#ff7f0e");
        assert_eq!(palette(5), "hsl(0.0,65%,45%)");
        assert_eq!(palette(6), "hsl(137.5,65%,45%)");
    }

    #[test]
    fn layout_boundaries() {
        let lay = Layout { r: 2, n: 3 };
        assert_eq!(lay.h_segment(3), (MARGIN, lay.col_x(2)));
        assert_eq!(lay.h_segment(0), (lay.col_x(0), MARGIN + 3 * CELL));
        assert_eq!(lay.v_segment(0), (MARGIN, lay.row_y(1)));
        assert_eq!(lay.v_segment(2), (lay.row_y(2), MARGIN + 2 * CELL));
    }
}
