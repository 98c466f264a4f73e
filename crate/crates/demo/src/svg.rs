//! SVG drawings of arc diagrams and staircase fillings.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use kncross::fillings::{Cell, TriangularFilling};
use kncross::{Arc, ColoredDiagram};

const STEP: f64 = 40.0;
const MARGIN: f64 = 24.0;
const MAX_RISE: f64 = 150.0;
const RED: &str = "#c62828";
const BLACK: &str = "#263238";
const MARK: &str = "#1565c0";
const ADDED: &str = "#2e7d32";

/// Arcs to emphasize on top of the red/black coloring.
#[derive(Default)]
pub struct Highlight {
    pub marked: BTreeSet<Arc>,
    pub added: BTreeSet<Arc>,
}

fn rise(a: &Arc) -> f64 {
    ((a.right - a.left) as f64 * STEP / 2.0).min(MAX_RISE)
}

pub fn arc_diagram(d: &ColoredDiagram, hl: &Highlight) -> String {
    let n = d.n();
    let arcs = d.arc_set().arcs();
    let top = arcs.iter().map(rise).fold(14.0_f64, f64::max);
    let width = MARGIN * 2.0 + STEP * n.saturating_sub(1) as f64;
    let base = MARGIN + top;
    let height = base + 34.0;
    let x = |i: usize| MARGIN + STEP * i as f64;

    let mut s = String::new();
    let _ = write!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {width} {height}" width="{width}" height="{height}" font-family="sans-serif" font-size="12">"#
    );
    for a in arcs {
        let mut color = if d.is_red_arc(a) { RED } else { BLACK };
        let mut stroke = 1.6;
        if hl.added.contains(a) {
            color = ADDED;
            stroke = 3.0;
        } else if hl.marked.contains(a) {
            color = MARK;
            stroke = 3.0;
        }
        let (x1, x2) = (x(a.left), x(a.right));
        if a.is_loop() {
            let _ = write!(
                s,
                r#"<circle cx="{x1}" cy="{}" r="7" fill="none" stroke="{color}" stroke-width="{stroke}"/>"#,
                base - 7.0
            );
        } else {
            let rx = (x2 - x1) / 2.0;
            let _ = write!(
                s,
                r#"<path d="M {x1} {base} A {rx} {} 0 0 1 {x2} {base}" fill="none" stroke="{color}" stroke-width="{stroke}"/>"#,
                rise(a)
            );
        }
    }
    for i in 0..n {
        let fill = if d.is_red(i) { RED } else { BLACK };
        let _ = write!(
            s,
            r#"<circle cx="{}" cy="{base}" r="4" fill="{fill}"/><text x="{}" y="{}" text-anchor="middle" fill="{fill}">{i}</text>"#,
            x(i),
            x(i),
            base + 20.0
        );
    }
    s.push_str("</svg>");
    s
}

/// Rows top to bottom, row `r` holding `r` cells.
pub fn filling(f: &TriangularFilling, chain: &[Cell]) -> String {
    const CELL: f64 = 22.0;
    let n = f.order();
    let chain: BTreeSet<Cell> = chain.iter().copied().collect();
    let size = MARGIN * 2.0 + CELL * n.max(1) as f64;
    let mut s = String::new();
    let _ = write!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {size} {size}" width="{size}" height="{size}" font-family="sans-serif" font-size="10">"#
    );
    for r in 1..=n {
        let y = MARGIN + CELL * (r - 1) as f64;
        let _ = write!(
            s,
            r#"<text x="{}" y="{}" text-anchor="end" fill="{BLACK}">{r}</text>"#,
            MARGIN - 4.0,
            y + 15.0
        );
        for c in 1..=r {
            let cx = MARGIN + CELL * (c - 1) as f64;
            let _ = write!(
                s,
                r##"<rect x="{cx}" y="{y}" width="{CELL}" height="{CELL}" fill="#fafafa" stroke="#90a4ae"/>"##
            );
            if f.ones().contains(&(r, c)) {
                let color = if chain.contains(&(r, c)) { MARK } else { BLACK };
                let _ = write!(
                    s,
                    r#"<circle cx="{}" cy="{}" r="6" fill="{color}"/>"#,
                    cx + CELL / 2.0,
                    y + CELL / 2.0
                );
            }
        }
    }
    for c in 1..=n {
        let _ = write!(
            s,
            r#"<text x="{}" y="{}" text-anchor="middle" fill="{BLACK}">{c}</text>"#,
            MARGIN + CELL * (c as f64 - 0.5),
            MARGIN + CELL * n as f64 + 14.0
        );
    }
    s.push_str("</svg>");
    s
}
