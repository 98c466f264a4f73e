//! Plain-text pictures of arc diagrams and fillings.
//!
//! Arc diagrams are drawn above a row of node glyphs:
//!
//! ```text
//! *  singleton-free node      o  singleton (loop)
//! @  red node                 O  red singleton
//! +--+  black arc             +==+  red arc (legs drawn with ':')
//! ```
//!
//! Red is only meaningful for zero-based partitions, where it marks the
//! block containing `0`.

use crate::arcs::{arcs, Arc};
use crate::fillings::TriangularFilling;
use crate::partition::{Convention, SetPartition};

const MIN_WIDTH: usize = 3;

/// Rows for the non-loop arcs, shortest first: each arc goes one row above
/// the highest arc whose span touches its own.
fn layer(arcs: &[Arc]) -> Vec<Vec<Arc>> {
    let mut sorted: Vec<Arc> = arcs.iter().copied().filter(|a| !a.is_loop()).collect();
    sorted.sort_by_key(|a| (a.right - a.left, a.left));
    let mut rows: Vec<Vec<Arc>> = Vec::new();
    for a in sorted {
        let y = rows
            .iter()
            .rposition(|row| row.iter().any(|b| a.left <= b.right && b.left <= a.right))
            .map_or(0, |i| i + 1);
        if y == rows.len() {
            rows.push(Vec::new());
        }
        rows[y].push(a);
    }
    rows
}

pub fn arc_diagram(p: &SetPartition) -> String {
    let n = p.n();
    if n == 0 {
        return "(empty)\n".into();
    }
    let first = p.convention().first();
    let red: Vec<bool> = (0..n)
        .map(|i| {
            p.convention() == Convention::ZeroBased
                && p.block_index_of(first + i) == p.block_index_of(0)
        })
        .collect();
    let width = (first + n - 1).to_string().len().max(MIN_WIDTH - 1) + 1;
    let col = |node: usize| (node - first) * width;
    let line_len = col(first + n - 1) + 1;

    let set = arcs(p);
    let rows = layer(set.arcs());
    let mut grid = vec![vec![' '; line_len]; rows.len()];
    // fill from the top row down so lower arcs overwrite legs passing through
    for (depth, row) in rows.iter().enumerate().rev() {
        let y = rows.len() - 1 - depth;
        for a in row {
            let is_red = red[a.left - first];
            let (h, v) = if is_red { ('=', ':') } else { ('-', '|') };
            let (l, r) = (col(a.left), col(a.right));
            for cell in &mut grid[y][l + 1..r] {
                if *cell == ' ' {
                    *cell = h;
                }
            }
            grid[y][l] = '+';
            grid[y][r] = '+';
            for line in grid.iter_mut().skip(y + 1) {
                for x in [l, r] {
                    if line[x] == ' ' || line[x] == '-' || line[x] == '=' {
                        line[x] = v;
                    }
                }
            }
        }
    }

    let mut out = String::new();
    for line in &grid {
        out.push_str(line.iter().collect::<String>().trim_end());
        out.push('\n');
    }
    let mut nodes = vec![' '; line_len];
    let mut labels = String::new();
    for i in 0..n {
        let single = p.block_of(first + i).is_some_and(|b| b.len() == 1);
        nodes[i * width] = match (red[i], single) {
            (false, false) => '*',
            (false, true) => 'o',
            (true, false) => '@',
            (true, true) => 'O',
        };
        labels.push_str(&format!("{:<width$}", first + i));
    }
    out.push_str(nodes.iter().collect::<String>().trim_end());
    out.push('\n');
    out.push_str(labels.trim_end());
    out.push('\n');
    out
}

/// Rows top to bottom, row `r` holding `r` cells; `•` marks a 1.
pub fn filling_grid(f: &TriangularFilling) -> String {
    let n = f.order();
    if n == 0 {
        return "(empty shape)\n".into();
    }
    let w = n.to_string().len();
    let mut out = String::new();
    for r in 1..=n {
        out.push_str(&format!("{r:>w$} |"));
        for c in 1..=r {
            let glyph = if f.ones().contains(&(r, c)) {
                '•'
            } else {
                '·'
            };
            out.push_str(&format!(" {glyph:>w$}"));
        }
        out.push('\n');
    }
    out.push_str(&format!("{:>w$} +{}\n", "", "-".repeat(n * (w + 1))));
    out.push_str(&format!("{:>w$}  ", ""));
    for c in 1..=n {
        out.push_str(&format!(" {c:>w$}"));
    }
    out.push('\n');
    out
}
