//! Graphviz export.

use std::fmt::Write;

use mdc_core::{Coloring, Direction, OrientedPath};

/// Fill colors by color id, cycling past 12. Id 0 (`C0`) is always first.
pub const PALETTE: [&str; 12] = [
    "#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462", "#b3de69", "#fccde5",
    "#d9d9d9", "#bc80bd", "#ccebc5", "#ffed6f",
];

pub fn fill_color(color: usize) -> &'static str {
    PALETTE[color % PALETTE.len()]
}

/// Directed DOT graph with nodes `v1..vn` and one edge per arc. Nodes are
/// filled by color id when a coloring is given.
pub fn export_dot(path: &OrientedPath, coloring: Option<&Coloring>) -> String {
    let mut out = String::new();
    writeln!(out, "digraph P{} {{", path.n()).unwrap();
    writeln!(out, "  rankdir=LR;").unwrap();
    writeln!(out, "  node [shape=circle];").unwrap();
    for v in 0..path.n() {
        match coloring {
            Some(c) => writeln!(
                out,
                "  v{id} [label=\"v{id}\", style=filled, fillcolor=\"{fill}\", tooltip=\"color {color}\"];",
                id = v + 1,
                fill = fill_color(c.color(v)),
                color = c.color(v),
            ),
            None => writeln!(out, "  v{id} [label=\"v{id}\"];", id = v + 1),
        }
        .unwrap();
    }
    for (i, dir) in path.arcs().iter().enumerate() {
        let (tail, head) = match dir {
            Direction::Forward => (i + 1, i + 2),
            Direction::Backward => (i + 2, i + 1),
        };
        writeln!(out, "  v{tail} -> v{head};").unwrap();
    }
    out.push_str("}\n");
    out
}
