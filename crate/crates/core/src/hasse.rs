//! Hasse diagrams in Graphviz DOT.

use std::fmt::Write;

use crate::lattice::FiniteLattice;
use crate::mu;

fn quote(label: &str) -> String {
    let mut out = String::with_capacity(label.len() + 2);
    out.push('"');
    for c in label.chars() {
        if c == '"' || c == '\\' {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}

/// One node per element and one edge per cover pair, both in index order.
/// Nodes carry `mu`, `essential` and `irreducible` attributes; mu-elements
/// are drawn with a double outline.
pub fn to_dot(lattice: &FiniteLattice) -> String {
    let reports = mu::analyze(lattice);
    let mut out = String::new();
    out.push_str("digraph lattice {\n  rankdir=BT;\n  node [shape=ellipse];\n");
    for r in &reports {
        let x = r.element;
        writeln!(
            out,
            "  n{x} [label={}, mu={}, essential={}, irreducible={}{}];",
            quote(lattice.label(x)),
            r.mu,
            r.essential,
            r.irreducible,
            if r.mu { ", peripheries=2" } else { "" }
        )
        .expect("writing to a String");
    }
    for (x, y) in lattice.cover_pairs() {
        writeln!(out, "  n{x} -> n{y};").expect("writing to a String");
    }
    out.push_str("}\n");
    out
}
