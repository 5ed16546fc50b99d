//! DOT export: vertices named by index, arc lines in (source, target) order,
//! byte-deterministic output.

use kgeo_core::Digraph;
use std::fmt::Write as _;

pub fn export_dot(g: &Digraph) -> String {
    let mut text = String::from("digraph G {\n");
    for v in 0..g.order() {
        let _ = writeln!(text, "  {v};");
    }
    for (u, v) in g.arcs() {
        let _ = writeln!(text, "  {u} -> {v};");
    }
    text.push_str("}\n");
    text
}
