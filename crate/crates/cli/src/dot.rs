// SPDX-License-Identifier: MIT
//! Graphviz output. Every edge is written once; `dir` carries the marks.

use std::fmt::Write;

use mag_core::{EdgeKind, Mark, MixedGraph};

fn quoted(name: &str) -> String {
    format!("\"{}\"", name.replace('\\', "\\\\").replace('"', "\\\""))
}

pub fn dot_export(g: &MixedGraph) -> String {
    let mut out = String::from("digraph mag {\n");
    for name in g.names() {
        writeln!(out, "  {};", quoted(name)).unwrap();
    }
    for e in g.edges() {
        let (from, to, dir) = match e.kind() {
            EdgeKind::Directed if e.at_v == Mark::Arrowhead => (e.u, e.v, "forward"),
            EdgeKind::Directed => (e.v, e.u, "forward"),
            EdgeKind::Bidirected => (e.u, e.v, "both"),
            EdgeKind::Undirected => (e.u, e.v, "none"),
        };
        writeln!(
            out,
            "  {} -> {} [dir={dir}];",
            quoted(g.name(from)),
            quoted(g.name(to))
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}
