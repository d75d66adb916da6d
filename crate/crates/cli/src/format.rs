// SPDX-License-Identifier: MIT
//! The `.mag` text format.
//!
//! Blank lines and lines starting with `#` are ignored. The first remaining
//! line is `vertices:` followed by space-separated names made of ASCII
//! letters, digits and `_`. Every later line is `edge NAME TOKEN NAME` with
//! a token among `->`, `<-`, `<->`, `--`.

use std::fmt::Write;

use mag_core::graph::{edge_token, parse_edge_token};
use mag_core::MixedGraph;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    Graph {
        line: usize,
        #[source]
        source: mag_core::Error,
    },
    #[error("missing `vertices:` line")]
    MissingVertices,
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        message: message.into(),
    }
}

fn valid_name(name: &str) -> bool {
    !name.is_empty() && name.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_')
}

pub fn parse_graph(text: &str) -> Result<MixedGraph, ParseError> {
    let mut graph: Option<MixedGraph> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        if let Some(rest) = content.strip_prefix("vertices:") {
            if graph.is_some() {
                return Err(syntax(line, "second `vertices:` line"));
            }
            let names: Vec<&str> = rest.split_whitespace().collect();
            if let Some(bad) = names.iter().find(|n| !valid_name(n)) {
                return Err(syntax(line, format!("invalid vertex name `{bad}`")));
            }
            let g = MixedGraph::edgeless(&names)
                .map_err(|source| ParseError::Graph { line, source })?;
            graph = Some(g);
            continue;
        }
        let words: Vec<&str> = content.split_whitespace().collect();
        let [kw, a, tok, b] = words[..] else {
            return Err(syntax(line, "expected `edge NAME TOKEN NAME`"));
        };
        if kw != "edge" {
            return Err(syntax(line, format!("unknown directive `{kw}`")));
        }
        let Some((ma, mb)) = parse_edge_token(tok) else {
            return Err(syntax(line, format!("unknown edge token `{tok}`")));
        };
        let Some(g) = graph.as_mut() else {
            return Err(syntax(line, "edge before the `vertices:` line"));
        };
        let added = g
            .vertex(a)
            .and_then(|u| Ok((u, g.vertex(b)?)))
            .and_then(|(u, v)| {
                if u == v {
                    Err(mag_core::Error::SelfLoop(a.into()))
                } else if g.is_adjacent(u, v) {
                    let (x, y) = if u < v { (a, b) } else { (b, a) };
                    Err(mag_core::Error::DuplicateEdge(x.into(), y.into()))
                } else {
                    g.with_edge(u, v, ma, mb)
                }
            })
            .map_err(|source| ParseError::Graph { line, source })?;
        *g = added;
    }
    graph.ok_or(ParseError::MissingVertices)
}

/// Canonical text: vertices sorted, edges sorted by endpoint pair with the
/// smaller name first.
pub fn serialize_graph(g: &MixedGraph) -> String {
    let mut out = String::from("vertices:");
    for name in g.names() {
        out.push(' ');
        out.push_str(name);
    }
    out.push('\n');
    // names are sorted, so index order is name order
    for e in g.edges() {
        writeln!(
            out,
            "edge {} {} {}",
            g.name(e.u),
            edge_token(e.at_u, e.at_v),
            g.name(e.v)
        )
        .unwrap();
    }
    out
}
