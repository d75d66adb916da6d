// SPDX-License-Identifier: MIT
//! Mixed graphs whose edges carry a tail or arrowhead mark at each end.
//!
//! Vertices are identified by their position in the lexicographically sorted
//! name list, so vertex `0` always has the smallest name and canonical edge
//! order is simply index order.

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Mark at one end of an edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mark {
    Tail,
    Arrowhead,
}

/// Edge type, independent of orientation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeKind {
    Directed,
    Bidirected,
    Undirected,
}

/// Parses an edge token (`->`, `<-`, `<->`, `--`) into the marks at its
/// left and right endpoint.
pub fn parse_edge_token(token: &str) -> Option<(Mark, Mark)> {
    match token {
        "->" => Some((Mark::Tail, Mark::Arrowhead)),
        "<-" => Some((Mark::Arrowhead, Mark::Tail)),
        "<->" => Some((Mark::Arrowhead, Mark::Arrowhead)),
        "--" => Some((Mark::Tail, Mark::Tail)),
        _ => None,
    }
}

/// Inverse of [`parse_edge_token`].
pub fn edge_token(left: Mark, right: Mark) -> &'static str {
    match (left, right) {
        (Mark::Tail, Mark::Arrowhead) => "->",
        (Mark::Arrowhead, Mark::Tail) => "<-",
        (Mark::Arrowhead, Mark::Arrowhead) => "<->",
        (Mark::Tail, Mark::Tail) => "--",
    }
}

/// An edge in canonical form: `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub at_u: Mark,
    pub at_v: Mark,
}

impl Edge {
    pub fn kind(&self) -> EdgeKind {
        match (self.at_u, self.at_v) {
            (Mark::Arrowhead, Mark::Arrowhead) => EdgeKind::Bidirected,
            (Mark::Tail, Mark::Tail) => EdgeKind::Undirected,
            _ => EdgeKind::Directed,
        }
    }

    pub fn token(&self) -> &'static str {
        edge_token(self.at_u, self.at_v)
    }
}

/// Three distinct vertices `a - b - c` with `b` in the middle. Stored with
/// `a < c`; `⟨a,b,c⟩` and `⟨c,b,a⟩` are the same triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triple {
    pub a: usize,
    pub b: usize,
    pub c: usize,
}

impl Triple {
    pub fn new(a: usize, b: usize, c: usize) -> Self {
        if a <= c {
            Triple { a, b, c }
        } else {
            Triple { a: c, b, c: a }
        }
    }

    pub fn display<'a>(&'a self, g: &'a MixedGraph) -> impl fmt::Display + 'a {
        DisplayTriple { t: self, g }
    }
}

struct DisplayTriple<'a> {
    t: &'a Triple,
    g: &'a MixedGraph,
}

impl fmt::Display for DisplayTriple<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{},{})",
            self.g.name(self.t.a),
            self.g.name(self.t.b),
            self.g.name(self.t.c)
        )
    }
}

/// A sequence of distinct vertices, consecutive members adjacent.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path(pub Vec<usize>);

impl Path {
    /// Checks the path invariants against `g`.
    pub fn new(g: &MixedGraph, vertices: Vec<usize>) -> Result<Self> {
        if vertices.len() < 2 {
            return Err(Error::InvalidPath("a path needs at least two vertices"));
        }
        for &v in &vertices {
            g.check_vertex(v)?;
        }
        let distinct: BTreeSet<_> = vertices.iter().collect();
        if distinct.len() != vertices.len() {
            return Err(Error::InvalidPath("path vertices must be distinct"));
        }
        if vertices.windows(2).any(|w| !g.is_adjacent(w[0], w[1])) {
            return Err(Error::InvalidPath(
                "consecutive path vertices must be adjacent",
            ));
        }
        Ok(Path(vertices))
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn display<'a>(&'a self, g: &'a MixedGraph) -> impl fmt::Display + 'a {
        DisplayPath { p: self, g }
    }
}

struct DisplayPath<'a> {
    p: &'a Path,
    g: &'a MixedGraph,
}

impl fmt::Display for DisplayPath<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vs = &self.p.0;
        if let Some(&first) = vs.first() {
            f.write_str(self.g.name(first))?;
        }
        for w in vs.windows(2) {
            let left = self.g.end_mark(w[1], w[0]).unwrap_or(Mark::Tail);
            let right = self.g.end_mark(w[0], w[1]).unwrap_or(Mark::Tail);
            write!(f, " {} {}", edge_token(left, right), self.g.name(w[1]))?;
        }
        Ok(())
    }
}

/// The four relation sets of a vertex.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Relations {
    pub parents: BTreeSet<usize>,
    pub children: BTreeSet<usize>,
    pub spouses: BTreeSet<usize>,
    pub undirected: BTreeSet<usize>,
}

/// Vertices plus at most one edge per pair, each edge end carrying a [`Mark`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MixedGraph {
    names: Vec<String>,
    // ends[u * n + v] is the mark at v on the edge {u, v}
    ends: Vec<Option<Mark>>,
    adj: Vec<Vec<usize>>,
}

impl MixedGraph {
    /// Builds a graph from vertex names and `(endpoint, endpoint, mark at
    /// first, mark at second)` edge specs.
    pub fn new<V, A, B, E>(vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator,
        V::Item: AsRef<str>,
        A: AsRef<str>,
        B: AsRef<str>,
        E: IntoIterator<Item = (A, B, Mark, Mark)>,
    {
        let mut names: Vec<String> = Vec::new();
        for v in vertices {
            let v = v.as_ref();
            if v.is_empty() {
                return Err(Error::EmptyVertexName);
            }
            names.push(v.to_string());
        }
        names.sort();
        if let Some(w) = names.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateVertex(w[0].clone()));
        }
        let mut g = MixedGraph::empty_sorted(names);
        for (a, b, ma, mb) in edges {
            let (a, b) = (a.as_ref(), b.as_ref());
            let u = g.vertex(a)?;
            let v = g.vertex(b)?;
            if u == v {
                return Err(Error::SelfLoop(a.to_string()));
            }
            if g.is_adjacent(u, v) {
                let (x, y) = if u < v { (a, b) } else { (b, a) };
                return Err(Error::DuplicateEdge(x.to_string(), y.to_string()));
            }
            g.put_edge(u, v, ma, mb);
        }
        Ok(g)
    }

    /// Builds a graph from token triples such as `("x", "->", "y")`. Vertex
    /// names are collected from the edges plus `extra_vertices`.
    ///
    /// Panics on an unknown token; intended for fixtures.
    pub fn from_tokens(extra_vertices: &[&str], edges: &[(&str, &str, &str)]) -> Result<Self> {
        let mut vs: BTreeSet<&str> = extra_vertices.iter().copied().collect();
        for &(a, _, b) in edges {
            vs.insert(a);
            vs.insert(b);
        }
        let specs = edges.iter().map(|&(a, tok, b)| {
            let (ma, mb) = parse_edge_token(tok).expect("unknown edge token");
            (a, b, ma, mb)
        });
        MixedGraph::new(vs, specs)
    }

    fn empty_sorted(names: Vec<String>) -> Self {
        let n = names.len();
        MixedGraph {
            names,
            ends: vec![None; n * n],
            adj: vec![Vec::new(); n],
        }
    }

    /// Graph over the given names with no edges.
    pub fn edgeless<V>(vertices: V) -> Result<Self>
    where
        V: IntoIterator,
        V::Item: AsRef<str>,
    {
        MixedGraph::new(vertices, core::iter::empty::<(&str, &str, Mark, Mark)>())
    }

    fn put_edge(&mut self, u: usize, v: usize, at_u: Mark, at_v: Mark) {
        let n = self.n();
        if self.ends[u * n + v].is_none() {
            let pos = self.adj[u].binary_search(&v).unwrap_err();
            self.adj[u].insert(pos, v);
            let pos = self.adj[v].binary_search(&u).unwrap_err();
            self.adj[v].insert(pos, u);
        }
        self.ends[v * n + u] = Some(at_u);
        self.ends[u * n + v] = Some(at_v);
    }

    /// Sets the mark at `at` on the existing edge `{other, at}`.
    pub(crate) fn set_end(&mut self, other: usize, at: usize, mark: Mark) {
        let n = self.n();
        debug_assert!(self.ends[other * n + at].is_some());
        self.ends[other * n + at] = Some(mark);
    }

    /// Returns a copy with the edge `{u, v}` added or replaced.
    pub fn with_edge(&self, u: usize, v: usize, at_u: Mark, at_v: Mark) -> Result<Self> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(self.names[u].clone()));
        }
        let mut g = self.clone();
        g.put_edge(u, v, at_u, at_v);
        Ok(g)
    }

    /// Same vertices and adjacencies, marks taken from `marks` in canonical
    /// edge order.
    pub(crate) fn with_marks(&self, marks: &[(Mark, Mark)]) -> Self {
        let mut g = self.clone();
        for (e, &(mu, mv)) in self.edges().zip(marks) {
            g.put_edge(e.u, e.v, mu, mv);
        }
        g
    }

    /// Induced subgraph on `keep` (indices into this graph).
    pub fn induced(&self, keep: &[usize]) -> Self {
        let mut keep: Vec<usize> = keep.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let names = keep.iter().map(|&v| self.names[v].clone()).collect();
        let mut g = MixedGraph::empty_sorted(names);
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate().skip(i + 1) {
                if let (Some(mu), Some(mv)) = (self.end_mark(v, u), self.end_mark(u, v)) {
                    g.put_edge(i, j, mu, mv);
                }
            }
        }
        g
    }

    /// Copy without the edges for which `drop` returns true.
    pub fn without_edges(&self, mut drop: impl FnMut(&Edge) -> bool) -> Self {
        let mut g = MixedGraph::empty_sorted(self.names.clone());
        for e in self.edges().filter(|e| !drop(e)) {
            g.put_edge(e.u, e.v, e.at_u, e.at_v);
        }
        g
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.binary_search_by(|n| n.as_str().cmp(name)).ok()
    }

    /// Resolves a name, failing with [`Error::UnknownVertex`].
    pub fn vertex(&self, name: &str) -> Result<usize> {
        self.index_of(name)
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange(v))
        }
    }

    pub(crate) fn require_adjacent(&self, u: usize, v: usize) -> Result<()> {
        if self.is_adjacent(u, v) {
            Ok(())
        } else {
            Err(Error::NotAdjacent(
                self.names[u].clone(),
                self.names[v].clone(),
            ))
        }
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.ends[u * self.n() + v].is_some()
    }

    /// Mark at `at` on the edge between `other` and `at`.
    pub fn end_mark(&self, other: usize, at: usize) -> Option<Mark> {
        self.ends[other * self.n() + at]
    }

    /// True iff the edge `{other, at}` exists and has an arrowhead at `at`.
    pub fn has_arrowhead(&self, other: usize, at: usize) -> bool {
        self.end_mark(other, at) == Some(Mark::Arrowhead)
    }

    pub fn has_tail(&self, other: usize, at: usize) -> bool {
        self.end_mark(other, at) == Some(Mark::Tail)
    }

    /// `u -> v`
    pub fn is_parent(&self, u: usize, v: usize) -> bool {
        self.has_tail(v, u) && self.has_arrowhead(u, v)
    }

    /// `u <-> v`
    pub fn is_spouse(&self, u: usize, v: usize) -> bool {
        self.has_arrowhead(v, u) && self.has_arrowhead(u, v)
    }

    /// `u -- v`
    pub fn is_undirected(&self, u: usize, v: usize) -> bool {
        self.has_tail(v, u) && self.has_tail(u, v)
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// Edges in canonical order: by `u`, then `v`, with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..self.n()).flat_map(move |u| {
            self.adj[u]
                .iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| Edge {
                    u,
                    v,
                    at_u: self.end_mark(v, u).unwrap(),
                    at_v: self.end_mark(u, v).unwrap(),
                })
        })
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn arrowhead_count(&self) -> usize {
        self.ends
            .iter()
            .filter(|m| **m == Some(Mark::Arrowhead))
            .count()
    }

    pub fn parents(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v]
            .iter()
            .copied()
            .filter(move |&u| self.is_parent(u, v))
    }

    pub fn children(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v]
            .iter()
            .copied()
            .filter(move |&u| self.is_parent(v, u))
    }

    pub fn relations(&self, v: usize) -> Result<Relations> {
        self.check_vertex(v)?;
        let mut r = Relations::default();
        for &u in &self.adj[v] {
            match (self.end_mark(v, u).unwrap(), self.end_mark(u, v).unwrap()) {
                (Mark::Tail, Mark::Arrowhead) => r.parents.insert(u),
                (Mark::Arrowhead, Mark::Tail) => r.children.insert(u),
                (Mark::Arrowhead, Mark::Arrowhead) => r.spouses.insert(u),
                (Mark::Tail, Mark::Tail) => r.undirected.insert(u),
            };
        }
        Ok(r)
    }

    /// Membership mask of the ancestors of `targets` (each target included).
    pub fn ancestor_mask(&self, targets: impl IntoIterator<Item = usize>) -> Vec<bool> {
        let mut seen = vec![false; self.n()];
        let mut stack: Vec<usize> = Vec::new();
        for t in targets {
            if !seen[t] {
                seen[t] = true;
                stack.push(t);
            }
        }
        while let Some(v) = stack.pop() {
            for u in self.parents(v) {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        seen
    }

    fn descendant_mask(&self, v: usize) -> Vec<bool> {
        let mut seen = vec![false; self.n()];
        seen[v] = true;
        let mut stack = vec![v];
        while let Some(u) = stack.pop() {
            for w in self.children(u) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen
    }

    /// `v` together with every vertex that has a directed path into `v`.
    pub fn ancestors(&self, v: usize) -> Result<BTreeSet<usize>> {
        self.check_vertex(v)?;
        Ok(mask_to_set(&self.ancestor_mask([v])))
    }

    pub fn descendants(&self, v: usize) -> Result<BTreeSet<usize>> {
        self.check_vertex(v)?;
        Ok(mask_to_set(&self.descendant_mask(v)))
    }

    pub fn is_ancestor(&self, u: usize, v: usize) -> bool {
        self.ancestor_mask([v])[u]
    }

    /// Some directed cycle, listed from its first vertex, if one exists.
    pub fn directed_cycle(&self) -> Option<Vec<usize>> {
        // 0 = unvisited, 1 = on stack, 2 = done
        let n = self.n();
        let mut state = vec![0u8; n];
        let mut parent = vec![usize::MAX; n];
        for root in 0..n {
            if state[root] != 0 {
                continue;
            }
            let mut stack: Vec<(usize, usize)> = vec![(root, 0)];
            state[root] = 1;
            while let Some(&mut (v, ref mut i)) = stack.last_mut() {
                let kids = &self.adj[v];
                if *i < kids.len() {
                    let w = kids[*i];
                    *i += 1;
                    if !self.is_parent(v, w) {
                        continue;
                    }
                    match state[w] {
                        0 => {
                            state[w] = 1;
                            parent[w] = v;
                            stack.push((w, 0));
                        }
                        1 => {
                            let mut cycle = vec![v];
                            let mut x = v;
                            while x != w {
                                x = parent[x];
                                cycle.push(x);
                            }
                            cycle.reverse();
                            return Some(cycle);
                        }
                        _ => {}
                    }
                } else {
                    state[v] = 2;
                    stack.pop();
                }
            }
        }
        None
    }

    /// All edges directed and no directed cycle.
    pub fn is_dag(&self) -> bool {
        self.edges().all(|e| e.kind() == EdgeKind::Directed) && self.directed_cycle().is_none()
    }

    /// Same vertices and adjacencies with every end a tail.
    pub fn skeleton(&self) -> Self {
        MixedGraph {
            names: self.names.clone(),
            ends: self.ends.iter().map(|m| m.map(|_| Mark::Tail)).collect(),
            adj: self.adj.clone(),
        }
    }

    /// True iff every edge end is a tail.
    pub fn is_skeleton(&self) -> bool {
        self.ends.iter().all(|m| *m != Some(Mark::Arrowhead))
    }

    /// Same vertex names and same adjacencies.
    pub fn same_skeleton(&self, other: &MixedGraph) -> bool {
        self.names == other.names && self.adj == other.adj
    }

    /// Every `⟨a,b,c⟩` with `a - b - c` adjacent and `a != c`, each once.
    pub fn adjacent_triples(&self) -> Vec<Triple> {
        let mut out = Vec::new();
        for b in 0..self.n() {
            let nb = &self.adj[b];
            for (i, &a) in nb.iter().enumerate() {
                for &c in &nb[i + 1..] {
                    out.push(Triple { a, b, c });
                }
            }
        }
        out.sort();
        out
    }

    pub fn is_unshielded(&self, t: &Triple) -> bool {
        !self.is_adjacent(t.a, t.c)
    }

    pub fn unshielded_triples(&self) -> Vec<Triple> {
        self.adjacent_triples()
            .into_iter()
            .filter(|t| self.is_unshielded(t))
            .collect()
    }

    /// Adjacent-pair triples whose outer vertices are adjacent.
    pub fn shielded_triples(&self) -> Vec<Triple> {
        self.adjacent_triples()
            .into_iter()
            .filter(|t| !self.is_unshielded(t))
            .collect()
    }

    /// Vertex sets `{x < y < z}` that are pairwise adjacent.
    pub fn triangles(&self) -> Vec<[usize; 3]> {
        let mut out = Vec::new();
        for x in 0..self.n() {
            for &y in self.adj[x].iter().filter(|&&y| y > x) {
                for &z in self.adj[y].iter().filter(|&&z| z > y) {
                    if self.is_adjacent(x, z) {
                        out.push([x, y, z]);
                    }
                }
            }
        }
        out
    }

    /// Arrowheads at `b` on both `(a, b)` and `(c, b)`.
    pub fn is_collider(&self, a: usize, b: usize, c: usize) -> Result<bool> {
        for v in [a, b, c] {
            self.check_vertex(v)?;
        }
        self.require_adjacent(a, b)?;
        self.require_adjacent(b, c)?;
        Ok(self.collider_unchecked(a, b, c))
    }

    pub(crate) fn collider_unchecked(&self, a: usize, b: usize, c: usize) -> bool {
        self.has_arrowhead(a, b) && self.has_arrowhead(c, b)
    }

    /// Names of the vertices in `set`, in index order.
    pub fn names_of<'a>(&'a self, set: impl IntoIterator<Item = &'a usize> + 'a) -> Vec<&'a str> {
        set.into_iter().map(|&v| self.name(v)).collect()
    }
}

pub(crate) fn mask_to_set(mask: &[bool]) -> BTreeSet<usize> {
    mask.iter()
        .enumerate()
        .filter_map(|(i, &b)| b.then_some(i))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn set(g: &MixedGraph, names: &[&str]) -> BTreeSet<usize> {
        names.iter().map(|n| g.vertex(n).unwrap()).collect()
    }

    #[test]
    fn build_smallest_directed_graph() {
        let g = fixtures::edge1();
        assert_eq!(g.n(), 2);
        assert!(g.is_parent(0, 1));
        assert_eq!(g.edges().next().unwrap().kind(), EdgeKind::Directed);
    }

    #[test]
    fn build_errors_are_distinct() {
        let t = Mark::Tail;
        let h = Mark::Arrowhead;
        assert_eq!(
            MixedGraph::new(["a", "b"], [("a", "b", t, h), ("b", "a", t, h)]),
            Err(Error::DuplicateEdge("a".into(), "b".into()))
        );
        assert_eq!(
            MixedGraph::new(["a", "a"], [("a", "a", t, h)]),
            Err(Error::DuplicateVertex("a".into()))
        );
        assert_eq!(
            MixedGraph::new(["a"], [("a", "a", t, h)]),
            Err(Error::SelfLoop("a".into()))
        );
        assert_eq!(
            MixedGraph::new(["a"], [("a", "z", t, h)]),
            Err(Error::UnknownVertex("z".into()))
        );
        assert_eq!(
            MixedGraph::new([""], core::iter::empty::<(&str, &str, Mark, Mark)>()),
            Err(Error::EmptyVertexName)
        );
    }

    #[test]
    fn edges_are_canonicalized() {
        let g = MixedGraph::from_tokens(&[], &[("b", "->", "a")]).unwrap();
        let e = g.edges().next().unwrap();
        assert_eq!((e.u, e.v), (0, 1));
        assert_eq!(e.token(), "<-");
        assert_eq!(
            g,
            MixedGraph::from_tokens(&[], &[("a", "<-", "b")]).unwrap()
        );
    }

    #[test]
    fn relations_of_treatment_mag() {
        let g = fixtures::treatment_mag();
        let cd4 = g.vertex("CD4").unwrap();
        let r = g.relations(cd4).unwrap();
        assert_eq!(r.parents, set(&g, &["Ap"]));
        assert_eq!(r.spouses, set(&g, &["Pcp"]));
        assert!(r.children.is_empty());
        assert!(r.undirected.is_empty());

        let e = fixtures::edge1();
        let r = e.relations(0).unwrap();
        assert_eq!(r.children, [1].into());
        assert!(r.parents.is_empty() && r.spouses.is_empty() && r.undirected.is_empty());

        let lone = MixedGraph::edgeless(["v"]).unwrap();
        assert_eq!(lone.relations(0).unwrap(), Relations::default());
        assert_eq!(lone.relations(3), Err(Error::VertexOutOfRange(3)));
    }

    #[test]
    fn ancestors_follow_directed_edges_only() {
        let c = fixtures::chain3();
        assert_eq!(
            c.ancestors(c.vertex("z").unwrap()).unwrap(),
            set(&c, &["x", "y", "z"])
        );
        assert_eq!(
            c.descendants(c.vertex("x").unwrap()).unwrap(),
            set(&c, &["x", "y", "z"])
        );

        let b = MixedGraph::from_tokens(&[], &[("a", "<->", "b")]).unwrap();
        assert_eq!(b.ancestors(1).unwrap(), [1].into());

        let g = fixtures::treatment_mag();
        assert_eq!(
            g.ancestors(g.vertex("CD4").unwrap()).unwrap(),
            set(&g, &["Ap", "CD4"])
        );
    }

    #[test]
    fn skeleton_strips_arrowheads() {
        let s = fixtures::edge1().skeleton();
        assert!(s.is_undirected(0, 1));

        let g = fixtures::treatment_mag();
        let s = g.skeleton();
        let expected = MixedGraph::from_tokens(
            &[],
            &[
                ("Azt", "--", "Pcp"),
                ("Pcp", "--", "CD4"),
                ("CD4", "--", "Ap"),
            ],
        )
        .unwrap();
        assert_eq!(s, expected);
        assert!(s.triangles().is_empty());
        assert_eq!(s.skeleton(), s);
    }

    #[test]
    fn unshielded_triples_and_triangles() {
        let c = fixtures::chain3();
        assert_eq!(c.unshielded_triples(), vec![Triple::new(0, 1, 2)]);

        let k3 =
            MixedGraph::from_tokens(&[], &[("a", "--", "b"), ("b", "--", "c"), ("a", "--", "c")])
                .unwrap();
        assert!(k3.unshielded_triples().is_empty());
        assert_eq!(k3.triangles(), vec![[0, 1, 2]]);

        let g = fixtures::treatment_mag();
        let v = |n| g.vertex(n).unwrap();
        let got: BTreeSet<_> = g.unshielded_triples().into_iter().collect();
        let want: BTreeSet<_> = [
            Triple::new(v("Azt"), v("Pcp"), v("CD4")),
            Triple::new(v("Pcp"), v("CD4"), v("Ap")),
        ]
        .into();
        assert_eq!(got, want);
    }

    #[test]
    fn collider_shapes() {
        let g = MixedGraph::from_tokens(&[], &[("x", "->", "q"), ("z", "->", "q")]).unwrap();
        let v = |n| g.vertex(n).unwrap();
        assert_eq!(g.is_collider(v("x"), v("q"), v("z")), Ok(true));
        let g = fixtures::chain3();
        assert_eq!(g.is_collider(0, 1, 2), Ok(false));
        assert!(matches!(
            g.is_collider(0, 2, 1),
            Err(Error::NotAdjacent(..))
        ));

        let g = fixtures::treatment_mag();
        let v = |n| g.vertex(n).unwrap();
        assert_eq!(g.is_collider(v("Azt"), v("Pcp"), v("CD4")), Ok(true));
    }

    #[test]
    fn directed_cycle_is_found() {
        let g =
            MixedGraph::from_tokens(&[], &[("x", "->", "y"), ("y", "->", "z"), ("z", "->", "x")])
                .unwrap();
        let cyc = g.directed_cycle().unwrap();
        assert_eq!(cyc.len(), 3);
        for i in 0..3 {
            assert!(g.is_parent(cyc[i], cyc[(i + 1) % 3]));
        }
        assert!(fixtures::chain3().directed_cycle().is_none());
        assert!(fixtures::chain3().is_dag());
        assert!(!fixtures::treatment_mag().is_dag());
    }

    #[test]
    fn path_invariants() {
        let g = fixtures::chain3();
        assert!(Path::new(&g, vec![0, 1, 2]).is_ok());
        assert!(Path::new(&g, vec![0, 2]).is_err());
        assert!(Path::new(&g, vec![0]).is_err());
        assert!(Path::new(&g, vec![0, 1, 0]).is_err());
    }
}
