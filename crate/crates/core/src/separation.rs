// SPDX-License-Identifier: MIT
//! m-separation (d-separation on DAGs), full independence models and
//! inducing paths.
//!
//! Two engines answer separation queries. [`Engine::Paths`] enumerates simple
//! paths depth first and is the reference; [`Engine::Reachability`] searches
//! over `(vertex, arrived with arrowhead)` states and is linear in the edge
//! count. Both treat a vertex as a collider iff both incident path edges carry
//! an arrowhead at it, and call a collider open iff it is an ancestor of `Z`.
//!
//! The reachability search finds m-connecting walks, which only guarantee an
//! m-connecting path in ancestral graphs: in `b -> a <- c`, `a -- d` the walk
//! `b -> a -- d -- a <- c` connects `b` and `c` although no path does. On
//! graphs that are not ancestral [`Engine::Reachability`] therefore falls
//! back to path enumeration.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::ancestral;
use crate::error::{Error, Result};
use crate::graph::{MixedGraph, Path};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Engine {
    #[default]
    Paths,
    Reachability,
}

/// `a ⊥ b | given` with `a < b` and `given` sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Statement {
    pub a: usize,
    pub b: usize,
    pub given: Vec<usize>,
}

impl Statement {
    pub fn new(a: usize, b: usize, mut given: Vec<usize>) -> Self {
        given.sort_unstable();
        given.dedup();
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        Statement { a, b, given }
    }

    pub fn display<'a>(&'a self, g: &'a MixedGraph) -> impl fmt::Display + 'a {
        DisplayStatement { s: self, g }
    }
}

struct DisplayStatement<'a> {
    s: &'a Statement,
    g: &'a MixedGraph,
}

impl fmt::Display for DisplayStatement<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} _||_ {} | {{",
            self.g.name(self.s.a),
            self.g.name(self.s.b)
        )?;
        for (i, &z) in self.s.given.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str(self.g.name(z))?;
        }
        f.write_str("}")
    }
}

/// Every singleton separation statement a graph entails.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndependenceModel {
    pub statements: BTreeSet<Statement>,
}

impl IndependenceModel {
    pub fn contains(&self, a: usize, b: usize, given: &[usize]) -> bool {
        self.statements
            .contains(&Statement::new(a, b, given.to_vec()))
    }

    pub fn len(&self) -> usize {
        self.statements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.statements.is_empty()
    }

    /// Set-level separation: every cross pair is separated given `given`.
    pub fn separates_sets(&self, left: &[usize], right: &[usize], given: &[usize]) -> bool {
        left.iter()
            .all(|&a| right.iter().all(|&b| self.contains(a, b, given)))
    }

    /// Statements rewritten over vertex names; lets models over different
    /// vertex sets be compared.
    pub fn named(&self, g: &MixedGraph) -> BTreeSet<(String, String, Vec<String>)> {
        self.statements
            .iter()
            .map(|s| {
                let (a, b) = (g.name(s.a).into(), g.name(s.b).into());
                let (a, b) = if a <= b { (a, b) } else { (b, a) };
                let mut z: Vec<String> = s.given.iter().map(|&v| g.name(v).into()).collect();
                z.sort();
                (a, b, z)
            })
            .collect()
    }
}

fn validate_query(g: &MixedGraph, a: usize, b: usize, given: &[usize]) -> Result<Vec<bool>> {
    g.check_vertex(a)?;
    g.check_vertex(b)?;
    if a == b {
        return Err(Error::Overlap("endpoints coincide".into()));
    }
    let mut z = vec![false; g.n()];
    for &v in given {
        g.check_vertex(v)?;
        if v == a || v == b {
            return Err(Error::Overlap(alloc::format!(
                "`{}` is both an endpoint and conditioned on",
                g.name(v)
            )));
        }
        z[v] = true;
    }
    Ok(z)
}

/// True iff both path edges at the interior vertex `v` carry an arrowhead at `v`.
pub fn is_collider_on_path(g: &MixedGraph, path: &Path, v: usize) -> Result<bool> {
    let vs = path.vertices();
    let pos = vs
        .iter()
        .position(|&x| x == v)
        .filter(|&i| i > 0 && i + 1 < vs.len())
        .ok_or(Error::InvalidPath("vertex is not interior to the path"))?;
    Ok(g.collider_unchecked(vs[pos - 1], v, vs[pos + 1]))
}

struct Query<'g> {
    g: &'g MixedGraph,
    target: usize,
    in_z: Vec<bool>,
    anc_z: Vec<bool>,
}

impl Query<'_> {
    fn passes(&self, prev: usize, v: usize, next: usize) -> bool {
        if self.g.collider_unchecked(prev, v, next) {
            self.anc_z[v]
        } else {
            !self.in_z[v]
        }
    }

    fn dfs(&self, path: &mut Vec<usize>, on_path: &mut [bool]) -> bool {
        let v = *path.last().unwrap();
        for &w in self.g.neighbors(v) {
            if on_path[w] {
                continue;
            }
            if path.len() >= 2 && !self.passes(path[path.len() - 2], v, w) {
                continue;
            }
            path.push(w);
            if w == self.target {
                return true;
            }
            on_path[w] = true;
            if self.dfs(path, on_path) {
                return true;
            }
            on_path[w] = false;
            path.pop();
        }
        false
    }

    fn reachable(&self, source: usize) -> bool {
        let n = self.g.n();
        // state index: v * 2 + (arrived with arrowhead at v)
        let mut seen = vec![false; 2 * n];
        let mut queue = VecDeque::new();
        for &w in self.g.neighbors(source) {
            if w == self.target {
                return true;
            }
            let s = w * 2 + self.g.has_arrowhead(source, w) as usize;
            if !seen[s] {
                seen[s] = true;
                queue.push_back(s);
            }
        }
        while let Some(s) = queue.pop_front() {
            let (v, arrived_head) = (s / 2, s % 2 == 1);
            for &w in self.g.neighbors(v) {
                let collider = arrived_head && self.g.has_arrowhead(w, v);
                let open = if collider {
                    self.anc_z[v]
                } else {
                    !self.in_z[v]
                };
                if !open {
                    continue;
                }
                if w == self.target {
                    return true;
                }
                let t = w * 2 + self.g.has_arrowhead(v, w) as usize;
                if !seen[t] {
                    seen[t] = true;
                    queue.push_back(t);
                }
            }
        }
        false
    }
}

fn query<'g>(g: &'g MixedGraph, b: usize, in_z: Vec<bool>) -> Query<'g> {
    let anc_z = g.ancestor_mask((0..g.n()).filter(|&v| in_z[v]));
    Query {
        g,
        target: b,
        in_z,
        anc_z,
    }
}

/// An m-connecting path between `a` and `b` given `given`, if one exists.
pub fn m_connecting_path(
    g: &MixedGraph,
    a: usize,
    b: usize,
    given: &[usize],
) -> Result<Option<Path>> {
    let z = validate_query(g, a, b, given)?;
    let q = query(g, b, z);
    let mut path = vec![a];
    let mut on_path = vec![false; g.n()];
    on_path[a] = true;
    Ok(q.dfs(&mut path, &mut on_path).then_some(Path(path)))
}

/// True iff no path between `a` and `b` is m-connecting given `given`.
pub fn m_separated(g: &MixedGraph, a: usize, b: usize, given: &[usize]) -> Result<bool> {
    m_separated_with(g, a, b, given, Engine::Paths)
}

pub fn m_separated_with(
    g: &MixedGraph,
    a: usize,
    b: usize,
    given: &[usize],
    engine: Engine,
) -> Result<bool> {
    match engine {
        Engine::Paths => Ok(m_connecting_path(g, a, b, given)?.is_none()),
        Engine::Reachability if !ancestral::is_ancestral(g) => {
            Ok(m_connecting_path(g, a, b, given)?.is_none())
        }
        Engine::Reachability => {
            let z = validate_query(g, a, b, given)?;
            Ok(!query(g, b, z).reachable(a))
        }
    }
}

fn mask_members(mask: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |i| mask >> i & 1 == 1)
}

/// Calls `f(a, b, z)` for every pair `a < b` and every `Z ⊆ V \ {a, b}`,
/// with `Z` as a bit mask over vertex indices.
pub(crate) fn for_each_query(n: usize, mut f: impl FnMut(usize, usize, u64) -> bool) {
    assert!(
        n < 64,
        "independence models are limited to fewer than 64 vertices"
    );
    for a in 0..n {
        for b in a + 1..n {
            let rest: Vec<usize> = (0..n).filter(|&v| v != a && v != b).collect();
            for sub in 0u64..(1u64 << rest.len()) {
                let z = mask_members(sub).fold(0u64, |acc, i| acc | 1 << rest[i]);
                if !f(a, b, z) {
                    return;
                }
            }
        }
    }
}

/// Separation answer through the reachability engine with a bit-mask `Z`.
/// Only exact on ancestral graphs.
pub(crate) fn separated_mask(g: &MixedGraph, a: usize, b: usize, z: u64) -> bool {
    let in_z: Vec<bool> = (0..g.n()).map(|v| z >> v & 1 == 1).collect();
    !query(g, b, in_z).reachable(a)
}

/// All statements `a ⊥ b | Z` entailed by `g`, over every pair and every
/// `Z ⊆ V \ {a, b}`. Exponential in the vertex count.
pub fn independence_model(g: &MixedGraph) -> IndependenceModel {
    independence_model_with(g, Engine::Paths)
}

pub fn independence_model_with(g: &MixedGraph, engine: Engine) -> IndependenceModel {
    let mut statements = BTreeSet::new();
    for_each_query(g.n(), |a, b, z| {
        let given: Vec<usize> = mask_members(z).collect();
        if m_separated_with(g, a, b, &given, engine).expect("query is well formed") {
            statements.insert(Statement { a, b, given });
        }
        true
    });
    IndependenceModel { statements }
}

/// Whether `g1` and `g2`, over the same vertex names, entail the same model.
/// Stops at the first disagreeing query.
pub fn same_model(g1: &MixedGraph, g2: &MixedGraph) -> bool {
    if g1.names() != g2.names() {
        return false;
    }
    if !ancestral::is_ancestral(g1) || !ancestral::is_ancestral(g2) {
        return independence_model(g1) == independence_model(g2);
    }
    let mut same = true;
    for_each_query(g1.n(), |a, b, z| {
        same = separated_mask(g1, a, b, z) == separated_mask(g2, a, b, z);
        same
    });
    same
}

/// Some `Z ⊆ V \ {a, b}` that m-separates `a` and `b`, smallest first.
pub fn separating_set(g: &MixedGraph, a: usize, b: usize) -> Result<Option<Vec<usize>>> {
    validate_query(g, a, b, &[])?;
    let rest: Vec<usize> = (0..g.n()).filter(|&v| v != a && v != b).collect();
    let mut subsets: Vec<u64> = (0u64..(1u64 << rest.len())).collect();
    subsets.sort_by_key(|s| (s.count_ones(), *s));
    for sub in subsets {
        let given: Vec<usize> = mask_members(sub).map(|i| rest[i]).collect();
        if m_separated(g, a, b, &given)? {
            return Ok(Some(given));
        }
    }
    Ok(None)
}

/// A shortest inducing path between `a` and `b`: every interior vertex is a
/// collider on the path and an ancestor of `a` or `b`. A single edge is an
/// inducing path.
pub fn inducing_path(g: &MixedGraph, a: usize, b: usize) -> Result<Option<Path>> {
    validate_query(g, a, b, &[])?;
    let anc = g.ancestor_mask([a, b]);
    let mut queue: VecDeque<Vec<usize>> = VecDeque::new();
    queue.push_back(vec![a]);
    while let Some(path) = queue.pop_front() {
        let v = *path.last().unwrap();
        for &w in g.neighbors(v) {
            if path.contains(&w) {
                continue;
            }
            if path.len() >= 2 {
                let prev = path[path.len() - 2];
                if !(g.collider_unchecked(prev, v, w) && anc[v]) {
                    continue;
                }
            }
            let mut next = path.clone();
            next.push(w);
            if w == b {
                return Ok(Some(Path(next)));
            }
            queue.push_back(next);
        }
    }
    Ok(None)
}

pub fn inducing_path_exists(g: &MixedGraph, a: usize, b: usize) -> Result<bool> {
    Ok(inducing_path(g, a, b)?.is_some())
}
