// SPDX-License-Identifier: MIT
//! Ancestrality, maximality, maximalization and the balance property.

use alloc::vec::Vec;

use crate::error::{Error, Internal, Result};
use crate::graph::{EdgeKind, Mark, MixedGraph};
use crate::separation;

/// Why a graph fails to be ancestral.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// A directed cycle, in traversal order.
    DirectedCycle(Vec<usize>),
    /// `u <-> v` where `ancestor` is an ancestor of `descendant`.
    BidirectedAncestor { ancestor: usize, descendant: usize },
    /// Undirected edge `u -- v` where `vertex` (one of `u`, `v`) has an
    /// arrowhead from `other`.
    UndirectedMeetsArrowhead {
        u: usize,
        v: usize,
        vertex: usize,
        other: usize,
    },
}

/// Every violation of the three ancestral conditions.
pub fn ancestral_violations(g: &MixedGraph) -> Vec<Violation> {
    let mut out = Vec::new();
    if let Some(cycle) = g.directed_cycle() {
        out.push(Violation::DirectedCycle(cycle));
    }
    for e in g.edges() {
        match e.kind() {
            EdgeKind::Bidirected => {
                if g.is_ancestor(e.u, e.v) {
                    out.push(Violation::BidirectedAncestor {
                        ancestor: e.u,
                        descendant: e.v,
                    });
                }
                if g.is_ancestor(e.v, e.u) {
                    out.push(Violation::BidirectedAncestor {
                        ancestor: e.v,
                        descendant: e.u,
                    });
                }
            }
            EdgeKind::Undirected => {
                for vertex in [e.u, e.v] {
                    for &other in g.neighbors(vertex) {
                        if g.has_arrowhead(other, vertex) {
                            out.push(Violation::UndirectedMeetsArrowhead {
                                u: e.u,
                                v: e.v,
                                vertex,
                                other,
                            });
                        }
                    }
                }
            }
            EdgeKind::Directed => {}
        }
    }
    out
}

pub fn is_ancestral(g: &MixedGraph) -> bool {
    // Cheap checks first; this runs on every enumerated orientation.
    for e in g.edges() {
        if e.kind() == EdgeKind::Undirected
            && [e.u, e.v]
                .iter()
                .any(|&x| g.neighbors(x).iter().any(|&o| g.has_arrowhead(o, x)))
        {
            return false;
        }
    }
    if g.directed_cycle().is_some() {
        return false;
    }
    for e in g.edges() {
        if e.kind() == EdgeKind::Bidirected && (g.is_ancestor(e.u, e.v) || g.is_ancestor(e.v, e.u))
        {
            return false;
        }
    }
    true
}

fn non_adjacent_pairs(g: &MixedGraph) -> impl Iterator<Item = (usize, usize)> + '_ {
    let n = g.n();
    (0..n).flat_map(move |a| {
        (a + 1..n)
            .filter(move |&b| !g.is_adjacent(a, b))
            .map(move |b| (a, b))
    })
}

fn require_ancestral(g: &MixedGraph) -> Result<()> {
    if is_ancestral(g) {
        Ok(())
    } else {
        Err(Error::NotAncestral)
    }
}

/// Every non-adjacent pair has an m-separating set (searched over all `Z`).
pub fn is_maximal(g: &MixedGraph) -> Result<bool> {
    require_ancestral(g)?;
    Ok(is_maximal_unchecked(g))
}

pub(crate) fn is_maximal_unchecked(g: &MixedGraph) -> bool {
    let n = g.n();
    non_adjacent_pairs(g).all(|(a, b)| {
        let rest: Vec<usize> = (0..n).filter(|&v| v != a && v != b).collect();
        (0u64..1 << rest.len()).any(|sub| {
            let z = (0..rest.len())
                .filter(|i| sub >> i & 1 == 1)
                .fold(0u64, |acc, i| acc | 1 << rest[i]);
            separation::separated_mask(g, a, b, z)
        })
    })
}

/// Every non-adjacent pair lacks an inducing path.
pub fn is_maximal_by_inducing_paths(g: &MixedGraph) -> Result<bool> {
    require_ancestral(g)?;
    for (a, b) in non_adjacent_pairs(g) {
        if separation::inducing_path_exists(g, a, b)? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn is_mag(g: &MixedGraph) -> bool {
    is_ancestral(g) && is_maximal_unchecked(g)
}

/// Adds `a <-> b` for every non-adjacent pair joined by an inducing path,
/// repeating until no such pair remains.
pub fn maximalize(g: &MixedGraph) -> Result<MixedGraph> {
    require_ancestral(g)?;
    let mut current = g.clone();
    loop {
        let mut pending = Vec::new();
        for (a, b) in non_adjacent_pairs(&current) {
            if separation::inducing_path_exists(&current, a, b)? {
                pending.push((a, b));
            }
        }
        if pending.is_empty() {
            return Ok(current);
        }
        for (a, b) in pending {
            if current.is_ancestor(a, b) || current.is_ancestor(b, a) {
                return Err(Internal::MaximalizeBrokeAncestrality(
                    current.name(a).into(),
                    current.name(b).into(),
                )
                .into());
            }
            current = current.with_edge(a, b, Mark::Arrowhead, Mark::Arrowhead)?;
        }
    }
}

/// A triangle that is not balanced at `at`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Unbalanced {
    pub triangle: [usize; 3],
    pub at: usize,
}

/// Whether the triangle `{x, y, z}` is balanced at `x`: the edge ends at `x`
/// agree, or the one arriving with an arrowhead comes from `y`, `x` has a
/// tail towards `z`, and `(y, z)` carries an arrowhead at `z`.
pub fn balanced_at(g: &MixedGraph, x: usize, y: usize, z: usize) -> bool {
    let from_y = g.end_mark(y, x);
    let from_z = g.end_mark(z, x);
    if from_y == from_z {
        return true;
    }
    let (head_side, tail_side) = if from_y == Some(Mark::Arrowhead) {
        (y, z)
    } else {
        (z, y)
    };
    g.has_arrowhead(head_side, tail_side)
}

pub fn unbalanced_triangles(g: &MixedGraph) -> Vec<Unbalanced> {
    let mut out = Vec::new();
    for t in g.triangles() {
        for i in 0..3 {
            let (x, y, z) = (t[i], t[(i + 1) % 3], t[(i + 2) % 3]);
            if !balanced_at(g, x, y, z) {
                out.push(Unbalanced { triangle: t, at: x });
            }
        }
    }
    out
}

pub fn is_balanced(g: &MixedGraph) -> bool {
    unbalanced_triangles(g).is_empty()
}
