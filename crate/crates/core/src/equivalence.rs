// SPDX-License-Identifier: MIT
//! Discriminating paths, the order hierarchy on triples, and the Markov
//! equivalence test for maximal ancestral graphs: same adjacencies and the
//! same colliders with order.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use crate::ancestral;
use crate::error::{Error, Internal, Result};
use crate::graph::{MixedGraph, Path, Triple};

/// Breadth-first search for paths `<x, q1, ..., qp = alpha, beta, gamma>`
/// with `x` not adjacent to `gamma`, every `qi` a collider on the path and a
/// parent of `gamma`. `keep` is consulted for each collider triple
/// `<q(i-1), qi, q(i+1)>` (with `q0 = x`, `q(p+1) = beta`).
pub(crate) fn search_discriminating(
    g: &MixedGraph,
    alpha: usize,
    beta: usize,
    gamma: usize,
    keep: &dyn Fn(Triple) -> bool,
    first_only: bool,
) -> Vec<Path> {
    let mut found = Vec::new();
    if alpha == gamma
        || !g.is_adjacent(alpha, beta)
        || !g.is_adjacent(beta, gamma)
        || !g.is_parent(alpha, gamma)
        || !g.has_arrowhead(beta, alpha)
    {
        return found;
    }
    // Partial paths stored back to front: [gamma, beta, alpha, ...].
    let mut queue: VecDeque<Vec<usize>> = VecDeque::new();
    queue.push_back(vec![gamma, beta, alpha]);
    while let Some(rev) = queue.pop_front() {
        let q = rev[rev.len() - 1];
        let next = rev[rev.len() - 2];
        for &w in g.neighbors(q) {
            if rev.contains(&w) || !g.has_arrowhead(w, q) || !keep(Triple::new(w, q, next)) {
                continue;
            }
            if !g.is_adjacent(w, gamma) {
                let mut path = rev.clone();
                path.push(w);
                path.reverse();
                found.push(Path(path));
                if first_only {
                    return found;
                }
            } else if g.is_parent(w, gamma) && g.has_arrowhead(q, w) {
                let mut longer = rev.clone();
                longer.push(w);
                queue.push_back(longer);
            }
        }
    }
    found
}

/// Caps the orders of the collider triples a discriminating path may use.
#[derive(Debug, Clone, Copy)]
pub struct ColliderFilter<'a> {
    pub orders: &'a OrderMap,
    pub max_order: u32,
}

/// Discriminating paths for `<alpha, beta, gamma>`, shortest first.
pub fn find_discriminating_paths(
    g: &MixedGraph,
    alpha: usize,
    beta: usize,
    gamma: usize,
    filter: Option<ColliderFilter<'_>>,
) -> Result<Vec<Path>> {
    for v in [alpha, beta, gamma] {
        g.check_vertex(v)?;
    }
    g.require_adjacent(alpha, beta)?;
    g.require_adjacent(beta, gamma)?;
    let keep = |t: Triple| match filter {
        None => true,
        Some(f) => f.orders.order(&t).is_some_and(|o| o <= f.max_order),
    };
    Ok(search_discriminating(g, alpha, beta, gamma, &keep, false))
}

/// A discriminating path whose triples all have order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderedPath {
    pub path: Path,
    pub order: u32,
}

/// Orders of the triples of one graph. Triples absent from the map have no
/// order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct OrderMap {
    pub orders: BTreeMap<Triple, u32>,
    pub paths: Vec<OrderedPath>,
}

impl OrderMap {
    pub fn order(&self, t: &Triple) -> Option<u32> {
        self.orders.get(t).copied()
    }

    pub fn has_order(&self, t: &Triple) -> bool {
        self.orders.contains_key(t)
    }
}

/// Consecutive triples along `path`, end to end.
fn path_triples(path: &[usize]) -> impl Iterator<Item = Triple> + '_ {
    path.windows(3).map(|w| Triple::new(w[0], w[1], w[2]))
}

/// Least fixed point of the order recursion: unshielded triples get order 0;
/// an unordered triple gets order `i + 1` once it has a discriminating path
/// whose collider triples all have order at most `i`.
pub fn compute_orders(g: &MixedGraph) -> Result<OrderMap> {
    let mut orders: BTreeMap<Triple, u32> =
        g.unshielded_triples().into_iter().map(|t| (t, 0)).collect();
    let shielded = g.shielded_triples();
    let cap = shielded.len() + 1;
    let mut sweep = 0u32;
    loop {
        if sweep as usize > cap {
            return Err(Internal::OrderSweepCap.into());
        }
        let snapshot = orders.clone();
        let keep = |t: Triple| snapshot.contains_key(&t);
        let gained: Vec<Triple> = shielded
            .iter()
            .filter(|t| !snapshot.contains_key(t))
            .filter(|t| {
                [(t.a, t.c), (t.c, t.a)].iter().any(|&(alpha, gamma)| {
                    !search_discriminating(g, alpha, t.b, gamma, &keep, true).is_empty()
                })
            })
            .copied()
            .collect();
        if gained.is_empty() {
            break;
        }
        sweep += 1;
        for t in gained {
            orders.insert(t, sweep);
        }
    }

    let keep = |t: Triple| orders.contains_key(&t);
    let mut paths = Vec::new();
    for t in shielded.iter().filter(|t| orders.contains_key(t)) {
        for (alpha, gamma) in [(t.a, t.c), (t.c, t.a)] {
            for path in search_discriminating(g, alpha, t.b, gamma, &keep, false) {
                let order = path_triples(&path.0).map(|t| orders[&t]).max().unwrap_or(0);
                paths.push(OrderedPath { path, order });
            }
        }
    }
    Ok(OrderMap { orders, paths })
}

/// Triples with order that are colliders in `g`.
pub fn colliders_with_order(g: &MixedGraph, orders: &OrderMap) -> BTreeSet<Triple> {
    orders
        .orders
        .keys()
        .filter(|t| g.collider_unchecked(t.a, t.b, t.c))
        .copied()
        .collect()
}

/// Triples with order that are non-colliders in `g`.
pub fn non_colliders_with_order(g: &MixedGraph, orders: &OrderMap) -> BTreeSet<Triple> {
    orders
        .orders
        .keys()
        .filter(|t| !g.collider_unchecked(t.a, t.b, t.c))
        .copied()
        .collect()
}

/// Outcome of comparing two maximal ancestral graphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Equivalent,
    VerticesDiffer,
    AdjacencyDiffers {
        u: usize,
        v: usize,
    },
    /// A collider with order in one graph that is not one in the other.
    ColliderWithOrderDiffers(Triple),
}

impl Verdict {
    pub fn is_equivalent(&self) -> bool {
        *self == Verdict::Equivalent
    }
}

fn require_mag(g: &MixedGraph) -> Result<()> {
    if !ancestral::is_ancestral(g) {
        Err(Error::NotAncestral)
    } else if !ancestral::is_maximal_unchecked(g) {
        Err(Error::NotMaximal)
    } else {
        Ok(())
    }
}

/// Compares adjacencies, then colliders with order.
pub fn equivalence_verdict(g1: &MixedGraph, g2: &MixedGraph) -> Result<Verdict> {
    require_mag(g1)?;
    require_mag(g2)?;
    if g1.names() != g2.names() {
        return Ok(Verdict::VerticesDiffer);
    }
    let n = g1.n();
    for u in 0..n {
        for v in u + 1..n {
            if g1.is_adjacent(u, v) != g2.is_adjacent(u, v) {
                return Ok(Verdict::AdjacencyDiffers { u, v });
            }
        }
    }
    let c1 = colliders_with_order(g1, &compute_orders(g1)?);
    let c2 = colliders_with_order(g2, &compute_orders(g2)?);
    Ok(match c1.symmetric_difference(&c2).next() {
        Some(t) => Verdict::ColliderWithOrderDiffers(*t),
        None => Verdict::Equivalent,
    })
}

pub fn markov_equivalent(g1: &MixedGraph, g2: &MixedGraph) -> Result<bool> {
    Ok(equivalence_verdict(g1, g2)?.is_equivalent())
}
