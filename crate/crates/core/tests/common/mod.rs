// SPDX-License-Identifier: MIT
//! Helpers shared by the integration tests: graph generators and a
//! d-separation reference that shares no code with the library.
#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use mag_core::oracle::{enumerate_orientations, OrientationFilter};
use mag_core::{Mark, MixedGraph};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn names(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| ((b'a' + i as u8) as char).to_string())
        .collect()
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect()
}

/// Skeleton over `n` vertices whose edges are the pairs selected by `subset`.
pub fn skeleton_from_subset(n: usize, subset: u64) -> MixedGraph {
    let names = names(n);
    let edges: Vec<_> = pairs(n)
        .into_iter()
        .enumerate()
        .filter(|(i, _)| subset >> i & 1 == 1)
        .map(|(_, (a, b))| (names[a].clone(), names[b].clone(), Mark::Tail, Mark::Tail))
        .collect();
    MixedGraph::new(&names, edges).unwrap()
}

/// Every skeleton over `n` labeled vertices.
pub fn skeletons(n: usize) -> impl Iterator<Item = MixedGraph> {
    let m = pairs(n).len();
    (0u64..1 << m).map(move |s| skeleton_from_subset(n, s))
}

pub fn orientations(skel: &MixedGraph, filter: OrientationFilter) -> Vec<MixedGraph> {
    enumerate_orientations(skel, filter).unwrap().collect()
}

/// Every maximal ancestral graph over `n` labeled vertices.
pub fn all_mags(n: usize) -> Vec<MixedGraph> {
    skeletons(n)
        .flat_map(|s| orientations(&s, OrientationFilter::MaximalAncestral))
        .collect()
}

pub fn is_connected(g: &MixedGraph) -> bool {
    if g.n() == 0 {
        return true;
    }
    let mut seen = vec![false; g.n()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &w in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// `count` distinct connected skeletons over `n` vertices.
pub fn random_connected_skeletons(rng: &mut impl Rng, n: usize, count: usize) -> Vec<MixedGraph> {
    let m = pairs(n).len();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    while out.len() < count {
        let subset: u64 = rng.gen_range(0..1u64 << m);
        let g = skeleton_from_subset(n, subset);
        if is_connected(&g) && seen.insert(subset) {
            out.push(g);
        }
    }
    out
}

/// A DAG over `n` vertices: a random topological order, each forward pair
/// joined with probability `p`.
pub fn random_dag(rng: &mut impl Rng, n: usize, p: f64) -> MixedGraph {
    let names = names(n);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                edges.push((
                    names[order[i]].clone(),
                    names[order[j]].clone(),
                    Mark::Tail,
                    Mark::Arrowhead,
                ));
            }
        }
    }
    MixedGraph::new(&names, edges).unwrap()
}

/// Every subset of `pool`.
pub fn subsets(pool: &[usize]) -> impl Iterator<Item = Vec<usize>> + '_ {
    (0u64..1 << pool.len()).map(move |s| {
        pool.iter()
            .enumerate()
            .filter(|(i, _)| s >> i & 1 == 1)
            .map(|(_, &v)| v)
            .collect()
    })
}

/// d-separation in a DAG by moralizing the ancestral set of `{a, b} ∪ z`,
/// deleting `z` and testing connectivity.
pub fn d_separated_moral(d: &MixedGraph, a: usize, b: usize, z: &[usize]) -> bool {
    let n = d.n();
    let parents: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            (0..n)
                .filter(|&u| {
                    d.is_adjacent(u, v)
                        && d.end_mark(u, v) == Some(Mark::Arrowhead)
                        && d.end_mark(v, u) == Some(Mark::Tail)
                })
                .collect()
        })
        .collect();
    let mut keep = vec![false; n];
    let mut queue: VecDeque<usize> = [a, b].into_iter().chain(z.iter().copied()).collect();
    while let Some(v) = queue.pop_front() {
        if !keep[v] {
            keep[v] = true;
            queue.extend(parents[v].iter().copied());
        }
    }
    let mut moral = vec![BTreeSet::new(); n];
    for v in (0..n).filter(|&v| keep[v]) {
        for &p in &parents[v] {
            moral[v].insert(p);
            moral[p].insert(v);
        }
        for &p in &parents[v] {
            for &q in &parents[v] {
                if p != q {
                    moral[p].insert(q);
                }
            }
        }
    }
    let blocked: BTreeSet<usize> = z.iter().copied().collect();
    let mut seen = vec![false; n];
    let mut stack = vec![a];
    seen[a] = true;
    while let Some(v) = stack.pop() {
        if v == b {
            return false;
        }
        for &w in &moral[v] {
            if keep[w] && !seen[w] && !blocked.contains(&w) {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    true
}

const KINDS: [(Mark, Mark); 4] = [
    (Mark::Tail, Mark::Arrowhead),
    (Mark::Arrowhead, Mark::Tail),
    (Mark::Arrowhead, Mark::Arrowhead),
    (Mark::Tail, Mark::Tail),
];

/// Arbitrary mixed graphs with up to `max_n` vertices; each pair is absent
/// or one of the four edge types.
pub fn arb_graph(max_n: usize) -> impl proptest::strategy::Strategy<Value = MixedGraph> {
    use proptest::prelude::*;
    (0..=max_n)
        .prop_flat_map(|n| {
            (
                Just(n),
                proptest::collection::vec(0usize..5, n * n.saturating_sub(1) / 2),
            )
        })
        .prop_map(|(n, kinds)| {
            let names = names(n);
            let edges: Vec<_> = pairs(n)
                .into_iter()
                .zip(kinds)
                .filter(|&(_, k)| k < 4)
                .map(|((a, b), k)| (names[a].clone(), names[b].clone(), KINDS[k].0, KINDS[k].1))
                .collect();
            MixedGraph::new(&names, edges).unwrap()
        })
}

/// Every mixed graph (all orientations of all skeletons) on `n` vertices.
pub fn all_graphs(n: usize) -> Vec<MixedGraph> {
    skeletons(n)
        .flat_map(|s| orientations(&s, OrientationFilter::All))
        .collect()
}
