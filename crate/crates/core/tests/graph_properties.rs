// SPDX-License-Identifier: MIT

mod common;

use std::collections::{BTreeSet, VecDeque};

use common::*;
use mag_core::{Mark, MixedGraph, Triple};
use proptest::prelude::*;

fn check_pair_relations(g: &MixedGraph) {
    for u in 0..g.n() {
        for v in 0..g.n() {
            if u == v {
                continue;
            }
            let adjacent = g.is_adjacent(u, v);
            assert_eq!(adjacent, g.end_mark(u, v).is_some());
            assert_eq!(adjacent, g.end_mark(v, u).is_some());
            if !adjacent {
                continue;
            }
            let holds = [
                g.is_parent(u, v),
                g.is_parent(v, u),
                g.is_spouse(u, v),
                g.is_undirected(u, v),
            ];
            assert_eq!(holds.iter().filter(|&&h| h).count(), 1);
            assert_eq!(g.is_spouse(u, v), g.is_spouse(v, u));
            assert_eq!(g.is_undirected(u, v), g.is_undirected(v, u));
            assert_eq!(
                g.has_arrowhead(u, v),
                g.end_mark(u, v) == Some(Mark::Arrowhead)
            );
            let rel = g.relations(v).unwrap();
            assert_eq!(rel.parents.contains(&u), g.is_parent(u, v));
            assert_eq!(rel.children.contains(&u), g.is_parent(v, u));
            assert_eq!(rel.spouses.contains(&u), g.is_spouse(u, v));
            assert_eq!(rel.undirected.contains(&u), g.is_undirected(u, v));
        }
    }
}

/// Ancestors by breadth-first search backwards over directed edges.
fn ancestors_bfs(g: &MixedGraph, v: usize) -> BTreeSet<usize> {
    let mut seen = BTreeSet::from([v]);
    let mut queue = VecDeque::from([v]);
    while let Some(x) = queue.pop_front() {
        for p in 0..g.n() {
            if g.is_parent(p, x) && seen.insert(p) {
                queue.push_back(p);
            }
        }
    }
    seen
}

fn check_ancestry(g: &MixedGraph) {
    for v in 0..g.n() {
        let anc = g.ancestors(v).unwrap();
        assert!(anc.contains(&v));
        assert_eq!(anc, ancestors_bfs(g, v));
        for &a in &anc {
            assert!(g.ancestors(a).unwrap().is_subset(&anc));
            assert!(g.descendants(a).unwrap().contains(&v));
        }
    }
}

fn check_skeleton(g: &MixedGraph) {
    let s = g.skeleton();
    assert_eq!(s.skeleton(), s);
    assert!(s.is_skeleton());
    assert!(s.same_skeleton(g));
    for u in 0..g.n() {
        for v in 0..g.n() {
            assert_eq!(s.is_adjacent(u, v), g.is_adjacent(u, v));
        }
    }
}

fn check_triples(g: &MixedGraph) {
    let all: BTreeSet<Triple> = g.adjacent_triples().into_iter().collect();
    let unshielded: BTreeSet<Triple> = g.unshielded_triples().into_iter().collect();
    let shielded: BTreeSet<Triple> = g.shielded_triples().into_iter().collect();
    assert!(unshielded.is_disjoint(&shielded));
    assert_eq!(&unshielded | &shielded, all);
    let triangles: BTreeSet<[usize; 3]> = g.triangles().into_iter().collect();
    for t in &shielded {
        let mut k = [t.a, t.b, t.c];
        k.sort();
        assert!(triangles.contains(&k));
    }
    // each triangle yields exactly three shielded triples
    assert_eq!(shielded.len(), 3 * triangles.len());
}

#[test]
fn exhaustive_up_to_three_vertices() {
    for n in 0..=3 {
        for g in all_graphs(n) {
            check_pair_relations(&g);
            check_ancestry(&g);
            check_skeleton(&g);
            check_triples(&g);
        }
    }
}

#[test]
fn degenerate_graphs() {
    let empty = MixedGraph::edgeless(Vec::<String>::new()).unwrap();
    assert_eq!(empty.n(), 0);
    assert!(empty.adjacent_triples().is_empty());
    assert!(empty.is_dag());
    let one = MixedGraph::edgeless(["v"]).unwrap();
    assert_eq!(one.ancestors(0).unwrap(), BTreeSet::from([0]));
    assert_eq!(one.relations(0).unwrap(), Default::default());
}

proptest! {
    #[test]
    fn random_graph_structure(g in arb_graph(7)) {
        check_pair_relations(&g);
        check_ancestry(&g);
        check_skeleton(&g);
        check_triples(&g);
    }

    #[test]
    fn directed_cycle_iff_not_acyclic(g in arb_graph(6)) {
        let cyclic = (0..g.n()).any(|v| g.children(v).any(|c| ancestors_bfs(&g, v).contains(&c)));
        prop_assert_eq!(g.directed_cycle().is_some(), cyclic);
        if let Some(cycle) = g.directed_cycle() {
            for w in cycle.windows(2) {
                prop_assert!(g.is_parent(w[0], w[1]));
            }
            prop_assert!(g.is_parent(*cycle.last().unwrap(), cycle[0]));
        }
        let has_bad_edge = g.edges().any(|e| e.kind() != mag_core::EdgeKind::Directed);
        prop_assert_eq!(g.is_dag(), !cyclic && !has_bad_edge);
    }
}
