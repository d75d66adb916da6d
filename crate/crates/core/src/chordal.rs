// SPDX-License-Identifier: MIT
//! Chordality of the adjacency structure of a graph (marks are ignored).

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::MixedGraph;

/// Maximum cardinality search order, last visited first: a perfect
/// elimination ordering whenever the graph is chordal.
pub fn mcs_order(g: &MixedGraph) -> Vec<usize> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !visited[v])
            .max_by_key(|&v| (weight[v], core::cmp::Reverse(v)))
            .unwrap();
        visited[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            if !visited[w] {
                weight[w] += 1;
            }
        }
    }
    order.reverse();
    order
}

/// Whether `order` is a perfect elimination ordering: for each vertex, its
/// neighbours later in the order form a clique.
pub fn is_perfect_elimination_order(g: &MixedGraph, order: &[usize]) -> bool {
    let mut pos = vec![0usize; g.n()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    order.iter().all(|&v| {
        let later: Vec<usize> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| pos[w] > pos[v])
            .collect();
        // Enough to check the earliest later neighbour against the rest.
        match later.iter().min_by_key(|&&w| pos[w]) {
            None => true,
            Some(&first) => later.iter().all(|&w| w == first || g.is_adjacent(first, w)),
        }
    })
}

/// Every cycle of length four or more has a chord.
pub fn is_chordal(g: &MixedGraph) -> bool {
    is_perfect_elimination_order(g, &mcs_order(g))
}
