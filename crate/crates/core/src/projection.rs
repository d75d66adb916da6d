// SPDX-License-Identifier: MIT
//! Latent projection of a DAG onto its observed vertices.
//!
//! With observed `O`, latent `L` and selection `S`, two observed vertices are
//! adjacent iff no `Z ⊆ O \ {a, b}` d-separates them given `Z ∪ S`, and the
//! end at `b` of edge `(a, b)` is an arrowhead iff `b` is not an ancestor of
//! `{a} ∪ S`. The resulting graph's m-separation statements are exactly the
//! DAG's d-separation statements conditioned on `S` and restricted to `O`.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{Mark, MixedGraph};
use crate::separation;

pub fn project(d: &MixedGraph, latent: &[usize], selection: &[usize]) -> Result<MixedGraph> {
    if !d.is_dag() {
        return Err(Error::NotDag);
    }
    let n = d.n();
    let mut role = alloc::vec![0u8; n]; // 0 observed, 1 latent, 2 selection
    for (&v, r) in latent
        .iter()
        .map(|v| (v, 1u8))
        .chain(selection.iter().map(|v| (v, 2u8)))
    {
        d.check_vertex(v)?;
        if role[v] != 0 {
            return Err(Error::Overlap(alloc::format!(
                "`{}` is listed more than once among latent and selection vertices",
                d.name(v)
            )));
        }
        role[v] = r;
    }
    let observed: Vec<usize> = (0..n).filter(|&v| role[v] == 0).collect();
    if observed.is_empty() {
        return Err(Error::EmptyObserved);
    }
    let sel_mask: u64 = selection.iter().fold(0, |acc, &s| acc | 1 << s);
    let mut out = d.induced(&observed).without_edges(|_| true);

    for (i, &a) in observed.iter().enumerate() {
        for (j, &b) in observed.iter().enumerate().skip(i + 1) {
            let rest: Vec<usize> = observed
                .iter()
                .copied()
                .filter(|&v| v != a && v != b)
                .collect();
            let separable = (0u64..1 << rest.len()).any(|sub| {
                let z = (0..rest.len())
                    .filter(|k| sub >> k & 1 == 1)
                    .fold(sel_mask, |acc, k| acc | 1 << rest[k]);
                separation::separated_mask(d, a, b, z)
            });
            if separable {
                continue;
            }
            let mark_at = |x: usize, other: usize| {
                let anc = d.ancestor_mask(core::iter::once(other).chain(selection.iter().copied()));
                if anc[x] {
                    Mark::Tail
                } else {
                    Mark::Arrowhead
                }
            };
            out = out.with_edge(i, j, mark_at(a, b), mark_at(b, a))?;
        }
    }
    Ok(out)
}

/// [`project`] with vertices given by name.
pub fn project_named(d: &MixedGraph, latent: &[&str], selection: &[&str]) -> Result<MixedGraph> {
    let resolve = |names: &[&str]| {
        names
            .iter()
            .map(|n| d.vertex(n))
            .collect::<Result<Vec<_>>>()
    };
    project(d, &resolve(latent)?, &resolve(selection)?)
}
