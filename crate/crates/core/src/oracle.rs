// SPDX-License-Identifier: MIT
//! Brute-force references: every orientation of a skeleton, Markov
//! equivalence classes found by comparing independence models, and the joins
//! and invariant edge ends computed from them.
//!
//! None of this uses the orientation rules or the colliders-with-order test,
//! so it can check both.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::ancestral;
use crate::error::{Error, Result};
use crate::graph::{Mark, MixedGraph};
use crate::orient;
use crate::separation;

/// Default refusal threshold for exhaustive enumeration: `4^12` orientations.
pub const DEFAULT_ORIENTATION_CAP: u64 = 16_777_216;

/// Edge types in enumeration order: `->`, `<-`, `<->`, `--`, as marks at the
/// smaller and larger endpoint.
pub const EDGE_TYPES: [(Mark, Mark); 4] = [
    (Mark::Tail, Mark::Arrowhead),
    (Mark::Arrowhead, Mark::Tail),
    (Mark::Arrowhead, Mark::Arrowhead),
    (Mark::Tail, Mark::Tail),
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrientationFilter {
    All,
    Ancestral,
    MaximalAncestral,
    Dag,
}

impl OrientationFilter {
    fn accepts(self, g: &MixedGraph) -> bool {
        match self {
            OrientationFilter::All => true,
            OrientationFilter::Ancestral => ancestral::is_ancestral(g),
            OrientationFilter::MaximalAncestral => ancestral::is_mag(g),
            OrientationFilter::Dag => g.is_dag(),
        }
    }
}

/// Iterator over the orientations of one skeleton; the last edge in
/// canonical order varies fastest.
#[derive(Debug, Clone)]
pub struct Orientations {
    skeleton: MixedGraph,
    digits: Vec<u8>,
    done: bool,
    filter: OrientationFilter,
}

impl Iterator for Orientations {
    type Item = MixedGraph;

    fn next(&mut self) -> Option<MixedGraph> {
        while !self.done {
            let marks: Vec<(Mark, Mark)> = self
                .digits
                .iter()
                .map(|&d| EDGE_TYPES[d as usize])
                .collect();
            let g = self.skeleton.with_marks(&marks);
            self.advance();
            if self.filter.accepts(&g) {
                return Some(g);
            }
        }
        None
    }
}

impl Orientations {
    fn advance(&mut self) {
        for d in self.digits.iter_mut().rev() {
            if *d < 3 {
                *d += 1;
                return;
            }
            *d = 0;
        }
        self.done = true;
    }
}

fn check_cap(edges: usize, cap: u64) -> Result<()> {
    let total = 4u64.checked_pow(edges as u32);
    match total {
        Some(t) if t <= cap => Ok(()),
        _ => Err(Error::TooManyOrientations { edges, cap }),
    }
}

pub fn enumerate_orientations(
    skeleton: &MixedGraph,
    filter: OrientationFilter,
) -> Result<Orientations> {
    enumerate_orientations_capped(skeleton, filter, DEFAULT_ORIENTATION_CAP)
}

pub fn enumerate_orientations_capped(
    skeleton: &MixedGraph,
    filter: OrientationFilter,
    cap: u64,
) -> Result<Orientations> {
    if !skeleton.is_skeleton() {
        return Err(Error::NotSkeleton);
    }
    let m = skeleton.edge_count();
    check_cap(m, cap)?;
    Ok(Orientations {
        skeleton: skeleton.clone(),
        digits: vec![0; m],
        done: false,
        filter,
    })
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

/// Every maximal ancestral orientation of `g`'s skeleton with `g`'s
/// independence model, `g` included, in enumeration order.
pub fn enumerate_class(g: &MixedGraph) -> Result<Vec<MixedGraph>> {
    require_mag(g)?;
    Ok(
        enumerate_orientations(&g.skeleton(), OrientationFilter::Ancestral)?
            .filter(|c| separation::same_model(g, c) && ancestral::is_maximal_unchecked(c))
            .collect(),
    )
}

/// Like [`enumerate_class`] but searching every skeleton over `g`'s
/// vertices. Guards against an equivalence test that would miss members
/// with other adjacencies; only feasible for a handful of vertices.
pub fn enumerate_class_any_skeleton(g: &MixedGraph, cap: u64) -> Result<Vec<MixedGraph>> {
    require_mag(g)?;
    let n = g.n();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect();
    // sum over edge subsets of 4^|E| = 5^pairs
    let total = 5u64.checked_pow(pairs.len() as u32);
    if total.is_none_or(|t| t > cap) {
        return Err(Error::TooManyOrientations {
            edges: pairs.len(),
            cap,
        });
    }
    let empty = MixedGraph::edgeless(g.names())?;
    let mut out = Vec::new();
    for subset in 0u64..1 << pairs.len() {
        let mut skel = empty.clone();
        for (i, &(a, b)) in pairs.iter().enumerate() {
            if subset >> i & 1 == 1 {
                skel = skel.with_edge(a, b, Mark::Tail, Mark::Tail)?;
            }
        }
        for c in enumerate_orientations_capped(&skel, OrientationFilter::Ancestral, u64::MAX)? {
            if separation::same_model(g, &c) && ancestral::is_maximal_unchecked(&c) {
                out.push(c);
            }
        }
    }
    Ok(out)
}

/// All maximal ancestral orientations of `skeleton`, grouped into Markov
/// equivalence classes by independence model. Classes are ordered by their
/// first member in enumeration order.
pub fn partition_classes(skeleton: &MixedGraph) -> Result<Vec<Vec<MixedGraph>>> {
    let mut index: BTreeMap<Vec<bool>, usize> = BTreeMap::new();
    let mut classes: Vec<Vec<MixedGraph>> = Vec::new();
    for g in enumerate_orientations(skeleton, OrientationFilter::MaximalAncestral)? {
        let mut key = Vec::new();
        separation::for_each_query(g.n(), |a, b, z| {
            key.push(separation::separated_mask(&g, a, b, z));
            true
        });
        match index.get(&key) {
            Some(&i) => classes[i].push(g),
            None => {
                index.insert(key, classes.len());
                classes.push(vec![g]);
            }
        }
    }
    Ok(classes)
}

/// Join over the whole equivalence class of `g`.
pub fn sup_bruteforce(g: &MixedGraph) -> Result<MixedGraph> {
    let class = enumerate_class(g)?;
    Ok(orient::join_all(&class)?.expect("a class contains its generator"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EndInvariance {
    AlwaysArrowhead,
    AlwaysTail,
    Varies,
}

/// Classification of the end at `at` on edge `{other, at}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EndReport {
    pub other: usize,
    pub at: usize,
    pub invariance: EndInvariance,
}

/// How each edge end behaves across `class` (which must share a skeleton).
pub fn classify_ends(class: &[MixedGraph]) -> Vec<EndReport> {
    let Some(first) = class.first() else {
        return Vec::new();
    };
    let mut out = Vec::new();
    for e in first.edges() {
        for (other, at) in [(e.v, e.u), (e.u, e.v)] {
            let heads = class.iter().filter(|m| m.has_arrowhead(other, at)).count();
            let invariance = if heads == class.len() {
                EndInvariance::AlwaysArrowhead
            } else if heads == 0 {
                EndInvariance::AlwaysTail
            } else {
                EndInvariance::Varies
            };
            out.push(EndReport {
                other,
                at,
                invariance,
            });
        }
    }
    out
}

/// Every edge end of `g` classified across its equivalence class.
pub fn invariant_ends(g: &MixedGraph) -> Result<Vec<EndReport>> {
    Ok(classify_ends(&enumerate_class(g)?))
}

/// Edge tokens ranked the way their serialized text sorts: `--`, `->`,
/// `<-`, `<->`.
fn serialization_key(g: &MixedGraph) -> Vec<u8> {
    g.edges()
        .map(|e| match (e.at_u, e.at_v) {
            (Mark::Tail, Mark::Tail) => 0,
            (Mark::Tail, Mark::Arrowhead) => 1,
            (Mark::Arrowhead, Mark::Tail) => 2,
            (Mark::Arrowhead, Mark::Arrowhead) => 3,
        })
        .collect()
}

/// A class member with the fewest arrowheads; ties go to the member whose
/// canonical serialization sorts first.
pub fn min_arrowhead_member(g: &MixedGraph) -> Result<MixedGraph> {
    Ok(enumerate_class(g)?
        .into_iter()
        .min_by_key(|m| (m.arrowhead_count(), serialization_key(m)))
        .expect("a class contains its generator"))
}
