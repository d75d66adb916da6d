// SPDX-License-Identifier: MIT
//! Joins of graphs over a shared skeleton and the orientation rules that
//! build the join of a whole Markov equivalence class from one member.
//!
//! The rules run on an [`OrientationState`]: the input graph `G` is only
//! read, and a working graph `H` starts as `G`'s skeleton and only ever gains
//! arrowheads. Every end of `H` without an arrowhead is a tail.
//!
//! * S2 puts arrowheads at the middle of `G`'s unshielded colliders.
//! * S3: for a discriminating path `<x, .., q, b, y>` in `H` whose triple
//!   `<q, b, y>` is a collider in `G`, arrowheads at `b` from `q` and `y`.
//! * S4: for an unshielded collider `<u, a, v>` in `H` and an unshielded
//!   non-collider `<u, b, v>` with `a` adjacent to `b`, an arrowhead at `a`
//!   on `(a, b)`.
//! * S5: if `<a, b, c>` is an unshielded non-collider of `G` with an
//!   arrowhead at `b` from `a` in `H` (S5i), or a discriminating path in `H`
//!   ends in `<a, b, c>` and that triple is a non-collider of `G` (S5ii), then
//!   `b -> c` with the tail at `b` protected (S5a); every `z` adjacent to `b`
//!   and `c` with an arrowhead at `b` gets an arrowhead at `c` on `(z, c)`
//!   (S5b); every `z` adjacent to `b` and `c` with an arrowhead at `z` from `c`
//!   gets an arrowhead at `z` on `(b, z)` (S5c).
//!
//! S3 to S5 repeat until nothing changes.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::ancestral;
use crate::equivalence::search_discriminating;
use crate::error::{Error, Internal, Result};
use crate::graph::{Mark, MixedGraph, Path, Triple};
use crate::oracle::{self, OrientationFilter};

/// Edge-end-wise AND of arrowheads over two graphs with the same skeleton.
pub fn join(g1: &MixedGraph, g2: &MixedGraph) -> Result<MixedGraph> {
    if !g1.same_skeleton(g2) {
        return Err(Error::SkeletonMismatch);
    }
    let marks: Vec<(Mark, Mark)> = g1
        .edges()
        .zip(g2.edges())
        .map(|(e1, e2)| (and_head(e1.at_u, e2.at_u), and_head(e1.at_v, e2.at_v)))
        .collect();
    Ok(g1.with_marks(&marks))
}

fn and_head(a: Mark, b: Mark) -> Mark {
    if a == Mark::Arrowhead && b == Mark::Arrowhead {
        Mark::Arrowhead
    } else {
        Mark::Tail
    }
}

/// Join of every graph in `graphs`; `None` for an empty input.
pub fn join_all<'a>(
    graphs: impl IntoIterator<Item = &'a MixedGraph>,
) -> Result<Option<MixedGraph>> {
    let mut acc: Option<MixedGraph> = None;
    for g in graphs {
        acc = Some(match acc {
            None => g.clone(),
            Some(a) => join(&a, g)?,
        });
    }
    Ok(acc)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Rule {
    S2,
    S3,
    S4,
    S5a,
    S5b,
    S5c,
}

/// Which premise triggered an S5 instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum S5Premise {
    Unshielded,
    Discriminating(Path),
}

/// One applicable rule firing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RuleInstance {
    S3 {
        path: Path,
    },
    S4 {
        u: usize,
        a: usize,
        v: usize,
        b: usize,
    },
    S5 {
        premise: S5Premise,
        a: usize,
        b: usize,
        c: usize,
    },
}

impl RuleInstance {
    /// Arrowheads `(other, at)` the instance concludes, tagged by rule.
    fn conclusions(&self, h: &MixedGraph) -> Vec<(usize, usize, Rule)> {
        match self {
            RuleInstance::S3 { path } => {
                let p = path.vertices();
                let (q, b, y) = (p[p.len() - 3], p[p.len() - 2], p[p.len() - 1]);
                alloc::vec![(q, b, Rule::S3), (y, b, Rule::S3)]
            }
            RuleInstance::S4 { a, b, .. } => alloc::vec![(*b, *a, Rule::S4)],
            RuleInstance::S5 { b, c, .. } => {
                let (b, c) = (*b, *c);
                let mut out = alloc::vec![(b, c, Rule::S5a)];
                for &z in h.neighbors(b) {
                    if z == c || !h.is_adjacent(z, c) {
                        continue;
                    }
                    if h.has_arrowhead(z, b) {
                        out.push((z, c, Rule::S5b));
                    }
                    if h.has_arrowhead(c, z) {
                        out.push((b, z, Rule::S5c));
                    }
                }
                out
            }
        }
    }
}

/// `G`, the partially oriented `H`, and bookkeeping about how `H` got there.
#[derive(Debug, Clone)]
pub struct OrientationState {
    base: MixedGraph,
    h: MixedGraph,
    /// `(other, at)`: the end at `at` on edge `{other, at}` must stay a tail.
    protected_tails: BTreeSet<(usize, usize)>,
    /// Rule that added each arrowhead `(other, at)`.
    provenance: BTreeMap<(usize, usize), Rule>,
    added: usize,
}

impl OrientationState {
    /// Runs S1 and S2 on a maximal ancestral graph.
    pub fn new(g: &MixedGraph) -> Result<Self> {
        if !ancestral::is_ancestral(g) {
            return Err(Error::NotAncestral);
        }
        if !ancestral::is_maximal_unchecked(g) {
            return Err(Error::NotMaximal);
        }
        let mut st = OrientationState {
            base: g.clone(),
            h: g.skeleton(),
            protected_tails: BTreeSet::new(),
            provenance: BTreeMap::new(),
            added: 0,
        };
        for t in g.unshielded_triples() {
            if g.collider_unchecked(t.a, t.b, t.c) {
                st.add_arrowhead(t.a, t.b, Rule::S2)?;
                st.add_arrowhead(t.c, t.b, Rule::S2)?;
            }
        }
        Ok(st)
    }

    pub fn base(&self) -> &MixedGraph {
        &self.base
    }

    pub fn current(&self) -> &MixedGraph {
        &self.h
    }

    pub fn into_graph(self) -> MixedGraph {
        self.h
    }

    pub fn protected_tails(&self) -> &BTreeSet<(usize, usize)> {
        &self.protected_tails
    }

    pub fn provenance(&self) -> &BTreeMap<(usize, usize), Rule> {
        &self.provenance
    }

    fn add_arrowhead(&mut self, other: usize, at: usize, rule: Rule) -> Result<bool> {
        if self.h.has_arrowhead(other, at) {
            return Ok(false);
        }
        if self.protected_tails.contains(&(other, at)) {
            return Err(self.protected_violation(other, at));
        }
        let bound = 2 * self.h.edge_count();
        if self.added >= bound {
            return Err(Internal::ArrowheadBound.into());
        }
        self.h.set_end(other, at, Mark::Arrowhead);
        self.provenance.insert((other, at), rule);
        self.added += 1;
        Ok(true)
    }

    fn protect_tail(&mut self, other: usize, at: usize) -> Result<()> {
        if self.h.has_arrowhead(other, at) {
            return Err(self.protected_violation(other, at));
        }
        self.protected_tails.insert((other, at));
        Ok(())
    }

    fn protected_violation(&self, other: usize, at: usize) -> Error {
        Internal::ProtectedTail {
            at: self.h.name(at).into(),
            other: self.h.name(other).into(),
        }
        .into()
    }

    fn adds_something(&self, inst: &RuleInstance) -> bool {
        inst.conclusions(&self.h)
            .iter()
            .any(|&(o, at, _)| !self.h.has_arrowhead(o, at))
    }

    /// Whether a path-based premise still holds in the current `H`; tails
    /// of `H` can turn into arrowheads after the instance was found.
    fn still_valid(&self, inst: &RuleInstance) -> bool {
        let path = match inst {
            RuleInstance::S3 { path } => path,
            RuleInstance::S5 {
                premise: S5Premise::Discriminating(path),
                ..
            } => path,
            _ => return true,
        };
        let p = path.vertices();
        let n = p.len();
        let (b, y) = (p[n - 2], p[n - 1]);
        search_discriminating(&self.h, p[n - 3], b, y, &|_| true, false)
            .iter()
            .any(|q| q == path)
    }

    /// Fires one instance; returns the number of arrowheads added. A
    /// discriminating-path instance that no longer holds adds nothing.
    pub fn fire(&mut self, inst: &RuleInstance) -> Result<usize> {
        if !self.still_valid(inst) {
            return Ok(0);
        }
        if let RuleInstance::S5 { b, c, .. } = inst {
            self.protect_tail(*c, *b)?;
        }
        let mut n = 0;
        for (other, at, rule) in inst.conclusions(&self.h) {
            n += self.add_arrowhead(other, at, rule)? as usize;
        }
        Ok(n)
    }

    fn discriminating_in_h(&self, alpha: usize, beta: usize, gamma: usize) -> Option<Path> {
        search_discriminating(&self.h, alpha, beta, gamma, &|_| true, true).pop()
    }

    /// Ordered `(alpha, beta, gamma)` over every shielded triple of `G`.
    fn shielded_ordered(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.base
            .shielded_triples()
            .into_iter()
            .flat_map(|t| [(t.a, t.b, t.c), (t.c, t.b, t.a)])
    }

    pub fn scan_s3(&self) -> Vec<RuleInstance> {
        self.shielded_ordered()
            .filter(|&(q, b, y)| self.base.collider_unchecked(q, b, y))
            .filter_map(|(q, b, y)| self.discriminating_in_h(q, b, y))
            .map(|path| RuleInstance::S3 { path })
            .collect()
    }

    pub fn scan_s4(&self) -> Vec<RuleInstance> {
        let mut out = Vec::new();
        let g = &self.base;
        for t in g.unshielded_triples() {
            let (u, a, v) = (t.a, t.b, t.c);
            if !self.h.collider_unchecked(u, a, v) {
                continue;
            }
            for &b in g.neighbors(u) {
                if b == a || !g.is_adjacent(b, v) || !g.is_adjacent(a, b) {
                    continue;
                }
                // <u, b, v> is unshielded since u and v are not adjacent.
                if g.collider_unchecked(u, b, v) {
                    continue;
                }
                out.push(RuleInstance::S4 { u, a, v, b });
            }
        }
        out
    }

    /// Every S5 premise that currently holds, whether or not it adds anything.
    pub fn scan_s5(&self) -> Vec<RuleInstance> {
        let g = &self.base;
        let mut out = Vec::new();
        for t in g.unshielded_triples() {
            if g.collider_unchecked(t.a, t.b, t.c) {
                continue;
            }
            for (a, c) in [(t.a, t.c), (t.c, t.a)] {
                if self.h.has_arrowhead(a, t.b) {
                    out.push(RuleInstance::S5 {
                        premise: S5Premise::Unshielded,
                        a,
                        b: t.b,
                        c,
                    });
                }
            }
        }
        for (a, b, c) in self.shielded_ordered() {
            if g.collider_unchecked(a, b, c) {
                continue;
            }
            if let Some(path) = self.discriminating_in_h(a, b, c) {
                out.push(RuleInstance::S5 {
                    premise: S5Premise::Discriminating(path),
                    a,
                    b,
                    c,
                });
            }
        }
        out
    }

    /// Applicable instances (those that would add an arrowhead), S3 first,
    /// then S4, then S5. Protected tails of every matching S5 premise are
    /// recorded as a side effect.
    pub fn applicable(&mut self) -> Result<Vec<RuleInstance>> {
        let mut out = self.scan_s3();
        out.extend(self.scan_s4());
        let s5 = self.scan_s5();
        for inst in &s5 {
            if let RuleInstance::S5 { b, c, .. } = inst {
                self.protect_tail(*c, *b)?;
            }
        }
        out.extend(s5);
        out.retain(|i| self.adds_something(i));
        Ok(out)
    }

    fn fire_all(&mut self, instances: Vec<RuleInstance>) -> Result<usize> {
        let mut n = 0;
        for inst in &instances {
            n += self.fire(inst)?;
        }
        Ok(n)
    }

    /// Repeats S3, S4, S5 passes until a pass adds nothing.
    pub fn run_to_fixed_point(&mut self) -> Result<()> {
        loop {
            let mut added = 0;
            let s3 = self.scan_s3();
            added += self.fire_all(s3)?;
            let s4 = self.scan_s4();
            added += self.fire_all(s4)?;
            let s5 = self.scan_s5();
            added += self.fire_all(s5)?;
            if added == 0 {
                return Ok(());
            }
        }
    }
}

/// Runs the orientation rules on a maximal ancestral graph.
pub fn orient_sup(g: &MixedGraph) -> Result<MixedGraph> {
    Ok(orient_sup_state(g)?.into_graph())
}

/// Like [`orient_sup`], keeping protected tails and provenance.
pub fn orient_sup_state(g: &MixedGraph) -> Result<OrientationState> {
    let mut st = OrientationState::new(g)?;
    st.run_to_fixed_point()?;
    Ok(st)
}

/// Runs S2, then fires one applicable S3/S4/S5 instance at a time until
/// none is left. `pick(k)` chooses among the `k` applicable instances (taken
/// modulo `k`).
pub fn rule_schedule(g: &MixedGraph, mut pick: impl FnMut(usize) -> usize) -> Result<MixedGraph> {
    let mut st = OrientationState::new(g)?;
    loop {
        let options = st.applicable()?;
        if options.is_empty() {
            return Ok(st.into_graph());
        }
        let i = pick(options.len()) % options.len();
        st.fire(&options[i])?;
    }
}

/// [`rule_schedule`] driven by a fixed sequence of picks; once the sequence
/// runs out the first applicable instance fires.
pub fn rule_schedule_picks(g: &MixedGraph, picks: &[usize]) -> Result<MixedGraph> {
    let mut it = picks.iter().copied();
    rule_schedule(g, move |_| it.next().unwrap_or(0))
}

/// Join of all DAGs with the same skeleton and unshielded colliders as `d`.
pub fn essential_graph(d: &MixedGraph) -> Result<MixedGraph> {
    if !d.is_dag() {
        return Err(Error::NotDag);
    }
    let colliders = unshielded_colliders(d);
    let mut acc: Option<MixedGraph> = None;
    for member in oracle::enumerate_orientations(&d.skeleton(), OrientationFilter::Dag)? {
        if unshielded_colliders(&member) == colliders {
            acc = Some(match acc {
                None => member,
                Some(a) => join(&a, &member)?,
            });
        }
    }
    Ok(acc.expect("d is a member of its own class"))
}

fn unshielded_colliders(g: &MixedGraph) -> BTreeSet<Triple> {
    g.unshielded_triples()
        .into_iter()
        .filter(|t| g.collider_unchecked(t.a, t.b, t.c))
        .collect()
}

/// Whether the essential graph of DAG `d` equals the orientation rules'
/// output on `d`.
pub fn essential_matches_sup(d: &MixedGraph) -> Result<bool> {
    Ok(essential_graph(d)? == orient_sup(d)?)
}
