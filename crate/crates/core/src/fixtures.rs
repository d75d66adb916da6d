// SPDX-License-Identifier: MIT
//! Small named graphs used throughout the tests, the CLI examples and the
//! README. Greek vertex names are spelled out (`beta`, `gamma`, ...).

use crate::graph::MixedGraph;

fn build(edges: &[(&str, &str, &str)]) -> MixedGraph {
    MixedGraph::from_tokens(&[], edges).expect("fixture is well formed")
}

/// Treatment/outcome DAG with latent common cause `H` of `Pcp` and `CD4`.
pub fn treatment_dag() -> MixedGraph {
    build(&[
        ("Azt", "->", "Pcp"),
        ("H", "->", "Pcp"),
        ("H", "->", "CD4"),
        ("Ap", "->", "CD4"),
    ])
}

/// [`treatment_dag`] with `H` marginalized out.
pub fn treatment_mag() -> MixedGraph {
    build(&[
        ("Azt", "->", "Pcp"),
        ("Pcp", "<->", "CD4"),
        ("Ap", "->", "CD4"),
    ])
}

/// Ancestral but not maximal: `gamma <-> beta <-> alpha <-> delta` is an
/// inducing path between the non-adjacent `gamma` and `delta`.
pub fn inducing_ancestral() -> MixedGraph {
    build(&[
        ("gamma", "<->", "beta"),
        ("beta", "<->", "alpha"),
        ("alpha", "<->", "delta"),
        ("beta", "->", "delta"),
        ("alpha", "->", "gamma"),
    ])
}

/// [`inducing_ancestral`] made maximal by adding `gamma <-> delta`.
pub fn inducing_completed() -> MixedGraph {
    build(&[
        ("gamma", "<->", "beta"),
        ("beta", "<->", "alpha"),
        ("alpha", "<->", "delta"),
        ("beta", "->", "delta"),
        ("alpha", "->", "gamma"),
        ("gamma", "<->", "delta"),
    ])
}

/// `<x, q, beta, y>` discriminates `<q, beta, y>` as a collider.
pub fn discriminated_collider() -> MixedGraph {
    build(&[
        ("x", "->", "q"),
        ("q", "->", "y"),
        ("q", "<->", "beta"),
        ("beta", "<->", "y"),
    ])
}

/// The other member of [`discriminated_collider`]'s equivalence class.
pub fn discriminated_collider_twin() -> MixedGraph {
    build(&[
        ("x", "<->", "q"),
        ("q", "->", "y"),
        ("q", "<->", "beta"),
        ("beta", "<->", "y"),
    ])
}

/// Same adjacencies and unshielded colliders as [`discriminated_collider`], but `beta` is a
/// non-collider on the discriminating path.
pub fn discriminated_noncollider() -> MixedGraph {
    build(&[
        ("x", "->", "q"),
        ("q", "->", "y"),
        ("q", "<->", "beta"),
        ("beta", "->", "y"),
    ])
}

/// `x -> y -> z`
pub fn chain3() -> MixedGraph {
    build(&[("x", "->", "y"), ("y", "->", "z")])
}

/// `x -> y <- z`
pub fn collider3() -> MixedGraph {
    build(&[("x", "->", "y"), ("z", "->", "y")])
}

/// `a -> b`
pub fn edge1() -> MixedGraph {
    build(&[("a", "->", "b")])
}

/// Five vertices on which every orientation rule fires at least once.
pub fn rule_tour() -> MixedGraph {
    build(&[
        ("a", "->", "b"),
        ("a", "->", "c"),
        ("a", "->", "d"),
        ("a", "->", "e"),
        ("b", "->", "c"),
        ("b", "<->", "d"),
        ("e", "->", "b"),
        ("c", "<->", "d"),
    ])
}

/// Every fixture above together with its name.
pub fn all() -> alloc::vec::Vec<(&'static str, MixedGraph)> {
    alloc::vec![
        ("treatment_dag", treatment_dag()),
        ("treatment_mag", treatment_mag()),
        ("inducing_ancestral", inducing_ancestral()),
        ("inducing_completed", inducing_completed()),
        ("discriminated_collider", discriminated_collider()),
        ("discriminated_collider_twin", discriminated_collider_twin()),
        ("discriminated_noncollider", discriminated_noncollider()),
        ("chain3", chain3()),
        ("collider3", collider3()),
        ("edge1", edge1()),
        ("rule_tour", rule_tour()),
    ]
}
