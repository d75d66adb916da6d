// SPDX-License-Identifier: MIT

mod common;

use common::*;
use mag_core::ancestral::{
    ancestral_violations, is_ancestral, is_balanced, is_mag, is_maximal,
    is_maximal_by_inducing_paths, maximalize,
};
use mag_core::oracle::OrientationFilter;
use mag_core::separation::independence_model;
use mag_core::{Error, Mark, MixedGraph};
use proptest::prelude::*;

fn ancestral_up_to_four() -> Vec<MixedGraph> {
    (0..=4)
        .flat_map(|n| skeletons(n).flat_map(|s| orientations(&s, OrientationFilter::Ancestral)))
        .collect()
}

#[test]
fn violations_agree_with_predicate() {
    for n in 0..=4 {
        for g in all_graphs(n) {
            assert_eq!(
                ancestral_violations(&g).is_empty(),
                is_ancestral(&g),
                "{g:?}"
            );
            if !is_ancestral(&g) {
                assert_eq!(is_maximal(&g), Err(Error::NotAncestral));
                assert_eq!(maximalize(&g), Err(Error::NotAncestral));
            }
        }
    }
}

#[test]
fn ancestral_graphs_are_balanced() {
    for g in ancestral_up_to_four() {
        assert!(is_balanced(&g), "{g:?}");
    }
}

#[test]
fn maximality_tests_agree() {
    for g in ancestral_up_to_four() {
        assert_eq!(is_maximal(&g), is_maximal_by_inducing_paths(&g), "{g:?}");
    }
}

#[test]
fn maximalize_is_idempotent_and_keeps_the_model() {
    for g in ancestral_up_to_four() {
        let m = maximalize(&g).unwrap();
        assert!(is_mag(&m));
        assert_eq!(maximalize(&m).unwrap(), m);
        assert_eq!(independence_model(&m), independence_model(&g));
        // only bidirected edges are added
        for e in g.edges() {
            assert_eq!(m.end_mark(e.v, e.u), Some(e.at_u));
            assert_eq!(m.end_mark(e.u, e.v), Some(e.at_v));
        }
        for e in m.edges().filter(|e| !g.is_adjacent(e.u, e.v)) {
            assert_eq!((e.at_u, e.at_v), (Mark::Arrowhead, Mark::Arrowhead));
        }
        if is_maximal(&g).unwrap() {
            assert_eq!(m, g);
        }
    }
}

/// In an ancestral graph, `a *-> b -> c` with `a` adjacent to `c` forces an
/// arrowhead at `c` on `(a, c)`, and so does `a -> b *-> c`.
#[test]
fn triangle_arrowheads_in_ancestral_graphs() {
    let mut checked = 0;
    for g in ancestral_up_to_four() {
        for t in g.triangles() {
            for &(a, b, c) in &[
                (t[0], t[1], t[2]),
                (t[0], t[2], t[1]),
                (t[1], t[0], t[2]),
                (t[1], t[2], t[0]),
                (t[2], t[0], t[1]),
                (t[2], t[1], t[0]),
            ] {
                if (g.has_arrowhead(a, b) && g.is_parent(b, c))
                    || (g.is_parent(a, b) && g.has_arrowhead(b, c))
                {
                    assert!(g.has_arrowhead(a, c), "{g:?} {a} {b} {c}");
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 0);
}

proptest! {
    #[test]
    fn random_ancestral_graphs(g in arb_graph(6).prop_filter("ancestral", is_ancestral)) {
        prop_assert!(is_balanced(&g));
        prop_assert_eq!(is_maximal(&g), is_maximal_by_inducing_paths(&g));
    }
}
