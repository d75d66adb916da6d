// SPDX-License-Identifier: MIT

mod common;

use common::*;
use mag_core::ancestral::is_mag;
use mag_core::oracle::OrientationFilter;
use mag_core::projection::project;
use mag_core::{EdgeKind, Error};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

#[test]
fn no_hidden_vertices_is_identity() {
    for n in 1..=4 {
        for s in skeletons(n) {
            for d in orientations(&s, OrientationFilter::Dag) {
                assert_eq!(project(&d, &[], &[]).unwrap(), d);
            }
        }
    }
}

#[test]
fn selection_ancestors_become_undirected() {
    let mut rng = StdRng::seed_from_u64(90);
    let mut undirected = 0;
    for _ in 0..300 {
        let n = rng.gen_range(3..=6);
        let p = rng.gen_range(0.3..0.8);
        let d = random_dag(&mut rng, n, p);
        let mut vs: Vec<usize> = (0..n).collect();
        vs.shuffle(&mut rng);
        let (s, latent) = (vs[0], if n > 3 { vec![vs[1]] } else { vec![] });
        let m = project(&d, &latent, &[s]).unwrap();
        assert!(is_mag(&m));
        let anc_s = d.ancestor_mask([s]);
        for e in m.edges() {
            let (a, b) = (
                d.vertex(m.name(e.u)).unwrap(),
                d.vertex(m.name(e.v)).unwrap(),
            );
            if anc_s[a] && anc_s[b] {
                assert_eq!(e.kind(), EdgeKind::Undirected, "{d:?}");
                undirected += 1;
                for x in [e.u, e.v] {
                    let rel = m.relations(x).unwrap();
                    assert!(rel.parents.is_empty() && rel.spouses.is_empty());
                }
            }
        }
    }
    assert!(undirected > 0);
}

#[test]
fn rejects_bad_roles() {
    let d = mag_core::fixtures::chain3();
    assert!(matches!(project(&d, &[0], &[0]), Err(Error::Overlap(_))));
    assert_eq!(project(&d, &[7], &[]), Err(Error::VertexOutOfRange(7)));
    assert_eq!(project(&d, &[0, 1], &[2]), Err(Error::EmptyObserved));
}
