mod common;

use std::collections::BTreeSet;

use common::connected_up_to;
use polyprod::planar::{brute_force_rotations, enumerate_embeddings, is_planar, DEFAULT_EMBED_CAP};

/// Rotates every cyclic order to start at its smallest neighbour.
fn normalize(rotation: &[Vec<usize>]) -> Vec<Vec<usize>> {
    rotation
        .iter()
        .map(|r| {
            let Some(at) = r.iter().enumerate().min_by_key(|p| p.1).map(|p| p.0) else {
                return Vec::new();
            };
            r[at..].iter().chain(&r[..at]).copied().collect()
        })
        .collect()
}

#[test]
fn path_addition_matches_brute_force() {
    let mut compared = 0;
    for g in connected_up_to(7) {
        if g.n() < 3 || !g.is_biconnected() || !is_planar(&g) {
            continue;
        }
        let Ok(brute) = brute_force_rotations(&g, 50_000) else { continue };
        let brute: BTreeSet<_> = brute.iter().map(|r| normalize(r)).collect();
        let fast: BTreeSet<_> = enumerate_embeddings(&g, DEFAULT_EMBED_CAP)
            .unwrap()
            .iter()
            .map(|e| normalize(e.rotation()))
            .collect();
        assert_eq!(fast, brute, "{:?}", g.edges());
        compared += 1;
    }
    assert!(compared > 200, "only {compared} graphs compared");
}

#[test]
fn every_embedding_satisfies_euler() {
    for g in connected_up_to(7) {
        if g.n() < 3 {
            continue;
        }
        for e in enumerate_embeddings(&g, DEFAULT_EMBED_CAP).unwrap_or_default() {
            assert_eq!(g.n() + e.faces().len(), g.m() + 2, "{:?}", g.edges());
        }
    }
}
