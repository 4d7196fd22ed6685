use proptest::prelude::*;

use polyprod::classify::{classify_kronecker_factor, is_3_polytope, match_region, order_pattern_possible};
use polyprod::harness::{from_graph6, to_graph6};
use polyprod::iso::canonical_form;
use polyprod::planar::FaceWalk;
use polyprod::products::{cartesian, kronecker, strong};
use polyprod::{Bipartition, Graph};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|j| (0..j).map(move |i| (i, j)));
            let edges: Vec<_> = pairs.zip(bits).filter(|p| p.1).map(|p| p.0).collect();
            Graph::from_edge_list(n, &edges).unwrap()
        })
    })
}

fn graph_and_perm(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(max_n).prop_flat_map(|g| {
        let ids: Vec<usize> = (0..g.n()).collect();
        (Just(g), Just(ids).prop_shuffle())
    })
}

/// A cycle `0..k` as a face, with chords between distinct non-adjacent
/// positions.
fn region_and_chords() -> impl Strategy<Value = (FaceWalk, Vec<(usize, usize)>)> {
    (6usize..=12).prop_flat_map(|k| {
        let chord = (0..k, 0..k).prop_filter("non-adjacent", move |&(a, b)| {
            a != b && (a + 1) % k != b && (b + 1) % k != a
        });
        let face = FaceWalk {
            boundary: (0..k).collect(),
        };
        (Just(face), prop::collection::vec(chord, 2..=5))
    })
}

proptest! {
    #[test]
    fn canonical_form_ignores_labels((g, perm) in graph_and_perm(9)) {
        prop_assert_eq!(canonical_form(&g), canonical_form(&g.relabel(&perm)));
    }

    #[test]
    fn bipartition_witnesses_are_valid(g in graph(10)) {
        match g.bipartition() {
            Bipartition::Bipartite(c) => prop_assert!(c.is_proper_for(&g)),
            Bipartition::NotBipartite { odd_cycle } => {
                let k = odd_cycle.len();
                prop_assert!(k % 2 == 1 && k >= 3);
                for i in 0..k {
                    prop_assert!(g.has_edge(odd_cycle[i], odd_cycle[(i + 1) % k]));
                }
                let mut seen = odd_cycle.clone();
                seen.sort_unstable();
                seen.dedup();
                prop_assert_eq!(seen.len(), k);
            }
        }
    }

    #[test]
    fn graph6_round_trip(g in graph(12)) {
        prop_assert_eq!(from_graph6(&to_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn product_sizes(a in graph(6), b in graph(6)) {
        let (n, m) = (a.n() * b.n(), (a.m(), b.m()));
        let k = kronecker(&a, &b);
        let c = cartesian(&a, &b);
        let s = strong(&a, &b);
        prop_assert_eq!((k.n(), c.n(), s.n()), (n, n, n));
        prop_assert_eq!(k.m(), 2 * m.0 * m.1);
        prop_assert_eq!(c.m(), a.n() * m.1 + b.n() * m.0);
        prop_assert_eq!(s.m(), c.m() + k.m());
        prop_assert_eq!(canonical_form(&k), canonical_form(&kronecker(&b, &a)));
    }

    #[test]
    fn region_pattern_is_hereditary((face, chords) in region_and_chords()) {
        if order_pattern_possible(&face, &chords) {
            for skip in 0..chords.len() {
                let mut sub = chords.clone();
                sub.remove(skip);
                prop_assert!(order_pattern_possible(&face, &sub), "{:?} minus {}", chords, skip);
            }
        }
        if match_region(&face, &chords, &[]).is_some() {
            prop_assert!(order_pattern_possible(&face, &chords));
        }
    }

    #[test]
    fn dispatch_agrees_with_oracle(g in graph(9)) {
        let v = classify_kronecker_factor(&g);
        let k2 = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        prop_assert_eq!(v.accepted, is_3_polytope(&kronecker(&g, &k2)), "{}", v.headline());
        if v.accepted {
            prop_assert!(v.certificate.replay(&g).is_ok());
        }
    }
}
