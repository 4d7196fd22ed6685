//! Planarity testing with certificates, face enumeration and embedding
//! enumeration.
//!
//! A planar graph always comes back with a rotation system; a non-planar
//! one comes back with a Kuratowski subgraph.

mod dmp;
mod embedding;

use thiserror::Error;

use crate::blocks::Blocks;
use crate::graph::Graph;

pub use embedding::{face_contains_vertices, EmbeddingError, FaceWalk, PlanarEmbedding};

/// Default vertex cap for [`enumerate_embeddings`].
pub const DEFAULT_EMBED_CAP: usize = 10;

/// Upper bound on the number of rotation systems examined by the
/// brute-force enumerator for graphs that are not biconnected.
const BRUTE_FORCE_BUDGET: u64 = 2_000_000;

/// Upper bound on the number of embeddings returned for one graph.
const EMBEDDING_LIMIT: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KuratowskiKind {
    K5,
    K33,
}

/// Subgraph homeomorphic to `K5` or `K3,3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KuratowskiWitness {
    pub kind: KuratowskiKind,
    /// Vertices of degree at least three in the witness subgraph.
    pub branch_vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Planarity {
    Planar(PlanarEmbedding),
    NonPlanar(KuratowskiWitness),
}

impl Planarity {
    pub fn is_planar(&self) -> bool {
        matches!(self, Planarity::Planar(_))
    }

    pub fn embedding(&self) -> Option<&PlanarEmbedding> {
        match self {
            Planarity::Planar(e) => Some(e),
            Planarity::NonPlanar(_) => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    /// Too large for exhaustive enumeration; callers fall back to the oracle.
    #[error("embedding enumeration delegated: {n} vertices exceeds cap {cap}")]
    Delegated { n: usize, cap: usize },
    #[error("embedding enumeration delegated: more than {limit} rotation systems")]
    TooMany { limit: u64 },
}

/// Planar embedding, or a Kuratowski witness.
pub fn test_planarity(g: &Graph) -> Planarity {
    match planar_embedding(g) {
        Some(e) => Planarity::Planar(e),
        None => Planarity::NonPlanar(kuratowski_witness(g)),
    }
}

pub fn is_planar(g: &Graph) -> bool {
    planar_embedding(g).is_some()
}

/// One planar embedding if the graph is planar. Each block is embedded on
/// its own; block rotations are concatenated at cut vertices.
pub fn planar_embedding(g: &Graph) -> Option<PlanarEmbedding> {
    let n = g.n();
    if n >= 3 && g.m() > 3 * n - 6 {
        return None;
    }
    let blocks = Blocks::of(g);
    let mut rotation: Vec<Vec<usize>> = vec![Vec::new(); n];
    for block in &blocks.blocks {
        if block.len() == 1 {
            let (u, v) = block[0];
            rotation[u].push(v);
            rotation[v].push(u);
            continue;
        }
        let (sub, verts) = block_subgraph(n, block);
        let rot = dmp::embed_biconnected(&sub)?;
        for (i, r) in rot.into_iter().enumerate() {
            rotation[verts[i]].extend(r.into_iter().map(|j| verts[j]));
        }
    }
    Some(PlanarEmbedding::new_unchecked(g.clone(), rotation))
}

fn block_subgraph(n: usize, block: &[(usize, usize)]) -> (Graph, Vec<usize>) {
    let mut verts: Vec<usize> = block.iter().flat_map(|&(u, v)| [u, v]).collect();
    verts.sort_unstable();
    verts.dedup();
    let mut index = vec![usize::MAX; n];
    for (i, &v) in verts.iter().enumerate() {
        index[v] = i;
    }
    let edges: Vec<(usize, usize)> = block.iter().map(|&(u, v)| (index[u], index[v])).collect();
    (Graph::from_edges_unchecked(verts.len(), &edges), verts)
}

/// Minimal non-planar subgraph found by greedy edge deletion; such a
/// subgraph is a subdivision of `K5` or `K3,3`.
fn kuratowski_witness(g: &Graph) -> KuratowskiWitness {
    let mut edges = g.edges();
    let mut i = 0;
    while i < edges.len() {
        let mut trial = edges.clone();
        trial.remove(i);
        if is_planar(&Graph::from_edges_unchecked(g.n(), &trial)) {
            i += 1;
        } else {
            edges = trial;
        }
    }
    let h = Graph::from_edges_unchecked(g.n(), &edges);
    let branch_vertices: Vec<usize> = (0..h.n()).filter(|&v| h.degree(v) >= 3).collect();
    let kind = if branch_vertices.len() == 5 {
        KuratowskiKind::K5
    } else {
        KuratowskiKind::K33
    };
    KuratowskiWitness {
        kind,
        branch_vertices,
        edges,
    }
}

/// All planar rotation systems of `g` (one per assignment of cyclic orders,
/// mirror images included). Empty iff `g` is not planar.
///
/// Biconnected graphs are enumerated by branching path addition; other
/// graphs by brute force over all rotation assignments.
pub fn enumerate_embeddings(g: &Graph, cap: usize) -> Result<Vec<PlanarEmbedding>, EnumerationError> {
    if g.n() > cap {
        return Err(EnumerationError::Delegated { n: g.n(), cap });
    }
    if !is_planar(g) {
        return Ok(Vec::new());
    }
    let rotations = if g.is_biconnected() {
        dmp::all_embeddings_biconnected(g, EMBEDDING_LIMIT).ok_or(EnumerationError::TooMany {
            limit: EMBEDDING_LIMIT as u64,
        })?
    } else {
        brute_force_rotations(g, BRUTE_FORCE_BUDGET)?
    };
    let mut out: Vec<PlanarEmbedding> = rotations
        .into_iter()
        .map(|r| PlanarEmbedding::new_unchecked(g.clone(), embedding::normalize_rotation(&r)))
        .collect();
    out.sort_by(|a, b| a.rotation().cmp(b.rotation()));
    out.dedup();
    Ok(out)
}

/// Every assignment of cyclic orders (lowest neighbour pinned first) that
/// traces to genus zero.
pub fn brute_force_rotations(g: &Graph, budget: u64) -> Result<Vec<Vec<Vec<usize>>>, EnumerationError> {
    let per_vertex: Vec<Vec<Vec<usize>>> = (0..g.n())
        .map(|v| pinned_cyclic_orders(g.neighbors(v)))
        .collect();
    let total = per_vertex
        .iter()
        .try_fold(1u64, |acc, p| acc.checked_mul(p.len() as u64))
        .unwrap_or(u64::MAX);
    if total > budget {
        return Err(EnumerationError::TooMany { limit: budget });
    }
    let mut out = Vec::new();
    let mut choice = vec![0usize; g.n()];
    loop {
        let rotation: Vec<Vec<usize>> = choice
            .iter()
            .enumerate()
            .map(|(v, &c)| per_vertex[v][c].clone())
            .collect();
        if PlanarEmbedding::new(g.clone(), rotation.clone()).is_ok() {
            out.push(rotation);
        }
        let mut v = 0;
        loop {
            if v == g.n() {
                return Ok(out);
            }
            choice[v] += 1;
            if choice[v] < per_vertex[v].len() {
                break;
            }
            choice[v] = 0;
            v += 1;
        }
    }
}

fn pinned_cyclic_orders(neighbors: &[usize]) -> Vec<Vec<usize>> {
    if neighbors.len() <= 2 {
        return vec![neighbors.to_vec()];
    }
    let first = neighbors[0];
    let mut rest: Vec<usize> = neighbors[1..].to_vec();
    let mut out = Vec::new();
    permute(&mut rest, 0, &mut |p| {
        let mut r = vec![first];
        r.extend_from_slice(p);
        out.push(r);
    });
    out
}

fn permute(items: &mut [usize], k: usize, f: &mut dyn FnMut(&[usize])) {
    if k == items.len() {
        f(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, f);
        items.swap(k, i);
    }
}

/// Biconnected and embeddable with every vertex on one face, tested by
/// planarity of the graph plus an apex joined to all vertices.
pub fn is_outerplanar_2connected(g: &Graph) -> bool {
    if !g.is_biconnected() {
        return false;
    }
    let apex = g.n();
    let mut edges = g.edges();
    edges.extend((0..g.n()).map(|v| (v, apex)));
    is_planar(&Graph::from_edges_unchecked(g.n() + 1, &edges))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edge_list(n, &e).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut e = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                e.push((i, j));
            }
        }
        Graph::from_edge_list(n, &e).unwrap()
    }

    fn k33() -> Graph {
        let mut e = Vec::new();
        for i in 0..3 {
            for j in 3..6 {
                e.push((i, j));
            }
        }
        Graph::from_edge_list(6, &e).unwrap()
    }

    fn face_lengths(e: &PlanarEmbedding) -> Vec<usize> {
        let mut l: Vec<usize> = e.faces().iter().map(FaceWalk::len).collect();
        l.sort_unstable();
        l
    }

    #[test]
    fn k4_is_planar_with_four_triangles() {
        let p = test_planarity(&complete(4));
        let e = p.embedding().unwrap();
        assert_eq!(face_lengths(e), vec![3, 3, 3, 3]);
    }

    #[test]
    fn k33_and_k5_witnesses() {
        match test_planarity(&k33()) {
            Planarity::NonPlanar(w) => {
                assert_eq!(w.kind, KuratowskiKind::K33);
                assert_eq!(w.edges.len(), 9);
            }
            other => panic!("{other:?}"),
        }
        match test_planarity(&complete(5)) {
            Planarity::NonPlanar(w) => {
                assert_eq!(w.kind, KuratowskiKind::K5);
                assert_eq!(w.branch_vertices, vec![0, 1, 2, 3, 4]);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn witness_of_petersen_graph_is_subdivided_k33() {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((5 + i, 5 + (i + 2) % 5));
        }
        let g = Graph::from_edge_list(10, &e).unwrap();
        match test_planarity(&g) {
            Planarity::NonPlanar(w) => {
                let h = Graph::from_edge_list(10, &w.edges).unwrap();
                assert!(!is_planar(&h));
                for (i, &(u, v)) in w.edges.iter().enumerate() {
                    let mut rest = w.edges.clone();
                    rest.remove(i);
                    assert!(is_planar(&Graph::from_edge_list(10, &rest).unwrap()), "edge {u}-{v}");
                }
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn cycle_faces() {
        let e = planar_embedding(&cycle(5)).unwrap();
        assert_eq!(face_lengths(&e), vec![5, 5]);
    }

    #[test]
    fn cube_has_six_squares() {
        let mut edges = Vec::new();
        for v in 0..8usize {
            for b in 0..3 {
                let w = v ^ (1 << b);
                if v < w {
                    edges.push((v, w));
                }
            }
        }
        let g = Graph::from_edge_list(8, &edges).unwrap();
        let e = planar_embedding(&g).unwrap();
        assert_eq!(face_lengths(&e), vec![4; 6]);
        assert!(e.odd_faces().is_empty());
    }

    #[test]
    fn separable_graph_embeds_blockwise() {
        // bowtie plus a pendant path
        let g = Graph::from_edge_list(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2), (4, 5)]).unwrap();
        let e = planar_embedding(&g).unwrap();
        assert!(PlanarEmbedding::new(g.clone(), e.rotation().to_vec()).is_ok());
        let total: usize = e.faces().iter().map(FaceWalk::len).sum();
        assert_eq!(total, 2 * g.m());
    }

    #[test]
    fn c4_has_one_normalized_embedding() {
        let embs = enumerate_embeddings(&cycle(4), DEFAULT_EMBED_CAP).unwrap();
        assert_eq!(embs.len(), 1);
    }

    #[test]
    fn k4_embeddings_are_two_mirror_images() {
        let embs = enumerate_embeddings(&complete(4), DEFAULT_EMBED_CAP).unwrap();
        assert_eq!(embs.len(), 2);
        for e in &embs {
            assert_eq!(face_lengths(e), vec![3, 3, 3, 3]);
        }
        assert_eq!(embs[0].reflected().normalized_rotation(), embs[1].rotation());
    }

    #[test]
    fn enumeration_respects_cap() {
        assert_eq!(
            enumerate_embeddings(&cycle(11), DEFAULT_EMBED_CAP),
            Err(EnumerationError::Delegated { n: 11, cap: 10 })
        );
        assert!(enumerate_embeddings(&k33(), DEFAULT_EMBED_CAP).unwrap().is_empty());
    }

    #[test]
    fn outerplanarity() {
        let diamond = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        assert!(is_outerplanar_2connected(&diamond));
        assert!(!is_outerplanar_2connected(&complete(4)));
        assert!(is_outerplanar_2connected(&cycle(7)));
        assert!(!is_outerplanar_2connected(&complete(2)));
    }
}
