use std::collections::HashMap;

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmbeddingError {
    #[error("rotation at vertex {0} is not a permutation of its neighbours")]
    BadRotation(usize),
    #[error("rotation system has positive genus (component with {vertices} vertices, {edges} edges, {faces} faces)")]
    NotPlanar {
        vertices: usize,
        edges: usize,
        faces: usize,
    },
}

/// Closed boundary walk of one face. `boundary[i] -> boundary[i + 1]`
/// (cyclically) are the directed edges of the walk.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FaceWalk {
    pub boundary: Vec<usize>,
}

impl FaceWalk {
    pub fn len(&self) -> usize {
        self.boundary.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boundary.is_empty()
    }

    pub fn is_odd(&self) -> bool {
        self.len() % 2 == 1
    }

    pub fn contains(&self, v: usize) -> bool {
        self.boundary.contains(&v)
    }

    /// Sorted, de-duplicated vertex set.
    pub fn vertex_set(&self) -> Vec<usize> {
        let mut vs = self.boundary.clone();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    /// Whether the walk traverses the edge `uv` in either direction.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let k = self.boundary.len();
        (0..k).any(|i| {
            let (a, b) = (self.boundary[i], self.boundary[(i + 1) % k]);
            (a, b) == (u, v) || (a, b) == (v, u)
        })
    }

    /// Whether the walk visits every vertex at most once.
    pub fn is_simple(&self) -> bool {
        self.vertex_set().len() == self.boundary.len()
    }
}

/// Whether every vertex of `set` lies on the boundary of `face`.
pub fn face_contains_vertices(face: &FaceWalk, set: &[usize]) -> bool {
    set.iter().all(|&v| face.contains(v))
}

/// A rotation system of genus zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PlanarEmbedding {
    graph: Graph,
    rotation: Vec<Vec<usize>>,
}

impl PlanarEmbedding {
    /// Validates that `rotation[v]` permutes the neighbours of `v` and that
    /// every component traces to genus zero.
    pub fn new(graph: Graph, rotation: Vec<Vec<usize>>) -> Result<Self, EmbeddingError> {
        if rotation.len() != graph.n() {
            return Err(EmbeddingError::BadRotation(rotation.len().min(graph.n())));
        }
        for (v, rot) in rotation.iter().enumerate() {
            let mut sorted = rot.clone();
            sorted.sort_unstable();
            if sorted != graph.neighbors(v) {
                return Err(EmbeddingError::BadRotation(v));
            }
        }
        let emb = PlanarEmbedding { graph, rotation };
        emb.check_genus_zero()?;
        Ok(emb)
    }

    pub(crate) fn new_unchecked(graph: Graph, rotation: Vec<Vec<usize>>) -> Self {
        PlanarEmbedding { graph, rotation }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn rotation(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    /// The same embedding seen from the other side of the sphere.
    pub fn reflected(&self) -> Self {
        let rotation = self
            .rotation
            .iter()
            .map(|r| r.iter().rev().copied().collect())
            .collect();
        PlanarEmbedding {
            graph: self.graph.clone(),
            rotation,
        }
    }

    /// Rotation with each vertex's lowest neighbour listed first.
    pub fn normalized_rotation(&self) -> Vec<Vec<usize>> {
        normalize_rotation(&self.rotation)
    }

    /// Faces by next-edge tracing: after arriving at `v` from `u`, leave
    /// along the neighbour preceding `u` in the rotation at `v`. Each
    /// directed edge is used once; faces are ordered by their first
    /// directed edge.
    pub fn faces(&self) -> Vec<FaceWalk> {
        trace_faces(&self.rotation)
    }

    pub fn odd_faces(&self) -> Vec<FaceWalk> {
        self.faces().into_iter().filter(FaceWalk::is_odd).collect()
    }

    fn check_genus_zero(&self) -> Result<(), EmbeddingError> {
        let faces = self.faces();
        let comps = self.graph.connected_components();
        let mut comp_of = vec![0; self.graph.n()];
        for (i, c) in comps.iter().enumerate() {
            for &v in c {
                comp_of[v] = i;
            }
        }
        let mut face_count = vec![0usize; comps.len()];
        for f in &faces {
            face_count[comp_of[f.boundary[0]]] += 1;
        }
        for (i, c) in comps.iter().enumerate() {
            let edges: usize = c.iter().map(|&v| self.graph.degree(v)).sum::<usize>() / 2;
            if edges == 0 {
                continue;
            }
            if c.len() + face_count[i] != edges + 2 {
                return Err(EmbeddingError::NotPlanar {
                    vertices: c.len(),
                    edges,
                    faces: face_count[i],
                });
            }
        }
        Ok(())
    }
}

pub(crate) fn normalize_rotation(rotation: &[Vec<usize>]) -> Vec<Vec<usize>> {
    rotation
        .iter()
        .map(|r| {
            if r.is_empty() {
                return Vec::new();
            }
            let k = (0..r.len()).min_by_key(|&i| r[i]).unwrap();
            r[k..].iter().chain(r[..k].iter()).copied().collect()
        })
        .collect()
}

pub(crate) fn trace_faces(rotation: &[Vec<usize>]) -> Vec<FaceWalk> {
    let n = rotation.len();
    let index: Vec<HashMap<usize, usize>> = rotation
        .iter()
        .map(|r| r.iter().enumerate().map(|(i, &w)| (w, i)).collect())
        .collect();
    let mut used: Vec<Vec<bool>> = rotation.iter().map(|r| vec![false; r.len()]).collect();
    let mut faces = Vec::new();
    for u in 0..n {
        for i in 0..rotation[u].len() {
            if used[u][i] {
                continue;
            }
            let mut walk = Vec::new();
            let (mut a, mut b) = (u, rotation[u][i]);
            loop {
                walk.push(a);
                used[a][index[a][&b]] = true;
                let deg = rotation[b].len();
                let j = index[b][&a];
                let c = rotation[b][(j + deg - 1) % deg];
                a = b;
                b = c;
                if used[a][index[a][&b]] {
                    break;
                }
            }
            faces.push(FaceWalk { boundary: walk });
        }
    }
    faces
}

/// Rotation system implied by consistently oriented face cycles, inverse of
/// [`trace_faces`]. Returns `None` if the faces do not determine a single
/// cyclic order at some vertex.
pub(crate) fn rotation_from_faces(n: usize, faces: &[Vec<usize>]) -> Option<Vec<Vec<usize>>> {
    let mut succ: Vec<HashMap<usize, usize>> = vec![HashMap::new(); n];
    for f in faces {
        let k = f.len();
        for i in 0..k {
            let prev = f[(i + k - 1) % k];
            let v = f[i];
            let next = f[(i + 1) % k];
            if succ[v].insert(next, prev).is_some() {
                return None;
            }
        }
    }
    let mut rotation = Vec::with_capacity(n);
    for s in succ.iter() {
        if s.is_empty() {
            rotation.push(Vec::new());
            continue;
        }
        let start = *s.keys().min().unwrap();
        let mut r = vec![start];
        let mut cur = start;
        loop {
            cur = *s.get(&cur)?;
            if cur == start {
                break;
            }
            r.push(cur);
            if r.len() > s.len() {
                return None;
            }
        }
        if r.len() != s.len() {
            return None;
        }
        rotation.push(r);
    }
    Some(rotation)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_rotation_traces_four_triangles() {
        let g = Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        // vertex 3 in the middle of triangle 0,1,2 (counter-clockwise)
        let rot = vec![vec![1, 3, 2], vec![2, 3, 0], vec![0, 3, 1], vec![0, 1, 2]];
        let e = PlanarEmbedding::new(g, rot).unwrap();
        let faces = e.faces();
        assert_eq!(faces.len(), 4);
        assert!(faces.iter().all(|f| f.len() == 3));
        assert_eq!(e.odd_faces().len(), 4);
    }

    #[test]
    fn bad_rotation_is_rejected() {
        let g = Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let rot = vec![vec![1, 2, 3], vec![0, 2, 3], vec![0, 1, 3], vec![0, 1, 2]];
        assert!(matches!(
            PlanarEmbedding::new(g.clone(), rot),
            Err(EmbeddingError::NotPlanar { .. })
        ));
        let rot = vec![vec![1, 2], vec![0, 2, 3], vec![0, 1, 3], vec![0, 1, 2]];
        assert_eq!(PlanarEmbedding::new(g, rot), Err(EmbeddingError::BadRotation(0)));
    }

    #[test]
    fn faces_round_trip_to_rotation() {
        let rot = vec![vec![1, 3, 2], vec![2, 3, 0], vec![0, 3, 1], vec![0, 1, 2]];
        let faces: Vec<Vec<usize>> = trace_faces(&rot).into_iter().map(|f| f.boundary).collect();
        let back = rotation_from_faces(4, &faces).unwrap();
        assert_eq!(normalize_rotation(&back), normalize_rotation(&rot));
    }

    #[test]
    fn face_membership() {
        let f = FaceWalk { boundary: vec![4, 7, 9] };
        assert!(face_contains_vertices(&f, &[4, 7]));
        assert!(!face_contains_vertices(&f, &[4, 5]));
        assert!(f.has_edge(9, 4));
        assert!(!f.has_edge(4, 4));
    }
}
