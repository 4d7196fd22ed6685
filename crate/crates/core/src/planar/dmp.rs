//! Path-addition planarity (Demoucron–Malgrange–Pertuiset) for biconnected
//! graphs, in a single-embedding mode and in an exhaustive branching mode
//! that yields every planar rotation system exactly once.

use std::collections::{HashSet, VecDeque};

use crate::graph::Graph;

use super::embedding::rotation_from_faces;

#[derive(Clone)]
struct State {
    placed_vertex: Vec<bool>,
    placed_edge: HashSet<(usize, usize)>,
    /// Consistently oriented face cycles of the embedded subgraph.
    faces: Vec<Vec<usize>>,
}

struct Fragment {
    attachments: Vec<usize>,
    /// Set for single-edge fragments; component fragments keep their vertices.
    chord: Option<(usize, usize)>,
    interior: Vec<usize>,
}

fn key(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

/// Shortest cycle through the first edge at the least vertex.
fn initial_cycle(g: &Graph) -> Vec<usize> {
    let s = 0;
    let t = g.neighbors(s)[0];
    let n = g.n();
    let mut prev = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    seen[t] = true;
    let mut q = VecDeque::from([t]);
    while let Some(u) = q.pop_front() {
        for &w in g.neighbors(u) {
            if (u == t && w == s) || seen[w] {
                continue;
            }
            seen[w] = true;
            prev[w] = u;
            q.push_back(w);
        }
    }
    assert!(seen[s], "biconnected graph has a cycle through every edge");
    let mut path = vec![s];
    let mut v = s;
    while v != t {
        v = prev[v];
        path.push(v);
    }
    path
}

impl State {
    fn start(g: &Graph) -> State {
        let cycle = initial_cycle(g);
        let mut placed_vertex = vec![false; g.n()];
        let mut placed_edge = HashSet::new();
        for i in 0..cycle.len() {
            placed_vertex[cycle[i]] = true;
            placed_edge.insert(key(cycle[i], cycle[(i + 1) % cycle.len()]));
        }
        let reversed: Vec<usize> = cycle.iter().rev().copied().collect();
        State {
            placed_vertex,
            placed_edge,
            faces: vec![cycle, reversed],
        }
    }

    fn fragments(&self, g: &Graph) -> Vec<Fragment> {
        let n = g.n();
        let mut out = Vec::new();
        for (u, v) in g.edges() {
            if self.placed_vertex[u] && self.placed_vertex[v] && !self.placed_edge.contains(&(u, v)) {
                out.push(Fragment {
                    attachments: vec![u, v],
                    chord: Some((u, v)),
                    interior: Vec::new(),
                });
            }
        }
        let mut seen = self.placed_vertex.clone();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut interior = vec![s];
            let mut attachments = Vec::new();
            let mut i = 0;
            while i < interior.len() {
                let u = interior[i];
                i += 1;
                for &w in g.neighbors(u) {
                    if self.placed_vertex[w] {
                        attachments.push(w);
                    } else if !seen[w] {
                        seen[w] = true;
                        interior.push(w);
                    }
                }
            }
            attachments.sort_unstable();
            attachments.dedup();
            interior.sort_unstable();
            out.push(Fragment {
                attachments,
                chord: None,
                interior,
            });
        }
        out
    }

    fn admissible_faces(&self, frag: &Fragment) -> Vec<usize> {
        (0..self.faces.len())
            .filter(|&i| frag.attachments.iter().all(|a| self.faces[i].contains(a)))
            .collect()
    }

    /// Path through the fragment joining two distinct attachments.
    fn fragment_path(&self, g: &Graph, frag: &Fragment) -> Vec<usize> {
        if let Some((u, v)) = frag.chord {
            return vec![u, v];
        }
        let x = frag.attachments[0];
        let n = g.n();
        let mut inside = vec![false; n];
        for &v in &frag.interior {
            inside[v] = true;
        }
        let mut prev = vec![usize::MAX; n];
        let mut q = VecDeque::new();
        for &w in g.neighbors(x) {
            if inside[w] && prev[w] == usize::MAX {
                prev[w] = x;
                q.push_back(w);
            }
        }
        while let Some(u) = q.pop_front() {
            for &w in g.neighbors(u) {
                if self.placed_vertex[w] && w != x {
                    let mut path = vec![w, u];
                    let mut c = u;
                    while prev[c] != x {
                        c = prev[c];
                        path.push(c);
                    }
                    path.push(x);
                    path.reverse();
                    return path;
                }
                if inside[w] && prev[w] == usize::MAX {
                    prev[w] = u;
                    q.push_back(w);
                }
            }
        }
        panic!("fragment of a biconnected graph has two attachments");
    }

    fn embed_path(&mut self, face_index: usize, path: &[usize]) {
        let face = self.faces[face_index].clone();
        let k = face.len();
        let x = path[0];
        let y = *path.last().unwrap();
        let i = face.iter().position(|&v| v == x).unwrap();
        let j = face.iter().position(|&v| v == y).unwrap();
        let inner = &path[1..path.len() - 1];

        let mut a = Vec::new();
        let mut p = i;
        loop {
            a.push(face[p]);
            if p == j {
                break;
            }
            p = (p + 1) % k;
        }
        a.extend(inner.iter().rev());

        let mut b = Vec::new();
        let mut p = j;
        loop {
            b.push(face[p]);
            if p == i {
                break;
            }
            p = (p + 1) % k;
        }
        b.extend(inner.iter());

        self.faces[face_index] = a;
        self.faces.push(b);

        for w in path.windows(2) {
            self.placed_edge.insert(key(w[0], w[1]));
        }
        for &v in path {
            self.placed_vertex[v] = true;
        }
    }

    fn done(&self, g: &Graph) -> bool {
        self.placed_edge.len() == g.m()
    }
}

/// One planar rotation system of a biconnected graph, or `None` if it is
/// not planar.
pub(crate) fn embed_biconnected(g: &Graph) -> Option<Vec<Vec<usize>>> {
    if g.n() >= 3 && g.m() > 3 * g.n() - 6 {
        return None;
    }
    let mut state = State::start(g);
    while !state.done(g) {
        let frags = state.fragments(g);
        let mut choice: Option<(usize, usize)> = None;
        for (fi, frag) in frags.iter().enumerate() {
            let adm = state.admissible_faces(frag);
            match adm.len() {
                0 => return None,
                1 => {
                    choice = Some((fi, adm[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((fi, adm[0]));
                    }
                }
            }
        }
        let (fi, face) = choice.expect("unfinished embedding has a fragment");
        let path = state.fragment_path(g, &frags[fi]);
        state.embed_path(face, &path);
    }
    rotation_from_faces(g.n(), &state.faces)
}

/// Every planar rotation system of a biconnected graph (both mirror
/// images included). Stops early once more than `limit` are found and
/// returns `None` in that case.
pub(crate) fn all_embeddings_biconnected(g: &Graph, limit: usize) -> Option<Vec<Vec<Vec<usize>>>> {
    let mut out = Vec::new();
    if g.n() >= 3 && g.m() > 3 * g.n() - 6 {
        return Some(out);
    }
    let mut stack = vec![State::start(g)];
    while let Some(state) = stack.pop() {
        if state.done(g) {
            out.push(rotation_from_faces(g.n(), &state.faces).expect("faces of a finished embedding"));
            if out.len() > limit {
                return None;
            }
            continue;
        }
        let frags = state.fragments(g);
        let mut best: Option<(usize, Vec<usize>)> = None;
        let mut dead = false;
        for (fi, frag) in frags.iter().enumerate() {
            let adm = state.admissible_faces(frag);
            if adm.is_empty() {
                dead = true;
                break;
            }
            if best.as_ref().is_none_or(|(_, b)| adm.len() < b.len()) {
                best = Some((fi, adm));
            }
        }
        if dead {
            continue;
        }
        let (fi, adm) = best.expect("unfinished embedding has a fragment");
        let path = state.fragment_path(g, &frags[fi]);
        // push in reverse so the first admissible face is explored first
        for &face in adm.iter().rev() {
            let mut next = state.clone();
            next.embed_path(face, &path);
            stack.push(next);
        }
    }
    Some(out)
}
