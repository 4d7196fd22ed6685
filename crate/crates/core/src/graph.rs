//! Simple undirected graphs on dense vertex ids `0..n`.
//!
//! Every graph in the crate is a [`Graph`]: a vertex count plus a sorted
//! neighbour list per vertex. Values are immutable once built; all editing
//! operations return a new graph.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
}

/// Undirected simple graph. Adjacency lists are sorted and duplicate-free.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges())
    }
}

/// Proper (or candidate) 2-colouring, one entry in `{0, 1}` per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoColoring {
    pub color: Vec<u8>,
}

impl TwoColoring {
    /// Colouring whose bit `i - 1` of `index` gives the colour of vertex `i`;
    /// vertex 0 always gets colour 0.
    pub fn from_index(n: usize, index: u64) -> Self {
        let color = (0..n)
            .map(|v| if v == 0 { 0 } else { ((index >> (v - 1)) & 1) as u8 })
            .collect();
        TwoColoring { color }
    }

    pub fn is_monochromatic(&self, u: usize, v: usize) -> bool {
        self.color[u] == self.color[v]
    }

    pub fn is_proper_for(&self, g: &Graph) -> bool {
        g.edges().iter().all(|&(u, v)| self.color[u] != self.color[v])
    }
}

/// Result of [`Graph::bipartition`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bipartition {
    Bipartite(TwoColoring),
    /// Closed walk of odd length; the first vertex is repeated implicitly.
    NotBipartite { odd_cycle: Vec<usize> },
}

impl Bipartition {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, Bipartition::Bipartite(_))
    }

    pub fn coloring(&self) -> Option<&TwoColoring> {
        match self {
            Bipartition::Bipartite(c) => Some(c),
            Bipartition::NotBipartite { .. } => None,
        }
    }
}

/// A vertex cut together with the components it leaves behind.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct CutSet {
    pub vertices: Vec<usize>,
    pub components: Vec<Vec<usize>>,
}

impl Graph {
    /// Graph on `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { adj })
    }

    /// Builds from an edge list known to be valid. Panics otherwise.
    pub(crate) fn from_edges_unchecked(n: usize, edges: &[(usize, usize)]) -> Self {
        Self::from_edge_list(n, edges).expect("edge list must be valid")
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m());
        for (u, list) in self.adj.iter().enumerate() {
            out.extend(list.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.adj.iter().all(|l| l.len() + 1 == n)
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.n() {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n() })
        } else {
            Ok(())
        }
    }

    /// Components of the graph restricted to vertices with `removed[v] == false`.
    /// Each component is sorted; components are ordered by least vertex.
    pub(crate) fn components_avoiding(&self, removed: &[bool]) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = removed.to_vec();
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            queue.push_back(s);
            let mut comp = vec![s];
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// True when the vertices not in `removed` induce a connected graph.
    pub(crate) fn connected_avoiding(&self, removed: &[bool]) -> bool {
        let n = self.n();
        let Some(start) = (0..n).find(|&v| !removed[v]) else {
            return true;
        };
        let mut seen = removed.to_vec();
        let mut stack = vec![start];
        seen[start] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == removed.iter().filter(|&&r| !r).count()
    }

    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        self.components_avoiding(&vec![false; self.n()])
    }

    /// The empty graph and the single vertex both count as connected.
    pub fn is_connected(&self) -> bool {
        self.connected_avoiding(&vec![false; self.n()])
    }

    /// BFS 2-colouring with colour 0 on the least vertex of every component,
    /// or an odd closed walk.
    pub fn bipartition(&self) -> Bipartition {
        let n = self.n();
        let mut color: Vec<Option<u8>> = vec![None; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for s in 0..n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(0);
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for &w in &self.adj[u] {
                    match color[w] {
                        None => {
                            color[w] = Some(1 - cu);
                            parent[w] = u;
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => {
                            return Bipartition::NotBipartite {
                                odd_cycle: odd_cycle_from_tree(&parent, u, w),
                            };
                        }
                        Some(_) => {}
                    }
                }
            }
        }
        Bipartition::Bipartite(TwoColoring {
            color: color.into_iter().map(|c| c.unwrap()).collect(),
        })
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_bipartite()
    }

    /// Largest `k` such that the graph is `k`-connected: more than `k`
    /// vertices and no separating set of fewer than `k` vertices.
    /// `K_n` has connectivity `n - 1`.
    pub fn vertex_connectivity(&self) -> usize {
        let n = self.n();
        if n <= 1 || !self.is_connected() {
            return 0;
        }
        if self.is_complete() {
            return n - 1;
        }
        for k in 1..=3 {
            if self.has_cut_of_size(k) {
                return k;
            }
        }
        crate::flow::vertex_connectivity_by_flow(self)
    }

    /// `k`-connectivity test by exhaustive search over smaller vertex sets.
    pub fn is_k_connected(&self, k: usize) -> bool {
        if self.n() <= k || !self.is_connected() {
            return false;
        }
        if k <= 4 {
            (1..k).all(|s| !self.has_cut_of_size(s))
        } else {
            self.vertex_connectivity() >= k
        }
    }

    /// Whether some set of exactly `k` vertices disconnects the graph.
    pub fn has_cut_of_size(&self, k: usize) -> bool {
        let mut found = false;
        let mut removed = vec![false; self.n()];
        for_each_subset(self.n(), k, &mut |subset| {
            for &v in subset {
                removed[v] = true;
            }
            let cut = !self.connected_avoiding(&removed);
            for &v in subset {
                removed[v] = false;
            }
            found = cut;
            !cut
        });
        found
    }

    /// All `k`-subsets whose removal leaves at least two components,
    /// in lexicographic order.
    pub fn enumerate_cuts(&self, k: usize) -> Vec<CutSet> {
        let mut out = Vec::new();
        let mut removed = vec![false; self.n()];
        for_each_subset(self.n(), k, &mut |subset| {
            for &v in subset {
                removed[v] = true;
            }
            let comps = self.components_avoiding(&removed);
            if comps.len() >= 2 {
                out.push(CutSet {
                    vertices: subset.to_vec(),
                    components: comps,
                });
            }
            for &v in subset {
                removed[v] = false;
            }
            true
        });
        out
    }

    /// Connectivity exactly `k` and every `k`-cut leaves exactly two components.
    pub fn is_semi_hyper_k_connected(&self, k: usize) -> bool {
        self.vertex_connectivity() == k
            && self.enumerate_cuts(k).iter().all(|c| c.components.len() == 2)
    }

    /// Removes `v`; vertices above `v` shift down by one. The returned map
    /// sends old ids to new ids (`None` for `v`).
    pub fn delete_vertex(&self, v: usize) -> Result<(Graph, Vec<Option<usize>>), GraphError> {
        self.check_vertex(v)?;
        let map: Vec<Option<usize>> = (0..self.n())
            .map(|u| match u.cmp(&v) {
                std::cmp::Ordering::Less => Some(u),
                std::cmp::Ordering::Equal => None,
                std::cmp::Ordering::Greater => Some(u - 1),
            })
            .collect();
        let edges: Vec<(usize, usize)> = self
            .edges()
            .into_iter()
            .filter_map(|(a, b)| Some((map[a]?, map[b]?)))
            .collect();
        Ok((Graph::from_edges_unchecked(self.n() - 1, &edges), map))
    }

    /// Deletes the listed edges; absent edges are ignored.
    pub fn delete_edges(&self, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut adj = self.adj.clone();
        for &(u, v) in edges {
            self.check_vertex(u)?;
            self.check_vertex(v)?;
            adj[u].retain(|&w| w != v);
            adj[v].retain(|&w| w != u);
        }
        Ok(Graph { adj })
    }

    pub fn add_edges(&self, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut all = self.edges();
        all.extend_from_slice(edges);
        Graph::from_edge_list(self.n(), &all)
    }

    /// `other` is placed at offset `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n();
        let mut edges = self.edges();
        edges.extend(other.edges().into_iter().map(|(u, v)| (u + off, v + off)));
        Graph::from_edges_unchecked(off + other.n(), &edges)
    }

    /// Subgraph induced on `vertices` (relabelled in the given order).
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut edges = Vec::new();
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.adj[v] {
                let j = index[w];
                if j != usize::MAX && i < j {
                    edges.push((i, j));
                }
            }
        }
        Graph::from_edges_unchecked(vertices.len(), &edges)
    }

    /// Applies the permutation `perm` (old id `v` becomes `perm[v]`).
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let edges: Vec<(usize, usize)> = self
            .edges()
            .into_iter()
            .map(|(u, v)| (perm[u], perm[v]))
            .collect();
        Graph::from_edges_unchecked(self.n(), &edges)
    }

    /// Articulation points in increasing order.
    pub fn cut_vertices(&self) -> Vec<usize> {
        crate::blocks::Blocks::of(self).cut_vertices
    }

    /// Connected, more than two vertices and no cut vertex.
    pub fn is_biconnected(&self) -> bool {
        self.n() > 2 && self.is_connected() && self.cut_vertices().is_empty()
    }
}

fn odd_cycle_from_tree(parent: &[usize], u: usize, w: usize) -> Vec<usize> {
    let path_to_root = |mut v: usize| {
        let mut p = vec![v];
        while parent[v] != usize::MAX {
            v = parent[v];
            p.push(v);
        }
        p
    };
    let pu = path_to_root(u);
    let pw = path_to_root(w);
    // Strip the shared tail to find the lowest common ancestor.
    let (mut i, mut j) = (pu.len(), pw.len());
    while i > 0 && j > 0 && pu[i - 1] == pw[j - 1] {
        i -= 1;
        j -= 1;
    }
    let mut cycle: Vec<usize> = pu[..=i].to_vec();
    cycle.extend(pw[..j].iter().rev());
    // cycle runs u -> lca -> w; the edge w-u closes it.
    cycle
}

/// Calls `f` on every `k`-subset of `0..n` in lexicographic order until it
/// returns false.
pub(crate) fn for_each_subset(n: usize, k: usize, f: &mut dyn FnMut(&[usize]) -> bool) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if !f(&idx) {
            return;
        }
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] < n - k + i {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
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

    fn cube() -> Graph {
        let mut e = Vec::new();
        for v in 0..8usize {
            for b in 0..3 {
                let w = v ^ (1 << b);
                if v < w {
                    e.push((v, w));
                }
            }
        }
        Graph::from_edge_list(8, &e).unwrap()
    }

    fn ladder4() -> Graph {
        // a_i = i, b_i = 4 + i
        let mut e = Vec::new();
        for i in 0..4 {
            e.push((i, 4 + i));
            if i < 3 {
                e.push((i, i + 1));
                e.push((4 + i, 5 + i));
            }
        }
        Graph::from_edge_list(8, &e).unwrap()
    }

    #[test]
    fn edge_list_construction() {
        let c3 = Graph::from_edge_list(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(c3.m(), 3);
        assert_eq!(c3.neighbors(0), &[1, 2]);
        let k2 = Graph::from_edge_list(2, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(k2.m(), 1);
        let k4 = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)]).unwrap();
        assert!(k4.is_complete());
        assert_eq!(
            Graph::from_edge_list(2, &[(0, 2)]),
            Err(GraphError::VertexOutOfRange { vertex: 2, n: 2 })
        );
        assert_eq!(Graph::from_edge_list(2, &[(1, 1)]), Err(GraphError::SelfLoop(1)));
    }

    #[test]
    fn components() {
        assert!(cycle(6).is_connected());
        let two_k2 = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(two_k2.connected_components(), vec![vec![0, 1], vec![2, 3]]);
        let q = cube();
        let cut: Vec<_> = q.neighbors(0).iter().map(|&w| (0, w)).collect();
        let comps = q.delete_edges(&cut).unwrap().connected_components();
        assert_eq!(comps, vec![vec![0], (1..8).collect::<Vec<_>>()]);
        assert!(Graph::empty(0).is_connected());
        assert!(Graph::empty(1).is_connected());
    }

    #[test]
    fn bipartition_cases() {
        match cycle(4).bipartition() {
            Bipartition::Bipartite(c) => assert_eq!(c.color, vec![0, 1, 0, 1]),
            other => panic!("{other:?}"),
        }
        match cycle(5).bipartition() {
            Bipartition::NotBipartite { odd_cycle } => {
                assert_eq!(odd_cycle.len(), 5);
                let g = cycle(5);
                for i in 0..odd_cycle.len() {
                    assert!(g.has_edge(odd_cycle[i], odd_cycle[(i + 1) % odd_cycle.len()]));
                }
            }
            other => panic!("{other:?}"),
        }
        let c = cube().bipartition();
        let col = c.coloring().unwrap();
        for v in 0..8usize {
            assert_eq!(col.color[v] as u32, v.count_ones() % 2);
        }
    }

    #[test]
    fn degrees() {
        assert_eq!(complete(4).min_degree(), 3);
        let p3 = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.min_degree(), 1);
        assert_eq!(Graph::empty(3).min_degree(), 0);
    }

    #[test]
    fn connectivity() {
        assert_eq!(cycle(6).vertex_connectivity(), 2);
        assert_eq!(complete(4).vertex_connectivity(), 3);
        assert_eq!(complete(2).vertex_connectivity(), 1);
        assert_eq!(Graph::empty(1).vertex_connectivity(), 0);
        // two K4 glued on edge {0,1}
        let g = Graph::from_edge_list(
            6,
            &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (0, 5), (1, 4), (1, 5), (4, 5)],
        )
        .unwrap();
        assert_eq!(g.vertex_connectivity(), 2);
        assert_eq!(cube().vertex_connectivity(), 3);
        assert!(cube().is_k_connected(3));
        assert!(!cube().is_k_connected(4));
    }

    #[test]
    fn cuts() {
        // By hand: the internal rungs {a1,b1}, {a2,b2}, the crossed pairs
        // {a1,b2}, {a2,b1}, and the neighbourhoods of the four corners.
        let cuts = ladder4().enumerate_cuts(2);
        let verts: Vec<_> = cuts.iter().map(|c| c.vertices.clone()).collect();
        assert_eq!(
            verts,
            vec![
                vec![0, 5],
                vec![1, 4],
                vec![1, 5],
                vec![1, 6],
                vec![2, 5],
                vec![2, 6],
                vec![2, 7],
                vec![3, 6]
            ]
        );
        assert!(cuts.iter().all(|c| c.components.len() == 2));
        assert!(complete(4).enumerate_cuts(2).is_empty());
        let c5 = cycle(5).enumerate_cuts(2);
        assert_eq!(c5.len(), 5);
        assert!(c5.iter().all(|c| !cycle(5).has_edge(c.vertices[0], c.vertices[1])));
    }

    #[test]
    fn semi_hyper() {
        assert!(ladder4().is_semi_hyper_k_connected(2));
        let star = Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(!star.is_semi_hyper_k_connected(1));
        assert!(!cube().is_semi_hyper_k_connected(2));
        assert!(cycle(6).is_semi_hyper_k_connected(2));
    }

    #[test]
    fn editing() {
        let (k3, map) = complete(4).delete_vertex(3).unwrap();
        assert_eq!(k3, complete(3));
        assert_eq!(map, vec![Some(0), Some(1), Some(2), None]);
        let k2 = complete(2);
        let u = k2.disjoint_union(&k2);
        assert_eq!(u.edges(), vec![(0, 1), (2, 3)]);
        assert!(complete(3).delete_vertex(3).is_err());
        let g = cycle(4).add_edges(&[(0, 2)]).unwrap();
        assert_eq!(g.m(), 5);
        assert!(cycle(4).add_edges(&[(0, 0)]).is_err());
    }

    #[test]
    fn subset_enumeration_order() {
        let mut seen = Vec::new();
        for_each_subset(4, 2, &mut |s| {
            seen.push(s.to_vec());
            true
        });
        assert_eq!(seen.len(), 6);
        assert_eq!(seen[0], vec![0, 1]);
        assert_eq!(seen[5], vec![2, 3]);
        let mut count = 0;
        for_each_subset(3, 0, &mut |_| {
            count += 1;
            true
        });
        assert_eq!(count, 1);
    }
}
