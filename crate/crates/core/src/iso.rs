//! Canonical labelling by colour refinement plus individualisation
//! backtracking, with orbit pruning from automorphisms found at the leaves.
//!
//! Exponential in the worst case; intended for graphs with a few dozen
//! vertices.

use crate::graph::Graph;

/// Canonical representative of an isomorphism class: the edge list of the
/// relabelled graph that is lexicographically least over the search tree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl CanonicalForm {
    pub fn to_graph(&self) -> Graph {
        Graph::from_edges_unchecked(self.n, &self.edges)
    }
}

/// Canonical form and the labelling (old id -> canonical id) producing it.
pub fn canonical_labeling(g: &Graph) -> (CanonicalForm, Vec<usize>) {
    let n = g.n();
    let mut search = Search {
        g,
        best: None,
        automorphisms: Vec::new(),
    };
    let mut cells = initial_partition(g);
    refine(g, &mut cells);
    search.descend(cells, &mut Vec::new());
    let (edges, perm) = search.best.expect("search visits at least one leaf");
    (CanonicalForm { n, edges }, perm)
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_labeling(g).0
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.m() != b.m() {
        return false;
    }
    let mut da = a.degrees();
    let mut db = b.degrees();
    da.sort_unstable();
    db.sort_unstable();
    da == db && canonical_form(a) == canonical_form(b)
}

type Cells = Vec<Vec<usize>>;

fn initial_partition(g: &Graph) -> Cells {
    if g.n() == 0 {
        Vec::new()
    } else {
        vec![(0..g.n()).collect()]
    }
}

/// Splits cells by neighbour counts into each splitter cell until stable.
/// Sub-cells are ordered by count, so the result depends only on the
/// ordered partition, not on vertex names.
fn refine(g: &Graph, cells: &mut Cells) {
    let n = g.n();
    let mut count = vec![0usize; n];
    loop {
        let mut changed = false;
        let mut s = 0;
        while s < cells.len() {
            count.iter_mut().for_each(|c| *c = 0);
            for &v in &cells[s] {
                for &w in g.neighbors(v) {
                    count[w] += 1;
                }
            }
            let mut next: Cells = Vec::with_capacity(cells.len());
            for cell in cells.iter() {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut sorted = cell.clone();
                sorted.sort_by_key(|&v| (count[v], v));
                let mut start = 0;
                for i in 1..=sorted.len() {
                    if i == sorted.len() || count[sorted[i]] != count[sorted[start]] {
                        next.push(sorted[start..i].to_vec());
                        start = i;
                    }
                }
                if count[sorted[0]] != count[sorted[sorted.len() - 1]] {
                    changed = true;
                }
            }
            *cells = next;
            s += 1;
        }
        if !changed {
            break;
        }
    }
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<(Vec<(usize, usize)>, Vec<usize>)>,
    automorphisms: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn descend(&mut self, cells: Cells, prefix: &mut Vec<usize>) {
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            self.leaf(&cells);
            return;
        };
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cells[target] {
            if !tried.is_empty() && self.same_orbit(prefix, v, &tried) {
                continue;
            }
            tried.push(v);
            let mut child: Cells = Vec::with_capacity(cells.len() + 1);
            for (i, cell) in cells.iter().enumerate() {
                if i == target {
                    child.push(vec![v]);
                    child.push(cell.iter().copied().filter(|&w| w != v).collect());
                } else {
                    child.push(cell.clone());
                }
            }
            refine(self.g, &mut child);
            prefix.push(v);
            self.descend(child, prefix);
            prefix.pop();
        }
    }

    fn same_orbit(&self, prefix: &[usize], v: usize, tried: &[usize]) -> bool {
        let n = self.g.n();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for gamma in &self.automorphisms {
            if prefix.iter().any(|&p| gamma[p] != p) {
                continue;
            }
            for x in 0..n {
                let (a, b) = (find(&mut parent, x), find(&mut parent, gamma[x]));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        let rv = find(&mut parent, v);
        tried.iter().any(|&t| find(&mut parent, t) == rv)
    }

    fn leaf(&mut self, cells: &Cells) {
        let n = self.g.n();
        let mut perm = vec![0; n];
        for (i, cell) in cells.iter().enumerate() {
            perm[cell[0]] = i;
        }
        let mut edges: Vec<(usize, usize)> = self
            .g
            .edges()
            .into_iter()
            .map(|(u, v)| {
                let (a, b) = (perm[u], perm[v]);
                (a.min(b), a.max(b))
            })
            .collect();
        edges.sort_unstable();
        match &self.best {
            None => self.best = Some((edges, perm)),
            Some((best_edges, best_perm)) => match edges.cmp(best_edges) {
                std::cmp::Ordering::Less => self.best = Some((edges, perm)),
                std::cmp::Ordering::Equal => {
                    // perm^-1 o best_perm maps the graph onto itself
                    let mut inv = vec![0; n];
                    for (v, &p) in perm.iter().enumerate() {
                        inv[p] = v;
                    }
                    let gamma: Vec<usize> = best_perm.iter().map(|&p| inv[p]).collect();
                    self.automorphisms.push(gamma);
                }
                std::cmp::Ordering::Greater => {}
            },
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

    #[test]
    fn relabelled_cycle_is_isomorphic() {
        let c6 = cycle(6);
        let perm = [3, 0, 5, 1, 4, 2];
        assert!(is_isomorphic(&c6, &c6.relabel(&perm)));
        assert_eq!(canonical_form(&c6), canonical_form(&c6.relabel(&perm)));
    }

    #[test]
    fn hexagon_is_not_two_triangles() {
        let two_k3 = Graph::from_edge_list(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(!is_isomorphic(&cycle(6), &two_k3));
    }

    #[test]
    fn labeling_maps_graph_to_form() {
        let g = Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (1, 4)]).unwrap();
        let (form, perm) = canonical_labeling(&g);
        assert_eq!(g.relabel(&perm), form.to_graph());
    }

    #[test]
    fn empty_and_trivial_graphs() {
        assert_eq!(canonical_form(&Graph::empty(0)).n, 0);
        assert!(is_isomorphic(&Graph::empty(5), &Graph::empty(5)));
        assert!(!is_isomorphic(&Graph::empty(5), &Graph::empty(4)));
    }
}
