//! Biconnected components (blocks) via Hopcroft–Tarjan lowpoints.

use crate::graph::Graph;

pub(crate) struct Blocks {
    /// Edge sets of the blocks; a bridge is a block with one edge.
    pub blocks: Vec<Vec<(usize, usize)>>,
    pub cut_vertices: Vec<usize>,
}

impl Blocks {
    pub fn of(g: &Graph) -> Blocks {
        let n = g.n();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut is_cut = vec![false; n];
        let mut blocks = Vec::new();
        let mut edge_stack: Vec<(usize, usize)> = Vec::new();
        let mut time = 0;

        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            disc[root] = time;
            low[root] = time;
            time += 1;
            let mut root_children = 0;
            // (vertex, parent, next neighbour index)
            let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
            while let Some(&(u, parent, next)) = stack.last() {
                if next < g.degree(u) {
                    let w = g.neighbors(u)[next];
                    stack.last_mut().unwrap().2 += 1;
                    if disc[w] == usize::MAX {
                        edge_stack.push((u, w));
                        disc[w] = time;
                        low[w] = time;
                        time += 1;
                        if u == root {
                            root_children += 1;
                        }
                        stack.push((w, u, 0));
                    } else if w != parent && disc[w] < disc[u] {
                        edge_stack.push((u, w));
                        low[u] = low[u].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if parent != usize::MAX {
                        low[parent] = low[parent].min(low[u]);
                        if low[u] >= disc[parent] {
                            if parent != root {
                                is_cut[parent] = true;
                            }
                            let mut block = Vec::new();
                            while let Some(e) = edge_stack.pop() {
                                block.push((e.0.min(e.1), e.0.max(e.1)));
                                if e == (parent, u) {
                                    break;
                                }
                            }
                            block.sort_unstable();
                            blocks.push(block);
                        }
                    }
                }
            }
            if root_children > 1 {
                is_cut[root] = true;
            }
        }
        blocks.sort();
        Blocks {
            blocks,
            cut_vertices: (0..n).filter(|&v| is_cut[v]).collect(),
        }
    }
}
