//! Writes the graph6 fixtures under `tests/data`:
//!
//! * `connected_n{k}.g6`: every connected graph on `k` vertices, `k = 1..=8`,
//!   one canonical representative per isomorphism class;
//! * `planar_k2_n9.g6`: every planar graph on 9 vertices with connectivity 2
//!   and minimum degree at least 3.
//!
//! Run with `cargo run --release --example connected_graphs -- [DIR]`.

use std::collections::BTreeSet;
use std::path::PathBuf;

use polyprod::harness::to_graph6;
use polyprod::iso::canonical_form;
use polyprod::planar::is_planar;
use polyprod::Graph;

/// Adds vertex `n` joined to the vertices in `mask`.
fn extend(g: &Graph, mask: u32) -> Graph {
    let n = g.n();
    let mut edges = g.edges();
    edges.extend((0..n).filter(|&v| mask >> v & 1 == 1).map(|v| (v, n)));
    Graph::from_edge_list(n + 1, &edges).unwrap()
}

fn canonical(g: &Graph) -> Graph {
    canonical_form(g).to_graph()
}

fn write(dir: &PathBuf, name: &str, graphs: &BTreeSet<String>) {
    let body: String = graphs.iter().map(|s| format!("{s}\n")).collect();
    std::fs::write(dir.join(name), body).unwrap();
    eprintln!("{name}: {}", graphs.len());
}

fn main() {
    let dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data"));
    std::fs::create_dir_all(&dir).unwrap();

    // every connected graph has a vertex whose removal leaves it connected
    let mut level: Vec<Graph> = vec![Graph::empty(1)];
    let mut levels = vec![level.clone()];
    for n in 1..8 {
        let mut next = BTreeSet::new();
        for g in &level {
            for mask in 1..(1u32 << n) {
                next.insert(to_graph6(&canonical(&extend(g, mask))));
            }
        }
        level = next.iter().map(|s| polyprod::harness::from_graph6(s).unwrap()).collect();
        levels.push(level.clone());
    }
    for (i, graphs) in levels.iter().enumerate() {
        let set: BTreeSet<String> = graphs.iter().map(to_graph6).collect();
        write(&dir, &format!("connected_n{}.g6", i + 1), &set);
    }

    // deleting any vertex of a 2-connected planar graph with minimum degree 3
    // leaves a connected planar graph with minimum degree at least 2
    let parents: Vec<&Graph> = levels[7]
        .iter()
        .filter(|g| g.min_degree() >= 2 && is_planar(g))
        .collect();
    let mut out = BTreeSet::new();
    for g in parents {
        for mask in 1..(1u32 << 8) {
            if mask.count_ones() < 3 {
                continue;
            }
            let h = extend(g, mask);
            if h.min_degree() >= 3 && h.vertex_connectivity() == 2 && is_planar(&h) {
                out.insert(to_graph6(&canonical(&h)));
            }
        }
    }
    write(&dir, "planar_k2_n9.g6", &out);
}
