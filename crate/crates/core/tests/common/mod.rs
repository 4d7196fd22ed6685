#![allow(dead_code)]

use std::path::PathBuf;

use polyprod::harness::{read_graphs, InputFormat};
use polyprod::products::{make_family, FamilySpec};
use polyprod::Graph;

pub fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

pub fn load(name: &str) -> Vec<Graph> {
    let text = std::fs::read_to_string(data(name)).unwrap();
    read_graphs(&text, InputFormat::Graph6, false)
        .unwrap()
        .graphs
        .into_iter()
        .map(|r| r.graph)
        .collect()
}

/// Every connected graph on `n` vertices, one per isomorphism class.
pub fn connected(n: usize) -> Vec<Graph> {
    load(&format!("connected_n{n}.g6"))
}

pub fn connected_up_to(max: usize) -> Vec<Graph> {
    (1..=max).flat_map(connected).collect()
}

pub fn fam(spec: &str) -> Graph {
    make_family(spec.parse::<FamilySpec>().unwrap()).unwrap()
}

pub fn k2() -> Graph {
    fam("complete:2")
}
