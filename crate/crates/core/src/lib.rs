//! Decision procedures for graph products that are 3-polytopal (planar and
//! 3-connected), with certificates and a brute-force oracle for
//! cross-checking every verdict.

mod blocks;
mod flow;
pub mod classify;
pub mod construct;
pub mod graph;
pub mod harness;
pub mod iso;
pub mod planar;
pub mod products;

pub use graph::{Bipartition, CutSet, Graph, GraphError, TwoColoring};
