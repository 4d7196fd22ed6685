//! Corpus input, census against the oracle, and drawing.

pub mod census;
pub mod formats;
pub mod svg;

pub use census::{census, BranchCount, CensusMode, CensusRecord, CensusReport, CSV_HEADER};
pub use formats::{
    from_graph6, from_sparse6, read_graphs, to_edge_list, to_graph6, FormatError, GraphRecord, InputFormat,
    ReadOutcome,
};
pub use svg::{embedding_svg, export_embedding_svg, tutte_layout};
