pub mod chordal;
pub mod generate;
pub mod graph;
pub mod interval;
pub mod io;

pub use graph::{EdgePair, EdgeSet, Graph, VertexSet};
pub mod modules;
pub mod obstruction;
pub mod oracle;
pub mod report;
pub mod solver;
