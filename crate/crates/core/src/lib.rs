//! Weakly bridged graphs and weakly systolic complexes: recognition,
//! LexBFS dismantling, cop-win solving, descent checks on flag complexes and
//! invariant simplices for finite group actions.

pub mod complexes;
pub mod enumerate;
pub mod error;
pub mod games;
pub mod generate;
pub mod graph;
pub mod io;
pub mod orderings;
pub mod recognition;
pub mod report;
pub mod suite;
pub mod symmetry;

pub use error::{Error, Result};
pub use graph::{Graph, Vertex, VertexSet};
