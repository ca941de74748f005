//! Decision procedures for odd-C3+ containment in graphs and binary
//! matroids, h-perfection of line graphs, and ear-decomposition parity
//! parameters, all with verifiable certificates in both directions.

pub mod error;
pub mod graph;

pub use error::{Error, Result};
pub use graph::{Graph, Parity};
