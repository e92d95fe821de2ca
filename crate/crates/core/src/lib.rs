//! Graph packing laboratory.
//!
//! Realizes degree sequences, transforms realizations by edge exchanges and
//! vertex interchanges, searches for packings in three senses (embedding,
//! degree sequence, component-wise), and confronts packing theorems with
//! every small pair of graphs.

pub mod error;
pub mod graph;
pub mod pack;
pub mod recognize;
mod search;
pub mod lab;
pub mod harness;

pub use error::{Error, Result};
pub use graph::{DegreeSequence, Graph};
