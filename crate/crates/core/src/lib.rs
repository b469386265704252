//! König-Egerváry graph invariants: matchings, independent sets, critical
//! sets, classification predicates and a catalog of checkable statements.

pub mod classify;
pub mod critical;
pub mod generators;
pub mod graph;
pub mod independence;
pub mod io;
pub mod matching;
pub mod report;
pub mod search;
pub mod theorems;

pub use graph::{Edge, Graph, GraphError, Subgraph, VertexSet, MAX_VERTICES};
