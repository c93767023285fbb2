//! Max-cut lower bounds and certified bipartization for K4-free graphs.
//!
//! Every K4-free graph on `n` vertices can be made bipartite by deleting at
//! most `n²/9` edges. This crate turns that statement into algorithms that
//! return explicit deletion sets, alongside exact-rational evaluations of the
//! supporting bounds and brute-force oracles to check them against.

pub mod cut;
pub mod edgelist;
pub mod error;
pub mod generators;
pub mod graph;
pub mod harness;
pub mod oracle;
pub mod rational;
pub mod regularity;
pub mod rng;

pub use error::{Error, Result};
pub use graph::{Edge, Graph, Triangle, Vertex, VertexLocalStats};
pub use rational::Rational;
