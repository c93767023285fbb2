//! Benchmark inputs shared by the criterion targets.

use k4bip_core::generators::{complete_multipartite, random_k4free_process, random_tripartite};
use k4bip_core::Graph;

/// Dense random tripartite graph, the worst case for triangle work.
pub fn dense_tripartite(n: usize) -> Graph {
    random_tripartite(n, 0.8, 1).expect("p in range")
}

pub fn k4free_process(n: usize) -> Graph {
    random_k4free_process(n, None, 1)
}

pub fn turan(t: usize) -> Graph {
    complete_multipartite(&[t, t, t])
}
