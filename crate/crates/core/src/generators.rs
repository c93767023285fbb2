//! Deterministic families and seeded random K4-free instances.
//!
//! Random families draw from [`SeededRng`], so an identical seed always
//! yields an identical graph.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::rng::SeededRng;

pub fn complete(k: usize) -> Graph {
    Graph::from_valid_edges(k, (0..k).tuple_combinations())
}

pub fn cycle(k: usize) -> Graph {
    assert!(k >= 3, "cycle needs at least 3 vertices");
    Graph::from_valid_edges(k, (0..k).map(|i| (i, (i + 1) % k)))
}

pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    Graph::from_valid_edges(10, outer.chain(spokes).chain(inner))
}

/// Vertices are numbered part by part: part `i` occupies a contiguous block.
pub fn complete_multipartite(parts: &[usize]) -> Graph {
    let n: usize = parts.iter().sum();
    let mut label = Vec::with_capacity(n);
    for (i, &size) in parts.iter().enumerate() {
        label.extend(std::iter::repeat_n(i, size));
    }
    Graph::from_valid_edges(
        n,
        (0..n)
            .tuple_combinations()
            .filter(|&(u, v)| label[u] != label[v]),
    )
}

/// The natural vertex classes of [`complete_multipartite`] and [`blowup`] outputs.
pub fn contiguous_classes(sizes: &[usize]) -> Vec<Vec<Vertex>> {
    let mut start = 0;
    sizes
        .iter()
        .map(|&s| {
            let c = (start..start + s).collect();
            start += s;
            c
        })
        .collect()
}

/// Replaces base vertex `b` by the independent set `b*t .. b*t + t` and each
/// base edge by a complete bipartite graph.
pub fn blowup(base: &Graph, t: usize) -> Result<Graph> {
    if t == 0 {
        return Err(Error::input("blow-up factor must be at least 1"));
    }
    let mut edges = Vec::with_capacity(base.edge_count() * t * t);
    for (a, b) in base.edges() {
        for i in 0..t {
            for j in 0..t {
                edges.push((a * t + i, b * t + j));
            }
        }
    }
    Ok(Graph::from_valid_edges(base.n() * t, edges))
}

fn check_probability(p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::input(format!("probability {p} outside [0, 1]")))
    }
}

/// Random subgraph of a balanced complete 3-partite graph.
///
/// A shuffled vertex order is dealt round-robin into three parts (sizes differ
/// by at most one), then every cross pair is kept with probability `p`.
pub fn random_tripartite(n: usize, p: f64, seed: u64) -> Result<Graph> {
    check_probability(p)?;
    let mut rng = SeededRng::new(seed);
    let mut order: Vec<Vertex> = (0..n).collect();
    rng.shuffle(&mut order);
    let mut part = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        part[v] = i % 3;
    }
    let mut edges = Vec::new();
    for (u, v) in (0..n).tuple_combinations() {
        if part[u] != part[v] && rng.bernoulli(p) {
            edges.push((u, v));
        }
    }
    Ok(Graph::from_valid_edges(n, edges))
}

/// Erdős–Rényi `G(n, p)`; pairs are visited in lexicographic order.
pub fn random_gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    check_probability(p)?;
    let mut rng = SeededRng::new(seed);
    let edges: Vec<_> = (0..n)
        .tuple_combinations()
        .filter(|_| rng.bernoulli(p))
        .collect();
    Ok(Graph::from_valid_edges(n, edges))
}

fn closes_k4(g: &Graph, u: Vertex, v: Vertex) -> bool {
    let common: Vec<u64> = g.row(u).iter().zip(g.row(v)).map(|(a, b)| a & b).collect();
    let closes =
        crate::graph::bits(&common).any(|x| crate::graph::and_count(g.row(x), &common) > 0);
    closes
}

/// Adds candidate pairs in the given order, skipping any pair that would close a K4.
fn k4free_greedy(n: usize, candidates: &[(Vertex, Vertex)], target_edges: Option<usize>) -> Graph {
    let mut g = Graph::empty(n);
    for &(u, v) in candidates {
        if target_edges.is_some_and(|t| g.edge_count() >= t) {
            break;
        }
        if !closes_k4(&g, u, v) {
            g.insert_edge(u, v);
        }
    }
    g
}

/// Random K4-free process: all pairs in uniformly random order, each added
/// unless it closes a K4. A single pass suffices because a rejected pair can
/// never become acceptable later. Stops early once `target_edges` is reached.
pub fn random_k4free_process(n: usize, target_edges: Option<usize>, seed: u64) -> Graph {
    let mut rng = SeededRng::new(seed);
    let mut pairs: Vec<_> = (0..n).tuple_combinations().collect();
    rng.shuffle(&mut pairs);
    k4free_greedy(n, &pairs, target_edges)
}

/// Random regular graph: a circulant on `n` vertices with a random nonempty
/// offset set, then randomly relabelled.
pub fn random_regular(n: usize, seed: u64) -> Result<Graph> {
    if n < 3 {
        return Err(Error::input("random_regular needs n >= 3"));
    }
    let mut rng = SeededRng::new(seed);
    let mut offsets: Vec<usize> = (1..=n / 2).filter(|_| rng.bernoulli(0.5)).collect();
    if offsets.is_empty() {
        offsets.push(1 + rng.below_usize(n / 2));
    }
    let mut perm: Vec<Vertex> = (0..n).collect();
    rng.shuffle(&mut perm);
    let mut edges = Vec::new();
    for i in 0..n {
        for &o in &offsets {
            edges.push((perm[i], perm[(i + o) % n]));
        }
    }
    Ok(Graph::from_valid_edges(n, edges))
}

#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    CompleteMultipartite {
        parts: Vec<usize>,
    },
    Blowup {
        base: Graph,
        t: usize,
    },
    RandomTripartite {
        n: usize,
        p: f64,
    },
    RandomK4freeProcess {
        n: usize,
        target_edges: Option<usize>,
    },
    RandomGnp {
        n: usize,
        p: f64,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorSpec {
    pub family: Family,
    pub seed: u64,
}

impl GeneratorSpec {
    pub fn new(family: Family, seed: u64) -> Self {
        GeneratorSpec { family, seed }
    }
}

/// Builds the graph a spec describes. `RandomGnp` is returned as sampled and
/// may contain K4; see [`random_k4free`].
pub fn generate(spec: &GeneratorSpec) -> Result<Graph> {
    match &spec.family {
        Family::CompleteMultipartite { parts } => Ok(complete_multipartite(parts)),
        Family::Blowup { base, t } => blowup(base, *t),
        Family::RandomTripartite { n, p } => random_tripartite(*n, *p, spec.seed),
        Family::RandomK4freeProcess { n, target_edges } => {
            Ok(random_k4free_process(*n, *target_edges, spec.seed))
        }
        Family::RandomGnp { n, p } => random_gnp(*n, *p, spec.seed),
    }
}

/// A K4-free instance from the spec.
///
/// For `RandomGnp` the sampled edges are re-added in sampling order, skipping
/// any that close a K4, which yields a K4-free subgraph of the sample.
/// Deterministic families that contain K4 are reported as errors.
pub fn random_k4free(spec: &GeneratorSpec) -> Result<Graph> {
    let g = match &spec.family {
        Family::RandomGnp { n, .. } => {
            let sample = generate(spec)?;
            k4free_greedy(*n, &sample.edges(), None)
        }
        _ => generate(spec)?,
    };
    g.require_k4_free()?;
    Ok(g)
}
