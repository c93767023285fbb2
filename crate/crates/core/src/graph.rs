//! Immutable simple undirected graphs on dense vertex ids with bitset rows.

use std::collections::VecDeque;
use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};

pub type Vertex = usize;
pub type Edge = (Vertex, Vertex);

pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

/// Iterates the set bits of a word slice in increasing order.
pub(crate) fn bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(i, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                return None;
            }
            let b = w.trailing_zeros() as usize;
            w &= w - 1;
            Some(i * 64 + b)
        })
    })
}

pub(crate) fn and_count(a: &[u64], b: &[u64]) -> usize {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x & y).count_ones() as usize)
        .sum()
}

pub(crate) fn mask_of(n: usize, vertices: impl IntoIterator<Item = Vertex>) -> Vec<u64> {
    let mut m = vec![0u64; words_for(n)];
    for v in vertices {
        m[v / 64] |= 1 << (v % 64);
    }
    m
}

pub(crate) fn mask_contains(mask: &[u64], v: Vertex) -> bool {
    mask[v / 64] >> (v % 64) & 1 == 1
}

/// A triangle `u < v < w`, all pairwise adjacent in the host graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Triangle(pub [Vertex; 3]);

impl Triangle {
    pub fn new(a: Vertex, b: Vertex, c: Vertex) -> Self {
        let mut t = [a, b, c];
        t.sort_unstable();
        Triangle(t)
    }

    pub fn vertices(&self) -> [Vertex; 3] {
        self.0
    }
}

/// Degree of a vertex and the number of edges spanned by its neighborhood.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct VertexLocalStats {
    pub vertex: Vertex,
    pub degree: usize,
    /// `e_v`: edges inside `N(v)`.
    pub ev: usize,
}

/// Simple undirected graph on vertices `0..n`.
///
/// Each vertex owns a fixed-width row of `ceil(n/64)` words. The graph never
/// changes after construction, so the lazily computed degree vector and
/// triangle count are never invalidated.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
    e: usize,
    degrees: OnceLock<Vec<usize>>,
    triangle_count: OnceLock<u64>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.rows == other.rows
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("e", &self.e)
            .field("edges", &self.edges())
            .finish()
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        let words = words_for(n);
        Graph {
            n,
            words,
            rows: vec![0; n * words],
            e: 0,
            degrees: OnceLock::new(),
            triangle_count: OnceLock::new(),
        }
    }

    /// Builds a graph from vertex pairs. Duplicates (in either orientation)
    /// collapse; self-loops and out-of-range endpoints are rejected.
    pub fn from_edge_list(n: usize, edges: &[Edge]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.set(u, v);
        }
        g.e = g
            .rows
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum::<usize>()
            / 2;
        Ok(g)
    }

    /// For generators that already guarantee valid pairs.
    pub(crate) fn from_valid_edges(n: usize, edges: impl IntoIterator<Item = Edge>) -> Self {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            debug_assert!(u != v && u < n && v < n);
            g.set(u, v);
        }
        g.e = g
            .rows
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum::<usize>()
            / 2;
        g
    }

    /// Adds an edge in place; only used while a generator is still building the graph.
    pub(crate) fn insert_edge(&mut self, u: Vertex, v: Vertex) {
        if !self.has_edge(u, v) {
            self.set(u, v);
            self.e += 1;
            self.degrees = OnceLock::new();
            self.triangle_count = OnceLock::new();
        }
    }

    fn set(&mut self, u: Vertex, v: Vertex) {
        self.rows[u * self.words + v / 64] |= 1 << (v % 64);
        self.rows[v * self.words + u / 64] |= 1 << (u % 64);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.e
    }

    pub fn row(&self, v: Vertex) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        mask_contains(self.row(u), v)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.degrees()[v]
    }

    pub fn degrees(&self) -> &[usize] {
        self.degrees.get_or_init(|| {
            (0..self.n)
                .map(|v| self.row(v).iter().map(|w| w.count_ones() as usize).sum())
                .collect()
        })
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        bits(self.row(v))
    }

    /// All edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.e);
        for u in 0..self.n {
            out.extend(self.neighbors(u).filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }

    /// `d(u,v)`. Panics on out-of-range vertices.
    pub fn codegree(&self, u: Vertex, v: Vertex) -> usize {
        and_count(self.row(u), self.row(v))
    }

    /// `N(u) ∩ N(v)` in increasing order.
    pub fn common_neighbors(&self, u: Vertex, v: Vertex) -> Result<Vec<Vertex>> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::input(format!(
                "common_neighbors needs distinct vertices, got {u} twice"
            )));
        }
        let inter: Vec<u64> = self
            .row(u)
            .iter()
            .zip(self.row(v))
            .map(|(a, b)| a & b)
            .collect();
        Ok(bits(&inter).collect())
    }

    /// `e_v`, the number of edges spanned by `N(v)`.
    pub fn neighborhood_edges(&self, v: Vertex) -> usize {
        let row = self.row(v);
        let twice: usize = self.neighbors(v).map(|u| and_count(self.row(u), row)).sum();
        twice / 2
    }

    pub fn local_stats(&self, v: Vertex) -> VertexLocalStats {
        VertexLocalStats {
            vertex: v,
            degree: self.degree(v),
            ev: self.neighborhood_edges(v),
        }
    }

    pub fn all_local_stats(&self) -> Vec<VertexLocalStats> {
        (0..self.n).map(|v| self.local_stats(v)).collect()
    }

    /// Every triangle exactly once, in lexicographic order.
    ///
    /// Also checks `Σ_{edges} d(x,y) = 3m`.
    pub fn triangles(&self) -> Vec<Triangle> {
        let mut out = Vec::new();
        let mut scratch = vec![0u64; self.words];
        for u in 0..self.n {
            for v in self.neighbors(u).filter(|&v| v > u) {
                for (s, (a, b)) in scratch.iter_mut().zip(self.row(u).iter().zip(self.row(v))) {
                    *s = a & b;
                }
                out.extend(
                    bits(&scratch)
                        .filter(|&w| w > v)
                        .map(|w| Triangle([u, v, w])),
                );
            }
        }
        let codegree_sum: usize = self.edges().iter().map(|&(x, y)| self.codegree(x, y)).sum();
        assert_eq!(
            codegree_sum,
            3 * out.len(),
            "edge codegree sum must equal 3m"
        );
        let _ = self.triangle_count.set(out.len() as u64);
        out
    }

    /// `m`, the number of triangles (cached).
    pub fn triangle_count(&self) -> u64 {
        *self.triangle_count.get_or_init(|| {
            let twice_m3: usize = self.edges().iter().map(|&(x, y)| self.codegree(x, y)).sum();
            (twice_m3 / 3) as u64
        })
    }

    /// First K4 found, scanning edges lexicographically.
    pub fn find_k4(&self) -> Option<[Vertex; 4]> {
        let mut common = vec![0u64; self.words];
        for u in 0..self.n {
            for v in self.neighbors(u).filter(|&v| v > u) {
                for (s, (a, b)) in common.iter_mut().zip(self.row(u).iter().zip(self.row(v))) {
                    *s = a & b;
                }
                for x in bits(&common) {
                    if let Some(y) = self
                        .row(x)
                        .iter()
                        .zip(&common)
                        .map(|(r, c)| r & c)
                        .enumerate()
                        .find_map(|(i, w)| (w != 0).then(|| i * 64 + w.trailing_zeros() as usize))
                    {
                        let mut q = [u, v, x, y];
                        q.sort_unstable();
                        return Some(q);
                    }
                }
            }
        }
        None
    }

    pub fn is_k4_free(&self) -> bool {
        self.find_k4().is_none()
    }

    pub fn require_k4_free(&self) -> Result<()> {
        match self.find_k4() {
            Some(q) => Err(Error::NotK4Free(q)),
            None => Ok(()),
        }
    }

    /// Whether `3e ≤ n²`. Errors on graphs containing K4, where the bound need not hold.
    pub fn turan_check(&self) -> Result<bool> {
        self.require_k4_free()?;
        Ok(3 * self.e as u128 <= (self.n as u128) * (self.n as u128))
    }

    /// `G[X]` relabelled so that `vertices[i]` becomes vertex `i`.
    pub fn induced_subgraph(&self, vertices: &[Vertex]) -> Graph {
        let mut edges = Vec::new();
        for (i, &a) in vertices.iter().enumerate() {
            for (j, &b) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(a, b) {
                    edges.push((i, j));
                }
            }
        }
        Graph::from_valid_edges(vertices.len(), edges)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[Vertex]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::input("permutation length differs from vertex count"));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::input("not a permutation"));
            }
        }
        Ok(Graph::from_valid_edges(
            self.n,
            self.edges().into_iter().map(|(u, v)| (perm[u], perm[v])),
        ))
    }

    /// The graph with the given edges removed; pairs that are not edges are ignored.
    pub fn without_edges(&self, removed: &[Edge]) -> Graph {
        let mut g = Graph::empty(self.n);
        g.rows.copy_from_slice(&self.rows);
        for &(u, v) in removed {
            if u < self.n && v < self.n {
                g.rows[u * g.words + v / 64] &= !(1 << (v % 64));
                g.rows[v * g.words + u / 64] &= !(1 << (u % 64));
            }
        }
        g.e = g
            .rows
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum::<usize>()
            / 2;
        g
    }

    /// A proper 2-coloring if one exists (BFS, lowest uncolored vertex gets `false`).
    pub fn two_coloring(&self) -> Option<Vec<bool>> {
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for w in self.neighbors(u) {
                    match color[w] {
                        None => {
                            color[w] = Some(!cu);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(Option::unwrap).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    /// `e(X)` for a vertex set given as ids.
    pub fn edges_within(&self, set: &[Vertex]) -> usize {
        let mask = mask_of(self.n, set.iter().copied());
        set.iter()
            .map(|&v| and_count(self.row(v), &mask))
            .sum::<usize>()
            / 2
    }

    /// `e(A, B)` for disjoint `A`, `B`.
    pub fn edges_between(&self, a: &[Vertex], b: &[Vertex]) -> usize {
        let mask = mask_of(self.n, b.iter().copied());
        a.iter().map(|&v| and_count(self.row(v), &mask)).sum()
    }

    pub fn is_regular(&self) -> Option<usize> {
        let d = self.degrees();
        match d.first() {
            None => Some(0),
            Some(&d0) => d.iter().all(|&x| x == d0).then_some(d0),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, complete_multipartite, cycle};
    use itertools::Itertools;
    use proptest::prelude::*;

    fn k333() -> Graph {
        complete_multipartite(&[3, 3, 3])
    }

    #[test]
    fn construction_examples() {
        let k3 = Graph::from_edge_list(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(k3.edge_count(), 3);
        let c5 = Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(c5.edge_count(), 5);
        assert!(c5.degrees().iter().all(|&d| d == 2));
        let dup = Graph::from_edge_list(4, &[(0, 1), (0, 1), (1, 0)]).unwrap();
        assert_eq!(dup.edge_count(), 1);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            Graph::from_edge_list(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(Graph::from_edge_list(3, &[(1, 1)]), Err(Error::SelfLoop(1)));
    }

    #[test]
    fn common_neighbor_examples() {
        let k4 = complete(4);
        for (u, v) in (0..4).tuple_combinations() {
            let c = k4.common_neighbors(u, v).unwrap();
            assert_eq!(c.len(), 2);
            assert!(!c.contains(&u) && !c.contains(&v));
        }
        let c5 = cycle(5);
        assert!(c5.common_neighbors(0, 1).unwrap().is_empty());
        // parts {0,1,2} {3,4,5} {6,7,8}
        assert_eq!(k333().common_neighbors(0, 3).unwrap(), vec![6, 7, 8]);
        assert!(k333().common_neighbors(0, 0).is_err());
        assert!(k333().common_neighbors(0, 9).is_err());
    }

    #[test]
    fn triangle_examples() {
        assert_eq!(complete(4).triangles().len(), 4);
        assert_eq!(cycle(5).triangles().len(), 0);
        let t = k333().triangles();
        assert_eq!(t.len(), 27);
        assert_eq!(k333().triangle_count(), 27);
        assert!(t.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn k4_examples() {
        assert!(!complete(4).is_k4_free());
        assert_eq!(complete(4).find_k4(), Some([0, 1, 2, 3]));
        assert!(k333().is_k4_free());
        assert!(cycle(5).is_k4_free());
    }

    #[test]
    fn turan_examples() {
        assert_eq!(k333().turan_check(), Ok(true));
        assert_eq!(3 * k333().edge_count(), 81);
        assert_eq!(cycle(5).turan_check(), Ok(true));
        assert_eq!(complete(2).turan_check(), Ok(true));
        assert!(matches!(
            complete(4).turan_check(),
            Err(Error::NotK4Free(_))
        ));
    }

    #[test]
    fn local_stats_of_turan_graph() {
        for s in k333().all_local_stats() {
            assert_eq!((s.degree, s.ev), (6, 9));
        }
    }

    #[test]
    fn coloring_and_removal() {
        assert!(cycle(6).is_bipartite());
        assert!(!cycle(5).is_bipartite());
        assert!(cycle(5).without_edges(&[(1, 0)]).is_bipartite());
        assert_eq!(cycle(5).without_edges(&[(0, 1)]).edge_count(), 4);
    }

    fn naive_has_k4(g: &Graph) -> bool {
        (0..g.n()).combinations(4).any(|q| {
            q.iter()
                .tuple_combinations()
                .all(|(&a, &b)| g.has_edge(a, b))
        })
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            let pairs = n * (n - 1) / 2;
            proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
                let edges = (0..n)
                    .tuple_combinations()
                    .zip(bits)
                    .filter(|(_, b)| *b)
                    .map(|(e, _)| e);
                Graph::from_valid_edges(n, edges)
            })
        })
    }

    proptest! {
        #[test]
        fn degree_and_triangle_identities(g in arb_graph(12)) {
            let stats = g.all_local_stats();
            let sum_d: usize = stats.iter().map(|s| s.degree).sum();
            let sum_ev: usize = stats.iter().map(|s| s.ev).sum();
            let m = g.triangles().len();
            prop_assert_eq!(sum_d, 2 * g.edge_count());
            prop_assert_eq!(sum_ev, 3 * m);
            prop_assert_eq!(g.triangle_count() as usize, m);
            for s in &stats {
                prop_assert!(s.ev <= s.degree * s.degree.saturating_sub(1) / 2);
            }
            let row_total: usize = g.rows.iter().map(|w| w.count_ones() as usize).sum();
            prop_assert_eq!(row_total, 2 * g.edge_count());
            for u in 0..g.n() {
                prop_assert!(!g.has_edge(u, u));
                for v in 0..g.n() {
                    prop_assert_eq!(g.has_edge(u, v), g.has_edge(v, u));
                }
            }
        }

        #[test]
        fn k4_detection_matches_enumeration(g in arb_graph(8)) {
            prop_assert_eq!(g.is_k4_free(), !naive_has_k4(&g));
            if let Some(q) = g.find_k4() {
                for (a, b) in q.iter().tuple_combinations() {
                    prop_assert!(g.has_edge(*a, *b));
                }
            }
            if g.is_k4_free() {
                prop_assert!(3 * g.edge_count() <= g.n() * g.n());
            }
        }

        #[test]
        fn codegree_is_intersection(g in arb_graph(12)) {
            for (u, v) in g.edges() {
                let brute = (0..g.n()).filter(|&w| g.has_edge(u, w) && g.has_edge(v, w)).count();
                prop_assert_eq!(g.codegree(u, v), brute);
            }
        }
    }

    #[test]
    fn wide_rows() {
        // crosses the 64-bit word boundary
        let g = complete_multipartite(&[40, 40, 40]);
        assert_eq!(g.edge_count(), 4800);
        assert!(g.is_k4_free());
        assert_eq!(g.triangle_count(), 64000);
        assert_eq!(
            g.common_neighbors(0, 40).unwrap(),
            (80..120).collect::<Vec<_>>()
        );
    }
}
