//! Brute-force ground truth: exact maximum cut and exhaustive sweeps over all
//! labeled graphs on a handful of vertices.

use std::collections::BTreeSet;

use itertools::Itertools;
use serde::Serialize;

use crate::cut::{bounds::within_n2_over_9, Bipartition, DeletionCertificate, Method};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::rational::{int, Rational};

pub const DEFAULT_LIMIT: usize = 28;
/// Assignments are packed in one `u64`.
const HARD_LIMIT: usize = 63;
pub const SWEEP_LIMIT: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleResult {
    pub max_cut: usize,
    pub min_deletions: usize,
    pub witness: Bipartition,
}

impl OracleResult {
    pub fn certificate(&self, g: &Graph) -> DeletionCertificate {
        let bound: Rational = int(g.n() * g.n()) / int(9);
        DeletionCertificate::from_bipartition(&self.witness, Method::Oracle, bound)
    }
}

/// Exact maximum cut by enumerating all `2^(n−1)` assignments with vertex 0
/// fixed on side `false`.
///
/// Assignments are visited in reflected Gray-code order and the cut is
/// updated incrementally on each single-vertex flip. The witness is the
/// maximizer with the lowest assignment code (bit `i` = side of vertex `i`).
pub fn exact_max_cut(g: &Graph, limit: usize) -> Result<OracleResult> {
    let n = g.n();
    let cap = limit.min(HARD_LIMIT);
    if n > cap {
        return Err(Error::Capacity {
            size: n,
            limit: cap,
        });
    }
    if n == 0 {
        let witness = Bipartition::from_sides(g, Vec::new())?;
        return Ok(OracleResult {
            max_cut: 0,
            min_deletions: 0,
            witness,
        });
    }
    let rows: Vec<u64> = (0..n).map(|v| g.row(v)[0]).collect();
    let degree: Vec<i64> = rows.iter().map(|r| r.count_ones() as i64).collect();

    let mut code: u64 = 0;
    let mut cut: i64 = 0;
    let (mut best_cut, mut best_code) = (0i64, 0u64);
    let steps: u64 = 1 << (n - 1);
    for i in 1..steps {
        // flip the vertex above the lowest set bit of the step counter
        let v = i.trailing_zeros() as usize + 1;
        let same_side = if code >> v & 1 == 1 { code } else { !code };
        let same = (rows[v] & same_side).count_ones() as i64;
        // same-side neighbors become cut, the others stop being cut
        cut += 2 * same - degree[v];
        code ^= 1 << v;
        if cut > best_cut || (cut == best_cut && code < best_code) {
            best_cut = cut;
            best_code = code;
        }
    }
    let side: Vec<bool> = (0..n).map(|v| best_code >> v & 1 == 1).collect();
    let witness = Bipartition::from_sides(g, side)?;
    debug_assert_eq!(witness.cut_value() as i64, best_cut);
    Ok(OracleResult {
        max_cut: witness.cut_value(),
        min_deletions: witness.deletions(),
        witness,
    })
}

/// Outcome of checking every labeled graph on `n` vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub n: usize,
    pub graphs: u64,
    pub k4_free: u64,
    /// Largest minimum deletion count among K4-free graphs.
    pub max_min_deletions: usize,
    /// K4-free graphs with `9·min_deletions > n²` (must be zero).
    pub violations: u64,
    /// Labeled graphs attaining `max_min_deletions`.
    pub extremal_labeled: u64,
    /// One representative edge list per isomorphism class of extremal graphs,
    /// in canonical labeling, sorted.
    pub extremal_classes: Vec<Vec<Edge>>,
}

fn pair_index(n: usize) -> Vec<Edge> {
    (0..n).tuple_combinations().collect()
}

/// Canonical form: the minimum edge-bit code over all vertex permutations,
/// with bit `k` standing for the `k`-th pair in lexicographic order.
pub fn canonical_code(n: usize, edges: &[Edge]) -> u64 {
    let pairs = pair_index(n);
    let mut slot = vec![vec![0usize; n]; n];
    for (k, &(a, b)) in pairs.iter().enumerate() {
        slot[a][b] = k;
        slot[b][a] = k;
    }
    (0..n)
        .permutations(n)
        .map(|p| {
            edges
                .iter()
                .fold(0u64, |acc, &(u, v)| acc | 1 << slot[p[u]][p[v]])
        })
        .min()
        .unwrap_or(0)
}

fn code_to_edges(n: usize, code: u64) -> Vec<Edge> {
    pair_index(n)
        .into_iter()
        .enumerate()
        .filter(|(k, _)| code >> k & 1 == 1)
        .map(|(_, e)| e)
        .collect()
}

/// Iterates all `2^(n(n−1)/2)` labeled graphs on `n ≤ 7` vertices, computes
/// the minimum bipartization of each K4-free one and checks `9·min ≤ n²`.
///
/// Graphs are edge bitmasks over the lexicographic pair order. For each
/// assignment the crossing pairs form a fixed mask, so a graph's max cut is
/// the largest popcount of `graph & crossing[s]`.
pub fn exhaustive_theorem_sweep(n: usize) -> Result<SweepReport> {
    if n > SWEEP_LIMIT {
        return Err(Error::Capacity {
            size: n,
            limit: SWEEP_LIMIT,
        });
    }
    let pairs = pair_index(n);
    let crossing: Vec<u32> = (0..1u32 << n.saturating_sub(1))
        .map(|s| {
            let code = s << 1;
            pairs
                .iter()
                .enumerate()
                .filter(|(_, &(a, b))| (code >> a & 1) != (code >> b & 1))
                .fold(0u32, |m, (k, _)| m | 1 << k)
        })
        .collect();
    let k4_masks: Vec<u32> = (0..n)
        .combinations(4)
        .map(|q| {
            q.iter().tuple_combinations().fold(0u32, |m, (&a, &b)| {
                m | 1
                    << pairs
                        .iter()
                        .position(|&p| p == (a, b))
                        .expect("pair exists")
            })
        })
        .collect();

    let total: u64 = 1 << pairs.len();
    let (mut k4_free, mut violations, mut best, mut extremal) = (0u64, 0u64, 0usize, Vec::new());
    for graph in 0..total as u32 {
        if k4_masks.iter().any(|&k| k & !graph == 0) {
            continue;
        }
        k4_free += 1;
        let e = graph.count_ones() as usize;
        let max_cut = crossing
            .iter()
            .map(|&c| (graph & c).count_ones())
            .max()
            .unwrap_or(0) as usize;
        let min_del = e - max_cut;
        if !within_n2_over_9(n, min_del) {
            violations += 1;
        }
        if min_del > best {
            best = min_del;
            extremal.clear();
        }
        if min_del == best {
            extremal.push(graph);
        }
    }

    let mut classes = BTreeSet::new();
    for &graph in &extremal {
        let edges = code_to_edges(n, graph as u64);
        classes.insert(canonical_code(n, &edges));
    }
    Ok(SweepReport {
        n,
        graphs: total,
        k4_free,
        max_min_deletions: best,
        violations,
        extremal_labeled: extremal.len() as u64,
        extremal_classes: classes.iter().map(|&c| code_to_edges(n, c)).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, complete_multipartite, cycle, random_gnp};
    use crate::rng::SeededRng;

    /// Plain enumeration without Gray codes.
    fn naive_max_cut(g: &Graph) -> usize {
        let n = g.n();
        (0..1u64 << n)
            .map(|code| {
                g.edges()
                    .iter()
                    .filter(|&&(u, v)| (code >> u & 1) != (code >> v & 1))
                    .count()
            })
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn examples() {
        let r = exact_max_cut(&cycle(5), DEFAULT_LIMIT).unwrap();
        assert_eq!((r.max_cut, r.min_deletions), (4, 1));
        let r = exact_max_cut(&complete_multipartite(&[3, 3, 3]), DEFAULT_LIMIT).unwrap();
        assert_eq!((r.max_cut, r.min_deletions), (18, 9));
        let r = exact_max_cut(&complete_multipartite(&[2, 2, 2]), DEFAULT_LIMIT).unwrap();
        assert_eq!((r.max_cut, r.min_deletions), (8, 4));
        assert!(r.witness.verify(&complete_multipartite(&[2, 2, 2])));
    }

    #[test]
    fn capacity_and_trivial_cases() {
        assert_eq!(
            exact_max_cut(&Graph::empty(10), 9),
            Err(Error::Capacity { size: 10, limit: 9 })
        );
        assert_eq!(exact_max_cut(&Graph::empty(0), 5).unwrap().max_cut, 0);
        assert_eq!(exact_max_cut(&Graph::empty(1), 5).unwrap().max_cut, 0);
        assert_eq!(exact_max_cut(&complete(2), 5).unwrap().max_cut, 1);
    }

    #[test]
    fn witness_is_lowest_code_maximizer() {
        // K3: codes 0b010, 0b100, 0b110 all give 2; the lowest is 0b010
        let r = exact_max_cut(&complete(3), 5).unwrap();
        assert_eq!(r.witness.side(), &[false, true, false]);
    }

    #[test]
    fn agrees_with_naive_enumeration() {
        for seed in 0..60 {
            let g = random_gnp(2 + (seed as usize % 10), 0.5, seed).unwrap();
            let r = exact_max_cut(&g, DEFAULT_LIMIT).unwrap();
            assert_eq!(r.max_cut, naive_max_cut(&g), "seed {seed}");
            assert_eq!(r.witness.cut_value(), r.max_cut);
        }
    }

    #[test]
    fn invariant_under_relabeling() {
        let mut rng = SeededRng::new(11);
        for seed in 0..20 {
            let g = random_gnp(12, 0.4, seed).unwrap();
            let mut perm: Vec<usize> = (0..12).collect();
            rng.shuffle(&mut perm);
            let h = g.relabel(&perm).unwrap();
            assert_eq!(
                exact_max_cut(&g, 20).unwrap().max_cut,
                exact_max_cut(&h, 20).unwrap().max_cut
            );
        }
    }

    #[test]
    fn sweep_small_cases() {
        let r3 = exhaustive_theorem_sweep(3).unwrap();
        assert_eq!(
            (r3.graphs, r3.k4_free, r3.max_min_deletions, r3.violations),
            (8, 8, 1, 0)
        );
        assert_eq!(r3.extremal_classes, vec![vec![(0, 1), (0, 2), (1, 2)]]);
        let r5 = exhaustive_theorem_sweep(5).unwrap();
        assert_eq!(r5.max_min_deletions, 2);
        assert_eq!(r5.violations, 0);
        assert!(exhaustive_theorem_sweep(8).is_err());
    }

    #[test]
    fn sweep_n6_unique_octahedron() {
        let r = exhaustive_theorem_sweep(6).unwrap();
        assert_eq!(r.max_min_deletions, 4);
        assert_eq!(r.violations, 0);
        assert_eq!(r.extremal_labeled, 15);
        assert_eq!(r.extremal_classes.len(), 1);
        let octa = complete_multipartite(&[2, 2, 2]);
        assert_eq!(
            canonical_code(6, &r.extremal_classes[0]),
            canonical_code(6, &octa.edges())
        );
    }

    #[test]
    fn canonical_code_identifies_isomorphic_graphs() {
        let c = cycle(5);
        let d = c.relabel(&[2, 4, 1, 0, 3]).unwrap();
        assert_eq!(canonical_code(5, &c.edges()), canonical_code(5, &d.edges()));
        let p = Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert_ne!(canonical_code(5, &c.edges()), canonical_code(5, &p.edges()));
    }
}
