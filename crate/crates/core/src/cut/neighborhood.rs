use super::Bipartition;
use crate::graph::Graph;

/// Cut value of `(N(v), V∖N(v))` for every `v`, computed as
/// `Σ_{u∈N(v)} d(u) − 2e_v`.
pub fn neighborhood_candidates(g: &Graph) -> Vec<usize> {
    let d = g.degrees();
    (0..g.n())
        .map(|v| g.neighbors(v).map(|u| d[u]).sum::<usize>() - 2 * g.neighborhood_edges(v))
        .collect()
}

/// Best neighborhood cut, lowest vertex on ties.
///
/// Averaging the candidates gives `n²·cut ≥ 4e² − 6mn`. On an empty vertex
/// set this is the empty bipartition.
pub fn neighborhood_cut(g: &Graph) -> Bipartition {
    let pivot = best_pivot(&neighborhood_candidates(g));
    let side = match pivot {
        Some(v) => {
            let mut s = vec![false; g.n()];
            for u in g.neighbors(v) {
                s[u] = true;
            }
            s
        }
        None => Vec::new(),
    };
    Bipartition::from_sides(g, side).expect("assignment covers every vertex")
}

pub(super) fn best_pivot(values: &[usize]) -> Option<usize> {
    values
        .iter()
        .enumerate()
        .fold(None, |best, (v, &val)| match best {
            Some((_, b)) if b >= val => best,
            _ => Some((v, val)),
        })
        .map(|(v, _)| v)
}
