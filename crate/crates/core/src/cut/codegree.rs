use crate::error::{Error, Result};
use crate::graph::{Graph, Triangle};

/// Triangle maximizing `d(u,v) + d(u,w) + d(v,w)`, lexicographically smallest
/// among maximizers. Averaging over triangles gives `e·sum ≥ 9m`.
pub fn best_codegree_triangle(g: &Graph) -> Result<(Triangle, usize)> {
    let mut best: Option<(Triangle, usize)> = None;
    for t in g.triangles() {
        let [u, v, w] = t.vertices();
        let sum = g.codegree(u, v) + g.codegree(u, w) + g.codegree(v, w);
        if best.is_none_or(|(_, s)| sum > s) {
            best = Some((t, sum));
        }
    }
    best.ok_or(Error::NoTriangle)
}
