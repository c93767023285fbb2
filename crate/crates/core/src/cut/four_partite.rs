use serde::Serialize;

use super::{best_codegree_triangle, Bipartition};
use crate::error::{Error, Result};
use crate::graph::{Graph, Triangle, Vertex};

/// The three pairwise-disjoint independent common neighborhoods of a
/// triangle's edges, plus everything else in `x`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FourPartition {
    pub v1: Vec<Vertex>,
    pub v2: Vec<Vertex>,
    pub v3: Vec<Vertex>,
    pub x: Vec<Vertex>,
    pub source_triangle: Triangle,
}

impl FourPartition {
    pub fn classes(&self) -> [&[Vertex]; 4] {
        [&self.v1, &self.v2, &self.v3, &self.x]
    }

    /// Builds `V1 = N(u,v)`, `V2 = N(u,w)`, `V3 = N(v,w)` and `X` = the rest.
    ///
    /// A vertex in two of the sets, or an edge inside one, completes a K4 with
    /// the triangle; that K4 is returned as the error.
    pub fn from_triangle(g: &Graph, t: Triangle) -> Result<Self> {
        let [u, v, w] = t.vertices();
        let v1 = g.common_neighbors(u, v)?;
        let v2 = g.common_neighbors(u, w)?;
        let v3 = g.common_neighbors(v, w)?;
        let mut owner: Vec<Option<usize>> = vec![None; g.n()];
        for (i, (class, pair)) in [(&v1, [u, v]), (&v2, [u, w]), (&v3, [v, w])]
            .into_iter()
            .enumerate()
        {
            for &a in class.iter() {
                if owner[a].is_some() {
                    // adjacent to all of u, v, w
                    let mut q = [u, v, w, a];
                    q.sort_unstable();
                    return Err(Error::NotK4Free(q));
                }
                owner[a] = Some(i);
            }
            for (j, &a) in class.iter().enumerate() {
                if let Some(&b) = class[j + 1..].iter().find(|&&b| g.has_edge(a, b)) {
                    let mut q = [pair[0], pair[1], a, b];
                    q.sort_unstable();
                    return Err(Error::NotK4Free(q));
                }
            }
        }
        let x = (0..g.n()).filter(|&a| owner[a].is_none()).collect();
        Ok(FourPartition {
            v1,
            v2,
            v3,
            x,
            source_triangle: t,
        })
    }
}

/// Best of the three ways to split four classes into two pairs.
///
/// Classes 0..3 must be independent; edges inside class 3 are allowed and
/// are never cut. The best pairing satisfies `3·cut ≥ 2·(e − e(X))` because
/// the three pairings cut every other edge twice in total.
pub fn four_partite_cut(g: &Graph, classes: [&[Vertex]; 4]) -> Result<Bipartition> {
    let mut class_of: Vec<Option<usize>> = vec![None; g.n()];
    for (i, class) in classes.iter().enumerate() {
        for &v in class.iter() {
            if v >= g.n() {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: g.n(),
                });
            }
            if class_of[v].replace(i).is_some() {
                return Err(Error::Overlap(v));
            }
        }
    }
    if let Some(v) = class_of.iter().position(Option::is_none) {
        return Err(Error::input(format!(
            "vertex {v} is in none of the four classes"
        )));
    }
    for (i, class) in classes.iter().take(3).enumerate() {
        if g.edges_within(class) > 0 {
            return Err(Error::input(format!("class {i} is not an independent set")));
        }
    }
    // pairings {0,1}|{2,3}, {0,2}|{1,3}, {0,3}|{1,2}
    let mut best: Option<Bipartition> = None;
    for partner in 1..=3 {
        let side: Vec<bool> = class_of
            .iter()
            .map(|c| !matches!(c, Some(i) if *i == 0 || *i == partner))
            .collect();
        let b = Bipartition::from_sides(g, side)?;
        if best
            .as_ref()
            .is_none_or(|cur| b.cut_value() > cur.cut_value())
        {
            best = Some(b);
        }
    }
    Ok(best.expect("three pairings evaluated"))
}

/// Four-partite cut around the triangle of maximum codegree sum.
pub fn triangle_4partite_cut(g: &Graph) -> Result<(FourPartition, Bipartition)> {
    let (t, _) = best_codegree_triangle(g)?;
    let p = FourPartition::from_triangle(g, t)?;
    let b = four_partite_cut(g, p.classes())?;
    Ok((p, b))
}
