//! Constructive cuts for K4-free graphs.
//!
//! Each construction returns an explicit [`Bipartition`]; its deletion set is
//! a bipartization certificate. Bound checks are done in exact integer or
//! rational arithmetic, see [`bounds`].

pub mod bipartize;
pub mod bounds;
mod codegree;
mod four_partite;
mod k4free;
mod neighborhood;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{and_count, mask_of, Edge, Graph};
use crate::rational::Rational;

pub use bipartize::{bipartize, BoundReport, Bounds, Cuts, ProofBranch};
pub use codegree::best_codegree_triangle;
pub use four_partite::{four_partite_cut, triangle_4partite_cut, FourPartition};
pub use k4free::{k4free_cut, refined_candidate};
pub use neighborhood::{neighborhood_candidates, neighborhood_cut};

/// Number of edges whose endpoints lie on opposite sides.
pub fn cut_value(g: &Graph, side: &[bool]) -> Result<usize> {
    if side.len() != g.n() {
        return Err(Error::input(format!(
            "assignment covers {} of {} vertices",
            side.len(),
            g.n()
        )));
    }
    Ok(cut_value_unchecked(g, side))
}

pub(crate) fn cut_value_unchecked(g: &Graph, side: &[bool]) -> usize {
    let right = mask_of(g.n(), (0..g.n()).filter(|&v| side[v]));
    (0..g.n())
        .filter(|&v| !side[v])
        .map(|v| and_count(g.row(v), &right))
        .sum()
}

/// Two-sided vertex assignment together with its cut value and the
/// same-side edges that must be deleted to make it a proper 2-coloring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Bipartition {
    side: Vec<bool>,
    cut_value: usize,
    deletion_set: Vec<Edge>,
}

impl Bipartition {
    pub fn from_sides(g: &Graph, side: Vec<bool>) -> Result<Self> {
        let cut = cut_value(g, &side)?;
        let deletion_set: Vec<Edge> = g
            .edges()
            .into_iter()
            .filter(|&(u, v)| side[u] == side[v])
            .collect();
        debug_assert_eq!(cut + deletion_set.len(), g.edge_count());
        Ok(Bipartition {
            side,
            cut_value: cut,
            deletion_set,
        })
    }

    pub fn side(&self) -> &[bool] {
        &self.side
    }

    pub fn cut_value(&self) -> usize {
        self.cut_value
    }

    pub fn deletion_set(&self) -> &[Edge] {
        &self.deletion_set
    }

    pub fn deletions(&self) -> usize {
        self.deletion_set.len()
    }

    /// Recomputes everything from `g`: the counts add up to `e`, and after
    /// deleting the same-side edges every remaining edge crosses the sides.
    pub fn verify(&self, g: &Graph) -> bool {
        if self.side.len() != g.n() || self.cut_value + self.deletion_set.len() != g.edge_count() {
            return false;
        }
        let rest = g.without_edges(&self.deletion_set);
        rest.edge_count() == self.cut_value
            && rest
                .edges()
                .iter()
                .all(|&(u, v)| self.side[u] != self.side[v])
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Neighborhood,
    K4freeRefine,
    Triangle4partite,
    Oracle,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Neighborhood => "neighborhood",
            Method::K4freeRefine => "k4free_refine",
            Method::Triangle4partite => "triangle_4partite",
            Method::Oracle => "oracle",
        }
    }
}

/// An edge set whose removal leaves a bipartite graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeletionCertificate {
    pub edges: Vec<Edge>,
    pub method: Method,
    /// Upper bound the certificate is claimed to respect, `|edges| <= claimed_bound`.
    #[serde(with = "crate::rational")]
    pub claimed_bound: Rational,
}

impl DeletionCertificate {
    pub fn from_bipartition(b: &Bipartition, method: Method, claimed_bound: Rational) -> Self {
        DeletionCertificate {
            edges: b.deletion_set().to_vec(),
            method,
            claimed_bound,
        }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Every listed pair is an edge of `g`, and `g` minus the edges is 2-colorable.
    pub fn verify(&self, g: &Graph) -> bool {
        self.edges
            .iter()
            .all(|&(u, v)| u < g.n() && v < g.n() && g.has_edge(u, v))
            && g.without_edges(&self.edges).is_bipartite()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, complete_multipartite, cycle};

    #[test]
    fn cut_value_examples() {
        assert_eq!(cut_value(&complete(3), &[false, true, true]).unwrap(), 2);
        assert_eq!(
            cut_value(&cycle(5), &[false, true, false, true, true]).unwrap(),
            4
        );
        let mut side = vec![false; 9];
        side[6..].iter_mut().for_each(|s| *s = true);
        assert_eq!(
            cut_value(&complete_multipartite(&[3, 3, 3]), &side).unwrap(),
            18
        );
        assert!(cut_value(&complete(3), &[true]).is_err());
    }

    #[test]
    fn bipartition_accounting() {
        let g = cycle(5);
        let b = Bipartition::from_sides(&g, vec![false, true, false, true, true]).unwrap();
        assert_eq!(b.cut_value(), 4);
        assert_eq!(b.deletion_set(), &[(3, 4)]);
        assert!(b.verify(&g));
        let c = DeletionCertificate::from_bipartition(
            &b,
            Method::Neighborhood,
            crate::rational::ratio(25, 9),
        );
        assert!(c.verify(&g));
        let bogus = DeletionCertificate {
            edges: vec![(0, 2)],
            ..c
        };
        assert!(!bogus.verify(&g));
    }
}
