use serde::Serialize;

use super::bounds::{
    codegree_bound, combined_lower_bound, four_partite_bound, k4free_bound, neighborhood_bound,
    rhs_a, rhs_b, sparse_deletion_rate, technical_f, technical_g, within_n2_over_9,
};
use super::{
    best_codegree_triangle, k4free_cut, neighborhood_cut, triangle_4partite_cut, Bipartition,
    DeletionCertificate, Method,
};
use crate::error::Result;
use crate::graph::{Graph, Triangle};
use crate::rational::{int, ratio, zero, Rational};

/// Which case of the `n²/9` argument covers this graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ProofBranch {
    /// `n ≤ 1` or no edges.
    Degenerate,
    /// `e ≤ n²/4`: the K4-free cut alone leaves at most `3n²/28` deletions.
    Sparse,
    /// `n²/4 < e`: neighborhood cut, or the four-partite cut around a
    /// high-codegree triangle.
    Dense,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Bounds {
    /// `2(e − e(X))/3` for the four-partition actually used.
    #[serde(serialize_with = "crate::rational::option::serialize")]
    pub four_partite: Option<Rational>,
    /// `9m/e`, a lower bound on the best triangle's codegree sum.
    #[serde(serialize_with = "crate::rational::option::serialize")]
    pub codegree: Option<Rational>,
    /// `4e²/n² − 6m/n`.
    #[serde(with = "crate::rational")]
    pub neighborhood: Rational,
    #[serde(with = "crate::rational")]
    pub rhs_a: Rational,
    #[serde(with = "crate::rational")]
    pub rhs_b: Rational,
    /// `2e/7 + 8e²/(7n²)`.
    #[serde(with = "crate::rational")]
    pub k4free: Rational,
    /// Combination with `a = 4/3` (weights 3/7, 4/7).
    #[serde(with = "crate::rational")]
    pub combined_four_thirds: Rational,
    /// Combination with `a = 69/50`.
    #[serde(with = "crate::rational")]
    pub combined_one_point_three_eight: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Cuts {
    pub neighborhood: usize,
    pub k4free_refine: usize,
    pub triangle_4partite: Option<usize>,
    pub best: usize,
}

/// Every quantity the bipartization argument talks about, for one graph.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub n: usize,
    pub e: usize,
    pub m: u64,
    /// `6e/n²` (zero when `n = 0`).
    #[serde(with = "crate::rational")]
    pub t: Rational,
    #[serde(serialize_with = "crate::rational::option::serialize")]
    pub f_of_t: Option<Rational>,
    #[serde(serialize_with = "crate::rational::option::serialize")]
    pub g_of_t: Option<Rational>,
    /// `5s/7 − 8s²/7` at `s = e/n²`.
    #[serde(with = "crate::rational")]
    pub sparse_rate: Rational,
    pub proof_branch: ProofBranch,
    pub bounds: Bounds,
    pub cuts: Cuts,
    pub codegree_triangle: Option<Triangle>,
    pub codegree_sum: Option<usize>,
    /// `[|V1|, |V2|, |V3|, |X|]`.
    pub four_partition_sizes: Option<[usize; 4]>,
    pub e_x: Option<usize>,
    pub deletions: usize,
    /// `n²/9`.
    #[serde(with = "crate::rational")]
    pub deletion_bound: Rational,
    /// `deletions = ⌊n²/9⌋ > 0`. Flagged for inspection, not a failure.
    pub at_floor: bool,
}

impl BoundReport {
    /// Inequalities the report must satisfy; returns a description of each one that fails.
    pub fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        let mut need = |ok: bool, what: &str| {
            if !ok {
                out.push(what.to_string());
            }
        };
        let cut = |c: usize| int(c);
        need(
            cut(self.cuts.neighborhood) >= self.bounds.neighborhood,
            "neighborhood cut below 4e²/n² − 6m/n",
        );
        need(
            cut(self.cuts.neighborhood) >= self.bounds.rhs_a,
            "neighborhood cut below its average",
        );
        need(
            cut(self.cuts.k4free_refine) >= self.bounds.k4free,
            "k4free cut below 2e/7 + 8e²/(7n²)",
        );
        need(
            cut(self.cuts.k4free_refine) >= self.bounds.rhs_b,
            "k4free cut below refined average",
        );
        need(
            cut(self.cuts.best) >= self.bounds.combined_four_thirds,
            "best cut below combined bound (a = 4/3)",
        );
        need(
            cut(self.cuts.best) >= self.bounds.combined_one_point_three_eight,
            "best cut below combined bound (a = 69/50)",
        );
        if let (Some(c), Some(b)) = (self.cuts.triangle_4partite, &self.bounds.four_partite) {
            need(cut(c) >= *b, "four-partite cut below 2(e − e(X))/3");
        }
        if let (Some(s), Some(b)) = (self.codegree_sum, &self.bounds.codegree) {
            need(cut(s) >= *b, "codegree sum below 9m/e");
        }
        need(
            self.cuts.best + self.deletions == self.e,
            "cut and deletions do not add up to e",
        );
        need(
            within_n2_over_9(self.n, self.deletions),
            "more than n²/9 deletions",
        );
        out
    }
}

/// Bipartizes a K4-free graph with at most `n²/9` deletions.
///
/// Runs the neighborhood cut, the K4-free refined cut and, when a triangle
/// exists, the four-partite triangle cut, and keeps the largest (earlier
/// method on ties). The certificate is re-verified before returning; a
/// violation of the `n²/9` bound panics since it cannot happen for valid input.
pub fn bipartize(g: &Graph) -> Result<(DeletionCertificate, BoundReport)> {
    g.require_k4_free()?;
    let (n, e) = (g.n(), g.edge_count());
    let m = g.triangle_count();
    let n2 = int(n * n);
    let deletion_bound = if n == 0 { zero() } else { &n2 / int(9) };

    let t = if n == 0 { zero() } else { int(6 * e) / &n2 };
    let nonzero_t = e > 0;
    let f_of_t = nonzero_t.then(|| technical_f(&t).expect("t > 0"));
    let g_of_t = nonzero_t.then(|| technical_g(&t).expect("t > 0"));
    let density = if n == 0 { zero() } else { int(e) / &n2 };
    let proof_branch = if n <= 1 || e == 0 {
        ProofBranch::Degenerate
    } else if 4 * e <= n * n {
        ProofBranch::Sparse
    } else {
        ProofBranch::Dense
    };

    let mut bounds = Bounds {
        four_partite: None,
        codegree: codegree_bound(e, m),
        neighborhood: neighborhood_bound(n, e, m),
        rhs_a: rhs_a(g),
        rhs_b: rhs_b(g),
        k4free: k4free_bound(n, e),
        combined_four_thirds: combined_lower_bound(g, &ratio(4, 3))?,
        combined_one_point_three_eight: combined_lower_bound(g, &ratio(69, 50))?,
    };

    let mut report = BoundReport {
        n,
        e,
        m,
        t,
        f_of_t,
        g_of_t,
        sparse_rate: sparse_deletion_rate(&density),
        proof_branch,
        bounds: bounds.clone(),
        cuts: Cuts {
            neighborhood: 0,
            k4free_refine: 0,
            triangle_4partite: None,
            best: 0,
        },
        codegree_triangle: None,
        codegree_sum: None,
        four_partition_sizes: None,
        e_x: None,
        deletions: 0,
        deletion_bound: deletion_bound.clone(),
        at_floor: false,
    };

    if proof_branch == ProofBranch::Degenerate {
        let cert = DeletionCertificate {
            edges: Vec::new(),
            method: Method::Neighborhood,
            claimed_bound: deletion_bound,
        };
        return Ok((cert, report));
    }

    let neighborhood = neighborhood_cut(g);
    let refined = k4free_cut(g)?;
    let mut candidates: Vec<(Method, Bipartition)> = vec![
        (Method::Neighborhood, neighborhood),
        (Method::K4freeRefine, refined),
    ];
    if m > 0 {
        let (triangle, sum) = best_codegree_triangle(g)?;
        let (partition, cut) = triangle_4partite_cut(g)?;
        let e_x = g.edges_within(&partition.x);
        bounds.four_partite = Some(four_partite_bound(e, e_x));
        report.codegree_triangle = Some(triangle);
        report.codegree_sum = Some(sum);
        report.four_partition_sizes = Some([
            partition.v1.len(),
            partition.v2.len(),
            partition.v3.len(),
            partition.x.len(),
        ]);
        report.e_x = Some(e_x);
        report.cuts.triangle_4partite = Some(cut.cut_value());
        candidates.push((Method::Triangle4partite, cut));
    }
    report.bounds = bounds;
    report.cuts.neighborhood = candidates[0].1.cut_value();
    report.cuts.k4free_refine = candidates[1].1.cut_value();

    let mut best = 0;
    for (i, (_, b)) in candidates.iter().enumerate() {
        if b.cut_value() > candidates[best].1.cut_value() {
            best = i;
        }
    }
    let (method, chosen) = &candidates[best];
    report.cuts.best = chosen.cut_value();
    report.deletions = chosen.deletions();
    report.at_floor = report.deletions > 0 && report.deletions as u128 == (n * n / 9) as u128;

    let cert = DeletionCertificate::from_bipartition(chosen, *method, deletion_bound);
    assert!(
        within_n2_over_9(n, cert.len()),
        "bipartize produced {} deletions on a K4-free graph with n = {n}",
        cert.len()
    );
    assert!(
        cert.verify(g),
        "deletion certificate does not leave a bipartite graph"
    );
    Ok((cert, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::generators::{
        blowup, complete, complete_multipartite, cycle, random_k4free_process,
    };

    #[test]
    fn extremal_graphs_hit_the_bound() {
        let (cert, report) = bipartize(&complete_multipartite(&[3, 3, 3])).unwrap();
        assert_eq!(cert.len(), 9);
        assert!(report.at_floor);
        assert_eq!(report.t, int(2));
        assert_eq!(report.f_of_t, Some(ratio(1, 9)));
        assert_eq!(report.proof_branch, ProofBranch::Dense);
        assert!(report.violations().is_empty());

        let (cert, _) = bipartize(&complete_multipartite(&[6, 6, 6])).unwrap();
        assert_eq!(cert.len(), 36);
    }

    #[test]
    fn triangle_free_blowup() {
        let g = blowup(&cycle(5), 2).unwrap();
        let (cert, report) = bipartize(&g).unwrap();
        assert!(cert.len() <= 11);
        assert!(cert.verify(&g));
        assert_eq!(report.cuts.triangle_4partite, None);
        assert_eq!(report.proof_branch, ProofBranch::Sparse);
    }

    #[test]
    fn degenerate_inputs() {
        for g in [Graph::empty(0), Graph::empty(1), Graph::empty(6)] {
            let (cert, report) = bipartize(&g).unwrap();
            assert!(cert.is_empty());
            assert_eq!(report.proof_branch, ProofBranch::Degenerate);
            assert!(report.violations().is_empty());
        }
    }

    #[test]
    fn rejects_k4() {
        assert!(matches!(bipartize(&complete(4)), Err(Error::NotK4Free(_))));
    }

    #[test]
    fn reports_are_consistent_on_random_graphs() {
        for seed in 0..30 {
            let g = random_k4free_process(20, None, seed);
            let (cert, report) = bipartize(&g).unwrap();
            assert!(report.violations().is_empty(), "{:?}", report.violations());
            assert_eq!(cert.len(), report.deletions);
            assert!(report.cuts.best >= report.cuts.neighborhood);
            assert!(report.cuts.best >= report.cuts.k4free_refine);
        }
    }
}
