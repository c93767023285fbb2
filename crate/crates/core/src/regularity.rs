//! Pair densities, ε-regularity, reduced graphs, and bipartization of a graph
//! through a caller-supplied vertex partition.
//!
//! A pair `(A, B)` is ε-regular when every `X ⊆ A`, `Y ⊆ B` with
//! `|X| > ε|A|` and `|Y| > ε|B|` (strict) has `|d(X,Y) − d(A,B)| < ε`.
//! No partition-finding is done here; classes always come from the caller.

use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::cut::{bipartize, DeletionCertificate};
use crate::error::{Error, Result};
use crate::graph::{and_count, mask_of, Edge, Graph, Vertex};
use crate::rational::{int, Rational};
use crate::rng::SeededRng;

/// Exact checking enumerates subsets of `A`, so both sides are capped.
pub const EXACT_CLASS_LIMIT: usize = 16;
pub const DEFAULT_SAMPLES: usize = 1000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Partition {
    pub classes: Vec<Vec<Vertex>>,
    #[serde(with = "crate::rational")]
    pub epsilon: Rational,
    #[serde(with = "crate::rational")]
    pub delta: Rational,
}

impl Partition {
    pub fn new(classes: Vec<Vec<Vertex>>, epsilon: Rational, delta: Rational) -> Self {
        Partition {
            classes,
            epsilon,
            delta,
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::input(format!("partition JSON: {e}")))
    }

    pub fn k(&self) -> usize {
        self.classes.len()
    }

    /// Classes are nonempty, disjoint and cover `0..n`; `ε > 0`, `δ ≥ 0`.
    pub fn validate(&self, n: usize) -> Result<()> {
        if !self.epsilon.is_positive() {
            return Err(Error::input("epsilon must be positive"));
        }
        if self.delta.is_negative() {
            return Err(Error::input("delta must be non-negative"));
        }
        let mut seen = vec![false; n];
        for (i, class) in self.classes.iter().enumerate() {
            if class.is_empty() {
                return Err(Error::input(format!("class {i} is empty")));
            }
            for &v in class {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::Overlap(v));
                }
            }
        }
        match seen.iter().position(|s| !s) {
            Some(v) => Err(Error::input(format!("vertex {v} is in no class"))),
            None => Ok(()),
        }
    }

    /// Class sizes differ by at most one.
    pub fn is_equitable(&self) -> bool {
        let sizes = self.classes.iter().map(Vec::len);
        match (sizes.clone().min(), sizes.max()) {
            (Some(lo), Some(hi)) => hi - lo <= 1,
            _ => true,
        }
    }
}

fn check_pair(g: &Graph, a: &[Vertex], b: &[Vertex]) -> Result<()> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::input("density needs two nonempty sets"));
    }
    let mut seen = vec![false; g.n()];
    for &v in a.iter().chain(b) {
        if v >= g.n() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: g.n(),
            });
        }
        if std::mem::replace(&mut seen[v], true) {
            return Err(Error::Overlap(v));
        }
    }
    Ok(())
}

/// `e(A,B) / (|A||B|)` for disjoint nonempty sets.
pub fn density(g: &Graph, a: &[Vertex], b: &[Vertex]) -> Result<Rational> {
    check_pair(g, a, b)?;
    Ok(int(g.edges_between(a, b)) / int(a.len() * b.len()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Exact,
    Sampled { samples: usize, seed: u64 },
}

impl Mode {
    pub fn sampled(seed: u64) -> Self {
        Mode::Sampled {
            samples: DEFAULT_SAMPLES,
            seed,
        }
    }

    fn label(self) -> ModeLabel {
        match self {
            Mode::Exact => ModeLabel::Exact,
            Mode::Sampled { .. } => ModeLabel::Sampled,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ModeLabel {
    Exact,
    Sampled,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    /// Certified by exhaustive checking (or vacuously: no subsets qualify).
    Regular,
    /// No violation among the sampled subset pairs; not a certificate.
    SampledRegular,
    Irregular {
        x: Vec<Vertex>,
        y: Vec<Vertex>,
        #[serde(with = "crate::rational")]
        deviation: Rational,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairClassification {
    /// Class indices when the pair comes from a partition.
    pub pair: Option<(usize, usize)>,
    #[serde(with = "crate::rational")]
    pub density: Rational,
    #[serde(flatten)]
    pub verdict: Verdict,
    pub mode: ModeLabel,
}

impl PairClassification {
    /// Regular or sampled-regular.
    pub fn is_regular(&self) -> bool {
        !matches!(self.verdict, Verdict::Irregular { .. })
    }

    pub fn is_certified(&self) -> bool {
        !matches!(self.verdict, Verdict::SampledRegular)
    }
}

/// Smallest subset size strictly above `eps·size`.
fn min_qualifying(eps: &Rational, size: usize) -> usize {
    let bound = eps * int(size);
    let floor = bound.floor().to_integer();
    let floor: usize = num_traits::ToPrimitive::to_usize(&floor).unwrap_or(usize::MAX - 1);
    floor + 1
}

fn deviation(edges: usize, x: usize, y: usize, d: &Rational) -> Rational {
    (int(edges) / int(x * y) - d).abs()
}

/// Classifies `(A, B)` as ε-regular or not.
///
/// Exact mode runs over every qualifying `X ⊆ A` (ascending bitmask order
/// over `A`'s listing). For a fixed `X` and size `s`, `e(X,Y)` over `|Y| = s`
/// is extremal when `Y` takes the `s` vertices of `B` with the most or the
/// fewest neighbors in `X`, and the deviation is maximized at one of those
/// extremes, so checking them covers every `Y`. Sampled mode tests random
/// qualifying pairs and can only refute regularity.
pub fn is_epsilon_regular(
    g: &Graph,
    a: &[Vertex],
    b: &[Vertex],
    eps: &Rational,
    mode: Mode,
) -> Result<PairClassification> {
    check_pair(g, a, b)?;
    if !eps.is_positive() {
        return Err(Error::input("epsilon must be positive"));
    }
    let d = int(g.edges_between(a, b)) / int(a.len() * b.len());
    let (ka, kb) = (min_qualifying(eps, a.len()), min_qualifying(eps, b.len()));
    let classify = |verdict| PairClassification {
        pair: None,
        density: d.clone(),
        verdict,
        mode: mode.label(),
    };
    if ka > a.len() || kb > b.len() {
        return Ok(classify(Verdict::Regular));
    }
    let verdict = match mode {
        Mode::Exact => exact_verdict(g, a, b, eps, &d, ka, kb)?,
        Mode::Sampled { samples, seed } => sampled_verdict(g, a, b, eps, &d, ka, kb, samples, seed),
    };
    Ok(classify(verdict))
}

fn exact_verdict(
    g: &Graph,
    a: &[Vertex],
    b: &[Vertex],
    eps: &Rational,
    d: &Rational,
    ka: usize,
    kb: usize,
) -> Result<Verdict> {
    let largest = a.len().max(b.len());
    if largest > EXACT_CLASS_LIMIT {
        return Err(Error::Capacity {
            size: largest,
            limit: EXACT_CLASS_LIMIT,
        });
    }
    for code in 1u32..1 << a.len() {
        let xs = code.count_ones() as usize;
        if xs < ka {
            continue;
        }
        let x: Vec<Vertex> = (0..a.len())
            .filter(|&i| code >> i & 1 == 1)
            .map(|i| a[i])
            .collect();
        let x_mask = mask_of(g.n(), x.iter().copied());
        let into_x: Vec<usize> = b.iter().map(|&v| and_count(g.row(v), &x_mask)).collect();
        let mut most: Vec<usize> = (0..b.len()).collect();
        most.sort_by_key(|&i| (std::cmp::Reverse(into_x[i]), i));
        let mut fewest: Vec<usize> = (0..b.len()).collect();
        fewest.sort_by_key(|&i| (into_x[i], i));
        let (mut top, mut bottom) = (0usize, 0usize);
        for s in 1..=b.len() {
            top += into_x[most[s - 1]];
            bottom += into_x[fewest[s - 1]];
            if s < kb {
                continue;
            }
            for (sum, order) in [(top, &most), (bottom, &fewest)] {
                let dev = deviation(sum, xs, s, d);
                if &dev >= eps {
                    let mut y: Vec<Vertex> = order[..s].iter().map(|&i| b[i]).collect();
                    y.sort_unstable();
                    return Ok(Verdict::Irregular {
                        x,
                        y,
                        deviation: dev,
                    });
                }
            }
        }
    }
    Ok(Verdict::Regular)
}

#[allow(clippy::too_many_arguments)]
fn sampled_verdict(
    g: &Graph,
    a: &[Vertex],
    b: &[Vertex],
    eps: &Rational,
    d: &Rational,
    ka: usize,
    kb: usize,
    samples: usize,
    seed: u64,
) -> Verdict {
    let mut rng = SeededRng::new(seed);
    for _ in 0..samples {
        let xs = rng.range_inclusive(ka, a.len());
        let ys = rng.range_inclusive(kb, b.len());
        let x = rng.sample_subset(a, xs);
        let y = rng.sample_subset(b, ys);
        let dev = deviation(g.edges_between(&x, &y), xs, ys, d);
        if &dev >= eps {
            return Verdict::Irregular {
                x,
                y,
                deviation: dev,
            };
        }
    }
    Verdict::SampledRegular
}

/// Graph on the partition classes plus the classification of every pair.
#[derive(Debug, Clone, PartialEq)]
pub struct Reduction {
    pub graph: Graph,
    /// Pairs `(i, j)`, `i < j`, in lexicographic order.
    pub pairs: Vec<PairClassification>,
}

/// `(i, j)` is a reduced edge iff the pair is regular with density at least δ.
/// Sampled mode uses a per-pair seed derived from the mode's seed.
pub fn reduced_graph(g: &Graph, p: &Partition, mode: Mode) -> Result<Reduction> {
    p.validate(g.n())?;
    let k = p.k();
    let mut pairs = Vec::with_capacity(k * k.saturating_sub(1) / 2);
    let mut edges = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            let pair_mode = match mode {
                Mode::Exact => Mode::Exact,
                Mode::Sampled { samples, seed } => Mode::Sampled {
                    samples,
                    seed: SeededRng::fork_seed(seed, (i * k + j) as u64),
                },
            };
            let mut c = is_epsilon_regular(g, &p.classes[i], &p.classes[j], &p.epsilon, pair_mode)?;
            c.pair = Some((i, j));
            if c.is_regular() && c.density >= p.delta {
                edges.push((i, j));
            }
            pairs.push(c);
        }
    }
    Ok(Reduction {
        graph: Graph::from_edge_list(k, &edges)?,
        pairs,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DeletionBreakdown {
    pub intra_class: usize,
    pub irregular_pairs: usize,
    pub sparse_pairs: usize,
    pub reduced_certificate: usize,
}

impl DeletionBreakdown {
    pub fn total(&self) -> usize {
        self.intra_class + self.irregular_pairs + self.sparse_pairs + self.reduced_certificate
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RegularityReport {
    pub n: usize,
    pub k: usize,
    pub equitable: bool,
    /// False when any pair was only sampled.
    pub certified: bool,
    pub pairs: Vec<PairClassification>,
    pub reduced_edges: Vec<Edge>,
    pub reduced_certificate: DeletionCertificate,
    pub breakdown: DeletionBreakdown,
    pub certificate: DeletionCertificate,
    /// `(k²/9)·⌈n/k⌉² + εn² + δn²`.
    #[serde(with = "crate::rational")]
    pub accounting_bound: Rational,
    pub within_accounting_bound: bool,
}

/// Bipartizes `g` through the partition: drops intra-class edges, edges of
/// irregular pairs and of pairs with density below δ, bipartizes the reduced
/// graph, and drops every edge lying over a deleted reduced edge. The
/// surviving edges all run between reduced classes on opposite sides.
///
/// The reduced graph must be K4-free; that is the caller's assumption to
/// uphold and it is checked, not derived.
pub fn hfree_bipartize(g: &Graph, p: &Partition, mode: Mode) -> Result<RegularityReport> {
    let reduction = reduced_graph(g, p, mode)?;
    if let Some(q) = reduction.graph.find_k4() {
        return Err(Error::ReducedGraphNotK4Free(q));
    }
    let (reduced_cert, _) = bipartize(&reduction.graph)?;
    let (n, k) = (g.n(), p.k());

    let mut class_of = vec![0usize; n];
    for (i, class) in p.classes.iter().enumerate() {
        for &v in class {
            class_of[v] = i;
        }
    }
    let mut pair_state = vec![vec![PairState::Kept; k]; k];
    for c in &reduction.pairs {
        let (i, j) = c.pair.expect("partition pairs carry indices");
        let state = if !c.is_regular() {
            PairState::Irregular
        } else if c.density < p.delta {
            PairState::Sparse
        } else {
            PairState::Kept
        };
        pair_state[i][j] = state;
        pair_state[j][i] = state;
    }
    for &(i, j) in &reduced_cert.edges {
        pair_state[i][j] = PairState::InCertificate;
        pair_state[j][i] = PairState::InCertificate;
    }

    let mut breakdown = DeletionBreakdown {
        intra_class: 0,
        irregular_pairs: 0,
        sparse_pairs: 0,
        reduced_certificate: 0,
    };
    let mut deleted = Vec::new();
    for (u, v) in g.edges() {
        let (i, j) = (class_of[u], class_of[v]);
        let counter = if i == j {
            &mut breakdown.intra_class
        } else {
            match pair_state[i][j] {
                PairState::Kept => continue,
                PairState::Irregular => &mut breakdown.irregular_pairs,
                PairState::Sparse => &mut breakdown.sparse_pairs,
                PairState::InCertificate => &mut breakdown.reduced_certificate,
            }
        };
        *counter += 1;
        deleted.push((u, v));
    }

    let ceil = int(n.div_ceil(k.max(1)));
    let n2 = int(n * n);
    let accounting_bound = int(k * k) / int(9) * &ceil * &ceil + &p.epsilon * &n2 + &p.delta * &n2;
    let certificate = DeletionCertificate {
        edges: deleted,
        method: reduced_cert.method,
        claimed_bound: accounting_bound.clone(),
    };
    assert!(
        certificate.verify(g),
        "lifted certificate does not leave a bipartite graph"
    );
    let within = int(certificate.len()) <= accounting_bound;

    Ok(RegularityReport {
        n,
        k,
        equitable: p.is_equitable(),
        certified: reduction.pairs.iter().all(PairClassification::is_certified),
        reduced_edges: reduction.graph.edges(),
        pairs: reduction.pairs,
        reduced_certificate: reduced_cert,
        breakdown,
        certificate,
        accounting_bound,
        within_accounting_bound: within,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum PairState {
    Kept,
    Irregular,
    Sparse,
    InCertificate,
}
