//! Seeded property suites with JSON reports, and the regular-graph split check.
//!
//! Each suite draws its random instances from per-trial seeds derived from
//! the configured seed, runs every check sequentially in trial order and
//! records failures as replayable counterexamples. A panic inside a check is
//! caught and reported as a failure of that check.

use std::fmt;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::str::FromStr;

use serde::Serialize;

use crate::cut::bounds::{
    codegree_holds, four_partite_holds, k4free_bound, k4free_holds, neighborhood_bound,
    neighborhood_holds, sparse_deletion_rate, technical_f, technical_g, technical_identity_holds,
    within_n2_over_9,
};
use crate::cut::{
    best_codegree_triangle, bipartize, k4free_cut, neighborhood_cut, triangle_4partite_cut,
};
use crate::edgelist;
use crate::error::{Error, Result};
use crate::generators::{
    blowup, complete, complete_multipartite, contiguous_classes, cycle, petersen, random_k4free,
    random_k4free_process, random_regular, Family, GeneratorSpec,
};
use crate::graph::{Graph, Vertex};
use crate::oracle::{
    canonical_code, exact_max_cut, exhaustive_theorem_sweep, SweepReport, SWEEP_LIMIT,
};
use crate::rational::{int, ratio};
use crate::regularity::{density, hfree_bipartize, Mode, Partition};
use crate::rng::SeededRng;

/// Oracle checks are only run up to this size.
pub const ORACLE_MAX_N: usize = 20;
/// Stored counterexamples per property; the failure count is always exact.
pub const MAX_COUNTEREXAMPLES: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SuiteKind {
    Lemmas,
    Theorem,
    OracleEquivalence,
    Exhaustive,
    Technical,
    Regularity,
    RegularSplit,
}

impl SuiteKind {
    pub const ALL: [SuiteKind; 7] = [
        SuiteKind::Lemmas,
        SuiteKind::Theorem,
        SuiteKind::OracleEquivalence,
        SuiteKind::Exhaustive,
        SuiteKind::Technical,
        SuiteKind::Regularity,
        SuiteKind::RegularSplit,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SuiteKind::Lemmas => "lemmas",
            SuiteKind::Theorem => "theorem",
            SuiteKind::OracleEquivalence => "oracle_equivalence",
            SuiteKind::Exhaustive => "exhaustive",
            SuiteKind::Technical => "technical",
            SuiteKind::Regularity => "regularity",
            SuiteKind::RegularSplit => "regular_split",
        }
    }

    /// Default vertex-count range for random instances.
    pub fn default_sizes(self) -> (usize, usize) {
        match self {
            SuiteKind::Lemmas | SuiteKind::Theorem => (5, 40),
            SuiteKind::OracleEquivalence => (4, ORACLE_MAX_N),
            SuiteKind::Exhaustive => (3, 6),
            SuiteKind::Technical => (0, 0),
            SuiteKind::Regularity => (3, 6),
            SuiteKind::RegularSplit => (4, 20),
        }
    }
}

impl fmt::Display for SuiteKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SuiteKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SuiteKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| Error::input(format!("unknown suite {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteConfig {
    pub suite: SuiteKind,
    pub trials: u64,
    pub seed: u64,
    /// Inclusive vertex-count range for random instances. For the exhaustive
    /// suite it is the range of `n` swept; for the regularity suite it is
    /// the size of the random base graph.
    pub min_n: usize,
    pub max_n: usize,
}

impl SuiteConfig {
    pub fn new(suite: SuiteKind, trials: u64, seed: u64) -> Self {
        let (min_n, max_n) = suite.default_sizes();
        SuiteConfig {
            suite,
            trials,
            seed,
            min_n,
            max_n,
        }
    }

    pub fn with_sizes(mut self, min_n: usize, max_n: usize) -> Self {
        self.min_n = min_n;
        self.max_n = max_n;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(Error::input("trials must be at least 1"));
        }
        if self.min_n > self.max_n {
            return Err(Error::input(format!(
                "empty size range {}..={}",
                self.min_n, self.max_n
            )));
        }
        match self.suite {
            SuiteKind::Exhaustive if self.max_n > SWEEP_LIMIT => Err(Error::Capacity {
                size: self.max_n,
                limit: SWEEP_LIMIT,
            }),
            SuiteKind::OracleEquivalence if self.max_n > ORACLE_MAX_N => Err(Error::Capacity {
                size: self.max_n,
                limit: ORACLE_MAX_N,
            }),
            SuiteKind::RegularSplit if self.max_n < 4 || self.min_n.max(4) > self.max_n => Err(
                Error::input("regular_split needs an even size of at least 4 in range"),
            ),
            SuiteKind::Regularity if self.min_n == 0 => {
                Err(Error::input("regularity base graphs need n >= 1"))
            }
            _ => Ok(()),
        }
    }
}

/// A failing instance, with enough information to rebuild it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    /// Generator description or fixture name.
    pub instance: String,
    pub trial: Option<u64>,
    pub seed: Option<u64>,
    /// The graph in edge-list format.
    pub edge_list: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyResult {
    pub name: String,
    pub checked: u64,
    pub failures: u64,
    pub counterexamples: Vec<Counterexample>,
}

impl PropertyResult {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub config: SuiteConfig,
    pub instances: u64,
    pub passed: bool,
    pub properties: Vec<PropertyResult>,
    /// Sweep summaries, present only for the exhaustive suite.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub sweeps: Vec<SweepReport>,
}

impl SuiteReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn property(&self, name: &str) -> Option<&PropertyResult> {
        self.properties.iter().find(|p| p.name == name)
    }

    pub fn failures(&self) -> u64 {
        self.properties.iter().map(|p| p.failures).sum()
    }
}

struct Instance {
    label: String,
    trial: Option<u64>,
    seed: Option<u64>,
    graph: Graph,
}

/// Property results in first-recorded order.
#[derive(Default)]
struct Recorder {
    props: Vec<PropertyResult>,
}

impl Recorder {
    fn declare(&mut self, names: &[&str]) {
        for name in names {
            self.slot(name);
        }
    }

    fn slot(&mut self, name: &str) -> &mut PropertyResult {
        let i = match self.props.iter().position(|p| p.name == name) {
            Some(i) => i,
            None => {
                self.props.push(PropertyResult {
                    name: name.to_string(),
                    checked: 0,
                    failures: 0,
                    counterexamples: Vec::new(),
                });
                self.props.len() - 1
            }
        };
        &mut self.props[i]
    }

    /// Runs `check` and records the outcome; `Err` carries the failure detail.
    fn check(
        &mut self,
        name: &str,
        inst: &Instance,
        check: impl FnOnce() -> std::result::Result<(), String>,
    ) {
        let outcome = match catch_unwind(AssertUnwindSafe(check)) {
            Ok(r) => r,
            Err(payload) => Err(panic_message(payload)),
        };
        let slot = self.slot(name);
        slot.checked += 1;
        if let Err(detail) = outcome {
            slot.failures += 1;
            if slot.counterexamples.len() < MAX_COUNTEREXAMPLES {
                slot.counterexamples.push(Counterexample {
                    instance: inst.label.clone(),
                    trial: inst.trial,
                    seed: inst.seed,
                    edge_list: edgelist::write(&inst.graph),
                    detail,
                });
            }
        }
    }
}

fn panic_message(payload: Box<dyn std::any::Any + Send>) -> String {
    let msg = payload
        .downcast_ref::<String>()
        .cloned()
        .or_else(|| payload.downcast_ref::<&str>().map(|s| s.to_string()))
        .unwrap_or_else(|| "non-string panic".to_string());
    format!("panicked: {msg}")
}

fn ensure(ok: bool, detail: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(detail())
    }
}

fn fixture(label: &str, graph: Graph) -> Instance {
    Instance {
        label: label.to_string(),
        trial: None,
        seed: None,
        graph,
    }
}

/// K4-free fixtures: extremal Turán graphs, odd cycles and their blow-ups,
/// the Petersen graph, a triangle, and an edgeless graph.
pub fn k4free_fixtures() -> Vec<(String, Graph)> {
    let b = |base: &Graph, t| blowup(base, t).expect("t > 0");
    vec![
        ("K3".into(), complete(3)),
        ("K222".into(), complete_multipartite(&[2, 2, 2])),
        ("K333".into(), complete_multipartite(&[3, 3, 3])),
        ("K444".into(), complete_multipartite(&[4, 4, 4])),
        ("K666".into(), complete_multipartite(&[6, 6, 6])),
        ("K235".into(), complete_multipartite(&[2, 3, 5])),
        ("C5".into(), cycle(5)),
        ("C7".into(), cycle(7)),
        ("blowup(C5,2)".into(), b(&cycle(5), 2)),
        ("blowup(C5,3)".into(), b(&cycle(5), 3)),
        ("blowup(K3,4)".into(), b(&complete(3), 4)),
        ("petersen".into(), petersen()),
        ("empty5".into(), Graph::empty(5)),
    ]
}

/// One random K4-free graph for a trial, from a family chosen by the seed.
fn random_instance(trial: u64, seed: u64, min_n: usize, max_n: usize) -> Instance {
    let mut rng = SeededRng::new(seed);
    let n = rng.range_inclusive(min_n, max_n);
    let graph_seed = rng.next_u64();
    let (family, label) = match rng.below(3) {
        0 => {
            let target = (rng.below(2) == 0).then(|| rng.range_inclusive(0, n * n / 3));
            (
                Family::RandomK4freeProcess {
                    n,
                    target_edges: target,
                },
                format!("random_k4free_process n={n} target={target:?}"),
            )
        }
        1 => {
            let p = 0.2 + 0.8 * rng.unit();
            (
                Family::RandomTripartite { n, p },
                format!("random_tripartite n={n} p={p}"),
            )
        }
        _ => {
            let p = 0.1 + 0.8 * rng.unit();
            (
                Family::RandomGnp { n, p },
                format!("random_gnp(k4free) n={n} p={p}"),
            )
        }
    };
    let graph = random_k4free(&GeneratorSpec::new(family, graph_seed))
        .expect("random families are K4-free");
    Instance {
        label: format!("{label} graph_seed={graph_seed}"),
        trial: Some(trial),
        seed: Some(seed),
        graph,
    }
}

fn random_instances(cfg: &SuiteConfig) -> impl Iterator<Item = Instance> + '_ {
    (0..cfg.trials)
        .map(move |t| random_instance(t, SeededRng::fork_seed(cfg.seed, t), cfg.min_n, cfg.max_n))
}

fn k4free_instances(cfg: &SuiteConfig, max_fixture_n: usize) -> Vec<Instance> {
    let mut out: Vec<Instance> = random_instances(cfg).collect();
    out.extend(
        k4free_fixtures()
            .into_iter()
            .filter(|(_, g)| g.n() <= max_fixture_n)
            .map(|(l, g)| fixture(&l, g)),
    );
    out
}

/// Runs one suite. Configuration problems are errors; property failures are
/// report content.
pub fn run_suite(cfg: &SuiteConfig) -> Result<SuiteReport> {
    cfg.validate()?;
    let mut rec = Recorder::default();
    let mut sweeps = Vec::new();
    let instances = match cfg.suite {
        SuiteKind::Lemmas => lemmas_suite(cfg, &mut rec),
        SuiteKind::Theorem => theorem_suite(cfg, &mut rec),
        SuiteKind::OracleEquivalence => oracle_suite(cfg, &mut rec),
        SuiteKind::Exhaustive => exhaustive_suite(cfg, &mut rec, &mut sweeps),
        SuiteKind::Technical => technical_suite(&mut rec),
        SuiteKind::Regularity => regularity_suite(cfg, &mut rec),
        SuiteKind::RegularSplit => regular_split_suite(cfg, &mut rec),
    };
    let passed = rec.props.iter().all(PropertyResult::passed);
    Ok(SuiteReport {
        config: cfg.clone(),
        instances,
        passed,
        properties: rec.props,
        sweeps,
    })
}

fn lemmas_suite(cfg: &SuiteConfig, rec: &mut Recorder) -> u64 {
    rec.declare(&[
        "four_partite_cut",
        "codegree_triangle",
        "neighborhood_cut",
        "k4free_cut",
    ]);
    let instances = k4free_instances(cfg, usize::MAX);
    for inst in &instances {
        let g = &inst.graph;
        let (n, e, m) = (g.n(), g.edge_count(), g.triangle_count());
        if m > 0 {
            rec.check("four_partite_cut", inst, || {
                let (p, b) = triangle_4partite_cut(g).map_err(|e| e.to_string())?;
                let e_x = g.edges_within(&p.x);
                ensure(
                    b.verify(g) && four_partite_holds(b.cut_value(), e, e_x),
                    || format!("cut {} with e = {e}, e(X) = {e_x}", b.cut_value()),
                )
            });
            rec.check("codegree_triangle", inst, || {
                let (t, sum) = best_codegree_triangle(g).map_err(|e| e.to_string())?;
                ensure(codegree_holds(e, sum, m), || {
                    format!("triangle {t:?} sum {sum} with e = {e}, m = {m}")
                })
            });
        }
        rec.check("neighborhood_cut", inst, || {
            let b = neighborhood_cut(g);
            ensure(
                b.verify(g) && neighborhood_holds(n, e, m, b.cut_value()),
                || format!("cut {}", b.cut_value()),
            )
        });
        rec.check("k4free_cut", inst, || {
            let b = k4free_cut(g).map_err(|e| e.to_string())?;
            ensure(b.verify(g) && k4free_holds(n, e, b.cut_value()), || {
                format!("cut {}", b.cut_value())
            })
        });
    }
    instances.len() as u64
}

fn theorem_suite(cfg: &SuiteConfig, rec: &mut Recorder) -> u64 {
    rec.declare(&[
        "deletions_at_most_n2_over_9",
        "certificate_bipartite",
        "report_consistent",
    ]);
    let instances = k4free_instances(cfg, usize::MAX);
    for inst in &instances {
        let g = &inst.graph;
        let outcome = catch_unwind(AssertUnwindSafe(|| bipartize(g)));
        let result = match outcome {
            Ok(Ok(r)) => Ok(r),
            Ok(Err(e)) => Err(e.to_string()),
            Err(p) => Err(panic_message(p)),
        };
        let (cert, report) = match result {
            Ok(r) => r,
            Err(msg) => {
                for name in [
                    "deletions_at_most_n2_over_9",
                    "certificate_bipartite",
                    "report_consistent",
                ] {
                    rec.check(name, inst, || Err(msg.clone()));
                }
                continue;
            }
        };
        rec.check("deletions_at_most_n2_over_9", inst, || {
            ensure(within_n2_over_9(g.n(), cert.len()), || {
                format!("{} deletions, n = {}", cert.len(), g.n())
            })
        });
        rec.check("certificate_bipartite", inst, || {
            ensure(cert.verify(g), || "remainder not bipartite".into())
        });
        rec.check("report_consistent", inst, || {
            let v = report.violations();
            ensure(v.is_empty(), || v.join("; "))
        });
    }
    instances.len() as u64
}

fn oracle_suite(cfg: &SuiteConfig, rec: &mut Recorder) -> u64 {
    rec.declare(&[
        "best_cut_at_most_max_cut",
        "oracle_within_n2_over_9",
        "oracle_witness_valid",
    ]);
    let instances = k4free_instances(cfg, ORACLE_MAX_N);
    for inst in &instances {
        let g = &inst.graph;
        let oracle = match exact_max_cut(g, ORACLE_MAX_N) {
            Ok(o) => o,
            Err(e) => {
                rec.check("oracle_witness_valid", inst, || Err(e.to_string()));
                continue;
            }
        };
        rec.check("best_cut_at_most_max_cut", inst, || {
            let (_, report) = bipartize(g).map_err(|e| e.to_string())?;
            ensure(report.cuts.best <= oracle.max_cut, || {
                format!(
                    "best cut {} exceeds oracle {}",
                    report.cuts.best, oracle.max_cut
                )
            })
        });
        rec.check("oracle_within_n2_over_9", inst, || {
            ensure(within_n2_over_9(g.n(), oracle.min_deletions), || {
                format!("{} deletions", oracle.min_deletions)
            })
        });
        rec.check("oracle_witness_valid", inst, || {
            ensure(
                oracle.witness.verify(g) && oracle.witness.cut_value() == oracle.max_cut,
                || "bad witness".into(),
            )
        });
    }
    instances.len() as u64
}

fn exhaustive_suite(cfg: &SuiteConfig, rec: &mut Recorder, sweeps: &mut Vec<SweepReport>) -> u64 {
    rec.declare(&["sweep_within_n2_over_9"]);
    let mut graphs = 0;
    for n in cfg.min_n..=cfg.max_n {
        let inst = fixture(
            &format!("all labeled graphs on {n} vertices"),
            Graph::empty(n),
        );
        let report = match exhaustive_theorem_sweep(n) {
            Ok(r) => r,
            Err(e) => {
                rec.check("sweep_within_n2_over_9", &inst, || Err(e.to_string()));
                continue;
            }
        };
        graphs += report.graphs;
        rec.check("sweep_within_n2_over_9", &inst, || {
            ensure(report.violations == 0, || {
                format!("{} violating graphs", report.violations)
            })
        });
        if n == 6 {
            let octahedron = complete_multipartite(&[2, 2, 2]);
            let inst = fixture("K222", octahedron.clone());
            rec.check("n6_unique_extremal_k222", &inst, || {
                let unique = report.extremal_classes.len() == 1
                    && canonical_code(6, &report.extremal_classes[0])
                        == canonical_code(6, &octahedron.edges());
                ensure(report.max_min_deletions == 4 && unique, || {
                    format!(
                        "max {} over {} classes",
                        report.max_min_deletions,
                        report.extremal_classes.len()
                    )
                })
            });
        }
        sweeps.push(report);
    }
    graphs
}

/// Grid `t = 3/2 + k/1000`, `k = 0..=500`.
pub fn technical_grid() -> impl Iterator<Item = crate::Rational> {
    (0..=500).map(|k| ratio(3, 2) + ratio(k, 1000))
}

fn technical_suite(rec: &mut Recorder) -> u64 {
    let none = fixture("technical grid", Graph::empty(0));
    let mut points = 0;
    for t in technical_grid() {
        points += 1;
        let at = format!("t = {t}");
        rec.check("f_at_most_one_ninth", &none, || {
            let f = technical_f(&t).map_err(|e| e.to_string())?;
            ensure(f <= ratio(1, 9), || format!("f = {f} at {at}"))
        });
        rec.check("equality_only_at_two", &none, || {
            let f = technical_f(&t).map_err(|e| e.to_string())?;
            ensure((f == ratio(1, 9)) == (t == int(2)), || {
                format!("f = {f} at {at}")
            })
        });
        rec.check("g_positive", &none, || {
            let g = technical_g(&t).map_err(|e| e.to_string())?;
            ensure(g > int(0), || format!("g = {g} at {at}"))
        });
        rec.check("factorization_identity", &none, || {
            ensure(
                technical_identity_holds(&t).map_err(|e| e.to_string())?,
                || at.clone(),
            )
        });
    }
    rec.check("reference_values", &none, || {
        let f2 = technical_f(&int(2)).map_err(|e| e.to_string())?;
        let g32 = technical_g(&ratio(3, 2)).map_err(|e| e.to_string())?;
        let h = sparse_deletion_rate(&ratio(1, 4));
        ensure(
            f2 == ratio(1, 9) && g32 == ratio(1, 4) && h == ratio(3, 28),
            || format!("f(2) = {f2}, g(3/2) = {g32}, h(1/4) = {h}"),
        )
    });
    let k333 = complete_multipartite(&[3, 3, 3]);
    rec.check("k333_tightness", &fixture("K333", k333.clone()), || {
        let (n, e, m) = (9, 27, k333.triangle_count());
        let nb = neighborhood_bound(n, e, m);
        let kb = k4free_bound(n, e);
        let oracle = exact_max_cut(&k333, ORACLE_MAX_N).map_err(|e| e.to_string())?;
        let cuts = (
            neighborhood_cut(&k333).cut_value(),
            k4free_cut(&k333).map_err(|e| e.to_string())?.cut_value(),
        );
        ensure(
            nb == int(18) && kb == int(18) && oracle.max_cut == 18 && cuts == (18, 18),
            || {
                format!(
                    "bounds {nb}, {kb}; cuts {cuts:?}; max cut {}",
                    oracle.max_cut
                )
            },
        )
    });
    points
}

fn regularity_suite(cfg: &SuiteConfig, rec: &mut Recorder) -> u64 {
    rec.declare(&[
        "remainder_bipartite",
        "within_accounting_bound",
        "reduced_graph_is_base",
        "density_symmetric",
    ]);
    let eps = ratio(1, 10);
    let delta = ratio(1, 2);
    let mut cases: Vec<(Instance, Graph, usize)> = Vec::new();
    for trial in 0..cfg.trials {
        let seed = SeededRng::fork_seed(cfg.seed, trial);
        let mut rng = SeededRng::new(seed);
        let k = rng.range_inclusive(cfg.min_n, cfg.max_n);
        let t = rng.range_inclusive(1, 4);
        let base_seed = rng.next_u64();
        let base = random_k4free_process(k, None, base_seed);
        let graph = blowup(&base, t).expect("t > 0");
        let label = format!("blowup(random_k4free_process n={k} seed={base_seed}, {t})");
        cases.push((
            Instance {
                label,
                trial: Some(trial),
                seed: Some(seed),
                graph,
            },
            base,
            t,
        ));
    }
    for (name, base, t) in [
        ("blowup(K3,4)", complete(3), 4),
        ("blowup(C5,2)", cycle(5), 2),
        ("blowup(C5,3)", cycle(5), 3),
    ] {
        cases.push((fixture(name, blowup(&base, t).expect("t > 0")), base, t));
    }
    for (inst, base, t) in &cases {
        let g = &inst.graph;
        let sizes = vec![*t; base.n()];
        let p = Partition::new(contiguous_classes(&sizes), eps.clone(), delta.clone());
        let report = match hfree_bipartize(g, &p, Mode::Exact) {
            Ok(r) => r,
            Err(e) => {
                rec.check("remainder_bipartite", inst, || Err(e.to_string()));
                continue;
            }
        };
        rec.check("remainder_bipartite", inst, || {
            ensure(report.certificate.verify(g), || "not bipartite".into())
        });
        rec.check("within_accounting_bound", inst, || {
            ensure(report.within_accounting_bound, || {
                format!(
                    "{} deletions over bound {}",
                    report.certificate.len(),
                    report.accounting_bound
                )
            })
        });
        rec.check("reduced_graph_is_base", inst, || {
            ensure(report.reduced_edges == base.edges(), || {
                format!("reduced edges {:?}", report.reduced_edges)
            })
        });
        rec.check("density_symmetric", inst, || {
            for (i, a) in p.classes.iter().enumerate() {
                for b in &p.classes[i + 1..] {
                    let (ab, ba) = (density(g, a, b), density(g, b, a));
                    if ab != ba {
                        return Err(format!("d(A,B) = {ab:?}, d(B,A) = {ba:?}"));
                    }
                }
            }
            Ok(())
        });
    }
    cases.len() as u64
}

/// Counts from a split of a regular graph into two halves.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SplitCheck {
    pub degree: usize,
    pub e_s: usize,
    pub e_complement: usize,
    pub e_cross: usize,
    /// Removing the `e(S) + e(S̄)` edges inside the halves leaves a bipartite graph.
    pub remainder_bipartite: bool,
}

impl SplitCheck {
    pub fn holds(&self) -> bool {
        self.e_s == self.e_complement && self.remainder_bipartite
    }
}

/// For a `d`-regular graph and a half-set `S`, `dn/2 = Σ_S d(s) = 2e(S) + e(S,S̄)`,
/// and the same for `S̄`, so `e(S) = e(S̄)`. Both sides are counted directly.
pub fn regular_split_check(g: &Graph, s: &[Vertex]) -> Result<SplitCheck> {
    let n = g.n();
    let Some(degree) = g.is_regular() else {
        return Err(Error::Precondition("graph is not regular".into()));
    };
    if n % 2 == 1 {
        return Err(Error::Precondition(format!("n = {n} is odd")));
    }
    if s.len() != n / 2 {
        return Err(Error::Precondition(format!(
            "|S| = {} but n/2 = {}",
            s.len(),
            n / 2
        )));
    }
    let mut in_s = vec![false; n];
    for &v in s {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        if std::mem::replace(&mut in_s[v], true) {
            return Err(Error::Overlap(v));
        }
    }
    let complement: Vec<Vertex> = (0..n).filter(|&v| !in_s[v]).collect();
    let e_s = g.edges_within(s);
    let e_complement = g.edges_within(&complement);
    let e_cross = g.edges_between(s, &complement);
    let internal: Vec<_> = g
        .edges()
        .into_iter()
        .filter(|&(u, v)| in_s[u] == in_s[v])
        .collect();
    let remainder_bipartite = g.without_edges(&internal).is_bipartite();
    Ok(SplitCheck {
        degree,
        e_s,
        e_complement,
        e_cross,
        remainder_bipartite,
    })
}

fn regular_split_suite(cfg: &SuiteConfig, rec: &mut Recorder) -> u64 {
    rec.declare(&["split_identity", "degree_sum"]);
    let evens: Vec<usize> = (cfg.min_n.max(4)..=cfg.max_n)
        .filter(|n| n % 2 == 0)
        .collect();
    let mut cases: Vec<(Instance, Vec<Vertex>)> = Vec::new();
    for trial in 0..cfg.trials {
        let seed = SeededRng::fork_seed(cfg.seed, trial);
        let mut rng = SeededRng::new(seed);
        let n = evens[rng.below_usize(evens.len())];
        let graph_seed = rng.next_u64();
        let graph = random_regular(n, graph_seed).expect("n >= 4");
        let all: Vec<Vertex> = (0..n).collect();
        let s = rng.sample_subset(&all, n / 2);
        let label = format!("random_regular n={n} seed={graph_seed}, S={s:?}");
        cases.push((
            Instance {
                label,
                trial: Some(trial),
                seed: Some(seed),
                graph,
            },
            s,
        ));
    }
    cases.push((fixture("C6, alternating S", cycle(6)), vec![0, 2, 4]));
    cases.push((
        fixture("K222, S = part plus one", complete_multipartite(&[2, 2, 2])),
        vec![0, 1, 2],
    ));
    cases.push((
        fixture("petersen, S = outer cycle", petersen()),
        vec![0, 1, 2, 3, 4],
    ));
    for (inst, s) in &cases {
        let g = &inst.graph;
        let check = regular_split_check(g, s);
        rec.check("split_identity", inst, || {
            let c = check.as_ref().map_err(|e| e.to_string())?;
            ensure(c.holds(), || format!("{c:?}"))
        });
        rec.check("degree_sum", inst, || {
            let c = check.as_ref().map_err(|e| e.to_string())?;
            ensure(c.degree * g.n() == 2 * (2 * c.e_s + c.e_cross), || {
                format!("{c:?}")
            })
        });
    }
    cases.len() as u64
}
