//! Acceptance criteria, one line each. Every comparison is exact: integer or
//! rational equality and inequality, no floating-point tolerance anywhere.

use std::process::ExitCode;
use std::time::Instant;

use k4bip_core::cut::bounds::{k4free_bound, neighborhood_bound, sparse_deletion_rate};
use k4bip_core::cut::{bipartize, k4free_cut, neighborhood_cut};
use k4bip_core::generators::{blowup, complete, complete_multipartite, contiguous_classes};
use k4bip_core::harness::{run_suite, SuiteConfig, SuiteKind};
use k4bip_core::oracle::exact_max_cut;
use k4bip_core::rational::{int, ratio};
use k4bip_core::regularity::{hfree_bipartize, Mode, Partition};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn suite(
    kind: SuiteKind,
    trials: u64,
    seed: u64,
    sizes: (usize, usize),
) -> Result<k4bip_core::harness::SuiteReport, String> {
    run_suite(&SuiteConfig::new(kind, trials, seed).with_sizes(sizes.0, sizes.1))
        .map_err(|e| e.to_string())
}

fn suite_outcome(report: &k4bip_core::harness::SuiteReport, required: &[&str]) -> Outcome {
    for name in required {
        match report.property(name) {
            Some(p) if p.checked > 0 => {}
            _ => return Err(format!("property {name} was never checked")),
        }
    }
    let summary = report
        .properties
        .iter()
        .map(|p| format!("{} {}/{}", p.name, p.checked - p.failures, p.checked))
        .collect::<Vec<_>>()
        .join(", ");
    if report.passed {
        Ok(format!("{} instances; {summary}", report.instances))
    } else {
        Err(format!("{summary}\n{}", report.to_json()))
    }
}

fn extremal_reproduction() -> Outcome {
    let mut seen = Vec::new();
    for t in 2..=6usize {
        let n = 3 * t;
        let g = complete_multipartite(&[t, t, t]);
        let expected = n * n / 9;
        let (cert, _) = bipartize(&g).map_err(|e| e.to_string())?;
        let oracle = exact_max_cut(&g, 18).map_err(|e| e.to_string())?;
        if cert.len() != expected || oracle.min_deletions != expected || 9 * expected != n * n {
            return Err(format!(
                "n = {n}: bipartize {}, oracle {}, n²/9 = {expected}",
                cert.len(),
                oracle.min_deletions
            ));
        }
        seen.push(format!("n={n}:{expected}"));
    }
    Ok(format!(
        "deletions = oracle minimum = n²/9 for {}",
        seen.join(" ")
    ))
}

fn cut_inequality_suite() -> Outcome {
    let r = suite(SuiteKind::Lemmas, 200, 42, (5, 40))?;
    suite_outcome(
        &r,
        &[
            "four_partite_cut",
            "codegree_triangle",
            "neighborhood_cut",
            "k4free_cut",
        ],
    )
}

fn oracle_equivalence() -> Outcome {
    let r = suite(SuiteKind::OracleEquivalence, 200, 42, (5, 20))?;
    suite_outcome(
        &r,
        &[
            "best_cut_at_most_max_cut",
            "oracle_within_n2_over_9",
            "oracle_witness_valid",
        ],
    )
}

fn exhaustive_sweep() -> Outcome {
    let r = suite(SuiteKind::Exhaustive, 1, 0, (6, 7))?;
    let n7 = r.sweeps.iter().find(|s| s.n == 7).ok_or("no n = 7 sweep")?;
    if n7.graphs != 1 << 21 {
        return Err(format!("n = 7 swept {} graphs", n7.graphs));
    }
    suite_outcome(&r, &["sweep_within_n2_over_9", "n6_unique_extremal_k222"]).map(|s| {
        format!(
            "{s}; n=7: {} K4-free, max min deletions {}",
            n7.k4_free, n7.max_min_deletions
        )
    })
}

fn technical_grid_criterion() -> Outcome {
    let r = suite(SuiteKind::Technical, 1, 0, (0, 0))?;
    match r.property("factorization_identity") {
        Some(p) if p.checked == 501 => {}
        other => return Err(format!("grid not fully checked: {other:?}")),
    }
    suite_outcome(
        &r,
        &[
            "f_at_most_one_ninth",
            "equality_only_at_two",
            "factorization_identity",
            "reference_values",
        ],
    )
}

fn tightness() -> Outcome {
    let g = complete_multipartite(&[3, 3, 3]);
    let (n, e, m) = (g.n(), g.edge_count(), g.triangle_count());
    let nb = neighborhood_bound(n, e, m);
    let kb = k4free_bound(n, e);
    let nc = neighborhood_cut(&g).cut_value();
    let kc = k4free_cut(&g).map_err(|e| e.to_string())?.cut_value();
    let h = sparse_deletion_rate(&ratio(1, 4));
    if nb == int(18) && kb == int(18) && nc == 18 && kc == 18 && h == ratio(3, 28) {
        Ok(format!("K333: neighborhood bound {nb} = cut {nc}, K4-free bound {kb} = cut {kc}; rate at 1/4 = {h}"))
    } else {
        Err(format!("bounds {nb}, {kb}; cuts {nc}, {kc}; rate {h}"))
    }
}

fn regularity_pipeline() -> Outcome {
    let g = blowup(&complete(3), 4).map_err(|e| e.to_string())?;
    let p = Partition::new(contiguous_classes(&[4, 4, 4]), ratio(1, 10), ratio(1, 2));
    let r = hfree_bipartize(&g, &p, Mode::Exact).map_err(|e| e.to_string())?;
    // (9/9)·4² + 144/10 + 144/2
    let bound = int(16) + ratio(144, 10) + ratio(144, 2);
    let size = r.certificate.len();
    if r.accounting_bound == bound && r.certificate.verify(&g) && int(size) <= bound && r.certified
    {
        Ok(format!(
            "{size} deletions, remainder bipartite, bound {bound}"
        ))
    } else {
        Err(format!(
            "{size} deletions, bound {} (expected {bound})",
            r.accounting_bound
        ))
    }
}

fn regular_split() -> Outcome {
    let r = suite(SuiteKind::RegularSplit, 50, 42, (4, 20))?;
    let random = r
        .property("split_identity")
        .map_or(0, |p| p.checked)
        .saturating_sub(3);
    if random != 50 {
        return Err(format!("{random} random instances checked"));
    }
    suite_outcome(&r, &["split_identity", "degree_sum"])
}

fn determinism() -> Outcome {
    let mut checked = Vec::new();
    for kind in SuiteKind::ALL {
        let (trials, sizes) = match kind {
            SuiteKind::Exhaustive => (1, (3, 6)),
            SuiteKind::OracleEquivalence => (20, (4, 16)),
            _ => (20, kind.default_sizes()),
        };
        let cfg = SuiteConfig::new(kind, trials, 2024).with_sizes(sizes.0, sizes.1);
        let first = run_suite(&cfg).map_err(|e| e.to_string())?.to_json();
        let second = run_suite(&cfg).map_err(|e| e.to_string())?.to_json();
        if first != second {
            return Err(format!("{kind} reports differ"));
        }
        checked.push(kind.as_str());
    }
    Ok(format!("byte-identical reruns: {}", checked.join(", ")))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("extremal reproduction", extremal_reproduction),
        ("cut inequality suite", cut_inequality_suite),
        ("oracle equivalence", oracle_equivalence),
        ("exhaustive sweep", exhaustive_sweep),
        ("technical function grid", technical_grid_criterion),
        ("tightness witnesses", tightness),
        ("regularity pipeline", regularity_pipeline),
        ("regular-split identity", regular_split),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {} {name} [exact] ({secs:.2}s): {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {} {name} [exact] ({secs:.2}s): {detail}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
