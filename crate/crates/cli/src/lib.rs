//! `k4bip` command-line interface.
//!
//! Exit codes: 0 on success, 1 when a check fails or an internal assertion
//! trips, 2 on bad input or usage.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use k4bip_core::cut::{bipartize, BoundReport, Method};
use k4bip_core::generators::{
    blowup, complete, complete_multipartite, cycle, petersen, random_gnp, random_k4free_process,
    random_regular, random_tripartite,
};
use k4bip_core::harness::{run_suite, SuiteConfig, SuiteKind};
use k4bip_core::oracle::{exact_max_cut, DEFAULT_LIMIT};
use k4bip_core::regularity::{hfree_bipartize, Mode, Partition, DEFAULT_SAMPLES};
use k4bip_core::{edgelist, Edge, Graph};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILURE: u8 = 1;
pub const EXIT_INPUT: u8 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "k4bip",
    version,
    about = "Certified bipartization of K4-free graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print a generated graph in edge-list format
    Generate {
        family: GenFamily,
        /// Family parameters, e.g. part sizes, or `n p` for random families
        params: Vec<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Base graph file for `blowup` (instead of a keyword such as C5)
        #[arg(long)]
        base: Option<PathBuf>,
    },
    /// Bipartize a K4-free graph and report every bound
    Analyze {
        #[arg(long)]
        input: PathBuf,
        /// Print the full JSON report (otherwise a one-line JSON summary)
        #[arg(long)]
        json: bool,
        /// Human-readable table on stderr
        #[arg(long)]
        verbose: bool,
    },
    /// Exact maximum cut by enumeration
    Oracle {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = DEFAULT_LIMIT)]
        limit: usize,
    },
    /// Run a seeded property suite
    Verify {
        #[arg(long)]
        suite: Suite,
        #[arg(long, default_value_t = 100)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        min_n: Option<usize>,
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Bipartize through a given vertex partition
    Regularity {
        #[arg(long)]
        input: PathBuf,
        /// JSON: {"classes": [[...], ...], "epsilon": "1/10", "delta": "1/2"}
        #[arg(long)]
        partition: PathBuf,
        /// Sample subset pairs instead of enumerating them
        #[arg(long)]
        sampled: bool,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
#[value(rename_all = "snake_case")]
enum GenFamily {
    CompleteMultipartite,
    Complete,
    Cycle,
    Petersen,
    Blowup,
    RandomTripartite,
    RandomK4freeProcess,
    RandomGnp,
    RandomRegular,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
#[value(rename_all = "snake_case")]
enum Suite {
    Lemmas,
    Theorem,
    OracleEquivalence,
    Exhaustive,
    Technical,
    Regularity,
    RegularSplit,
}

impl From<Suite> for SuiteKind {
    fn from(s: Suite) -> Self {
        match s {
            Suite::Lemmas => SuiteKind::Lemmas,
            Suite::Theorem => SuiteKind::Theorem,
            Suite::OracleEquivalence => SuiteKind::OracleEquivalence,
            Suite::Exhaustive => SuiteKind::Exhaustive,
            Suite::Technical => SuiteKind::Technical,
            Suite::Regularity => SuiteKind::Regularity,
            Suite::RegularSplit => SuiteKind::RegularSplit,
        }
    }
}

enum Failure {
    Input(String),
    Check(String),
}

impl From<k4bip_core::Error> for Failure {
    fn from(e: k4bip_core::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<String, Failure>;

/// Parses `argv` (including the program name), runs the command and returns
/// the exit code. Output goes to stdout; diagnostics to stderr.
pub fn cli_main<I, T>(argv: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    let result = catch_unwind(AssertUnwindSafe(|| dispatch(cli.command)));
    match result {
        Ok(Ok(out)) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.as_bytes());
            EXIT_OK
        }
        Ok(Err(Failure::Check(out))) => {
            let _ = std::io::stdout().lock().write_all(out.as_bytes());
            EXIT_FAILURE
        }
        Ok(Err(Failure::Input(msg))) => {
            eprintln!("error: {msg}");
            EXIT_INPUT
        }
        Err(_) => {
            eprintln!("error: internal assertion failed");
            EXIT_FAILURE
        }
    }
}

fn dispatch(cmd: Command) -> Outcome {
    match cmd {
        Command::Generate {
            family,
            params,
            seed,
            base,
        } => generate(family, &params, seed, base.as_deref()),
        Command::Analyze {
            input,
            json,
            verbose,
        } => analyze(&input, json, verbose),
        Command::Oracle { input, limit } => {
            let g = read_graph(&input)?;
            Ok(to_json(&exact_max_cut(&g, limit)?))
        }
        Command::Verify {
            suite,
            trials,
            seed,
            min_n,
            max_n,
        } => {
            let mut cfg = SuiteConfig::new(suite.into(), trials, seed);
            cfg = cfg
                .clone()
                .with_sizes(min_n.unwrap_or(cfg.min_n), max_n.unwrap_or(cfg.max_n));
            let report = run_suite(&cfg)?;
            let out = format!("{}\n", report.to_json());
            if report.passed {
                Ok(out)
            } else {
                Err(Failure::Check(out))
            }
        }
        Command::Regularity {
            input,
            partition,
            sampled,
            samples,
            seed,
        } => {
            let g = read_graph(&input)?;
            let p = Partition::from_json(&read(&partition)?)?;
            let mode = if sampled {
                Mode::Sampled { samples, seed }
            } else {
                Mode::Exact
            };
            Ok(to_json(&hfree_bipartize(&g, &p, mode)?))
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    format!(
        "{}\n",
        serde_json::to_string_pretty(value).expect("output serializes")
    )
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    edgelist::parse(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn param<T: std::str::FromStr>(params: &[String], i: usize, what: &str) -> Result<T, Failure> {
    let raw = params
        .get(i)
        .ok_or_else(|| Failure::Input(format!("missing parameter <{what}>")))?;
    raw.parse()
        .map_err(|_| Failure::Input(format!("invalid <{what}>: {raw:?}")))
}

fn expect_params(params: &[String], max: usize) -> Result<(), Failure> {
    if params.len() > max {
        return Err(Failure::Input(format!(
            "unexpected parameter {:?}",
            params[max]
        )));
    }
    Ok(())
}

/// `K<k>`, `C<k>`, `K<a>,<b>,...` or `petersen`.
fn named_graph(name: &str) -> Option<Graph> {
    let lower = name.to_ascii_lowercase();
    if lower == "petersen" {
        return Some(petersen());
    }
    let (kind, rest) = lower.split_at(1.min(lower.len()));
    let nums: Option<Vec<usize>> = rest.split(',').map(|s| s.parse().ok()).collect();
    match (kind, nums?.as_slice()) {
        ("k", [k]) => Some(complete(*k)),
        ("k", parts) if parts.len() > 1 => Some(complete_multipartite(parts)),
        ("c", [k]) if *k >= 3 => Some(cycle(*k)),
        _ => None,
    }
}

fn generate(family: GenFamily, params: &[String], seed: u64, base: Option<&Path>) -> Outcome {
    let g = match family {
        GenFamily::CompleteMultipartite => {
            let parts = (0..params.len())
                .map(|i| param(params, i, "part size"))
                .collect::<Result<Vec<usize>, _>>()?;
            if parts.is_empty() {
                return Err(Failure::Input(
                    "complete_multipartite needs at least one part size".into(),
                ));
            }
            complete_multipartite(&parts)
        }
        GenFamily::Complete => {
            expect_params(params, 1)?;
            complete(param(params, 0, "k")?)
        }
        GenFamily::Cycle => {
            expect_params(params, 1)?;
            let k: usize = param(params, 0, "k")?;
            if k < 3 {
                return Err(Failure::Input("cycle needs k >= 3".into()));
            }
            cycle(k)
        }
        GenFamily::Petersen => {
            expect_params(params, 0)?;
            petersen()
        }
        GenFamily::Blowup => match base {
            Some(path) => {
                expect_params(params, 1)?;
                blowup(&read_graph(path)?, param(params, 0, "t")?)?
            }
            None => {
                expect_params(params, 2)?;
                let name: String = param(params, 0, "base")?;
                let g = named_graph(&name)
                    .ok_or_else(|| Failure::Input(format!("unknown base graph {name:?}")))?;
                blowup(&g, param(params, 1, "t")?)?
            }
        },
        GenFamily::RandomTripartite => {
            expect_params(params, 2)?;
            random_tripartite(param(params, 0, "n")?, param(params, 1, "p")?, seed)?
        }
        GenFamily::RandomGnp => {
            expect_params(params, 2)?;
            random_gnp(param(params, 0, "n")?, param(params, 1, "p")?, seed)?
        }
        GenFamily::RandomK4freeProcess => {
            expect_params(params, 2)?;
            let target = if params.len() > 1 {
                Some(param(params, 1, "target edges")?)
            } else {
                None
            };
            random_k4free_process(param(params, 0, "n")?, target, seed)
        }
        GenFamily::RandomRegular => {
            expect_params(params, 1)?;
            random_regular(param(params, 0, "n")?, seed)?
        }
    };
    Ok(edgelist::write(&g))
}

#[derive(Serialize)]
struct Analysis<'a> {
    #[serde(flatten)]
    report: &'a BoundReport,
    method: Method,
    deletion_edges: &'a [Edge],
}

#[derive(Serialize)]
struct Summary {
    n: usize,
    e: usize,
    deletions: usize,
    method: Method,
    within_bound: bool,
}

fn analyze(input: &Path, json: bool, verbose: bool) -> Outcome {
    let g = read_graph(input)?;
    let (cert, report) = bipartize(&g)?;
    if verbose {
        eprint!("{}", table(&report, cert.method));
    }
    if json {
        Ok(to_json(&Analysis {
            report: &report,
            method: cert.method,
            deletion_edges: &cert.edges,
        }))
    } else {
        let summary = Summary {
            n: report.n,
            e: report.e,
            deletions: report.deletions,
            method: cert.method,
            within_bound: report.violations().is_empty(),
        };
        Ok(format!(
            "{}\n",
            serde_json::to_string(&summary).expect("summary serializes")
        ))
    }
}

fn table(r: &BoundReport, method: Method) -> String {
    let opt = |x: Option<usize>| x.map_or("-".to_string(), |v| v.to_string());
    let rows = [
        ("n", r.n.to_string()),
        ("edges", r.e.to_string()),
        ("triangles", r.m.to_string()),
        ("branch", format!("{:?}", r.proof_branch)),
        (
            "neighborhood cut",
            format!("{} >= {}", r.cuts.neighborhood, r.bounds.neighborhood),
        ),
        (
            "k4free cut",
            format!("{} >= {}", r.cuts.k4free_refine, r.bounds.k4free),
        ),
        ("four-partite cut", opt(r.cuts.triangle_4partite)),
        ("best cut", r.cuts.best.to_string()),
        ("method", method.as_str().to_string()),
        (
            "deletions",
            format!("{} <= {}", r.deletions, r.deletion_bound),
        ),
    ];
    rows.iter()
        .map(|(k, v)| format!("{k:>18}  {v}\n"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_graphs() {
        assert_eq!(named_graph("C5"), Some(cycle(5)));
        assert_eq!(named_graph("k3"), Some(complete(3)));
        assert_eq!(
            named_graph("K2,2,2"),
            Some(complete_multipartite(&[2, 2, 2]))
        );
        assert_eq!(named_graph("Petersen"), Some(petersen()));
        assert_eq!(named_graph("c2"), None);
        assert_eq!(named_graph("x"), None);
        assert_eq!(named_graph(""), None);
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
