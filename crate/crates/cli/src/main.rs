//! `sgc`: command-line driver for the strong-clique library.
//!
//! Results go to standard output as JSON, diagnostics to standard error.
//! Exit codes: 0 success, 2 bad input, 3 unmet precondition, 4 a bound was
//! exceeded (a potential counterexample).

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use sha2::{Digest, Sha256};
use strong_clique::bounds::{bound_catalog, ore_degree, BoundCatalog, OreReport};
use strong_clique::certificates::{
    decompose_bipartite, decompose_reduction, BipartiteDecomposition, ReductionDecomposition,
};
use strong_clique::generators::GeneratorSpec;
use strong_clique::solver::{max_strong_clique, verify_strong_clique, CliqueVerdict, SolveOptions};
use strong_clique::stability::{stability_pipeline, StabilityWitness};
use strong_clique::sweep::{run_sweep, run_sweep_to_csv, RandomFamily, SweepConfig, SweepMode};
use strong_clique::{
    parse_graph, square_of_line_graph, write_graph, EdgeSet, Error, ErrorKind, Graph,
};

#[derive(Parser)]
#[command(
    name = "sgc",
    version,
    about = "Maximum strong cliques, degree bounds and certificates"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph in `p sgc` format.
    Gen {
        #[command(subcommand)]
        family: Family,
        /// Output file; standard output if omitted.
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
    /// Compute the maximum strong clique.
    Omega {
        graph: PathBuf,
        #[command(flatten)]
        solve: SolveArgs,
    },
    /// Print the bound catalog for a strong clique.
    Bounds {
        graph: PathBuf,
        /// Parameter of the reduction bound, as a decimal or a fraction.
        #[arg(long, default_value = "1/3", value_parser = parse_fraction)]
        a: f64,
        /// Edge ids of the clique; a maximum strong clique if omitted.
        #[arg(long, value_delimiter = ',')]
        edges: Option<Vec<usize>>,
        #[command(flatten)]
        solve: SolveArgs,
    },
    /// Check whether edge ids form a strong clique.
    Verify {
        graph: PathBuf,
        /// Edge ids, separated by commas or spaces.
        #[arg(value_delimiter = ',')]
        edges: Vec<usize>,
    },
    /// Build a proof certificate for a strong clique.
    Certify {
        graph: PathBuf,
        #[arg(long, value_enum)]
        mode: Mode,
        #[arg(long, value_delimiter = ',')]
        edges: Option<Vec<usize>>,
        #[command(flatten)]
        solve: SolveArgs,
    },
    /// Extract a complete bipartite subgraph from a large strong clique.
    Stability {
        graph: PathBuf,
        #[arg(long, value_delimiter = ',')]
        edges: Option<Vec<usize>>,
        #[command(flatten)]
        solve: SolveArgs,
    },
    /// Check bounds over many generated graphs.
    Sweep {
        #[command(subcommand)]
        mode: SweepCommand,
    },
    /// Export the edge conflict graph (square of the line graph).
    Conflict {
        graph: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args, Clone)]
struct SolveArgs {
    #[arg(long, default_value_t = 1)]
    threads: usize,
    /// Disable the Ore-degree prune.
    #[arg(long)]
    no_ore_prune: bool,
}

impl SolveArgs {
    fn options(&self) -> SolveOptions {
        SolveOptions {
            threads: self.threads,
            ore_prune: !self.no_ore_prune,
        }
    }
}

#[derive(Subcommand)]
enum Family {
    CycleBlowup {
        c: usize,
        k: usize,
    },
    CompleteBipartite {
        p: usize,
        q: usize,
    },
    Path {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    Gnp {
        n: usize,
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    RandomBipartite {
        n1: usize,
        n2: usize,
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// The graph with the given edge mask among all labelled graphs on n vertices.
    AllGraphs {
        n: usize,
        mask: u64,
    },
}

impl Family {
    fn spec(&self) -> GeneratorSpec {
        match *self {
            Family::CycleBlowup { c, k } => GeneratorSpec::CycleBlowup { c, k },
            Family::CompleteBipartite { p, q } => GeneratorSpec::CompleteBipartite { p, q },
            Family::Path { n } => GeneratorSpec::Path { n },
            Family::Cycle { n } => GeneratorSpec::Cycle { n },
            Family::Gnp { n, p, seed } => GeneratorSpec::Gnp { n, p, seed },
            Family::RandomBipartite { n1, n2, p, seed } => {
                GeneratorSpec::RandomBipartite { n1, n2, p, seed }
            }
            Family::AllGraphs { n, mask } => GeneratorSpec::AllGraphs { n, mask },
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Bipartite,
    Reduction,
}

#[derive(Subcommand)]
enum SweepCommand {
    /// Every labelled graph on n vertices.
    Exhaustive {
        n: usize,
        #[command(flatten)]
        opts: SweepArgs,
    },
    /// Seeded random graphs.
    Random {
        #[command(subcommand)]
        family: RandomCommand,
        #[arg(long, default_value_t = 100, global = true)]
        count: usize,
        #[arg(long, default_value_t = 0, global = true)]
        seed: u64,
        #[command(flatten)]
        opts: SweepArgs,
    },
}

#[derive(Subcommand)]
enum RandomCommand {
    Gnp { n: usize, p: f64 },
    RandomBipartite { n1: usize, n2: usize, p: f64 },
}

#[derive(Args, Clone)]
struct SweepArgs {
    /// Catalog entries to check, comma separated.
    #[arg(
        long,
        value_delimiter = ',',
        default_value = "general_sigma2_3,conj_125d2",
        global = true
    )]
    checks: Vec<String>,
    #[arg(long, default_value = "1/3", value_parser = parse_fraction, global = true)]
    a: f64,
    /// CSV output path.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, default_value_t = 1, global = true)]
    threads: usize,
}

fn parse_fraction(s: &str) -> Result<f64, String> {
    let value = match s.split_once('/') {
        Some((num, den)) => {
            let num: f64 = num.trim().parse().map_err(|e| format!("{e}"))?;
            let den: f64 = den.trim().parse().map_err(|e| format!("{e}"))?;
            if den == 0.0 {
                return Err("zero denominator".into());
            }
            num / den
        }
        None => s.trim().parse().map_err(|e| format!("{e}"))?,
    };
    if value.is_finite() {
        Ok(value)
    } else {
        Err(format!("not a finite number: {s}"))
    }
}

#[derive(Serialize)]
struct GraphFile {
    path: String,
    sha256: String,
    n: usize,
    m: usize,
}

fn load(path: &Path) -> Result<(Graph, GraphFile), Error> {
    let bytes = fs::read(path).map_err(|e| with_path(e, path))?;
    let text = String::from_utf8(bytes).map_err(|_| Error::Parse {
        line: 0,
        msg: "file is not UTF-8".into(),
    })?;
    let g = parse_graph(&text)?;
    let info = GraphFile {
        path: path.display().to_string(),
        sha256: hex::encode(Sha256::digest(text.as_bytes())),
        n: g.vertex_count(),
        m: g.edge_count(),
    };
    Ok((g, info))
}

fn clique(g: &Graph, edges: &Option<Vec<usize>>, solve: &SolveArgs) -> Result<EdgeSet, Error> {
    let h = match edges {
        Some(ids) => EdgeSet::new(g, ids.iter().copied())?,
        None => return Ok(max_strong_clique(g, &solve.options())?.witness),
    };
    if let CliqueVerdict::Fails(e, f) = verify_strong_clique(g, &h)? {
        return Err(Error::Precondition(format!(
            "edges {e} and {f} are not strongly adjacent"
        )));
    }
    Ok(h)
}

/// Writes to standard output; a closed pipe on the reading side is not an
/// error.
fn stdout(text: &str) -> Result<(), Error> {
    match io::stdout().lock().write_all(text.as_bytes()) {
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => Ok(()),
        r => Ok(r?),
    }
}

fn emit<T: Serialize>(value: &T) -> Result<(), Error> {
    let text = serde_json::to_string_pretty(value).map_err(io::Error::from)?;
    stdout(&format!("{text}\n"))
}

fn write_text(out: &Option<PathBuf>, text: &str) -> Result<(), Error> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| with_path(e, p)),
        None => stdout(text),
    }
}

fn with_path(e: io::Error, path: &Path) -> Error {
    Error::Io(io::Error::new(e.kind(), format!("{}: {e}", path.display())))
}

#[derive(Serialize)]
struct OmegaOutput {
    graph: GraphFile,
    omega: usize,
    witness: EdgeSet,
    nodes: u64,
    prunes: u64,
    ms: f64,
    deterministic_witness: bool,
}

#[derive(Serialize)]
struct BoundsOutput {
    graph: GraphFile,
    a: f64,
    clique: EdgeSet,
    bipartite: bool,
    ore: OreReport,
    #[serde(flatten)]
    catalog: BoundCatalog,
}

#[derive(Serialize)]
struct VerifyOutput {
    graph: GraphFile,
    edges: EdgeSet,
    ok: bool,
    failing_pair: Option<[usize; 2]>,
}

#[derive(Serialize)]
#[serde(untagged)]
enum Certificate {
    Bipartite(BipartiteDecomposition),
    Reduction(ReductionDecomposition),
}

#[derive(Serialize)]
struct CertifyOutput {
    graph: GraphFile,
    mode: &'static str,
    clique: EdgeSet,
    all_ok: bool,
    failed: Vec<&'static str>,
    certificate: Certificate,
}

#[derive(Serialize)]
struct StabilityOutput {
    graph: GraphFile,
    clique: EdgeSet,
    #[serde(flatten)]
    witness: StabilityWitness,
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::Gen { family, out } => {
            let spec = family.spec();
            let g = spec.generate()?;
            write_text(&out, &format!("c {spec}\n{}", write_graph(&g)))
        }
        Command::Omega { graph, solve } => {
            let (g, info) = load(&graph)?;
            let r = max_strong_clique(&g, &solve.options())?;
            emit(&OmegaOutput {
                graph: info,
                omega: r.omega,
                witness: r.witness,
                nodes: r.nodes_explored,
                prunes: r.bound_prunes,
                ms: r.elapsed_ms,
                deterministic_witness: r.deterministic_witness,
            })
        }
        Command::Bounds {
            graph,
            a,
            edges,
            solve,
        } => {
            let (g, info) = load(&graph)?;
            let h = clique(&g, &edges, &solve)?;
            let ore = ore_degree(&g, &h)?;
            let catalog = bound_catalog(&ore, a)?;
            emit(&BoundsOutput {
                graph: info,
                a,
                clique: h,
                bipartite: g.bipartition().is_some(),
                ore,
                catalog,
            })
        }
        Command::Verify { graph, edges } => {
            let (g, info) = load(&graph)?;
            let h = EdgeSet::new(&g, edges)?;
            let failing_pair = match verify_strong_clique(&g, &h)? {
                CliqueVerdict::Clique => None,
                CliqueVerdict::Fails(e, f) => Some([e, f]),
            };
            emit(&VerifyOutput {
                graph: info,
                edges: h,
                ok: failing_pair.is_none(),
                failing_pair,
            })
        }
        Command::Certify {
            graph,
            mode,
            edges,
            solve,
        } => {
            let (g, info) = load(&graph)?;
            let h = clique(&g, &edges, &solve)?;
            let (name, all_ok, failed, certificate) = match mode {
                Mode::Bipartite => {
                    let part = g.bipartition().ok_or_else(|| {
                        Error::Precondition(
                            "the bipartite certificate needs a bipartite graph".into(),
                        )
                    })?;
                    let d = decompose_bipartite(&g, &part, &h)?;
                    (
                        "bipartite",
                        d.all_ok(),
                        d.failed(),
                        Certificate::Bipartite(d),
                    )
                }
                Mode::Reduction => {
                    let d = decompose_reduction(&g, &h)?;
                    (
                        "reduction",
                        d.all_ok(),
                        d.failed(),
                        Certificate::Reduction(d),
                    )
                }
            };
            emit(&CertifyOutput {
                graph: info,
                mode: name,
                clique: h,
                all_ok,
                failed: failed.clone(),
                certificate,
            })?;
            if all_ok {
                Ok(())
            } else {
                Err(Error::BoundViolation(format!(
                    "certificate checks failed: {}",
                    failed.join(", ")
                )))
            }
        }
        Command::Stability {
            graph,
            edges,
            solve,
        } => {
            let (g, info) = load(&graph)?;
            let h = clique(&g, &edges, &solve)?;
            let witness = stability_pipeline(&g, &h)?;
            emit(&StabilityOutput {
                graph: info,
                clique: h,
                witness,
            })
        }
        Command::Sweep { mode } => {
            let (mode, opts) = match mode {
                SweepCommand::Exhaustive { n, opts } => (SweepMode::Exhaustive { n }, opts),
                SweepCommand::Random {
                    family,
                    count,
                    seed,
                    opts,
                } => {
                    let family = match family {
                        RandomCommand::Gnp { n, p } => RandomFamily::Gnp { n, p },
                        RandomCommand::RandomBipartite { n1, n2, p } => {
                            RandomFamily::RandomBipartite { n1, n2, p }
                        }
                    };
                    (
                        SweepMode::Random {
                            family,
                            count,
                            seed,
                        },
                        opts,
                    )
                }
            };
            let config = SweepConfig {
                mode,
                checks: opts.checks,
                a: opts.a,
                threads: opts.threads,
            };
            let summary = match &opts.out {
                Some(path) => {
                    let file = fs::File::create(path).map_err(|e| with_path(e, path))?;
                    run_sweep_to_csv(&config, io::BufWriter::new(file))?
                }
                None => run_sweep(&config, |_| Ok(()))?,
            };
            emit(&summary)?;
            if summary.violations > 0 {
                return Err(Error::BoundViolation(format!(
                    "{} violation(s); offending graphs are in the summary",
                    summary.violations
                )));
            }
            Ok(())
        }
        Command::Conflict { graph, out } => {
            let (g, _) = load(&graph)?;
            let sq = square_of_line_graph(&g).to_graph();
            write_text(&out, &write_graph(&sq))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("sgc: {e}");
            ExitCode::from(match e.kind() {
                ErrorKind::Input => 2,
                ErrorKind::Precondition => 3,
                ErrorKind::BoundViolation => 4,
            })
        }
    }
}
