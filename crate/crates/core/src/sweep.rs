//! Batch checks of the bound catalog against exact clique numbers.
//!
//! Each instance is solved once; every requested bound then yields one
//! [`SweepRecord`]. Instances run on a worker pool in chunks and are folded
//! back in instance order, so the record stream and summary do not depend on
//! the thread count.

use std::collections::BTreeMap;
use std::io::{Read, Write};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::{bound_catalog, floor_bound, ore_degree, BIPARTITE_ONLY, BOUND_NAMES};
use crate::certificates::PROVEN_A;
use crate::error::{Error, ErrorKind, Result};
use crate::generators::{all_graphs, GeneratorSpec};
use crate::io::write_graph;
use crate::solver::{max_strong_clique, SolveOptions};

/// Column order of the CSV output.
pub const CSV_COLUMNS: [&str; 11] = [
    "family",
    "params",
    "n",
    "m",
    "delta",
    "sigma",
    "omega",
    "bound_name",
    "bound_value",
    "slack",
    "pass",
];

const CHUNK: usize = 2048;
const TIGHT_EXAMPLES: usize = 10;

/// One (instance, bound) pair. `sigma` is the Ore-degree of the witness
/// clique and `pass` is `omega <= floor(bound_value)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepRecord {
    pub family: String,
    pub params: String,
    pub n: usize,
    pub m: usize,
    pub delta: usize,
    pub sigma: usize,
    pub omega: usize,
    pub bound_name: String,
    pub bound_value: f64,
    pub slack: f64,
    pub pass: bool,
}

impl SweepRecord {
    /// Recomputes `pass` from the stored numbers.
    pub fn recheck(&self) -> bool {
        self.omega as u64 <= floor_bound(self.bound_value)
    }

    pub fn is_tight(&self) -> bool {
        self.slack.abs() < 1e-9
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum RandomFamily {
    Gnp { n: usize, p: f64 },
    RandomBipartite { n1: usize, n2: usize, p: f64 },
}

impl RandomFamily {
    pub fn with_seed(&self, seed: u64) -> GeneratorSpec {
        match *self {
            RandomFamily::Gnp { n, p } => GeneratorSpec::Gnp { n, p, seed },
            RandomFamily::RandomBipartite { n1, n2, p } => {
                GeneratorSpec::RandomBipartite { n1, n2, p, seed }
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum SweepMode {
    /// Every labelled graph on `n` vertices.
    Exhaustive { n: usize },
    /// `count` draws; instance seeds come from a ChaCha8 stream keyed by
    /// `seed`.
    Random {
        family: RandomFamily,
        count: usize,
        seed: u64,
    },
}

#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub mode: SweepMode,
    /// Catalog entry names to evaluate.
    pub checks: Vec<String>,
    /// Parameter of `reduction_a`.
    pub a: f64,
    pub threads: usize,
}

impl SweepConfig {
    pub fn new(mode: SweepMode) -> Self {
        SweepConfig {
            mode,
            checks: vec!["general_sigma2_3".into(), "conj_125d2".into()],
            a: PROVEN_A,
            threads: 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MinSlack {
    pub slack: f64,
    pub instance: String,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct TightCensus {
    pub count: u64,
    /// The first few tight instances in sweep order.
    pub examples: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Violation {
    pub instance: String,
    pub bound_name: String,
    pub omega: Option<usize>,
    pub bound_value: Option<f64>,
    pub message: String,
    /// The offending graph in `p sgc` format.
    pub graph: String,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct SweepSummary {
    pub instances: u64,
    pub violations: u64,
    /// Smallest `bound - omega` over instances with at least one edge.
    pub min_slack_per_bound: BTreeMap<String, MinSlack>,
    /// Tight means `omega >= 1` and `omega` equals the real bound.
    pub tight_instances: BTreeMap<String, TightCensus>,
    pub violating: Vec<Violation>,
    pub elapsed_ms: f64,
}

enum Outcome {
    Records(Vec<SweepRecord>, String),
    SolverAlarm(Violation),
}

fn validate_checks(checks: &[String]) -> Result<()> {
    let known = BOUND_NAMES;
    for c in checks {
        if !known.contains(&c.as_str()) {
            return Err(Error::Domain(format!(
                "unknown check `{c}`; expected one of {}",
                known.join(", ")
            )));
        }
    }
    if checks.is_empty() {
        return Err(Error::Domain("no checks requested".into()));
    }
    Ok(())
}

fn instance_specs(mode: &SweepMode) -> Result<Vec<GeneratorSpec>> {
    match *mode {
        SweepMode::Exhaustive { n } => {
            let all = all_graphs(n)?;
            Ok((0..all.total())
                .map(|mask| GeneratorSpec::AllGraphs { n, mask })
                .collect())
        }
        SweepMode::Random {
            family,
            count,
            seed,
        } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            Ok((0..count).map(|_| family.with_seed(rng.gen())).collect())
        }
    }
}

fn run_instance(spec: &GeneratorSpec, checks: &[String], a: f64) -> Result<Outcome> {
    let g = spec.generate()?;
    let name = spec.to_string();
    let solved = match max_strong_clique(&g, &SolveOptions::default()) {
        Ok(s) => s,
        Err(e) if e.kind() == ErrorKind::BoundViolation => {
            return Ok(Outcome::SolverAlarm(Violation {
                instance: name,
                bound_name: "solver".into(),
                omega: None,
                bound_value: None,
                message: e.to_string(),
                graph: write_graph(&g),
            }))
        }
        Err(e) => return Err(e),
    };
    let report = ore_degree(&g, &solved.witness)?;
    let catalog = bound_catalog(&report, a)?;
    let bipartite = g.bipartition().is_some();
    let omega = solved.omega;
    let records: Vec<SweepRecord> = checks
        .iter()
        .filter(|c| bipartite || !BIPARTITE_ONLY.contains(&c.as_str()))
        .map(|c| {
            let value = catalog.get(c).expect("checks are validated");
            SweepRecord {
                family: spec.family().to_string(),
                params: spec.params(),
                n: g.vertex_count(),
                m: g.edge_count(),
                delta: report.delta_g,
                sigma: report.sigma_g_h,
                omega,
                bound_name: c.clone(),
                bound_value: value,
                slack: value - omega as f64,
                pass: omega as u64 <= floor_bound(value),
            }
        })
        .collect();
    let graph = if records.iter().all(|r| r.pass) {
        String::new()
    } else {
        write_graph(&g)
    };
    Ok(Outcome::Records(records, graph))
}

/// Runs the sweep, handing every record to `sink` in instance order.
pub fn run_sweep<F>(config: &SweepConfig, mut sink: F) -> Result<SweepSummary>
where
    F: FnMut(&SweepRecord) -> Result<()>,
{
    let start = std::time::Instant::now();
    validate_checks(&config.checks)?;
    crate::bounds::check_a(config.a)?;
    let specs = instance_specs(&config.mode)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.threads.max(1))
        .build()
        .map_err(|e| Error::Domain(format!("thread pool: {e}")))?;

    let mut summary = SweepSummary::default();
    for chunk in specs.chunks(CHUNK) {
        let outcomes: Vec<Result<Outcome>> = pool.install(|| {
            chunk
                .par_iter()
                .map(|s| run_instance(s, &config.checks, config.a))
                .collect()
        });
        for outcome in outcomes {
            summary.instances += 1;
            match outcome? {
                Outcome::SolverAlarm(v) => {
                    summary.violations += 1;
                    summary.violating.push(v);
                }
                Outcome::Records(records, graph) => {
                    for r in &records {
                        summary.absorb(r, &graph);
                        sink(r)?;
                    }
                }
            }
        }
    }
    summary.elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    Ok(summary)
}

impl SweepSummary {
    fn absorb(&mut self, r: &SweepRecord, graph: &str) {
        let instance = format!("{}({})", r.family, r.params);
        if r.omega >= 1 {
            self.note_slack(r, &instance);
        }
        if r.omega >= 1 && r.is_tight() {
            let census = self
                .tight_instances
                .entry(r.bound_name.clone())
                .or_default();
            census.count += 1;
            if census.examples.len() < TIGHT_EXAMPLES {
                census.examples.push(instance.clone());
            }
        }
        if !r.pass {
            self.violations += 1;
            self.violating.push(Violation {
                instance,
                bound_name: r.bound_name.clone(),
                omega: Some(r.omega),
                bound_value: Some(r.bound_value),
                message: format!("omega {} exceeds floor({})", r.omega, r.bound_value),
                graph: graph.to_string(),
            });
        }
    }

    fn note_slack(&mut self, r: &SweepRecord, instance: &str) {
        let entry = self
            .min_slack_per_bound
            .entry(r.bound_name.clone())
            .or_insert_with(|| MinSlack {
                slack: f64::INFINITY,
                instance: instance.to_string(),
            });
        if r.slack < entry.slack {
            entry.slack = r.slack;
            entry.instance = instance.to_string();
        }
    }
}

/// Runs the sweep and writes every record as CSV with a header row.
pub fn run_sweep_to_csv<W: Write>(config: &SweepConfig, out: W) -> Result<SweepSummary> {
    let mut w = csv_writer(out)?;
    let summary = run_sweep(config, |r| w.serialize(r).map_err(Error::from))?;
    w.flush()?;
    Ok(summary)
}

fn csv_writer<W: Write>(out: W) -> Result<csv::Writer<W>> {
    let mut w = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(out);
    w.write_record(CSV_COLUMNS)?;
    Ok(w)
}

pub fn write_records<W: Write>(records: &[SweepRecord], out: W) -> Result<()> {
    let mut w = csv_writer(out)?;
    for r in records {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_records<R: Read>(input: R) -> Result<Vec<SweepRecord>> {
    let mut rd = csv::Reader::from_reader(input);
    let header: Vec<String> = rd.headers()?.iter().map(str::to_string).collect();
    if header != CSV_COLUMNS {
        return Err(Error::parse(1, format!("unexpected CSV header {header:?}")));
    }
    rd.deserialize().map(|r| r.map_err(Error::from)).collect()
}
