//! Exact maximum strong clique, i.e. `omega(L(G)^2)`.
//!
//! The search runs over conflict-graph vertices (edge ids of `G`) ordered by
//! decreasing conflict degree, ties by smallest edge id. Each node colours its
//! candidate set greedily and cuts when `|C| + colours <= best`. A second cut
//! uses the Ore-degree bound: any strong clique inside `C ∪ P` has at most
//! `floor(sigma^2 / 3)` edges, where `sigma` is the largest Ore weight in
//! `C ∪ P`.
//!
//! The root is split into one task per vertex `v_i` with candidates
//! `N(v_i) ∩ {v_j : j > i}`. Tasks share only the incumbent size.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::bitset::BitSet;
use crate::bounds::{floor_bound, sigma};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, EdgeSet, Graph};
use crate::linegraph::square_of_line_graph;

/// Largest graph (in edges) the brute-force oracle accepts.
pub const BRUTE_FORCE_MAX_EDGES: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CliqueVerdict {
    Clique,
    /// The lexicographically smallest pair that is not strongly adjacent.
    Fails(EdgeId, EdgeId),
}

impl CliqueVerdict {
    pub fn is_clique(&self) -> bool {
        matches!(self, CliqueVerdict::Clique)
    }
}

pub fn verify_strong_clique(g: &Graph, h: &EdgeSet) -> Result<CliqueVerdict> {
    h.check(g)?;
    let ids = h.iter_slice();
    for (i, &e) in ids.iter().enumerate() {
        let (a, b) = g.endpoints(e);
        for &f in &ids[i + 1..] {
            let (c, d) = g.endpoints(f);
            let close = a == c
                || a == d
                || b == c
                || b == d
                || g.has_edge(a, c)
                || g.has_edge(a, d)
                || g.has_edge(b, c)
                || g.has_edge(b, d);
            if !close {
                return Ok(CliqueVerdict::Fails(e, f));
            }
        }
    }
    Ok(CliqueVerdict::Clique)
}

#[derive(Clone, Debug)]
pub struct SolveOptions {
    /// Worker threads; 1 gives a deterministic witness.
    pub threads: usize,
    pub ore_prune: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            threads: 1,
            ore_prune: true,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SolveResult {
    pub omega: usize,
    pub witness: EdgeSet,
    pub nodes_explored: u64,
    /// Nodes cut by the Ore-degree bound.
    pub bound_prunes: u64,
    pub elapsed_ms: f64,
    pub deterministic_witness: bool,
}

/// Conflict graph relabelled into search order.
struct Instance {
    /// Search position to edge id.
    order: Vec<EdgeId>,
    adj: Vec<BitSet>,
    ore: Vec<usize>,
}

impl Instance {
    fn new(g: &Graph) -> Self {
        let conflict = square_of_line_graph(g);
        let m = g.edge_count();
        let mut order: Vec<EdgeId> = (0..m).collect();
        order.sort_by_key(|&e| (std::cmp::Reverse(conflict.degree(e)), e));
        let mut pos = vec![0; m];
        for (i, &e) in order.iter().enumerate() {
            pos[e] = i;
        }
        let adj = order
            .iter()
            .map(|&e| {
                let mut row = BitSet::new(m);
                for f in conflict.conflicts(e).iter() {
                    row.insert(pos[f]);
                }
                row
            })
            .collect();
        let ore = order
            .iter()
            .map(|&e| {
                let (u, v) = g.endpoints(e);
                g.deg(u) + g.deg(v)
            })
            .collect();
        Instance { order, adj, ore }
    }

    fn len(&self) -> usize {
        self.order.len()
    }

    /// Greedy clique from the first vertex, always extending by the
    /// earliest remaining candidate.
    fn greedy_clique(&self) -> Vec<usize> {
        if self.len() == 0 {
            return Vec::new();
        }
        let mut clique = vec![0];
        let mut cand = self.adj[0].clone();
        while let Some(v) = cand.first() {
            clique.push(v);
            cand.intersect_with(&self.adj[v]);
        }
        clique
    }
}

struct Search<'a> {
    inst: &'a Instance,
    best: &'a AtomicUsize,
    ore_prune: bool,
    clique: Vec<usize>,
    found: Vec<usize>,
    nodes: u64,
    prunes: u64,
}

impl<'a> Search<'a> {
    fn new(inst: &'a Instance, best: &'a AtomicUsize, ore_prune: bool) -> Self {
        Search {
            inst,
            best,
            ore_prune,
            clique: Vec::new(),
            found: Vec::new(),
            nodes: 0,
            prunes: 0,
        }
    }

    fn best(&self) -> usize {
        self.best.load(Ordering::Relaxed)
    }

    fn record(&mut self) {
        let k = self.clique.len();
        if k > self.best.fetch_max(k, Ordering::Relaxed) {
            self.found = self.clique.clone();
        }
    }

    fn run_task(&mut self, root: usize) {
        let mut cand = self.inst.adj[root].clone();
        for j in 0..=root {
            cand.remove(j);
        }
        if cand.count() < self.best() {
            return;
        }
        self.clique.push(root);
        let ore = self.inst.ore[root];
        self.expand(cand, ore);
        self.clique.pop();
    }

    fn expand(&mut self, mut cand: BitSet, clique_ore: usize) {
        self.nodes += 1;
        if cand.is_empty() {
            self.record();
            return;
        }
        if self.ore_prune {
            let ore = cand
                .iter()
                .map(|v| self.inst.ore[v])
                .fold(clique_ore, usize::max);
            if ore * ore / 3 <= self.best() {
                self.prunes += 1;
                return;
            }
        }
        let coloured = self.colour(&cand);
        for &(v, colour) in coloured.iter().rev() {
            if self.clique.len() + colour <= self.best() {
                return;
            }
            self.clique.push(v);
            let next = cand.intersection(&self.inst.adj[v]);
            self.expand(next, clique_ore.max(self.inst.ore[v]));
            self.clique.pop();
            cand.remove(v);
        }
    }

    /// Sequential greedy colouring; returns `(vertex, colour)` with colours
    /// nondecreasing, colours starting at 1.
    fn colour(&self, cand: &BitSet) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(cand.count());
        let mut uncoloured = cand.clone();
        let mut colour = 0;
        while !uncoloured.is_empty() {
            colour += 1;
            let mut class = uncoloured.clone();
            while let Some(v) = class.first() {
                out.push((v, colour));
                uncoloured.remove(v);
                class.remove(v);
                class.difference_with(&self.inst.adj[v]);
            }
        }
        out
    }
}

struct TaskOutcome {
    found: Vec<usize>,
    nodes: u64,
    prunes: u64,
}

/// Maximal (not maximum) strong clique grown from the edge with the most
/// conflicts. This is the solver's starting incumbent.
pub fn greedy_strong_clique(g: &Graph) -> EdgeSet {
    let inst = Instance::new(g);
    EdgeSet::from_unsorted(
        inst.greedy_clique()
            .into_iter()
            .map(|i| inst.order[i])
            .collect(),
    )
}

pub fn max_strong_clique(g: &Graph, opts: &SolveOptions) -> Result<SolveResult> {
    let start = Instant::now();
    let inst = Instance::new(g);
    let greedy = inst.greedy_clique();
    let best = AtomicUsize::new(greedy.len());

    let run = |root: usize| {
        let mut s = Search::new(&inst, &best, opts.ore_prune);
        s.run_task(root);
        TaskOutcome {
            found: s.found,
            nodes: s.nodes,
            prunes: s.prunes,
        }
    };

    let outcomes: Vec<TaskOutcome> = if opts.threads > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.threads)
            .build()
            .map_err(|e| Error::Domain(format!("thread pool: {e}")))?;
        pool.install(|| (0..inst.len()).into_par_iter().map(run).collect())
    } else {
        (0..inst.len()).map(run).collect()
    };

    let mut witness_pos = greedy;
    let mut nodes = 1;
    let mut prunes = 0;
    for o in outcomes {
        nodes += o.nodes;
        prunes += o.prunes;
        if o.found.len() > witness_pos.len() {
            witness_pos = o.found;
        }
    }
    let witness = EdgeSet::from_unsorted(witness_pos.iter().map(|&p| inst.order[p]).collect());
    let omega = witness.len();
    assert_eq!(
        omega,
        best.load(Ordering::Relaxed),
        "incumbent/witness mismatch"
    );
    assert!(
        verify_strong_clique(g, &witness)?.is_clique(),
        "solver produced a witness that is not a strong clique"
    );
    check_proven_bounds(g, &witness)?;

    Ok(SolveResult {
        omega,
        witness,
        nodes_explored: nodes,
        bound_prunes: prunes,
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
        deterministic_witness: opts.threads <= 1,
    })
}

/// Checks a strong clique against the proven general bounds:
/// `|H| <= floor(sigma_G(H)^2 / 3) <= floor(sigma(G)^2 / 3)` and
/// `|H| <= floor(4 * Delta^2 / 3)`. A failure is reported as a potential
/// counterexample.
pub fn check_proven_bounds(g: &Graph, h: &EdgeSet) -> Result<()> {
    let size = h.len() as u64;
    let sigma_h = h
        .iter()
        .map(|e| {
            let (u, v) = g.endpoints(e);
            g.deg(u) + g.deg(v)
        })
        .max()
        .unwrap_or(0) as f64;
    let sigma_g = sigma(g) as f64;
    let delta = g.max_degree() as f64;
    let checks = [
        ("sigma_G(H)^2/3", sigma_h * sigma_h / 3.0),
        ("sigma(G)^2/3", sigma_g * sigma_g / 3.0),
        ("4/3 Delta^2", 4.0 * delta * delta / 3.0),
    ];
    for (name, bound) in checks {
        if size > floor_bound(bound) {
            return Err(Error::BoundViolation(format!(
                "strong clique {:?} of size {size} exceeds {name} = {bound}",
                h.to_vec()
            )));
        }
    }
    Ok(())
}

/// Exhaustive clique enumeration over the conflict graph with no pruning
/// beyond candidate intersection. Shares no code with the branch-and-bound.
pub fn brute_force_omega(g: &Graph) -> Result<usize> {
    let m = g.edge_count();
    if m > BRUTE_FORCE_MAX_EDGES {
        return Err(Error::TooLarge(format!(
            "brute force accepts at most {BRUTE_FORCE_MAX_EDGES} edges, got {m}"
        )));
    }
    let n = g.vertex_count();
    let mut joined = vec![vec![false; n]; n];
    for &(u, v) in g.edges() {
        joined[u][v] = true;
        joined[v][u] = true;
    }
    let edges = g.edges();
    let mut adj = vec![0u32; m];
    for e in 0..m {
        for f in 0..m {
            if e == f {
                continue;
            }
            let (a, b) = edges[e];
            let (c, d) = edges[f];
            let ends = [a, b];
            let others = [c, d];
            let close = ends
                .iter()
                .any(|&x| others.iter().any(|&y| x == y || joined[x][y]));
            if close {
                adj[e] |= 1 << f;
            }
        }
    }

    fn grow(adj: &[u32], cand: u32, size: usize, best: &mut usize) {
        *best = (*best).max(size);
        let mut rest = cand;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let later = !((2u32 << i).wrapping_sub(1));
            grow(adj, cand & adj[i] & later, size + 1, best);
        }
    }

    let all = (1u32 << m) - 1;
    let mut best = 0;
    grow(&adj, all, 0, &mut best);
    Ok(best)
}
