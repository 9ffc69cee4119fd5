//! Extremal families, seeded random models and exhaustive enumeration.
//!
//! Random families draw from `ChaCha8Rng::seed_from_u64(seed)` and test each
//! candidate pair, in lexicographic order, with `rng.gen::<f64>() < p`. The
//! output for a given seed is therefore fixed across platforms.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest `n` accepted by [`all_graphs`].
pub const ALL_GRAPHS_MAX_N: usize = 7;

/// Replaces every vertex of a `c`-cycle by an independent set of `k`
/// vertices and joins consecutive sets completely. Vertex `i * k + j` is the
/// `j`-th copy of cycle vertex `i`.
pub fn cycle_blowup(c: usize, k: usize) -> Result<Graph> {
    if c < 3 {
        return Err(Error::Domain(format!("cycle length must be >= 3, got {c}")));
    }
    if k < 1 {
        return Err(Error::Domain("blow-up factor must be >= 1".into()));
    }
    let edges = (0..c).flat_map(|i| {
        let j = (i + 1) % c;
        (0..k).flat_map(move |p| (0..k).map(move |q| (i * k + p, j * k + q)))
    });
    Graph::new(c * k, edges)
}

/// `K_{p,q}` with sides `0..p` and `p..p+q`.
pub fn complete_bipartite(p: usize, q: usize) -> Result<Graph> {
    Graph::new(p + q, (0..p).flat_map(|a| (0..q).map(move |b| (a, p + b))))
}

pub fn path(n: usize) -> Result<Graph> {
    Graph::new(n, (1..n).map(|i| (i - 1, i)))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::Domain(format!("cycle needs n >= 3, got {n}")));
    }
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

fn check_p(p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "probability must lie in [0, 1], got {p}"
        )))
    }
}

/// Erdős–Rényi `G(n, p)`.
pub fn gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    check_p(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges)
}

/// Random bipartite graph with sides `0..n1` and `n1..n1+n2`.
pub fn random_bipartite(n1: usize, n2: usize, p: f64, seed: u64) -> Result<Graph> {
    check_p(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for a in 0..n1 {
        for b in 0..n2 {
            if rng.gen::<f64>() < p {
                edges.push((a, n1 + b));
            }
        }
    }
    Graph::new(n1 + n2, edges)
}

/// Every labelled simple graph on `n` vertices, ordered by edge mask. Bit
/// `t` of the mask selects the `t`-th pair `(u, v)`, `u < v`, in
/// lexicographic order.
pub fn all_graphs(n: usize) -> Result<AllGraphs> {
    if n > ALL_GRAPHS_MAX_N {
        return Err(Error::TooLarge(format!(
            "exhaustive enumeration is capped at n = {ALL_GRAPHS_MAX_N}, got {n}"
        )));
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Ok(AllGraphs {
        n,
        total: 1u64 << pairs.len(),
        pairs,
        next: 0,
    })
}

#[derive(Clone, Debug)]
pub struct AllGraphs {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next: u64,
    total: u64,
}

impl AllGraphs {
    pub fn total(&self) -> u64 {
        self.total
    }

    /// The graph with the given edge mask; lets a sweep shard the range.
    pub fn graph(&self, mask: u64) -> Graph {
        let edges = self
            .pairs
            .iter()
            .enumerate()
            .filter(|(t, _)| mask >> t & 1 == 1)
            .map(|(_, &e)| e);
        Graph::new(self.n, edges).expect("pairs are valid")
    }
}

impl Iterator for AllGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.next >= self.total {
            return None;
        }
        let g = self.graph(self.next);
        self.next += 1;
        Some(g)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.total - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for AllGraphs {}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum GeneratorSpec {
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
        seed: u64,
    },
    RandomBipartite {
        n1: usize,
        n2: usize,
        p: f64,
        seed: u64,
    },
    AllGraphs {
        n: usize,
        mask: u64,
    },
}

impl GeneratorSpec {
    pub fn family(&self) -> &'static str {
        match self {
            GeneratorSpec::CycleBlowup { .. } => "cycle_blowup",
            GeneratorSpec::CompleteBipartite { .. } => "complete_bipartite",
            GeneratorSpec::Path { .. } => "path",
            GeneratorSpec::Cycle { .. } => "cycle",
            GeneratorSpec::Gnp { .. } => "gnp",
            GeneratorSpec::RandomBipartite { .. } => "random_bipartite",
            GeneratorSpec::AllGraphs { .. } => "all_graphs",
        }
    }

    /// Parameters as `key=value` pairs joined by `;`.
    pub fn params(&self) -> String {
        match *self {
            GeneratorSpec::CycleBlowup { c, k } => format!("c={c};k={k}"),
            GeneratorSpec::CompleteBipartite { p, q } => format!("p={p};q={q}"),
            GeneratorSpec::Path { n } | GeneratorSpec::Cycle { n } => format!("n={n}"),
            GeneratorSpec::Gnp { n, p, seed } => format!("n={n};p={p};seed={seed}"),
            GeneratorSpec::RandomBipartite { n1, n2, p, seed } => {
                format!("n1={n1};n2={n2};p={p};seed={seed}")
            }
            GeneratorSpec::AllGraphs { n, mask } => format!("n={n};mask={mask}"),
        }
    }

    pub fn generate(&self) -> Result<Graph> {
        match *self {
            GeneratorSpec::CycleBlowup { c, k } => cycle_blowup(c, k),
            GeneratorSpec::CompleteBipartite { p, q } => complete_bipartite(p, q),
            GeneratorSpec::Path { n } => path(n),
            GeneratorSpec::Cycle { n } => cycle(n),
            GeneratorSpec::Gnp { n, p, seed } => gnp(n, p, seed),
            GeneratorSpec::RandomBipartite { n1, n2, p, seed } => random_bipartite(n1, n2, p, seed),
            GeneratorSpec::AllGraphs { n, mask } => {
                let all = all_graphs(n)?;
                if mask >= all.total() {
                    return Err(Error::Domain(format!(
                        "mask {mask} out of range for n = {n}"
                    )));
                }
                Ok(all.graph(mask))
            }
        }
    }
}

impl fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.family(), self.params())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn blowups() {
        let g = cycle_blowup(5, 3).unwrap();
        assert_eq!(
            (g.vertex_count(), g.edge_count(), g.max_degree()),
            (15, 45, 6)
        );
        assert_eq!(cycle_blowup(5, 1).unwrap(), cycle(5).unwrap());
        assert_eq!(cycle_blowup(5, 2).unwrap().edge_count(), 20);
        assert!(cycle_blowup(2, 1).is_err());
        assert!(cycle_blowup(5, 0).is_err());
    }

    #[test]
    fn bipartite_family() {
        assert_eq!(complete_bipartite(3, 3).unwrap().edge_count(), 9);
        assert_eq!(complete_bipartite(1, 1).unwrap().edges(), &[(0, 1)]);
        assert_eq!(complete_bipartite(0, 4).unwrap().edge_count(), 0);
    }

    #[test]
    fn random_extremes() {
        assert_eq!(gnp(8, 0.0, 1).unwrap().edge_count(), 0);
        assert_eq!(gnp(8, 1.0, 1).unwrap().edge_count(), 28);
        assert_eq!(random_bipartite(3, 4, 1.0, 9).unwrap().edge_count(), 12);
        assert_eq!(random_bipartite(3, 4, 0.0, 9).unwrap().edge_count(), 0);
        assert!(gnp(4, 1.5, 0).is_err());
        assert!(random_bipartite(2, 2, -0.1, 0).is_err());
    }

    #[test]
    fn seeded_reproducibility() {
        assert_eq!(gnp(12, 0.3, 77).unwrap(), gnp(12, 0.3, 77).unwrap());
        assert_ne!(gnp(12, 0.3, 77).unwrap(), gnp(12, 0.3, 78).unwrap());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(all_graphs(2).unwrap().count(), 2);
        assert_eq!(all_graphs(3).unwrap().count(), 8);
        assert_eq!(all_graphs(4).unwrap().count(), 64);
        assert_eq!(all_graphs(0).unwrap().count(), 1);
        assert!(all_graphs(8).is_err());
        let mut it = all_graphs(3).unwrap();
        assert_eq!(it.len(), 8);
        assert_eq!(it.next().unwrap().edge_count(), 0);
        assert_eq!(it.next().unwrap().edges(), &[(0, 1)]);
        assert_eq!(it.next().unwrap().edges(), &[(0, 2)]);
        assert_eq!(it.last().unwrap().edge_count(), 3);
    }

    #[test]
    fn spec_round_trip() {
        let spec = GeneratorSpec::CycleBlowup { c: 5, k: 2 };
        assert_eq!(spec.to_string(), "cycle_blowup(c=5;k=2)");
        assert_eq!(spec.generate().unwrap().edge_count(), 20);
        assert!(GeneratorSpec::AllGraphs { n: 3, mask: 8 }
            .generate()
            .is_err());
        assert_eq!(
            GeneratorSpec::AllGraphs { n: 3, mask: 7 }
                .generate()
                .unwrap()
                .edge_count(),
            3
        );
    }
}
