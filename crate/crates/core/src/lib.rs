//! Strong cliques in graphs: sets of edges that are pairwise within
//! distance two, i.e. cliques in the square of the line graph.
//!
//! The crate computes the maximum size `ω(L(G)²)` exactly, evaluates the
//! known upper bounds in terms of the maximum degree `Δ` and the Ore-degree
//! `σ`, and builds explicit certificates that a given clique respects them.
//!
//! ```
//! use strong_clique::{generators, max_strong_clique, SolveOptions};
//!
//! // C5 blown up by 2: Δ = 4 and ω = 20 = 1.25 Δ².
//! let g = generators::cycle_blowup(5, 2)?;
//! let r = max_strong_clique(&g, &SolveOptions::default())?;
//! assert_eq!(r.omega, 20);
//! # Ok::<(), strong_clique::Error>(())
//! ```

mod bitset;
pub mod bounds;
pub mod certificates;
mod error;
pub mod generators;
pub mod graph;
pub mod io;
pub mod linegraph;
pub mod solver;
pub mod stability;
pub mod sweep;

pub use bitset::BitSet;
pub use bounds::{bound_catalog, ore_degree, BoundCatalog, OreReport};
pub use certificates::{decompose_bipartite, decompose_reduction, Check};
pub use error::{Error, ErrorKind, Result};
pub use graph::{Bipartition, EdgeId, EdgeSet, Graph, Side, Vertex};
pub use io::{parse_graph, read_graph_file, write_graph};
pub use linegraph::{line_graph, square_of_line_graph, EdgeConflictGraph};
pub use solver::{max_strong_clique, verify_strong_clique, SolveOptions, SolveResult};
pub use stability::stability_pipeline;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub struct Introduction;
    #[doc = include_str!("../../../book/src/strong-cliques.md")]
    pub struct StrongCliques;
    #[doc = include_str!("../../../book/src/bounds.md")]
    pub struct Bounds;
    #[doc = include_str!("../../../book/src/solver.md")]
    pub struct Solver;
    #[doc = include_str!("../../../book/src/certificates.md")]
    pub struct Certificates;
    #[doc = include_str!("../../../book/src/stability.md")]
    pub struct Stability;
    #[doc = include_str!("../../../book/src/sweeps.md")]
    pub struct Sweeps;
}
