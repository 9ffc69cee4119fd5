//! Line graphs and the square of the line graph.
//!
//! Two edges are *strongly adjacent* when their distance in the line graph is
//! at most 2: they share an endpoint, or some edge joins an endpoint of one
//! to an endpoint of the other. The conflict graph on edge ids under this
//! relation is `L(G)^2`, and a strong clique is a clique in it.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph};

/// One vertex per edge of `g`; adjacent iff the edges share an endpoint.
/// Parallel edges share both endpoints and are therefore adjacent.
pub fn line_graph(g: &Graph) -> Graph {
    let mut pairs = BTreeSet::new();
    for v in 0..g.vertex_count() {
        let inc = g.incident(v);
        for (i, &e) in inc.iter().enumerate() {
            for &f in &inc[i + 1..] {
                pairs.insert((e.min(f), e.max(f)));
            }
        }
    }
    Graph::new(g.edge_count(), pairs).expect("line graph edges are valid")
}

pub fn strongly_adjacent(g: &Graph, e: EdgeId, f: EdgeId) -> Result<bool> {
    let (a, b) = g.edge(e)?;
    let (c, d) = g.edge(f)?;
    if e == f {
        return Err(Error::SameEdge(e));
    }
    let share = a == c || a == d || b == c || b == d;
    Ok(share || g.has_edge(a, c) || g.has_edge(a, d) || g.has_edge(b, c) || g.has_edge(b, d))
}

/// Adjacency of `L(G)^2` over the edge ids of its host graph.
#[derive(Clone, Debug)]
pub struct EdgeConflictGraph {
    adjacency: Vec<BitSet>,
}

impl EdgeConflictGraph {
    /// Number of conflict vertices, i.e. edges of the host.
    pub fn len(&self) -> usize {
        self.adjacency.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adjacency.is_empty()
    }

    pub fn conflicts(&self, e: EdgeId) -> &BitSet {
        &self.adjacency[e]
    }

    pub fn adjacent(&self, e: EdgeId, f: EdgeId) -> bool {
        self.adjacency[e].contains(f)
    }

    pub fn degree(&self, e: EdgeId) -> usize {
        self.adjacency[e].count()
    }

    /// The conflict graph as an ordinary graph, for export.
    pub fn to_graph(&self) -> Graph {
        let edges = (0..self.len()).flat_map(|e| {
            self.adjacency[e]
                .iter()
                .filter(move |&f| f > e)
                .map(move |f| (e, f))
        });
        Graph::new(self.len(), edges).expect("conflict edges are valid")
    }
}

/// Materializes `L(G)^2`. Edge `f` conflicts with `e = uv` iff `f` has an
/// endpoint in the closed neighbourhood of `u` or of `v`.
pub fn square_of_line_graph(g: &Graph) -> EdgeConflictGraph {
    let m = g.edge_count();
    let adjacency = (0..m)
        .into_par_iter()
        .map(|e| {
            let (u, v) = g.endpoints(e);
            let mut row = BitSet::new(m);
            let mut mark = |w: usize| {
                for &f in g.incident(w) {
                    row.insert(f);
                }
            };
            mark(u);
            mark(v);
            for w in g.neighbors(u).chain(g.neighbors(v)) {
                mark(w);
            }
            row.remove(e);
            row
        })
        .collect();
    EdgeConflictGraph { adjacency }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn line_graph_examples() {
        let l = line_graph(&cycle(5));
        assert_eq!(l.vertex_count(), 5);
        assert_eq!(l.edge_count(), 5);
        assert!(l.degrees().iter().all(|&d| d == 2));
        assert!(l.bipartition().is_none());

        let star = Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(line_graph(&star).edges(), &[(0, 1), (0, 2), (1, 2)]);

        let par = Graph::new(2, [(0, 1), (0, 1)]).unwrap();
        assert_eq!(line_graph(&par).edges(), &[(0, 1)]);
    }

    #[test]
    fn predicate_examples() {
        let p4 = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(strongly_adjacent(&p4, 0, 2).unwrap());
        let two_k2 = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!(!strongly_adjacent(&two_k2, 0, 1).unwrap());
        let c5 = cycle(5);
        for e in 0..5 {
            for f in 0..5 {
                if e != f {
                    assert!(strongly_adjacent(&c5, e, f).unwrap());
                }
            }
        }
        assert!(matches!(
            strongly_adjacent(&c5, 2, 2),
            Err(Error::SameEdge(2))
        ));
        assert!(strongly_adjacent(&c5, 0, 9).is_err());
    }

    #[test]
    fn square_examples() {
        let sq = square_of_line_graph(&cycle(5));
        assert!((0..5).all(|e| sq.degree(e) == 4));

        let two_k2 = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        let sq = square_of_line_graph(&two_k2);
        assert_eq!(sq.degree(0) + sq.degree(1), 0);

        let k22 = Graph::new(4, [(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        let sq = square_of_line_graph(&k22);
        assert_eq!(sq.to_graph().edge_count(), 6);
    }

    #[test]
    fn parallel_edges_conflict() {
        let g = Graph::new(3, [(0, 1), (0, 1), (1, 2)]).unwrap();
        let sq = square_of_line_graph(&g);
        assert!(sq.adjacent(0, 1));
        assert!(strongly_adjacent(&g, 0, 1).unwrap());
    }
}
