//! Undirected multigraphs without loops, plus the vertex/edge set types that
//! everything else is phrased in.
//!
//! Edge ids are `0..m` in insertion order and never change. Parallel edges
//! are distinct ids, and degrees count them with multiplicity.

use std::collections::VecDeque;

use serde::Serialize;

use crate::bitset::BitSet;
use crate::error::{Error, Result};

pub type Vertex = usize;
pub type EdgeId = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    incidence: Vec<Vec<EdgeId>>,
    adjacent: Vec<BitSet>,
}

impl Graph {
    /// Builds a graph on `n` vertices. Loops and out-of-range endpoints are
    /// rejected; repeated pairs become parallel edges.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut g = Graph {
            n,
            edges: Vec::new(),
            incidence: vec![Vec::new(); n],
            adjacent: vec![BitSet::new(n); n],
        };
        for (u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::Loop(u));
            }
            let id = g.edges.len();
            g.edges.push((u, v));
            g.incidence[u].push(id);
            g.incidence[v].push(id);
            g.adjacent[u].insert(v);
            g.adjacent[v].insert(u);
        }
        Ok(g)
    }

    pub fn empty(n: usize) -> Self {
        Graph::new(n, std::iter::empty()).expect("edgeless graph is valid")
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> Result<(Vertex, Vertex)> {
        self.edges.get(e).copied().ok_or(Error::EdgeOutOfRange {
            edge: e,
            m: self.edges.len(),
        })
    }

    pub(crate) fn endpoints(&self, e: EdgeId) -> (Vertex, Vertex) {
        self.edges[e]
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    pub fn check_edge(&self, e: EdgeId) -> Result<()> {
        self.edge(e).map(|_| ())
    }

    /// Edge ids incident to `v`, in id order.
    pub fn incident(&self, v: Vertex) -> &[EdgeId] {
        &self.incidence[v]
    }

    /// Distinct neighbours of `v` as a bitset over `0..n`.
    pub fn neighbor_set(&self, v: Vertex) -> &BitSet {
        &self.adjacent[v]
    }

    /// Distinct neighbours in increasing order.
    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adjacent[v].iter()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && self.adjacent[u].contains(v)
    }

    /// Number of incident edge-endpoints; parallel edges count once each.
    pub fn degree(&self, v: Vertex) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.incidence[v].len())
    }

    pub(crate) fn deg(&self, v: Vertex) -> usize {
        self.incidence[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.incidence.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.incidence.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_parallel_edges(&self) -> bool {
        let distinct: usize = self.adjacent.iter().map(BitSet::count).sum();
        distinct != 2 * self.edges.len()
    }

    /// BFS distances from every vertex of `sources`; `None` marks unreachable.
    pub fn bfs_distances(&self, sources: &[Vertex]) -> Result<Vec<Option<usize>>> {
        let mut dist = vec![None; self.n];
        let mut queue = VecDeque::new();
        for &s in sources {
            self.check_vertex(s)?;
            if dist[s].is_none() {
                dist[s] = Some(0);
                queue.push_back(s);
            }
        }
        while let Some(u) = queue.pop_front() {
            let du = dist[u].expect("queued vertices have a distance");
            for w in self.neighbors(u) {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        Ok(dist)
    }

    /// Shortest-path length in edges, or `None` when `v` is unreachable from `u`.
    pub fn distance(&self, u: Vertex, v: Vertex) -> Result<Option<usize>> {
        self.check_vertex(v)?;
        Ok(self.bfs_distances(&[u])?[v])
    }

    /// All edges with both ends in `vertices`, relabelled to `0..|S|` in
    /// increasing order of the original labels.
    pub fn induced_subgraph(&self, vertices: &[Vertex]) -> Result<InducedSubgraph> {
        let mut to_old: Vec<Vertex> = vertices.to_vec();
        for &v in &to_old {
            self.check_vertex(v)?;
        }
        to_old.sort_unstable();
        to_old.dedup();
        let mut to_new = vec![None; self.n];
        for (i, &v) in to_old.iter().enumerate() {
            to_new[v] = Some(i);
        }
        let mut edges = Vec::new();
        let mut edge_to_old = Vec::new();
        for (id, &(u, v)) in self.edges.iter().enumerate() {
            if let (Some(a), Some(b)) = (to_new[u], to_new[v]) {
                edges.push((a, b));
                edge_to_old.push(id);
            }
        }
        let graph = Graph::new(to_old.len(), edges)?;
        Ok(InducedSubgraph {
            graph,
            to_old,
            to_new,
            edge_to_old,
        })
    }

    /// A proper 2-colouring, if one exists. In each connected component the
    /// smallest-index vertex goes to side A.
    pub fn bipartition(&self) -> Option<Bipartition> {
        let mut side: Vec<Option<Side>> = vec![None; self.n];
        let mut queue = VecDeque::new();
        for root in 0..self.n {
            if side[root].is_some() {
                continue;
            }
            side[root] = Some(Side::A);
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                let su = side[u].expect("queued vertices are coloured");
                for w in self.neighbors(u) {
                    match side[w] {
                        None => {
                            side[w] = Some(su.other());
                            queue.push_back(w);
                        }
                        Some(sw) if sw == su => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(Bipartition {
            side: side.into_iter().map(|s| s.expect("all coloured")).collect(),
        })
    }

    /// The cross pairs of `part` that are not edges of `self`.
    pub fn bipartite_complement(&self, part: &Bipartition) -> Result<Graph> {
        if self.has_parallel_edges() {
            return Err(Error::Unsupported(
                "bipartite complement of a multigraph".into(),
            ));
        }
        part.validate(self)?;
        let side_b = part.side_b();
        let mut edges = Vec::new();
        for a in part.side_a() {
            for &b in &side_b {
                if !self.has_edge(a, b) {
                    edges.push((a, b));
                }
            }
        }
        Graph::new(self.n, edges)
    }
}

/// Result of [`Graph::induced_subgraph`].
#[derive(Clone, Debug)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// New label to original label.
    pub to_old: Vec<Vertex>,
    /// Original label to new label, `None` outside the subset.
    pub to_new: Vec<Option<Vertex>>,
    /// New edge id to original edge id.
    pub edge_to_old: Vec<EdgeId>,
}

impl InducedSubgraph {
    /// Maps host edge ids into the subgraph, dropping those not present.
    pub fn map_edges(&self, host_edges: &EdgeSet) -> EdgeSet {
        let mut ids: Vec<EdgeId> = Vec::new();
        for &e in host_edges.iter_slice() {
            if let Ok(i) = self.edge_to_old.binary_search(&e) {
                ids.push(i);
            }
        }
        EdgeSet::from_sorted(ids)
    }

    pub fn edges_to_host(&self, local: &EdgeSet) -> EdgeSet {
        EdgeSet::from_sorted(local.iter().map(|e| self.edge_to_old[e]).collect())
    }

    pub fn vertices_to_host<I: IntoIterator<Item = Vertex>>(&self, local: I) -> Vec<Vertex> {
        local.into_iter().map(|v| self.to_old[v]).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    A,
    B,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::A => Side::B,
            Side::B => Side::A,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartition {
    side: Vec<Side>,
}

impl Bipartition {
    pub fn from_sides(side: Vec<Side>) -> Self {
        Bipartition { side }
    }

    pub fn side(&self, v: Vertex) -> Side {
        self.side[v]
    }

    pub fn side_a(&self) -> Vec<Vertex> {
        self.members(Side::A)
    }

    pub fn side_b(&self) -> Vec<Vertex> {
        self.members(Side::B)
    }

    fn members(&self, s: Side) -> Vec<Vertex> {
        (0..self.side.len())
            .filter(|&v| self.side[v] == s)
            .collect()
    }

    /// Checks that the partition covers `g` and every edge crosses it.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.side.len() != g.vertex_count() {
            return Err(Error::Precondition(format!(
                "bipartition covers {} vertices, graph has {}",
                self.side.len(),
                g.vertex_count()
            )));
        }
        for (id, &(u, v)) in g.edges().iter().enumerate() {
            if self.side[u] == self.side[v] {
                return Err(Error::Precondition(format!(
                    "edge {id} = ({u},{v}) does not cross the bipartition"
                )));
            }
        }
        Ok(())
    }

    /// Restriction to an induced subgraph, keeping each vertex's side.
    pub fn restrict(&self, sub: &InducedSubgraph) -> Bipartition {
        Bipartition {
            side: sub.to_old.iter().map(|&v| self.side[v]).collect(),
        }
    }
}

/// A set of edge ids of some host graph, kept sorted and deduplicated.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct EdgeSet {
    ids: Vec<EdgeId>,
}

impl EdgeSet {
    /// Validates every id against `g`.
    pub fn new<I: IntoIterator<Item = EdgeId>>(g: &Graph, ids: I) -> Result<Self> {
        let mut ids: Vec<EdgeId> = ids.into_iter().collect();
        for &e in &ids {
            g.check_edge(e)?;
        }
        ids.sort_unstable();
        ids.dedup();
        Ok(EdgeSet { ids })
    }

    pub fn all(g: &Graph) -> Self {
        EdgeSet {
            ids: (0..g.edge_count()).collect(),
        }
    }

    pub fn empty() -> Self {
        EdgeSet::default()
    }

    pub(crate) fn from_sorted(ids: Vec<EdgeId>) -> Self {
        debug_assert!(ids.windows(2).all(|w| w[0] < w[1]));
        EdgeSet { ids }
    }

    pub(crate) fn from_unsorted(mut ids: Vec<EdgeId>) -> Self {
        ids.sort_unstable();
        ids.dedup();
        EdgeSet { ids }
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.ids.binary_search(&e).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.ids.iter().copied()
    }

    pub fn iter_slice(&self) -> &[EdgeId] {
        &self.ids
    }

    pub fn to_vec(&self) -> Vec<EdgeId> {
        self.ids.clone()
    }

    /// Validates against `g`; sets are not tied to their host by type.
    pub fn check(&self, g: &Graph) -> Result<()> {
        match self.ids.last() {
            Some(&e) => g.check_edge(e),
            None => Ok(()),
        }
    }

    /// Degree of every vertex of `g` counting only edges in this set.
    pub fn degrees_in(&self, g: &Graph) -> Vec<usize> {
        let mut d = vec![0; g.vertex_count()];
        for &e in &self.ids {
            let (u, v) = g.endpoints(e);
            d[u] += 1;
            d[v] += 1;
        }
        d
    }

    /// Vertices touched by the set, increasing.
    pub fn support(&self, g: &Graph) -> Vec<Vertex> {
        let mut vs: Vec<Vertex> = self
            .ids
            .iter()
            .flat_map(|&e| {
                let (u, v) = g.endpoints(e);
                [u, v]
            })
            .collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }
}
