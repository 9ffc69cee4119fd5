//! Per-instance certificates for the two counting arguments behind the
//! Ore-degree bounds.
//!
//! Given a host `G` and a strong clique `H`, each decomposition computes the
//! vertex and edge classes the counting argument uses and evaluates every
//! inequality on the instance. A failed check means either a bug or a
//! counterexample, so callers treat it as fatal.
//!
//! Both decompositions first restrict `G` to the vertices of `H`: `H` stays a
//! strong clique there, since every joining edge has both ends in `V(H)`.
//! Degrees and distances are taken in that restriction. The Ore-degree
//! `sigma` is always `sigma_G(H)` in the original host.

use serde::Serialize;

use crate::bitset::BitSet;
use crate::bounds::{self, average_bound, floor_bound, ore_degree, simple_bound};
use crate::error::{Error, Result};
use crate::graph::{Bipartition, EdgeId, EdgeSet, Graph, InducedSubgraph, Vertex};
use crate::solver::{verify_strong_clique, CliqueVerdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    /// `lhs <= rhs`
    AtMost,
    /// `lhs == rhs`
    Equals,
}

/// One evaluated inequality or identity.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub relation: Relation,
    pub lhs: f64,
    pub rhs: f64,
    /// `rhs - lhs`; zero marks a tight instance.
    pub slack: f64,
    pub ok: bool,
}

impl Check {
    pub(crate) fn at_most(name: &'static str, lhs: f64, rhs: f64) -> Self {
        Check {
            name,
            relation: Relation::AtMost,
            lhs,
            rhs,
            slack: rhs - lhs,
            ok: lhs <= rhs + 1e-9,
        }
    }

    pub(crate) fn equals(name: &'static str, lhs: f64, rhs: f64) -> Self {
        Check {
            name,
            relation: Relation::Equals,
            lhs,
            rhs,
            slack: rhs - lhs,
            ok: lhs == rhs,
        }
    }

    pub fn is_tight(&self) -> bool {
        self.ok && self.slack.abs() < 1e-9
    }
}

fn all_ok(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.ok)
}

fn failed_names(checks: &[Check]) -> Vec<&'static str> {
    checks.iter().filter(|c| !c.ok).map(|c| c.name).collect()
}

/// Validates `h` and restricts `g` to its support.
fn restrict_to_clique(g: &Graph, h: &EdgeSet) -> Result<(InducedSubgraph, EdgeSet)> {
    h.check(g)?;
    if h.is_empty() {
        return Err(Error::Precondition("edge set is empty".into()));
    }
    if let CliqueVerdict::Fails(e, f) = verify_strong_clique(g, h)? {
        return Err(Error::Precondition(format!(
            "edges {e} and {f} are not strongly adjacent"
        )));
    }
    let sub = g.induced_subgraph(&h.support(g))?;
    let local = sub.map_edges(h);
    debug_assert_eq!(local.len(), h.len());
    Ok((sub, local))
}

fn members(set: &BitSet) -> Vec<Vertex> {
    set.iter().collect()
}

fn first_argmax(values: impl Iterator<Item = (Vertex, usize)>) -> Option<Vertex> {
    let mut best: Option<(Vertex, usize)> = None;
    for (v, d) in values {
        if best.is_none_or(|(_, bd)| d > bd) {
            best = Some((v, d));
        }
    }
    best.map(|(v, _)| v)
}

/// Neighbours of `v` through edges of `h`, as a bitset over the vertices.
fn h_neighbors(g: &Graph, h: &EdgeSet, v: Vertex) -> BitSet {
    let mut out = BitSet::new(g.vertex_count());
    for &e in g.incident(v) {
        if h.contains(e) {
            let (a, b) = g.edges()[e];
            out.insert(if a == v { b } else { a });
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum EdgeClass {
    C,
    S,
    A,
}

/// Certificate for `|E(H)| <= Delta_H (sigma - Delta_H)` on a bipartite host.
#[derive(Clone, Debug, Serialize)]
pub struct BipartiteDecomposition {
    /// Vertex of maximum `H`-degree, smallest index on ties.
    pub v: Vertex,
    pub delta_h: usize,
    pub sigma: usize,
    /// `sigma` measured in `G[V(H)]`.
    pub sigma_restricted: usize,
    /// `N_H(v)`.
    pub a: Vec<Vertex>,
    /// `N_G(v) \ A`.
    pub c: Vec<Vertex>,
    /// Vertices at distance 2 from `v` that have an `H`-edge to a vertex at
    /// distance 3.
    pub s: Vec<Vertex>,
    /// `H`-edges meeting `A` but not `S`.
    pub e_a: EdgeSet,
    /// `H`-edges meeting `C`.
    pub e_c: EdgeSet,
    /// `H`-edges meeting `S`.
    pub e_s: EdgeSet,
    /// Edges lying in more than one of the three classes.
    pub overlap: EdgeSet,
    /// Reporting class of each edge under the priority `C > S > A`.
    pub classes: Vec<(EdgeId, EdgeClass)>,
    pub checks: Vec<Check>,
}

impl BipartiteDecomposition {
    pub fn all_ok(&self) -> bool {
        all_ok(&self.checks)
    }

    pub fn failed(&self) -> Vec<&'static str> {
        failed_names(&self.checks)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

pub fn decompose_bipartite(
    g: &Graph,
    part: &Bipartition,
    h: &EdgeSet,
) -> Result<BipartiteDecomposition> {
    part.validate(g)?;
    let sigma = ore_degree(g, h)?.sigma_g_h;
    let (sub, hl) = restrict_to_clique(g, h)?;
    let r = &sub.graph;
    let n = r.vertex_count();
    let sigma_restricted = ore_degree(r, &hl)?.sigma_g_h;
    let dh = hl.degrees_in(r);
    let v = first_argmax(dh.iter().copied().enumerate()).expect("H is nonempty");
    let delta_h = dh[v];
    let dist = r.bfs_distances(&[v])?;
    let at = |u: Vertex, d: usize| dist[u] == Some(d);

    let a_set = h_neighbors(r, &hl, v);
    let mut c_set = r.neighbor_set(v).clone();
    c_set.difference_with(&a_set);
    let mut s_set = BitSet::new(n);
    for e in hl.iter() {
        let (x, y) = r.endpoints(e);
        if at(x, 2) && at(y, 3) {
            s_set.insert(x);
        }
        if at(y, 2) && at(x, 3) {
            s_set.insert(y);
        }
    }

    let meets = |e: EdgeId, set: &BitSet| {
        let (x, y) = r.endpoints(e);
        set.contains(x) || set.contains(y)
    };
    let select = |pred: &dyn Fn(EdgeId) -> bool| {
        EdgeSet::from_sorted(hl.iter().filter(|&e| pred(e)).collect())
    };
    let e_c = select(&|e| meets(e, &c_set));
    let e_s = select(&|e| meets(e, &s_set));
    let e_a = select(&|e| meets(e, &a_set) && !meets(e, &s_set));

    let mut classes = Vec::new();
    let mut overlap = Vec::new();
    let mut covered = 0usize;
    for e in hl.iter() {
        let hits = [e_c.contains(e), e_s.contains(e), e_a.contains(e)];
        let count = hits.iter().filter(|&&b| b).count();
        if count > 1 {
            overlap.push(e);
        }
        if count > 0 {
            covered += 1;
        }
        let class = if hits[0] {
            Some(EdgeClass::C)
        } else if hits[1] {
            Some(EdgeClass::S)
        } else if hits[2] {
            Some(EdgeClass::A)
        } else {
            None
        };
        if let Some(class) = class {
            classes.push((sub.edge_to_old[e], class));
        }
    }

    let m_h = hl.len() as f64;
    let (na, nc, ns) = (a_set.count(), c_set.count(), s_set.count());
    let dv = r.deg(v) as f64;
    let (sig, dhf) = (sigma as f64, delta_h as f64);
    let s_to_a = s_set
        .iter()
        .map(|u| r.neighbor_set(u).intersection_count(&a_set))
        .sum::<usize>();
    let far = dist.iter().filter(|d| d.is_none_or(|d| d > 3)).count();
    let escaped = hl
        .iter()
        .filter(|&e| !meets(e, r.neighbor_set(v)) && !meets(e, &s_set))
        .count();
    // Largest excess of E_A-edges at a vertex x of A over d(x) - |S|.
    let a_excess = a_set
        .iter()
        .map(|x| {
            let at_x = r.incident(x).iter().filter(|&&e| e_a.contains(e)).count();
            (at_x + ns) as f64 - r.deg(x) as f64
        })
        .fold(0.0, f64::max);

    let checks = vec![
        Check::equals("within_distance_3", far as f64, 0.0),
        Check::equals("edges_outside_neighborhood_meet_s", escaped as f64, 0.0),
        Check::equals("cover_identity", covered as f64, m_h),
        Check::equals("s_complete_to_a", s_to_a as f64, (ns * na) as f64),
        Check::at_most("e_c_bound", e_c.len() as f64, nc as f64 * dhf),
        Check::at_most("e_s_bound", e_s.len() as f64, ns as f64 * dhf),
        Check::at_most("e_a_per_vertex", a_excess, 0.0),
        Check::at_most(
            "e_a_bound",
            e_a.len() as f64,
            na as f64 * (sig - dv - ns as f64),
        ),
        Check::at_most(
            "class_sum",
            m_h,
            (dv - na as f64) * dhf + na as f64 * (sig - dv - ns as f64) + ns as f64 * dhf,
        ),
        Check::at_most("final_bound", m_h, dhf * (sig - dhf)),
        Check::at_most("am_gm", dhf * (sig - dhf), sig * sig / 4.0),
    ];

    let to_host = |set: &BitSet| sub.vertices_to_host(set.iter());
    Ok(BipartiteDecomposition {
        v: sub.to_old[v],
        delta_h,
        sigma,
        sigma_restricted,
        a: to_host(&a_set),
        c: to_host(&c_set),
        s: to_host(&s_set),
        e_a: sub.edges_to_host(&e_a),
        e_c: sub.edges_to_host(&e_c),
        e_s: sub.edges_to_host(&e_s),
        overlap: sub.edges_to_host(&EdgeSet::from_sorted(overlap)),
        classes,
        checks,
    })
}

/// The `a` at which the inductive hypothesis is a proven statement.
pub const PROVEN_A: f64 = 1.0 / 3.0;

/// Certificate for the counting argument behind `(1+a)/4 * sigma^2`,
/// evaluated at `a = 1/3`.
#[derive(Clone, Debug, Serialize)]
pub struct ReductionDecomposition {
    /// Vertex of maximum `H`-degree.
    pub x: Vertex,
    /// `H`-neighbour of `x` of maximum `H`-degree.
    pub y: Vertex,
    pub dx: usize,
    pub dy: usize,
    pub sigma: usize,
    /// `N_G(x) \ N_G(y)`, without `y`.
    pub a1: Vec<Vertex>,
    /// `N_G(x) ∩ N_G(y)`.
    pub a2: Vec<Vertex>,
    /// `N_G(y) \ N_G(x)`, without `x`.
    pub a3: Vec<Vertex>,
    /// Vertices at distance exactly 2 from `{x, y}`.
    pub b: Vec<Vertex>,
    /// `N_H(x) \ {y}`.
    pub c: Vec<Vertex>,
    /// `H`-edges with both ends in `A = A1 ∪ A2 ∪ A3`.
    pub e_a: EdgeSet,
    /// `H`-edges between `A1` and `B`.
    pub h1: EdgeSet,
    /// `H`-edges between `A3` and `B`.
    pub h2: EdgeSet,
    /// Ore-degree of `h1` in `G[A1 ∪ B]`.
    pub sigma1: usize,
    /// Ore-degree of `h2` in `G[A3 ∪ B]`.
    pub sigma2: usize,
    pub simple_bound: f64,
    pub average_bound: f64,
    pub checks: Vec<Check>,
}

impl ReductionDecomposition {
    pub fn all_ok(&self) -> bool {
        all_ok(&self.checks)
    }

    pub fn failed(&self) -> Vec<&'static str> {
        failed_names(&self.checks)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Induced host on `side` with the part of `edges` inside it; returns the
/// Ore-degree and whether the edges form a strong clique there.
fn piece(r: &Graph, side: &BitSet, edges: &EdgeSet) -> Result<(usize, bool)> {
    let sub = r.induced_subgraph(&members(side))?;
    let local = sub.map_edges(edges);
    debug_assert_eq!(local.len(), edges.len());
    let sigma = ore_degree(&sub.graph, &local)?.sigma_g_h;
    let clique = verify_strong_clique(&sub.graph, &local)?.is_clique();
    Ok((sigma, clique))
}

pub fn decompose_reduction(g: &Graph, h: &EdgeSet) -> Result<ReductionDecomposition> {
    let sigma = ore_degree(g, h)?.sigma_g_h;
    let (sub, hl) = restrict_to_clique(g, h)?;
    let r = &sub.graph;
    if r.has_parallel_edges() {
        return Err(Error::Precondition(
            "the reduction certificate needs a simple graph on V(H)".into(),
        ));
    }
    let n = r.vertex_count();
    let dh = hl.degrees_in(r);
    let x = first_argmax(dh.iter().copied().enumerate()).expect("H is nonempty");
    let hx = h_neighbors(r, &hl, x);
    let y = first_argmax(hx.iter().map(|w| (w, dh[w]))).expect("x has an H-edge");
    let (dx, dy) = (dh[x], dh[y]);

    let nx = r.neighbor_set(x);
    let ny = r.neighbor_set(y);
    let mut a1 = nx.clone();
    a1.difference_with(ny);
    a1.remove(y);
    let a2 = nx.intersection(ny);
    let mut a3 = ny.clone();
    a3.difference_with(nx);
    a3.remove(x);
    let mut a_all = a1.clone();
    for w in a2.iter().chain(a3.iter()) {
        a_all.insert(w);
    }
    let dist = r.bfs_distances(&[x, y])?;
    let b: BitSet = {
        let mut s = BitSet::new(n);
        for (z, d) in dist.iter().enumerate() {
            if *d == Some(2) {
                s.insert(z);
            }
        }
        s
    };
    let mut c = hx.clone();
    c.remove(y);

    let between = |e: EdgeId, p: &BitSet, q: &BitSet| {
        let (u, v) = r.endpoints(e);
        (p.contains(u) && q.contains(v)) || (p.contains(v) && q.contains(u))
    };
    let select = |pred: &dyn Fn(EdgeId) -> bool| {
        EdgeSet::from_sorted(hl.iter().filter(|&e| pred(e)).collect())
    };
    let e_a = select(&|e| between(e, &a_all, &a_all));
    let h1 = select(&|e| between(e, &a1, &b));
    let h2 = select(&|e| between(e, &a3, &b));

    let mut side1 = a1.clone();
    let mut side2 = a3.clone();
    for z in b.iter() {
        side1.insert(z);
        side2.insert(z);
    }
    let (sigma1, h1_clique) = piece(r, &side1, &h1)?;
    let (sigma2, h2_clique) = piece(r, &side2, &h2)?;

    let m_h = hl.len() as f64;
    let (sig, dxf, dyf) = (sigma as f64, dx as f64, dy as f64);
    let simple = simple_bound(sig, dxf, dyf);
    let average = average_bound(PROVEN_A, sig, dxf, dyf);
    let sum_a: usize = a_all.iter().map(|v| dh[v]).sum();
    let far = dist.iter().filter(|d| d.is_none_or(|d| d > 2)).count();
    let c_outside = {
        let mut rest = c.clone();
        rest.difference_with(&a1);
        rest.difference_with(&a2);
        rest.count()
    };
    let n_a2 = a2.count() as f64;
    let cover = dxf + dyf - 1.0 + e_a.len() as f64 + h1.len() as f64 + h2.len() as f64 + n_a2 * dxf;

    let checks = vec![
        Check::equals("within_distance_2", far as f64, 0.0),
        Check::equals("c_inside_a1_a2", c_outside as f64, 0.0),
        Check::at_most("a_size", a_all.count() as f64, sig - n_a2 - 2.0),
        Check::equals(
            "edge_count_identity",
            m_h,
            1.0 + sum_a as f64 - e_a.len() as f64,
        ),
        Check::at_most("sigma1_bound", sigma1 as f64, sig - dyf),
        Check::at_most("sigma2_bound", sigma2 as f64, sig - dxf),
        Check::at_most("simple_bound", m_h, simple),
        Check::at_most("five_term_cover", m_h, cover),
        Check::equals("h1_strong_clique", if h1_clique { 1.0 } else { 0.0 }, 1.0),
        Check::equals("h2_strong_clique", if h2_clique { 1.0 } else { 0.0 }, 1.0),
        Check::at_most(
            "h1_inductive",
            h1.len() as f64,
            floor_bound(PROVEN_A * (sigma1 * sigma1) as f64) as f64,
        ),
        Check::at_most(
            "h2_inductive",
            h2.len() as f64,
            floor_bound(PROVEN_A * (sigma2 * sigma2) as f64) as f64,
        ),
        Check::at_most("average_bound", m_h, average),
        Check::at_most("reduction_bound", m_h, (1.0 + PROVEN_A) / 4.0 * sig * sig),
    ];

    let to_host = |set: &BitSet| sub.vertices_to_host(set.iter());
    Ok(ReductionDecomposition {
        x: sub.to_old[x],
        y: sub.to_old[y],
        dx,
        dy,
        sigma,
        a1: to_host(&a1),
        a2: to_host(&a2),
        a3: to_host(&a3),
        b: to_host(&b),
        c: to_host(&c),
        e_a: sub.edges_to_host(&e_a),
        h1: sub.edges_to_host(&h1),
        h2: sub.edges_to_host(&h2),
        sigma1,
        sigma2,
        simple_bound: simple,
        average_bound: average,
        checks,
    })
}

/// `(1+a)/4 * sigma_G(H)^2`, after confirming `|E(H)|` does not exceed it.
///
/// At `a = 1/3` the bound is proven; for smaller `a` it rests on the
/// bipartite Ore-degree conjecture, and a violation refutes that instead.
pub fn reduction_bound(g: &Graph, h: &EdgeSet, a: f64) -> Result<f64> {
    bounds::check_a(a)?;
    if let CliqueVerdict::Fails(e, f) = verify_strong_clique(g, h)? {
        return Err(Error::Precondition(format!(
            "edges {e} and {f} are not strongly adjacent"
        )));
    }
    let sigma = ore_degree(g, h)?.sigma_g_h as f64;
    let bound = (1.0 + a) / 4.0 * sigma * sigma;
    if h.len() as u64 > floor_bound(bound) {
        return Err(Error::BoundViolation(format!(
            "strong clique of size {} exceeds (1+a)/4 sigma^2 = {bound} at a = {a}",
            h.len()
        )));
    }
    Ok(bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete_bipartite, cycle, cycle_blowup, path};

    fn all(g: &Graph) -> EdgeSet {
        EdgeSet::all(g)
    }

    #[test]
    fn bipartite_k33_is_tight() {
        let g = complete_bipartite(3, 3).unwrap();
        let p = g.bipartition().unwrap();
        let d = decompose_bipartite(&g, &p, &all(&g)).unwrap();
        assert!(d.all_ok(), "{:?}", d.failed());
        assert_eq!(d.v, 0);
        assert_eq!(d.a, vec![3, 4, 5]);
        assert!(d.c.is_empty() && d.s.is_empty());
        assert_eq!(d.e_a.len(), 9);
        assert_eq!(d.check("e_a_bound").unwrap().rhs, 9.0);
        assert!(d.check("final_bound").unwrap().is_tight());
    }

    #[test]
    fn bipartite_star_and_path() {
        let star = Graph::new(5, (1..5).map(|i| (0, i))).unwrap();
        let p = star.bipartition().unwrap();
        let d = decompose_bipartite(&star, &p, &all(&star)).unwrap();
        assert!(d.all_ok());
        assert_eq!(d.v, 0);
        assert_eq!(d.a, vec![1, 2, 3, 4]);
        assert!(d.c.is_empty() && d.s.is_empty());
        assert_eq!(d.e_a.len(), 4);
        assert_eq!(d.check("final_bound").unwrap().rhs, 4.0);
        assert!(d.check("final_bound").unwrap().is_tight());

        let p3 = path(3).unwrap();
        let d = decompose_bipartite(&p3, &p3.bipartition().unwrap(), &all(&p3)).unwrap();
        assert_eq!((d.v, d.delta_h, d.sigma), (1, 2, 3));
        assert_eq!(d.a, vec![0, 2]);
        assert!(d.s.is_empty());
        assert!(d.check("final_bound").unwrap().is_tight());
    }

    #[test]
    fn bipartite_with_s_vertex() {
        // v = 0 with A = {1, 2}; vertex 3 sits at distance 2 and its H-edge
        // to 4 reaches distance 3.
        let g = Graph::new(5, [(0, 1), (0, 2), (1, 3), (2, 3), (3, 4)]).unwrap();
        let h = EdgeSet::new(&g, [0, 1, 4]).unwrap();
        let d = decompose_bipartite(&g, &g.bipartition().unwrap(), &h).unwrap();
        assert!(d.all_ok(), "{:?}", d.failed());
        assert_eq!((d.v, d.sigma), (0, 4));
        assert_eq!(d.a, vec![1, 2]);
        assert_eq!(d.s, vec![3]);
        assert_eq!(d.e_s.to_vec(), vec![4]);
        assert_eq!(d.e_a.to_vec(), vec![0, 1]);
        assert!(d.check("e_a_bound").unwrap().is_tight());
        assert_eq!(d.check("final_bound").unwrap().rhs, 4.0);
    }

    #[test]
    fn bipartite_path4_has_no_s() {
        let g = path(4).unwrap();
        let d = decompose_bipartite(&g, &g.bipartition().unwrap(), &all(&g)).unwrap();
        assert!(d.all_ok(), "{:?}", d.failed());
        assert_eq!(d.v, 1);
        assert_eq!(d.a, vec![0, 2]);
        assert!(d.s.is_empty());
    }

    #[test]
    fn bipartite_preconditions() {
        let g = cycle(5).unwrap();
        let p = Bipartition::from_sides(vec![crate::graph::Side::A; 5]);
        assert!(matches!(
            decompose_bipartite(&g, &p, &all(&g)),
            Err(Error::Precondition(_))
        ));
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        let p = g.bipartition().unwrap();
        assert!(matches!(
            decompose_bipartite(&g, &p, &all(&g)),
            Err(Error::Precondition(_))
        ));
        assert!(decompose_bipartite(&g, &p, &EdgeSet::empty()).is_err());
    }

    #[test]
    fn reduction_c5() {
        let g = cycle(5).unwrap();
        let d = decompose_reduction(&g, &all(&g)).unwrap();
        assert!(d.all_ok(), "{:?}", d.failed());
        assert_eq!((d.x, d.y, d.dx, d.dy), (0, 1, 2, 2));
        assert_eq!(d.a1, vec![4]);
        assert!(d.a2.is_empty());
        assert_eq!(d.a3, vec![2]);
        assert_eq!(d.b, vec![3]);
        assert_eq!(d.check("edge_count_identity").unwrap().lhs, 5.0);
    }

    #[test]
    fn reduction_k33_and_single_edge() {
        let g = complete_bipartite(3, 3).unwrap();
        let d = decompose_reduction(&g, &all(&g)).unwrap();
        assert!(d.all_ok(), "{:?}", d.failed());
        assert!(d.a2.is_empty() && d.b.is_empty());
        assert!(d.h1.is_empty() && d.h2.is_empty());
        assert_eq!(d.e_a.len(), 4);
        assert_eq!(
            d.check("five_term_cover").unwrap().rhs,
            3.0 + 3.0 - 1.0 + 4.0
        );

        let k2 = Graph::new(2, [(0, 1)]).unwrap();
        let d = decompose_reduction(&k2, &all(&k2)).unwrap();
        assert!(d.all_ok());
        assert!(d.a1.is_empty() && d.a3.is_empty() && d.b.is_empty());
        let id = d.check("edge_count_identity").unwrap();
        assert_eq!((id.lhs, id.rhs), (1.0, 1.0));
    }

    #[test]
    fn reduction_blowup() {
        let g = cycle_blowup(5, 2).unwrap();
        let d = decompose_reduction(&g, &all(&g)).unwrap();
        assert!(d.all_ok(), "{:?}", d.failed());
    }

    #[test]
    fn reduction_bounds() {
        let g = complete_bipartite(3, 3).unwrap();
        assert!((reduction_bound(&g, &all(&g), 1.0 / 3.0).unwrap() - 12.0).abs() < 1e-12);
        let g = cycle_blowup(5, 2).unwrap();
        assert!((reduction_bound(&g, &all(&g), 1.0 / 3.0).unwrap() - 64.0 / 3.0).abs() < 1e-12);
        // 5/16 * 64 = 20: the blow-up meets the conjectural a = 1/4 bound exactly.
        assert!((reduction_bound(&g, &all(&g), 0.25).unwrap() - 20.0).abs() < 1e-12);
        let k2 = Graph::new(2, [(0, 1)]).unwrap();
        assert!((reduction_bound(&k2, &all(&k2), 0.25).unwrap() - 1.25).abs() < 1e-12);
        assert!(matches!(
            reduction_bound(&k2, &all(&k2), 0.5),
            Err(Error::Domain(_))
        ));
    }
}
