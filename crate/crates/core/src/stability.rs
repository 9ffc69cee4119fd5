//! Extracting a large complete bipartite subgraph from a near-extremal
//! strong clique in a bipartite graph.
//!
//! The pipeline has two stages. First, pick the vertex `a` of largest
//! `H`-degree in side A and `b` in side B, and keep only `B' = N(a)` and
//! `A' = N(b)`; few edges of `H` are lost. Second, inside `G[A' ∪ B']`, take
//! the bipartite complement, a maximum matching `M` and a König cover of the
//! same size. Deleting the cover leaves a complete bipartite graph with at
//! least `n - |M|` vertices per side, and the strong-clique condition keeps
//! `|M|` small.

use std::collections::VecDeque;

use serde::Serialize;

use crate::certificates::Check;
use crate::error::{Error, Result};
use crate::graph::{Bipartition, EdgeId, EdgeSet, Graph, Side, Vertex};
use crate::solver::{verify_strong_clique, CliqueVerdict};

fn ceil_tol(x: f64) -> usize {
    (x - 1e-9).ceil().max(0.0) as usize
}

fn require_clique(g: &Graph, h: &EdgeSet) -> Result<()> {
    if let CliqueVerdict::Fails(e, f) = verify_strong_clique(g, h)? {
        return Err(Error::Precondition(format!(
            "edges {e} and {f} are not strongly adjacent"
        )));
    }
    Ok(())
}

/// Endpoints of `e` as `(side A end, side B end)`.
fn oriented(g: &Graph, part: &Bipartition, e: EdgeId) -> (Vertex, Vertex) {
    let (u, v) = g.endpoints(e);
    if part.side(u) == Side::A {
        (u, v)
    } else {
        (v, u)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Refinement {
    pub a: Vertex,
    pub b: Vertex,
    /// `N_G(b)`.
    pub a_prime: Vec<Vertex>,
    /// `N_G(a)`.
    pub b_prime: Vec<Vertex>,
    /// Side-A vertices with an `H`-neighbour outside `N_G(a)`.
    pub s_a: Vec<Vertex>,
    pub s_b: Vec<Vertex>,
    /// Edges of `H` missing `N_G(a)`.
    pub e_a_size: usize,
    /// Edges of `H` missing `N_G(b)`.
    pub e_b_size: usize,
    /// Edges of `H` inside `A' × B'`.
    pub retained: usize,
}

pub fn refine_neighborhoods(g: &Graph, part: &Bipartition, h: &EdgeSet) -> Result<Refinement> {
    part.validate(g)?;
    h.check(g)?;
    if h.is_empty() {
        return Err(Error::Precondition("edge set is empty".into()));
    }
    require_clique(g, h)?;
    let dh = h.degrees_in(g);
    let argmax = |side: Side| {
        (0..g.vertex_count())
            .filter(|&v| part.side(v) == side)
            .fold(None, |best: Option<Vertex>, v| match best {
                Some(b) if dh[b] >= dh[v] => Some(b),
                _ => Some(v),
            })
            .expect("both sides are nonempty when H has an edge")
    };
    let a = argmax(Side::A);
    let b = argmax(Side::B);
    let na = g.neighbor_set(a);
    let nb = g.neighbor_set(b);

    let mut s_a = Vec::new();
    let mut s_b = Vec::new();
    let (mut e_a_size, mut e_b_size, mut retained) = (0, 0, 0);
    for e in h.iter() {
        let (x, y) = oriented(g, part, e);
        let in_b_prime = na.contains(y);
        let in_a_prime = nb.contains(x);
        if !in_b_prime {
            e_a_size += 1;
            s_a.push(x);
        }
        if !in_a_prime {
            e_b_size += 1;
            s_b.push(y);
        }
        if in_a_prime && in_b_prime {
            retained += 1;
        }
    }
    s_a.sort_unstable();
    s_a.dedup();
    s_b.sort_unstable();
    s_b.dedup();
    Ok(Refinement {
        a,
        b,
        a_prime: nb.iter().collect(),
        b_prime: na.iter().collect(),
        s_a,
        s_b,
        e_a_size,
        e_b_size,
        retained,
    })
}

/// Maximum-cardinality matching by Hopcroft–Karp. Side-A vertices and
/// their incident edges are scanned in index order, so the result is
/// deterministic. Returns edge ids in increasing order.
pub fn max_matching_bipartite(g: &Graph, part: &Bipartition) -> Result<Vec<EdgeId>> {
    part.validate(g)?;
    let n = g.vertex_count();
    let left: Vec<Vertex> = part.side_a();
    let mut mate: Vec<Option<EdgeId>> = vec![None; n];
    let other = |e: EdgeId, v: Vertex| {
        let (x, y) = g.endpoints(e);
        if x == v {
            y
        } else {
            x
        }
    };

    loop {
        // Layer side-A vertices by alternating distance from the free ones.
        let mut layer = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for &u in &left {
            if mate[u].is_none() {
                layer[u] = 0;
                queue.push_back(u);
            }
        }
        let mut found = false;
        while let Some(u) = queue.pop_front() {
            for &e in g.incident(u) {
                let w = other(e, u);
                match mate[w] {
                    None => found = true,
                    Some(me) => {
                        let u2 = other(me, w);
                        if layer[u2] == usize::MAX {
                            layer[u2] = layer[u] + 1;
                            queue.push_back(u2);
                        }
                    }
                }
            }
        }
        if !found {
            break;
        }

        fn augment(g: &Graph, u: Vertex, layer: &mut [usize], mate: &mut [Option<EdgeId>]) -> bool {
            for &e in g.incident(u) {
                let (x, y) = g.endpoints(e);
                let w = if x == u { y } else { x };
                let next = match mate[w] {
                    None => true,
                    Some(me) => {
                        let (p, q) = g.endpoints(me);
                        let u2 = if p == w { q } else { p };
                        layer[u2] == layer[u] + 1 && augment(g, u2, layer, mate)
                    }
                };
                if next {
                    mate[u] = Some(e);
                    mate[w] = Some(e);
                    return true;
                }
            }
            layer[u] = usize::MAX;
            false
        }

        let mut progressed = false;
        for &u in &left {
            if mate[u].is_none() && augment(g, u, &mut layer, &mut mate) {
                progressed = true;
            }
        }
        if !progressed {
            break;
        }
    }

    let mut out: Vec<EdgeId> = left.iter().filter_map(|&u| mate[u]).collect();
    out.sort_unstable();
    Ok(out)
}

/// Minimum vertex cover from a maximum matching: with `Z` the vertices
/// reachable from free side-A vertices along alternating paths, the cover is
/// `(A \ Z) ∪ (B ∩ Z)`.
pub fn konig_cover(g: &Graph, part: &Bipartition, matching: &[EdgeId]) -> Result<Vec<Vertex>> {
    part.validate(g)?;
    let n = g.vertex_count();
    let mut mate: Vec<Option<EdgeId>> = vec![None; n];
    for &e in matching {
        let (u, v) = g.edge(e)?;
        if mate[u].is_some() || mate[v].is_some() {
            return Err(Error::Precondition(format!(
                "edge {e} shares an endpoint with another matching edge"
            )));
        }
        mate[u] = Some(e);
        mate[v] = Some(e);
    }

    let mut reached = vec![false; n];
    let mut queue = VecDeque::new();
    for u in part.side_a() {
        if mate[u].is_none() {
            reached[u] = true;
            queue.push_back(u);
        }
    }
    while let Some(u) = queue.pop_front() {
        for &e in g.incident(u) {
            if mate[u] == Some(e) {
                continue;
            }
            let (x, y) = g.endpoints(e);
            let w = if x == u { y } else { x };
            if reached[w] {
                continue;
            }
            reached[w] = true;
            match mate[w] {
                None => {
                    return Err(Error::Precondition(format!(
                        "matching is not maximum: augmenting path ends at vertex {w}"
                    )))
                }
                Some(me) => {
                    let (p, q) = g.endpoints(me);
                    let u2 = if p == w { q } else { p };
                    if !reached[u2] {
                        reached[u2] = true;
                        queue.push_back(u2);
                    }
                }
            }
        }
    }

    let cover: Vec<Vertex> = (0..n)
        .filter(|&v| match part.side(v) {
            Side::A => !reached[v],
            Side::B => reached[v],
        })
        .filter(|&v| !g.incident(v).is_empty())
        .collect();
    debug_assert_eq!(cover.len(), matching.len());
    Ok(cover)
}

#[derive(Clone, Debug, Serialize)]
pub struct BicliqueExtraction {
    pub n: usize,
    /// `1 - |E(H)| / n^2`.
    pub alpha: f64,
    /// Size of the maximum matching of the padded bipartite complement.
    pub matching_size: usize,
    /// Matching edges between real vertices, as `(side A, side B)` pairs.
    pub matching: Vec<(Vertex, Vertex)>,
    pub cover_size: usize,
    /// Real vertices of the cover.
    pub cover: Vec<Vertex>,
    pub padding_a: usize,
    pub padding_b: usize,
    pub r_guaranteed: usize,
    pub r_found: usize,
    pub biclique_a: Vec<Vertex>,
    pub biclique_b: Vec<Vertex>,
    pub checks: Vec<Check>,
}

/// Finds `K_{r,r}` in `g` from a strong clique `h` with sides of size at
/// most `n`. Sides are padded to `n` with isolated vertices internally;
/// padding never appears in the output.
pub fn extract_biclique(
    g: &Graph,
    part: &Bipartition,
    h: &EdgeSet,
    n: usize,
) -> Result<BicliqueExtraction> {
    part.validate(g)?;
    h.check(g)?;
    require_clique(g, h)?;
    let side_a = part.side_a();
    let side_b = part.side_b();
    if side_a.len() > n || side_b.len() > n {
        return Err(Error::Precondition(format!(
            "sides of size {} and {} exceed n = {n}",
            side_a.len(),
            side_b.len()
        )));
    }
    if g.has_parallel_edges() {
        return Err(Error::Unsupported(
            "biclique extraction needs a simple graph".into(),
        ));
    }
    let real = g.vertex_count();
    let padding_a = n - side_a.len();
    let padding_b = n - side_b.len();
    let pad_a: Vec<Vertex> = (real..real + padding_a).collect();
    let pad_b: Vec<Vertex> = (real + padding_a..real + padding_a + padding_b).collect();
    let all_a: Vec<Vertex> = side_a
        .iter()
        .copied()
        .chain(pad_a.iter().copied())
        .collect();
    let all_b: Vec<Vertex> = side_b
        .iter()
        .copied()
        .chain(pad_b.iter().copied())
        .collect();

    let mut comp_edges = Vec::new();
    for &x in &all_a {
        for &y in &all_b {
            if x >= real || y >= real || !g.has_edge(x, y) {
                comp_edges.push((x, y));
            }
        }
    }
    let total = real + padding_a + padding_b;
    let complement = Graph::new(total, comp_edges)?;
    let mut sides = vec![Side::A; total];
    for &y in &all_b {
        sides[y] = Side::B;
    }
    let padded = Bipartition::from_sides(sides);

    let m_edges = max_matching_bipartite(&complement, &padded)?;
    let cover = konig_cover(&complement, &padded, &m_edges)?;
    let m = m_edges.len();
    let mut in_cover = vec![false; total];
    for &v in &cover {
        in_cover[v] = true;
    }
    let rest_a: Vec<Vertex> = side_a.iter().copied().filter(|&v| !in_cover[v]).collect();
    let rest_b: Vec<Vertex> = side_b.iter().copied().filter(|&v| !in_cover[v]).collect();
    let r_found = rest_a.len().min(rest_b.len());
    let biclique_a = rest_a[..r_found].to_vec();
    let biclique_b = rest_b[..r_found].to_vec();

    let nf = n as f64;
    let alpha = if n == 0 {
        0.0
    } else {
        1.0 - h.len() as f64 / (nf * nf)
    };
    let r_guaranteed = if alpha <= 0.5 {
        ceil_tol((1.0 - (2.0 * alpha).sqrt()) * nf)
    } else {
        0
    };
    let complete = biclique_a
        .iter()
        .all(|&x| biclique_b.iter().all(|&y| g.has_edge(x, y)));
    let mf = m as f64;
    let checks = vec![
        Check::equals("konig_duality", cover.len() as f64, mf),
        Check::equals("biclique_complete", if complete { 1.0 } else { 0.0 }, 1.0),
        Check::at_most(
            "clique_vs_matching",
            h.len() as f64,
            nf * nf - mf - mf * (mf - 1.0) / 2.0,
        ),
        Check::at_most("remainder_vs_matching", nf - mf, r_found as f64),
        Check::at_most("lemma_guarantee", r_guaranteed as f64, r_found as f64),
    ];
    if let Some(bad) = checks.iter().find(|c| !c.ok) {
        return Err(Error::BoundViolation(format!(
            "biclique extraction check `{}` failed: {} vs {}",
            bad.name, bad.lhs, bad.rhs
        )));
    }

    let matching = m_edges
        .iter()
        .map(|&e| oriented(&complement, &padded, e))
        .filter(|&(x, y)| x < real && y < real)
        .collect();
    Ok(BicliqueExtraction {
        n,
        alpha,
        matching_size: m,
        matching,
        cover_size: cover.len(),
        cover: cover.into_iter().filter(|&v| v < real).collect(),
        padding_a,
        padding_b,
        r_guaranteed,
        r_found,
        biclique_a,
        biclique_b,
        checks,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct StabilityWitness {
    pub delta: usize,
    pub clique_size: usize,
    pub a: Vertex,
    pub b: Vertex,
    #[serde(rename = "Aprime")]
    pub a_prime: Vec<Vertex>,
    #[serde(rename = "Bprime")]
    pub b_prime: Vec<Vertex>,
    pub s_a_size: usize,
    pub s_b_size: usize,
    pub e_a_size: usize,
    pub e_b_size: usize,
    /// Edges of `H` inside `A' × B'`.
    pub retained: usize,
    /// `(1 - 2 eps - 2 sqrt(eps)) Delta^2`.
    pub retained_bound: f64,
    pub epsilon: f64,
    /// `2 eps + 2 sqrt(eps)`.
    pub alpha: f64,
    /// `1 - retained / Delta^2`, the value the extraction actually sees.
    pub alpha_observed: f64,
    pub matching: Vec<(Vertex, Vertex)>,
    pub matching_size: usize,
    pub cover: Vec<Vertex>,
    pub cover_size: usize,
    /// `(1 - sqrt(8) eps^(1/4)) Delta` before rounding.
    pub r_real: f64,
    pub r_guaranteed: usize,
    pub r_found: usize,
    /// True when `r_real < 1` and there is nothing to assert.
    pub guarantee_vacuous: bool,
    pub biclique_a: Vec<Vertex>,
    pub biclique_b: Vec<Vertex>,
}

/// Runs refinement and extraction on a bipartite `g` with strong clique
/// `h`, using `eps = 1 - |E(H)| / Delta^2` clamped to `[0, 1]`.
pub fn stability_pipeline(g: &Graph, h: &EdgeSet) -> Result<StabilityWitness> {
    let part = g
        .bipartition()
        .ok_or_else(|| Error::Precondition("graph is not bipartite".into()))?;
    let refined = refine_neighborhoods(g, &part, h)?;
    let delta = g.max_degree();
    let d2 = (delta * delta) as f64;
    let epsilon = (1.0 - h.len() as f64 / d2).clamp(0.0, 1.0);
    let root = epsilon.sqrt();

    let retained_bound = (1.0 - 2.0 * epsilon - 2.0 * root) * d2;
    if retained_bound > 0.0 && refined.retained < ceil_tol(retained_bound) {
        return Err(Error::BoundViolation(format!(
            "refinement kept {} edges, expected at least {retained_bound}",
            refined.retained
        )));
    }

    let mut keep: Vec<Vertex> = refined.a_prime.clone();
    keep.extend(&refined.b_prime);
    let sub = g.induced_subgraph(&keep)?;
    let sub_part = part.restrict(&sub);
    let sub_h = sub.map_edges(h);
    debug_assert_eq!(sub_h.len(), refined.retained);
    let ext = extract_biclique(&sub.graph, &sub_part, &sub_h, delta)?;

    let r_real = (1.0 - 8f64.sqrt() * epsilon.powf(0.25)) * delta as f64;
    let guarantee_vacuous = r_real < 1.0;
    let r_guaranteed = if guarantee_vacuous {
        0
    } else {
        ceil_tol(r_real)
    };
    if ext.r_found < r_guaranteed {
        return Err(Error::BoundViolation(format!(
            "found K_{{{0},{0}}}, expected at least r = {r_real}",
            ext.r_found
        )));
    }

    let host = |vs: &[Vertex]| sub.vertices_to_host(vs.iter().copied());
    Ok(StabilityWitness {
        delta,
        clique_size: h.len(),
        a: refined.a,
        b: refined.b,
        a_prime: refined.a_prime,
        b_prime: refined.b_prime,
        s_a_size: refined.s_a.len(),
        s_b_size: refined.s_b.len(),
        e_a_size: refined.e_a_size,
        e_b_size: refined.e_b_size,
        retained: refined.retained,
        retained_bound,
        epsilon,
        alpha: 2.0 * epsilon + 2.0 * root,
        alpha_observed: ext.alpha,
        matching: ext
            .matching
            .iter()
            .map(|&(x, y)| (sub.to_old[x], sub.to_old[y]))
            .collect(),
        matching_size: ext.matching_size,
        cover: host(&ext.cover),
        cover_size: ext.cover_size,
        r_real,
        r_guaranteed,
        r_found: ext.r_found,
        guarantee_vacuous,
        biclique_a: host(&ext.biclique_a),
        biclique_b: host(&ext.biclique_b),
    })
}
