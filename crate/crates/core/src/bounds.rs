//! Ore-degree and the catalog of clique-size bounds for `L(G)^2`.
//!
//! The Ore-degree of an edge set `H` in `G` is the largest `d_G(u) + d_G(v)`
//! over edges `uv` of `H`. Every bound here caps the number of edges in a
//! strong clique. The polynomial helpers evaluate the quadratics that appear
//! in the inductive argument for the `(1+a)/4 * sigma^2` bound, so that its
//! case analysis can be checked numerically.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{EdgeSet, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OreReport {
    /// Maximum degree of the host graph.
    pub delta_g: usize,
    /// Maximum degree within the edge set.
    pub delta_h: usize,
    /// Ore-degree of the whole host graph.
    pub sigma_g: usize,
    /// Ore-degree of the edge set, measured with host degrees.
    pub sigma_g_h: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundCatalog {
    pub trivial_2d2: f64,
    pub nowak_15d2: f64,
    pub conj_125d2: f64,
    pub general_sigma2_3: f64,
    pub general_43d2: f64,
    pub bip_sigma2_4: f64,
    pub bip_exact: f64,
    pub reduction_a: f64,
}

impl BoundCatalog {
    /// `(name, value)` pairs in field order.
    pub fn entries(&self) -> [(&'static str, f64); 8] {
        [
            ("trivial_2d2", self.trivial_2d2),
            ("nowak_15d2", self.nowak_15d2),
            ("conj_125d2", self.conj_125d2),
            ("general_sigma2_3", self.general_sigma2_3),
            ("general_43d2", self.general_43d2),
            ("bip_sigma2_4", self.bip_sigma2_4),
            ("bip_exact", self.bip_exact),
            ("reduction_a", self.reduction_a),
        ]
    }

    pub fn get(&self, name: &str) -> Option<f64> {
        self.entries()
            .into_iter()
            .find(|(n, _)| *n == name)
            .map(|(_, v)| v)
    }
}

/// Catalog entry names in field order.
pub const BOUND_NAMES: [&str; 8] = [
    "trivial_2d2",
    "nowak_15d2",
    "conj_125d2",
    "general_sigma2_3",
    "general_43d2",
    "bip_sigma2_4",
    "bip_exact",
    "reduction_a",
];

/// Names of catalog entries that only hold for bipartite hosts.
pub const BIPARTITE_ONLY: [&str; 2] = ["bip_sigma2_4", "bip_exact"];

/// Integer cap implied by a real bound on a clique size.
///
/// Bounds are evaluated in `f64`; a value such as `11.999999999999998` that is
/// an integer up to rounding must floor to 12, hence the small nudge.
pub fn floor_bound(bound: f64) -> u64 {
    (bound + 1e-9).floor().max(0.0) as u64
}

pub fn ore_degree(g: &Graph, h: &EdgeSet) -> Result<OreReport> {
    h.check(g)?;
    let deg = g.degrees();
    let ore = |ids: &mut dyn Iterator<Item = usize>| {
        ids.map(|e| {
            let (u, v) = g.endpoints(e);
            deg[u] + deg[v]
        })
        .max()
        .unwrap_or(0)
    };
    Ok(OreReport {
        delta_g: g.max_degree(),
        delta_h: h.degrees_in(g).into_iter().max().unwrap_or(0),
        sigma_g: ore(&mut (0..g.edge_count())),
        sigma_g_h: ore(&mut h.iter()),
    })
}

/// Ore-degree of the whole graph; 0 when edgeless.
pub fn sigma(g: &Graph) -> usize {
    g.edges()
        .iter()
        .map(|&(u, v)| g.deg(u) + g.deg(v))
        .max()
        .unwrap_or(0)
}

pub(crate) fn check_a(a: f64) -> Result<()> {
    if (0.25..=1.0 / 3.0).contains(&a) {
        Ok(())
    } else {
        Err(Error::Domain(format!("a = {a} is outside [1/4, 1/3]")))
    }
}

pub fn bound_catalog(report: &OreReport, a: f64) -> Result<BoundCatalog> {
    check_a(a)?;
    let d = report.delta_g as f64;
    let s = report.sigma_g_h as f64;
    let dh = report.delta_h as f64;
    Ok(BoundCatalog {
        trivial_2d2: 2.0 * d * d,
        nowak_15d2: 1.5 * d * d,
        conj_125d2: 1.25 * d * d,
        general_sigma2_3: s * s / 3.0,
        general_43d2: 4.0 * d * d / 3.0,
        bip_sigma2_4: s * s / 4.0,
        bip_exact: dh * (s - dh),
        reduction_a: (1.0 + a) * s * s / 4.0,
    })
}

/// `sqrt(1 + a) - 1`, the threshold on `d(y) / sigma` separating the cases.
pub fn s_of(a: f64) -> Result<f64> {
    if a < -1.0 || a.is_nan() {
        return Err(Error::Domain(format!("s(a) needs a >= -1, got {a}")));
    }
    Ok((1.0 + a).sqrt() - 1.0)
}

fn check_not_one(a: f64) -> Result<()> {
    if a == 1.0 {
        Err(Error::Domain("polynomial is singular at a = 1".into()))
    } else {
        Ok(())
    }
}

/// The convex quadratic bounding `|E(H)|` when `d(x)` sits at the vertex of
/// the averaged bound; `t` stands for `d(y)`.
pub fn f_poly(a: f64, sigma: f64, t: f64) -> Result<f64> {
    check_not_one(a)?;
    let outer = 1.0 + 4.0 * a - 4.0 * a * a;
    let mid = 2.0 - 12.0 * a + 8.0 * a * a;
    Ok((outer * sigma * sigma + mid * t * sigma + outer * t * t) / (8.0 * (1.0 - a)))
}

/// The concave quadratic in `t = d(x)` from the averaged bound, with `dy`
/// standing for `d(y)`.
pub fn g_poly(a: f64, sigma: f64, dy: f64, t: f64) -> Result<f64> {
    check_not_one(a)?;
    Ok((((1.0 - 2.0 * a) * sigma + dy) / (1.0 - a) - t) * t)
}

/// `(1+a)/4 * sigma^2 - f(t)` with the `sigma^2` terms merged before
/// evaluation; subtracting two values near `sigma^2 / 3` loses several bits.
fn f_gap(a: f64, sigma: f64, t: f64) -> f64 {
    let lead = 1.0 - 4.0 * a + 2.0 * a * a;
    let mid = 2.0 - 12.0 * a + 8.0 * a * a;
    let outer = 1.0 + 4.0 * a - 4.0 * a * a;
    (lead * sigma * sigma - mid * t * sigma - outer * t * t) / (8.0 * (1.0 - a))
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClaimCheck {
    pub claim1_ok: bool,
    pub claim1_slack: f64,
    pub claim2_ok: bool,
    pub claim2_slack: f64,
}

/// Evaluates `f` at both ends of its interval, `s*sigma` and
/// `sigma/(3-2a)`, against the target `(1+a)/4 * sigma^2`.
pub fn verify_claims(a: f64, sigma: f64) -> Result<ClaimCheck> {
    check_a(a)?;
    if sigma.is_nan() || sigma <= 0.0 {
        return Err(Error::Domain(format!(
            "sigma must be positive, got {sigma}"
        )));
    }
    let s = s_of(a)?;
    let claim1_slack = f_gap(a, sigma, s * sigma);
    let claim2_slack = f_gap(a, sigma, sigma / (3.0 - 2.0 * a));
    Ok(ClaimCheck {
        claim1_ok: claim1_slack >= 0.0,
        claim1_slack,
        claim2_ok: claim2_slack >= 0.0,
        claim2_slack,
    })
}

/// Closed form of the second claim's slack divided by `sigma^2`.
pub fn claim2_slack_closed_form(a: f64) -> f64 {
    (1.0 - a) * (2.0 * a - 1.0).powi(2) / (4.0 * (3.0 - 2.0 * a).powi(2))
}

/// `d(x) * (sigma - d(x) + d(y))`.
pub fn simple_bound(sigma: f64, dx: f64, dy: f64) -> f64 {
    dx * (sigma - dx + dy)
}

/// Half the sum of the counting bound and the five-term cover bound with the
/// bipartite pieces capped at `a * sigma_i^2`.
pub fn average_bound(a: f64, sigma: f64, dx: f64, dy: f64) -> f64 {
    0.5 * (dx * ((1.0 - 2.0 * a) * sigma + dy - (1.0 - a) * dx) - 2.0 * a * dy * sigma
        + 2.0 * a * sigma * sigma
        + a * dy * dy)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ReductionCase {
    /// `d(y) <= s * sigma`
    SmallNeighbor,
    /// `s * sigma < d(y) <= sigma / (3 - 2a)`
    InteriorMaximum,
    /// `d(y) > sigma / (3 - 2a)`
    BoundaryMaximum,
}

pub fn reduction_case(a: f64, sigma: f64, dy: f64) -> Result<ReductionCase> {
    check_a(a)?;
    let s = s_of(a)?;
    Ok(if dy <= s * sigma {
        ReductionCase::SmallNeighbor
    } else if dy <= sigma / (3.0 - 2.0 * a) {
        ReductionCase::InteriorMaximum
    } else {
        ReductionCase::BoundaryMaximum
    })
}

/// The bound each case of the argument yields for a given `d(y)`. Every
/// value returned is at most `(1+a)/4 * sigma^2`.
pub fn case_bound(a: f64, sigma: f64, dy: f64) -> Result<(ReductionCase, f64)> {
    let case = reduction_case(a, sigma, dy)?;
    let value = match case {
        ReductionCase::SmallNeighbor => {
            let s = s_of(a)?;
            ((1.0 + s) * sigma / 2.0).powi(2)
        }
        ReductionCase::InteriorMaximum => f_poly(a, sigma, dy)?,
        ReductionCase::BoundaryMaximum => {
            0.5 * (a * sigma * sigma + 2.0 * (1.0 - a) * dy * (sigma - dy))
        }
    };
    Ok((case, value))
}
