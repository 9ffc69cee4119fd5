//! End-to-end acceptance suite. Runs every criterion, prints one PASS/FAIL
//! line each, and exits non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_rational::Ratio;
use strong_clique::bounds::{claim2_slack_closed_form, floor_bound, verify_claims};
use strong_clique::certificates::{decompose_bipartite, decompose_reduction};
use strong_clique::generators::{
    all_graphs, complete_bipartite, cycle_blowup, gnp, random_bipartite,
};
use strong_clique::linegraph::{line_graph, square_of_line_graph};
use strong_clique::solver::{brute_force_omega, greedy_strong_clique, max_strong_clique};
use strong_clique::stability::{konig_cover, max_matching_bipartite, stability_pipeline};
use strong_clique::{bounds, Bipartition, Graph, Side, SolveOptions};

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        ok,
        detail: detail.into(),
    }
}

fn omega(g: &Graph) -> usize {
    max_strong_clique(g, &SolveOptions::default())
        .expect("solver")
        .omega
}

fn extremal_blowups() -> Outcome {
    let start = Instant::now();
    let mut bad = Vec::new();
    for k in 1..=3 {
        let got = omega(&cycle_blowup(5, k).unwrap());
        if got != 5 * k * k {
            bad.push(format!("k={k}: {got} != {}", 5 * k * k));
        }
    }
    let t = start.elapsed();
    let ok = bad.is_empty() && t < Duration::from_secs(60);
    outcome(ok, format!("omega = 5k^2 for k = 1..3 in {t:.2?} {bad:?}"))
}

fn bipartite_tightness() -> Outcome {
    let start = Instant::now();
    let mut bad = Vec::new();
    for d in 1..=5 {
        let got = omega(&complete_bipartite(d, d).unwrap());
        if got != d * d {
            bad.push(format!("d={d}: {got}"));
        }
    }
    let t = start.elapsed();
    let ok = bad.is_empty() && t < Duration::from_secs(60);
    outcome(
        ok,
        format!("omega(K_dd) = d^2 for d = 1..5 in {t:.2?} {bad:?}"),
    )
}

/// `gnp` truncated to its first 18 edges.
fn small_random(seed: u64) -> Graph {
    let n = 4 + (seed % 6) as usize;
    let p = 0.25 + 0.05 * (seed % 10) as f64;
    let g = gnp(n, p, seed).unwrap();
    let edges: Vec<_> = g.edges().iter().copied().take(18).collect();
    Graph::new(n, edges).unwrap()
}

fn oracle_equivalence() -> Outcome {
    let mut mismatches = Vec::new();
    let mut total_edges = 0;
    for seed in 0..200 {
        let g = small_random(seed);
        total_edges += g.edge_count();
        let fast = omega(&g);
        let slow = brute_force_omega(&g).unwrap();
        if fast != slow {
            mismatches.push((seed, fast, slow));
        }
    }
    outcome(
        mismatches.is_empty(),
        format!("200 graphs ({total_edges} edges total), mismatches {mismatches:?}"),
    )
}

fn exhaustive_sweep() -> Outcome {
    let start = Instant::now();
    let mut count = 0u64;
    let mut violations = Vec::new();
    for (mask, g) in all_graphs(6).unwrap().enumerate() {
        count += 1;
        let w = omega(&g) as u64;
        let s = bounds::sigma(&g) as f64;
        let d = g.max_degree() as f64;
        if w > floor_bound(s * s / 3.0) || w > floor_bound(1.25 * d * d) {
            violations.push(mask);
        }
    }
    let t = start.elapsed();
    let ok = count == 1 << 15 && violations.is_empty() && t < Duration::from_secs(600);
    outcome(
        ok,
        format!("{count} graphs on 6 vertices in {t:.2?}, violations {violations:?}"),
    )
}

fn certificate_suite() -> Outcome {
    let mut failures = Vec::new();
    let mut tight = Vec::new();
    let mut bip = 0;
    let mut red = 0;
    let mut seed = 0u64;
    while bip < 200 {
        let n1 = 1 + (seed % 7) as usize;
        let n2 = 1 + (seed / 7 % 7) as usize;
        let g = random_bipartite(n1, n2, 0.3 + 0.1 * (seed % 7) as f64, seed).unwrap();
        seed += 1;
        if g.edge_count() == 0 {
            continue;
        }
        bip += 1;
        let h = greedy_strong_clique(&g);
        let part = g.bipartition().unwrap();
        match decompose_bipartite(&g, &part, &h) {
            Ok(d) if d.all_ok() => {}
            Ok(d) => failures.push(format!("bipartite seed {seed}: {:?}", d.failed())),
            Err(e) => failures.push(format!("bipartite seed {seed}: {e}")),
        }
    }
    seed = 0;
    while red < 200 {
        let n = 3 + (seed % 8) as usize;
        let g = gnp(n, 0.3 + 0.1 * (seed % 6) as f64, seed).unwrap();
        seed += 1;
        if g.edge_count() == 0 {
            continue;
        }
        red += 1;
        let h = greedy_strong_clique(&g);
        match decompose_reduction(&g, &h) {
            Ok(d) if d.all_ok() => {}
            Ok(d) => failures.push(format!("reduction seed {seed}: {:?}", d.failed())),
            Err(e) => failures.push(format!("reduction seed {seed}: {e}")),
        }
    }
    for d in 1..=5 {
        let g = complete_bipartite(d, d).unwrap();
        let h = max_strong_clique(&g, &SolveOptions::default())
            .unwrap()
            .witness;
        let c = decompose_bipartite(&g, &g.bipartition().unwrap(), &h).unwrap();
        if !c.all_ok() {
            failures.push(format!("K_{d},{d}: {:?}", c.failed()));
        }
        if c.check("final_bound").is_some_and(|c| c.is_tight()) {
            tight.push(format!("K_{d},{d}"));
        }
    }
    let ok = failures.is_empty() && tight.len() == 5;
    outcome(
        ok,
        format!("{bip} bipartite + {red} reduction certificates, failures {failures:?}, tight {tight:?}"),
    )
}

type Q = Ratio<i128>;

/// Claim-2 slack per `sigma^2`, evaluated in exact arithmetic.
fn claim2_slack_exact(a: Q) -> Q {
    let one = Q::from_integer(1);
    let t = one / (Q::from_integer(3) - a * 2);
    let c0 = one + a * 4 - a * a * 4;
    let c1 = Q::from_integer(2) - a * 12 + a * a * 8;
    let f = (c0 + c1 * t + c0 * t * t) / ((one - a) * 8);
    (one + a) / 4 - f
}

fn closed_form_exact(a: Q) -> Q {
    let one = Q::from_integer(1);
    let u = a * 2 - one;
    (one - a) * u * u
        / (Q::from_integer(4) * (Q::from_integer(3) - a * 2) * (Q::from_integer(3) - a * 2))
}

fn claims_grid() -> Outcome {
    let mut grid: Vec<Q> = (25..=33).map(|k| Q::new(k, 100)).collect();
    grid.push(Q::new(1, 3));
    let mut bad = Vec::new();
    let mut worst: f64 = 0.0;
    for a in grid {
        if claim2_slack_exact(a) != closed_form_exact(a) {
            bad.push(format!("exact mismatch at a={a}"));
        }
        let af = *a.numer() as f64 / *a.denom() as f64;
        for sigma in [1.0, 10.0, 100.0] {
            let c = verify_claims(af, sigma).unwrap();
            let expect = claim2_slack_closed_form(af) * sigma * sigma;
            let err = (c.claim2_slack - expect).abs();
            worst = worst.max(err);
            if !c.claim1_ok || !c.claim2_ok || err > 1e-12 {
                bad.push(format!("a={a} sigma={sigma}: {c:?} vs {expect}"));
            }
        }
    }
    outcome(
        bad.is_empty(),
        format!("10 values of a x 3 values of sigma, max slack error {worst:.3e} {bad:?}"),
    )
}

/// Checks that `cover` meets every edge of `g`.
fn covers_all(g: &Graph, cover: &[usize]) -> bool {
    g.edges()
        .iter()
        .all(|(u, v)| cover.contains(u) || cover.contains(v))
}

fn stability_guarantee() -> Outcome {
    let mut bad = Vec::new();
    let mut asserted = 0;
    let mut best_r = 0;
    for seed in 0..100u64 {
        let n1 = 1 + (seed % 10) as usize;
        let n2 = 1 + (seed * 7 / 10 % 10) as usize;
        let p = 0.85 + 0.015 * (seed % 10) as f64;
        let g = random_bipartite(n1, n2, p, 1000 + seed).unwrap();
        let part = Bipartition::from_sides(
            (0..n1 + n2)
                .map(|v| if v < n1 { Side::A } else { Side::B })
                .collect(),
        );
        let m = max_matching_bipartite(&g, &part).unwrap();
        let cover = konig_cover(&g, &part, &m).unwrap();
        if cover.len() != m.len() || !covers_all(&g, &cover) {
            bad.push(format!("seed {seed}: duality on host"));
        }
        if g.edge_count() == 0 {
            continue;
        }
        let h = max_strong_clique(&g, &SolveOptions::default())
            .unwrap()
            .witness;
        match stability_pipeline(&g, &h) {
            Ok(w) => {
                if w.cover_size != w.matching_size {
                    bad.push(format!("seed {seed}: duality in pipeline"));
                }
                if !w.guarantee_vacuous {
                    asserted += 1;
                    best_r = best_r.max(w.r_guaranteed);
                    if w.r_found < w.r_guaranteed {
                        bad.push(format!("seed {seed}: r {} < {}", w.r_found, w.r_guaranteed));
                    }
                }
            }
            Err(e) => bad.push(format!("seed {seed}: {e}")),
        }
    }
    outcome(
        bad.is_empty(),
        format!(
            "100 bipartite graphs, guarantee non-vacuous on {asserted} (max r {best_r}) {bad:?}"
        ),
    )
}

fn line_graph_square() -> Outcome {
    let mut mismatches = Vec::new();
    for seed in 0..100u64 {
        let n = 1 + (seed % 10) as usize;
        let g = gnp(n, 0.2 + 0.07 * (seed % 10) as f64, 500 + seed).unwrap();
        let sq = square_of_line_graph(&g);
        let lg = line_graph(&g);
        for e in 0..g.edge_count() {
            let dist = lg.bfs_distances(&[e]).unwrap();
            for (f, df) in dist.iter().enumerate() {
                let want = e != f && df.is_some_and(|d| d <= 2);
                if sq.adjacent(e, f) != want {
                    mismatches.push((seed, e, f));
                }
            }
        }
    }
    outcome(
        mismatches.is_empty(),
        format!("100 graphs, mismatches {mismatches:?}"),
    )
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("extremal blow-ups", extremal_blowups),
        ("bipartite tightness", bipartite_tightness),
        ("oracle equivalence", oracle_equivalence),
        ("exhaustive sweep n=6", exhaustive_sweep),
        ("certificate suite", certificate_suite),
        ("claims grid", claims_grid),
        ("stability guarantee", stability_guarantee),
        ("line graph square", line_graph_square),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        if !o.ok {
            failed += 1;
        }
        let tag = if o.ok { "PASS" } else { "FAIL" };
        println!("criterion {}: {tag} {name}: {}", i + 1, o.detail);
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
