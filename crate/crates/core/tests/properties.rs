use proptest::prelude::*;
use strong_clique::bounds::{bound_catalog, floor_bound, ore_degree, sigma};
use strong_clique::certificates::{decompose_bipartite, decompose_reduction};
use strong_clique::generators::{gnp, random_bipartite};
use strong_clique::solver::{brute_force_omega, greedy_strong_clique, CliqueVerdict};
use strong_clique::stability::{konig_cover, max_matching_bipartite};
use strong_clique::{
    line_graph, max_strong_clique, square_of_line_graph, verify_strong_clique, EdgeSet, Graph,
    SolveOptions,
};

fn small_graph() -> impl Strategy<Value = Graph> {
    (1usize..9, 0.0f64..1.0, any::<u64>()).prop_map(|(n, p, seed)| gnp(n, p, seed).unwrap())
}

fn bipartite_graph() -> impl Strategy<Value = Graph> {
    (1usize..7, 1usize..7, 0.0f64..1.0, any::<u64>())
        .prop_map(|(a, b, p, s)| random_bipartite(a, b, p, s).unwrap())
}

fn solve(g: &Graph) -> strong_clique::SolveResult {
    max_strong_clique(g, &SolveOptions::default()).unwrap()
}

#[test]
fn seeded_generator_fixture() {
    let g = gnp(8, 0.4, 42).unwrap();
    assert_eq!(g.edge_count(), 12);
    assert_eq!(g, gnp(8, 0.4, 42).unwrap());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn degree_sum(g in small_graph()) {
        prop_assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.edge_count());
    }

    #[test]
    fn distances_obey_triangle_inequality(g in small_graph()) {
        let n = g.vertex_count();
        let d: Vec<_> = (0..n).map(|v| g.bfs_distances(&[v]).unwrap()).collect();
        for u in 0..n {
            prop_assert_eq!(d[u][u], Some(0));
            for v in 0..n {
                prop_assert_eq!(d[u][v], d[v][u]);
                for w in 0..n {
                    if let (Some(a), Some(b)) = (d[u][v], d[v][w]) {
                        prop_assert!(d[u][w].is_some_and(|c| c <= a + b));
                    }
                }
            }
        }
    }

    #[test]
    fn bipartite_complement_is_an_involution(g in bipartite_graph()) {
        let part = g.bipartition().unwrap();
        let back = g.bipartite_complement(&part).unwrap().bipartite_complement(&part).unwrap();
        let mut a: Vec<_> = g.edges().iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        let mut b: Vec<_> = back.edges().iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        a.sort_unstable();
        b.sort_unstable();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn square_matches_distance_two_in_line_graph(g in small_graph()) {
        let sq = square_of_line_graph(&g);
        let lg = line_graph(&g);
        for e in 0..g.edge_count() {
            let d = lg.bfs_distances(&[e]).unwrap();
            for (f, df) in d.iter().enumerate() {
                prop_assert_eq!(sq.adjacent(e, f), e != f && df.is_some_and(|x| x <= 2));
            }
        }
    }

    #[test]
    fn solver_matches_oracle(g in small_graph().prop_filter("oracle size", |g| g.edge_count() <= 16)) {
        let r = solve(&g);
        prop_assert_eq!(r.omega, brute_force_omega(&g).unwrap());
        prop_assert_eq!(verify_strong_clique(&g, &r.witness).unwrap(), CliqueVerdict::Clique);
    }

    #[test]
    fn solver_settings_agree(g in small_graph()) {
        let base = solve(&g);
        let par = max_strong_clique(&g, &SolveOptions { threads: 3, ore_prune: true }).unwrap();
        let plain = max_strong_clique(&g, &SolveOptions { threads: 1, ore_prune: false }).unwrap();
        prop_assert_eq!(base.omega, par.omega);
        prop_assert_eq!(base.omega, plain.omega);
        prop_assert_eq!(solve(&g).witness, base.witness);
    }

    #[test]
    fn omega_is_monotone_under_edge_addition(g in small_graph(), u in 0usize..9, v in 0usize..9) {
        let n = g.vertex_count();
        let (u, v) = (u % n, v % n);
        prop_assume!(u != v && !g.has_edge(u, v));
        let mut edges = g.edges().to_vec();
        edges.push((u, v));
        let bigger = Graph::new(n, edges).unwrap();
        prop_assert!(solve(&bigger).omega >= solve(&g).omega);
    }

    #[test]
    fn proven_bounds_hold(g in small_graph()) {
        let r = solve(&g);
        let rep = ore_degree(&g, &r.witness).unwrap();
        let cat = bound_catalog(&rep, 1.0 / 3.0).unwrap();
        let w = r.omega as u64;
        let s = sigma(&g) as f64;
        prop_assert!(w <= floor_bound(cat.general_sigma2_3));
        prop_assert!(w <= floor_bound(cat.general_43d2));
        prop_assert!(w <= floor_bound(s * s / 3.0));
        prop_assert!(w <= floor_bound(cat.nowak_15d2));
    }

    #[test]
    fn bipartite_bounds_and_certificates(g in bipartite_graph()) {
        prop_assume!(g.edge_count() > 0);
        let r = solve(&g);
        let rep = ore_degree(&g, &r.witness).unwrap();
        let cat = bound_catalog(&rep, 1.0 / 3.0).unwrap();
        prop_assert!(r.omega as u64 <= floor_bound(cat.bip_exact));
        prop_assert!(cat.bip_exact <= cat.bip_sigma2_4 + 1e-9);
        let d = decompose_bipartite(&g, &g.bipartition().unwrap(), &r.witness).unwrap();
        prop_assert!(d.all_ok(), "{:?}", d.failed());
    }

    #[test]
    fn reduction_certificate_on_any_clique(g in small_graph(), greedy in any::<bool>()) {
        prop_assume!(g.edge_count() > 0);
        let h = if greedy { greedy_strong_clique(&g) } else { solve(&g).witness };
        let d = decompose_reduction(&g, &h).unwrap();
        prop_assert!(d.all_ok(), "{:?}", d.failed());
    }

    #[test]
    fn matching_and_cover_are_dual(g in bipartite_graph()) {
        let part = g.bipartition().unwrap();
        let m = max_matching_bipartite(&g, &part).unwrap();
        let cover = konig_cover(&g, &part, &m).unwrap();
        prop_assert_eq!(cover.len(), m.len());
        for &(u, v) in g.edges() {
            prop_assert!(cover.contains(&u) || cover.contains(&v));
        }
        let mut ends: Vec<usize> = m.iter().flat_map(|&e| { let (u, v) = g.edge(e).unwrap(); [u, v] }).collect();
        ends.sort_unstable();
        ends.dedup();
        prop_assert_eq!(ends.len(), 2 * m.len());
    }

    #[test]
    fn subsets_of_cliques_are_cliques(g in small_graph(), keep in any::<u64>()) {
        let w = solve(&g).witness;
        let sub = EdgeSet::new(&g, w.iter().enumerate().filter(|(i, _)| keep >> (i % 64) & 1 == 1).map(|(_, e)| e)).unwrap();
        prop_assert!(verify_strong_clique(&g, &sub).unwrap().is_clique());
    }
}
