mod common;

use proptest::prelude::*;

use cliquebound::bounds::{aks_bound, solve_constant_chain, theorem1_bound, theorem1_threshold, theorem2_bound, theorem2_threshold};
use cliquebound::clique::{count_cliques, count_cliques_in_subset};
use cliquebound::graph::GraphBuilder;
use cliquebound::indep::{aks_greedy_seeded, exact_alpha, turan_greedy, turan_guarantee_holds};
use cliquebound::io::{read_dimacs, read_edgelist, write_dimacs, write_edgelist};
use cliquebound::{Graph, VertexSet};

use common::{brute_alpha, naive_cliques};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn adjacency_is_symmetric_and_loop_free(g in graph(40)) {
        prop_assert_eq!(g.check_invariants(), Ok(()));
        let n = g.vertex_count();
        let degree_sum: usize = (0..n).map(|v| g.degree(v)).sum();
        prop_assert_eq!(degree_sum, 2 * g.edge_count());
        for u in 0..n {
            prop_assert!(!g.has_edge(u, u));
            for v in 0..n {
                prop_assert_eq!(g.has_edge(u, v), g.has_edge(v, u));
            }
        }
    }

    #[test]
    fn clique_counts_match_enumeration(g in graph(18), s in 2usize..=5) {
        prop_assume!(s <= g.vertex_count());
        let stats = count_cliques(&g, s).unwrap();
        prop_assert_eq!(stats.t, naive_cliques(&g, s));
        let per_vertex: u64 = stats.per_vertex_t.iter().sum();
        prop_assert_eq!(per_vertex, s as u64 * stats.t);
    }

    #[test]
    fn adding_an_edge_never_loses_cliques(g in graph(16), s in 2usize..=4, a in 0usize..16, b in 0usize..16) {
        let n = g.vertex_count();
        prop_assume!(s <= n && a % n != b % n);
        let mut builder = GraphBuilder::from_graph(&g);
        builder.add_edge(a % n, b % n);
        let bigger = builder.build();
        prop_assert!(count_cliques(&bigger, s).unwrap().t >= count_cliques(&g, s).unwrap().t);
    }

    #[test]
    fn subset_count_matches_induced_subgraph(g in graph(20), mask in any::<u32>(), s in 2usize..=4) {
        let n = g.vertex_count();
        let subset = VertexSet::from_vertices(n, (0..n).filter(|v| mask >> v & 1 == 1));
        let (h, _) = g.induced_subgraph(&subset);
        let masked = count_cliques_in_subset(&g, &subset, s).unwrap().t;
        let direct = if s <= h.vertex_count() { count_cliques(&h, s).unwrap().t } else { 0 };
        prop_assert_eq!(masked, direct);
    }

    #[test]
    fn dimacs_round_trip(g in graph(30)) {
        let mut buf = Vec::new();
        write_dimacs(&g, &mut buf).unwrap();
        prop_assert_eq!(read_dimacs(&buf[..]).unwrap(), g);
    }

    #[test]
    fn edgelist_round_trip(g in graph(30)) {
        let mut buf = Vec::new();
        write_edgelist(&g, &mut buf).unwrap();
        prop_assert_eq!(read_edgelist(&buf[..]).unwrap(), g);
    }

    #[test]
    fn greedy_sets_are_independent_and_bounded(g in graph(18), seed in any::<u64>()) {
        let alpha = brute_alpha(&g);
        let turan = turan_greedy(&g);
        prop_assert!(turan.verify(&g));
        prop_assert!(turan_guarantee_holds(&g, turan.size()));
        let aks = aks_greedy_seeded(&g, seed, 4);
        prop_assert!(aks.verify(&g));
        prop_assert!(aks.size() >= turan.size() && aks.size() <= alpha);
        prop_assert_eq!(exact_alpha(&g, 64).unwrap().0, alpha);
    }

    #[test]
    fn theorem1_nonincreasing_in_t(n in 4usize..500, s in 2usize..=5, a in 0.0f64..1.0, b in 0.0f64..1.0) {
        let chain = solve_constant_chain(5, 1.0 / 3.0).unwrap();
        let max = cliquebound::bounds::binomial_f64(n as u64, s as u64);
        prop_assume!(s <= n);
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        let (t_lo, t_hi) = ((lo * max) as u64, (hi * max) as u64);
        let threshold = theorem1_threshold(n, s);
        // Within one branch.
        prop_assume!((t_lo as f64 <= threshold) == (t_hi as f64 <= threshold));
        let x = theorem1_bound(n, s, t_lo, &chain).unwrap().value;
        let y = theorem1_bound(n, s, t_hi, &chain).unwrap().value;
        prop_assert!(y <= x * (1.0 + 1e-12));
    }

    #[test]
    fn triangle_bounds_nonincreasing_in_t(n in 4usize..2000, a in 0.0f64..1.0, b in 0.0f64..1.0, d in 1.5f64..100.0) {
        let max = cliquebound::bounds::binomial_f64(n as u64, 3);
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        let (t_lo, t_hi) = ((lo * max) as u64, (hi * max) as u64);
        let threshold = theorem2_threshold(n);
        if (t_lo as f64 <= threshold) == (t_hi as f64 <= threshold) {
            let x = theorem2_bound(n, t_lo, 1.0).unwrap().value;
            let y = theorem2_bound(n, t_hi, 1.0).unwrap().value;
            prop_assert!(y <= x * (1.0 + 1e-12) + 1e-12);
        }
        prop_assume!(t_lo > 0);
        let x = aks_bound(n, d, t_lo, 1.0).unwrap().value;
        let y = aks_bound(n, d, t_hi, 1.0).unwrap().value;
        prop_assert!(y <= x + 1e-9);
    }
}

#[test]
fn io_round_trip_on_fixed_corpus() {
    let graphs = common::corpus();
    assert!(graphs.len() >= 20);
    for (name, g) in graphs.iter().step_by(20) {
        let mut a = Vec::new();
        write_dimacs(g, &mut a).unwrap();
        assert_eq!(&read_dimacs(&a[..]).unwrap(), g, "{name}");
        let mut b = Vec::new();
        write_edgelist(g, &mut b).unwrap();
        assert_eq!(&read_edgelist(&b[..]).unwrap(), g, "{name}");
    }
}
