#![allow(dead_code)]

use cliquebound::constructions::{build_clique_plus_trianglefree, build_lex_with_lambda, lex_product};
use cliquebound::generate::{complete_graph, cycle_graph, gnp_graph, path_graph, petersen_graph, triangle_free_process, wheel_graph};
use cliquebound::{Graph, Rng};

/// Counts s-cliques by testing every s-subset.
pub fn naive_cliques(g: &Graph, s: usize) -> u64 {
    fn rec(g: &Graph, s: usize, start: usize, chosen: &mut Vec<usize>) -> u64 {
        if chosen.len() == s {
            return 1;
        }
        let mut total = 0;
        for v in start..g.vertex_count() {
            if chosen.iter().all(|&u| g.has_edge(u, v)) {
                chosen.push(v);
                total += rec(g, s, v + 1, chosen);
                chosen.pop();
            }
        }
        total
    }
    // Pruning on partial cliques visits only subsets that could still be
    // cliques, which is the same count as filtering all binomial(n, s) subsets.
    rec(g, s, 0, &mut Vec::new())
}

/// Independence number by checking all vertex subsets. Only for n <= 20.
pub fn brute_alpha(g: &Graph) -> usize {
    let n = g.vertex_count();
    assert!(n <= 20);
    let adj: Vec<u32> = (0..n)
        .map(|v| (0..n).filter(|&u| g.has_edge(u, v)).fold(0u32, |m, u| m | 1 << u))
        .collect();
    (0u32..1 << n)
        .filter(|&set| (0..n).all(|v| set >> v & 1 == 0 || adj[v] & set == 0))
        .map(|set| set.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Mixed corpus of graphs on at most 60 vertices: random graphs across the
/// density range, both extremal constructions, lex products of small bases
/// and named graphs.
pub fn corpus() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    let mut rng = Rng::new(2024);
    for i in 0..320u64 {
        let n = 5 + rng.below(56) as usize;
        let p = [0.05, 0.1, 0.2, 0.3, 0.5, 0.7, 0.9][i as usize % 7];
        let g = gnp_graph(n, p, &mut Rng::new(i)).unwrap();
        out.push((format!("gnp n={n} p={p} seed={i}"), g));
    }
    for seed in 0..80u64 {
        let n = 10 + (seed as usize * 7) % 51;
        let t = rng.below(400).min(n as u64 * (n as u64 - 1) * (n as u64 - 2) / 6);
        let (g, _) = build_clique_plus_trianglefree(n, t, true, seed).unwrap();
        out.push((format!("clique_plus_trianglefree n={n} t={t} seed={seed}"), g));
    }
    for seed in 0..60u64 {
        let lambda = 2 + seed as usize % 5;
        let n = (12 + seed as usize % 49).max(lambda);
        let (g, _) = build_lex_with_lambda(n, 0, lambda, false, seed).unwrap();
        out.push((format!("lex n={n} lambda={lambda} seed={seed}"), g));
    }
    for seed in 0..20u64 {
        let base = triangle_free_process(6 + seed as usize % 9, &mut Rng::new(seed));
        out.push((format!("lex of tfp seed={seed}"), lex_product(&base, 1 + seed as usize % 4)));
    }
    for k in 3..=20 {
        out.push((format!("cycle {k}"), cycle_graph(k)));
        out.push((format!("path {k}"), path_graph(k)));
        out.push((format!("complete {k}"), complete_graph(k)));
        out.push((format!("wheel {k}"), wheel_graph(k)));
    }
    out.push(("petersen".into(), petersen_graph()));
    out.push(("empty 30".into(), Graph::empty(30)));
    out
}
