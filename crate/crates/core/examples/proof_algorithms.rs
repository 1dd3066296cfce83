//! Runs every independent-set algorithm on one graph and prints the
//! certificates with their traces.
//!
//! cargo run --release --example proof_algorithms -- [n] [p] [s] [seed]

use cliquebound::bounds::solve_constant_chain;
use cliquebound::clique::count_cliques;
use cliquebound::generate::gnp_graph;
use cliquebound::indep::{
    aks_greedy, best_certificate, neighborhood_clean_set, pivot_recursion, sparsify_and_recurse, turan_greedy,
    DispatchConfig, DEFAULT_GREEDY_REPEATS, DEFAULT_MAX_RETRIES,
};
use cliquebound::Rng;

fn main() -> cliquebound::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().map_or(300, |a| a.parse().expect("n"));
    let p: f64 = args.next().map_or(0.4, |a| a.parse().expect("p"));
    let s: usize = args.next().map_or(3, |a| a.parse().expect("s"));
    let seed: u64 = args.next().map_or(0, |a| a.parse().expect("seed"));

    let g = gnp_graph(n, p, &mut Rng::new(seed))?;
    let chain = solve_constant_chain(s.max(3), 1.0 / 3.0)?;
    let mut rng = Rng::stream(seed, 1);
    let tri = count_cliques(&g, 3)?;
    println!("n = {n}, m = {}, triangles = {}", g.edge_count(), tri.t);
    if s != 3 {
        println!("{s}-cliques = {}", count_cliques(&g, s)?.t);
    }

    let certs = [
        turan_greedy(&g),
        pivot_recursion(&g, s, &chain)?,
        neighborhood_clean_set(&g, &tri)?,
        aks_greedy(&g, &mut rng, DEFAULT_GREEDY_REPEATS),
        sparsify_and_recurse(&g, s, &chain, &mut rng, DEFAULT_MAX_RETRIES)?,
    ];
    for c in &certs {
        assert!(c.verify(&g));
        println!("\n{} -> {}", c.algorithm().name(), c.size());
        print!("{}", c.trace_text());
    }

    let report = best_certificate(&g, s, &chain, &mut rng, &DispatchConfig::default())?;
    println!("\nbest: {} ({}), proof case {:?}", report.best.size(), report.best.algorithm().name(), report.proof_case);
    Ok(())
}
