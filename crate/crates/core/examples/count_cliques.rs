//! Counts s-cliques in a random graph, globally and per vertex.
//!
//! cargo run --release --example count_cliques -- [n] [p] [seed]

use std::time::Instant;

use cliquebound::clique::count_cliques;
use cliquebound::generate::gnp_graph;
use cliquebound::Rng;

fn main() -> cliquebound::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().map_or(1000, |a| a.parse().expect("n"));
    let p: f64 = args.next().map_or(0.3, |a| a.parse().expect("p"));
    let seed: u64 = args.next().map_or(1, |a| a.parse().expect("seed"));

    let g = gnp_graph(n, p, &mut Rng::new(seed))?;
    println!("G({n}, {p}), seed {seed}: {} edges", g.edge_count());
    for s in 2..=5 {
        let start = Instant::now();
        let stats = count_cliques(&g, s)?;
        let busiest = (0..n).max_by_key(|&v| stats.per_vertex_t[v]).unwrap_or(0);
        println!(
            "s = {s}: t = {:>12}, vertex {busiest} lies in {} of them ({:.1?})",
            stats.t,
            stats.per_vertex_t[busiest],
            start.elapsed()
        );
    }
    Ok(())
}
