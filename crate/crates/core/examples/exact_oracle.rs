//! Exact independence numbers of small graphs, with the witness set.

use cliquebound::constructions::lex_product;
use cliquebound::generate::{cycle_graph, gnp_graph, petersen_graph, wheel_graph};
use cliquebound::indep::{exact_alpha, DEFAULT_ORACLE_CAP};
use cliquebound::{Graph, Rng};

fn main() -> cliquebound::Result<()> {
    let graphs: Vec<(&str, Graph)> = vec![
        ("C5", cycle_graph(5)),
        ("Petersen", petersen_graph()),
        ("wheel(7)", wheel_graph(7)),
        ("C5[K4]", lex_product(&cycle_graph(5), 4)),
        ("G(60, 0.2)", gnp_graph(60, 0.2, &mut Rng::new(7))?),
    ];
    for (name, g) in &graphs {
        let (alpha, cert) = exact_alpha(g, DEFAULT_ORACLE_CAP)?;
        println!("{name:<12} n = {:>2}  alpha = {alpha:>2}  {:?}", g.vertex_count(), cert.vertices().to_vec());
        print!("{}", cert.trace_text());
    }
    let big = Graph::empty(200);
    match exact_alpha(&big, DEFAULT_ORACLE_CAP) {
        Ok(_) => unreachable!(),
        Err(e) => println!("n = 200: {e}"),
    }
    Ok(())
}
