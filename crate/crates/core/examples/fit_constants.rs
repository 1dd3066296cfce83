//! Fits empirical constants for the two triangle bounds from exact
//! independence numbers of small graphs, then checks a held-out set
//! against the fitted envelopes.

use cliquebound::bounds::{aks_bound, theorem2_bound};
use cliquebound::clique::count_cliques;
use cliquebound::constructions::build_for_regime;
use cliquebound::generate::gnp_graph;
use cliquebound::harness::FittedConstant;
use cliquebound::indep::exact_alpha;
use cliquebound::{Graph, Rng};

const SLACK: f64 = 0.25;

type Samples = Vec<(f64, f64)>;

fn samples(graphs: &[Graph]) -> cliquebound::Result<(Samples, Samples)> {
    let (mut t2, mut aks) = (Vec::new(), Vec::new());
    for g in graphs {
        let n = g.vertex_count();
        let alpha = exact_alpha(g, 64)?.0 as f64;
        let stats = count_cliques(g, 3)?;
        t2.push((alpha, theorem2_bound(n, stats.t, 1.0)?.value));
        if stats.d_avg() > 1.0 {
            aks.push((alpha, aks_bound(n, stats.d_avg(), stats.t, 1.0)?.value));
        }
    }
    Ok((t2, aks))
}

fn corpus(seed: u64) -> cliquebound::Result<Vec<Graph>> {
    let mut rng = Rng::new(seed);
    let mut out = Vec::new();
    for i in 0..100 {
        let n = 20 + rng.below(41) as usize;
        if i % 2 == 0 {
            out.push(gnp_graph(n, 0.05 + 0.9 * rng.below(100) as f64 / 100.0, &mut rng)?);
        } else {
            let max_t = (n * (n - 1) * (n - 2) / 6) as u64;
            out.push(build_for_regime(n, rng.below(max_t.min(2000)), true, rng.below(u64::MAX))?.0);
        }
    }
    Ok(out)
}

fn main() -> cliquebound::Result<()> {
    let (cal2, cal3) = samples(&corpus(1)?)?;
    let (val2, val3) = samples(&corpus(2)?)?;
    for (name, cal, val) in [("triangle bound", cal2, val2), ("aks bound", cal3, val3)] {
        let fit = FittedConstant::fit(&cal, SLACK).expect("positive shapes");
        let misses = val.iter().filter(|&&(a, s)| !fit.admits(a, s)).count();
        println!(
            "{name:<15} c = {:.4} from {} graphs; held out: {misses}/{} below (1 - {SLACK}) c shape",
            fit.c,
            fit.samples,
            val.len()
        );
    }
    Ok(())
}
