//! Builds both extremal families across the triangle threshold and reports
//! the achieved count, the block size and the independence number.

use cliquebound::bounds::theorem2_threshold;
use cliquebound::clique::count_cliques;
use cliquebound::constructions::build_for_regime;
use cliquebound::indep::{exact_alpha, turan_greedy};

fn main() -> cliquebound::Result<()> {
    for n in [48usize, 400] {
        println!("n = {n}, threshold {:.0}", theorem2_threshold(n));
        for t in [0u64, 7, 120, 5_000, 200_000, 2_000_000] {
            let Ok((g, spec)) = build_for_regime(n, t, true, 1) else {
                println!("  t = {t}: out of range");
                continue;
            };
            assert_eq!(count_cliques(&g, 3)?.t, spec.achieved_t);
            let alpha = if n <= 64 {
                format!("{} (exact)", exact_alpha(&g, 64)?.0)
            } else {
                format!(">= {}", turan_greedy(&g).size())
            };
            println!(
                "  t = {t:>8}: {:<25} achieved {:>8}, lambda {:>2}, alpha {alpha}",
                spec.kind.name(),
                spec.achieved_t,
                spec.lambda.map_or("-".into(), |l| l.to_string()),
            );
        }
    }
    Ok(())
}
