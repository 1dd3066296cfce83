//! Sweeps the triangle count of extremal constructions on n vertices and
//! fits the log-log slope of the best independent set found on each side of
//! the threshold n^(3/2) sqrt(ln n).
//!
//! cargo run --release --example two_regime_sweep -- [n] [points] [seeds]

use std::time::Instant;

use cliquebound::bounds::binomial_f64;
use cliquebound::harness::{log_spaced_grid, scaling_fit, sweep, HarnessConfig, SweepParams};

fn main() -> cliquebound::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).map(|a| a.parse().expect("integer argument")).collect();
    let n = args.first().copied().unwrap_or(2000);
    let points = args.get(1).copied().unwrap_or(16);
    let seeds = args.get(2).copied().unwrap_or(10);

    let t_max = (binomial_f64(n as u64, 3) / 8.0) as u64;
    let params = SweepParams {
        n,
        t_grid: log_spaced_grid(1, t_max, points),
        seeds,
    };
    let start = Instant::now();
    let rows = sweep(&params, &HarnessConfig::default())?;
    let fit = scaling_fit(&rows, n);

    println!("threshold {:.0}", fit.threshold);
    for (t, a) in fit.below.iter().chain(&fit.above) {
        println!("{t:>12.0} {a:>8.2}");
    }
    println!("slope below {:?}", fit.slope_below);
    println!("slope above {:?}", fit.slope_above);
    println!("elapsed {:.1} s", start.elapsed().as_secs_f64());
    Ok(())
}
