//! Solves the constant chain and the auxiliary equations used in the
//! triangle case.

use cliquebound::bounds::{solve_constant_chain, solve_delta, solve_lambda, theorem1_bound, theorem2_threshold};
use cliquebound::harness::{constants_table, DEFAULT_C2};

fn main() -> cliquebound::Result<()> {
    print!("{}", constants_table(6, DEFAULT_C2, false)?);

    let boundary = solve_constant_chain(3, DEFAULT_C2)?.order(3).unwrap().cs_prime_boundary;
    println!("\nc3' boundary {boundary:.12}, closed form {:.12}", (-3.0 + 21f64.sqrt()) / 6.0);

    for c in [0.05, 0.1, 0.2] {
        let d = solve_delta(c)?;
        println!("delta({c}) = {:.6e}, residual {:.1e}", d.delta, d.residual);
    }

    let n = 10_000;
    let chain = solve_constant_chain(4, DEFAULT_C2)?;
    println!("\nn = {n}, triangle threshold {:.3e}", theorem2_threshold(n));
    for t in [0u64, 1_000_000, 100_000_000, 10_000_000_000] {
        let b = theorem1_bound(n, 3, t, &chain)?;
        let lambda = if t as f64 >= theorem2_threshold(n) {
            format!("{:.3}", solve_lambda(n, t as f64)?)
        } else {
            "-".into()
        };
        println!("t = {t:>12}: bound {:>9.4} ({}), lambda {lambda}", b.value, b.regime.unwrap());
    }
    Ok(())
}
