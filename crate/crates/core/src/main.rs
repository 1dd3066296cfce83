use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use cliquebound::constructions::ConstructionKind;
use cliquebound::harness::{
    cmd_analyze, cmd_construct, constants_table, log_spaced_grid, sweep_csv, HarnessConfig, SweepParams, CSV_HEADER,
    DEFAULT_C2,
};
use cliquebound::io::GraphFormat;
use cliquebound::{Error, Result};

const CSV_HELP: &str = "CSV columns:
  kind,n,m,s,t,d_avg,seed,bound_t1,bound_t2,bound_aks,alg_best,alg_best_size,exact_alpha,runtime_ms
bound_t2 and bound_aks are empty unless s = 3; exact_alpha is empty above --oracle-cap;
runtime_ms is empty unless --timing is given. Rows that could not be built start with `skipped`.";

#[derive(Parser)]
#[command(
    name = "cliquebound",
    version,
    about = "Independence-number bounds for graphs with few or many s-cliques",
    after_help = CSV_HELP
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Clique order s.
    #[arg(long = "s", default_value_t = 3)]
    s: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Largest n handed to the exact solver.
    #[arg(long, default_value_t = cliquebound::indep::DEFAULT_ORACLE_CAP)]
    oracle_cap: usize,
    /// Sparsification resamples before giving up.
    #[arg(long, default_value_t = cliquebound::indep::DEFAULT_MAX_RETRIES)]
    retries: usize,
    /// Constant multiplying the triangle bound.
    #[arg(long, default_value_t = 1.0)]
    c_t2: f64,
    /// Constant multiplying the triangle-aware bound.
    #[arg(long, default_value_t = 1.0)]
    c_aks: f64,
    /// Fill the runtime column (output is then no longer reproducible).
    #[arg(long)]
    timing: bool,
}

impl Common {
    fn config(&self) -> HarnessConfig {
        HarnessConfig {
            s: self.s,
            seed: self.seed,
            oracle_cap: self.oracle_cap,
            retries: self.retries,
            c_t2: self.c_t2,
            c_aks: self.c_aks,
            timing: self.timing,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Count cliques, evaluate bounds and run every algorithm on one graph.
    #[command(after_help = CSV_HELP)]
    Analyze {
        graph: PathBuf,
        #[arg(long, default_value = "dimacs")]
        format: GraphFormat,
        /// Print a CSV row (with header) instead of the text report.
        #[arg(long)]
        csv: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Build graphs over a grid of clique counts and print one CSV row per cell.
    #[command(after_help = CSV_HELP)]
    Sweep {
        #[arg(long)]
        n: usize,
        /// Explicit comma-separated clique counts.
        #[arg(long, value_delimiter = ',', conflicts_with = "t_log")]
        t: Vec<u64>,
        /// Number of log-spaced clique counts in [1, t_max].
        #[arg(long)]
        t_log: Option<usize>,
        /// Upper end of the log grid; defaults to binomial(n, s) / 8.
        #[arg(long)]
        t_max: Option<u64>,
        #[arg(long, default_value_t = 1)]
        seeds: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Build one of the extremal constructions and write it to disk.
    Construct {
        kind: ConstructionKind,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: u64,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value = "dimacs")]
        format: GraphFormat,
        /// Stop at the largest count the construction reaches without topping up.
        #[arg(long)]
        approximate: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Print the constant chain c_2, c_3', c_3, ... with residuals.
    Constants {
        #[arg(long, default_value_t = 6)]
        s_max: usize,
        #[arg(long, default_value_t = DEFAULT_C2)]
        c2: f64,
        #[arg(long)]
        csv: bool,
    },
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Analyze {
            graph,
            format,
            csv,
            common,
        } => {
            let cfg = common.config();
            let report = cmd_analyze(&graph, format, &cfg)?;
            if csv {
                println!("{CSV_HEADER}");
                println!("{}", report.csv_row(cfg.timing));
            } else {
                print!("{}", report.text(cfg.timing));
            }
        }
        Command::Sweep {
            n,
            t,
            t_log,
            t_max,
            seeds,
            common,
        } => {
            let cfg = common.config();
            let t_grid = match t_log {
                Some(count) => {
                    let hi = t_max.unwrap_or_else(|| {
                        (cliquebound::bounds::binomial_f64(n as u64, cfg.s as u64) / 8.0).floor() as u64
                    });
                    log_spaced_grid(1, hi, count)
                }
                None if t.is_empty() => return Err(Error::InvalidArgument("give --t or --t-log".into())),
                None => t,
            };
            print!("{}", sweep_csv(&SweepParams { n, t_grid, seeds }, &cfg)?);
        }
        Command::Construct {
            kind,
            n,
            t,
            out,
            format,
            approximate,
            common,
        } => {
            let cfg = common.config();
            let o = cmd_construct(kind, n, t, !approximate, &out, format, &cfg)?;
            println!("kind        {}", o.spec.kind);
            println!("target t    {t}");
            println!("achieved t  {}", o.spec.achieved_t);
            println!(
                "alpha       {} ({})",
                o.alpha,
                if o.alpha_exact { "exact" } else { "heuristic" }
            );
            println!("graph       {}", o.graph_path.display());
            println!("spec        {}", o.spec_path.display());
        }
        Command::Constants { s_max, c2, csv } => print!("{}", constants_table(s_max, c2, csv)?),
    }
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_usage() { 2 } else { 1 })
        }
    }
}
