//! Reports and experiment drivers behind the command-line tool.
//!
//! CSV rows use the fixed column order in [`CSV_HEADER`]. Every randomized
//! step is seeded from the row's `seed`, so identical inputs give identical
//! bytes. Wall-clock time is the one nondeterministic quantity; the
//! `runtime_ms` column is left empty unless timing is requested.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::bounds::{binomial_f64, bound_report, solve_constant_chain, BoundReport, ConstantChain};
use crate::clique::count_cliques;
use crate::constructions::{build, build_for_regime, ConstructionKind, ConstructionSpec};
use crate::error::{Error, Result};
use crate::generate::gnp_graph;
use crate::graph::Graph;
use crate::indep::{best_certificate, exact_alpha, CandidateOutcome, DispatchConfig, ProofCase, DEFAULT_ORACLE_CAP};
use crate::io::{load_graph, save_graph, GraphFormat};
use crate::rng::Rng;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub const CSV_HEADER: &str =
    "kind,n,m,s,t,d_avg,seed,bound_t1,bound_t2,bound_aks,alg_best,alg_best_size,exact_alpha,runtime_ms";

/// Base constant for the Turán case.
pub const DEFAULT_C2: f64 = 1.0 / 3.0;

#[derive(Clone, Debug)]
pub struct HarnessConfig {
    pub s: usize,
    pub seed: u64,
    pub oracle_cap: usize,
    pub retries: usize,
    /// Constant of the triangle bound; 1 reports the bare shape.
    pub c_t2: f64,
    /// Constant of the triangle-aware bound; 1 reports the bare shape.
    pub c_aks: f64,
    pub timing: bool,
}

impl Default for HarnessConfig {
    fn default() -> Self {
        HarnessConfig {
            s: 3,
            seed: 0,
            oracle_cap: DEFAULT_ORACLE_CAP,
            retries: crate::indep::DEFAULT_MAX_RETRIES,
            c_t2: 1.0,
            c_aks: 1.0,
            timing: false,
        }
    }
}

#[derive(Clone, Debug)]
pub struct RunReport {
    /// File path or construction kind.
    pub source: String,
    pub kind: String,
    pub n: usize,
    pub m: usize,
    pub s: usize,
    pub t: u64,
    pub d_avg: f64,
    pub seed: u64,
    pub bounds: BoundReport,
    pub candidates: Vec<CandidateOutcome>,
    pub best_algorithm: String,
    pub best_size: usize,
    pub exact_alpha: Option<usize>,
    pub proof_case: Option<ProofCase>,
    pub runtime: Duration,
    pub version: &'static str,
}

fn fmt_f(x: f64) -> String {
    format!("{x:.6}")
}

impl RunReport {
    pub fn csv_row(&self, timing: bool) -> String {
        let opt_bound = |b: Option<crate::bounds::BoundValue>| b.map(|b| fmt_f(b.value)).unwrap_or_default();
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
            self.kind,
            self.n,
            self.m,
            self.s,
            self.t,
            fmt_f(self.d_avg),
            self.seed,
            fmt_f(self.bounds.theorem1),
            opt_bound(self.bounds.theorem2),
            opt_bound(self.bounds.aks),
            self.best_algorithm,
            self.best_size,
            self.exact_alpha.map(|a| a.to_string()).unwrap_or_default(),
            if timing {
                self.runtime.as_millis().to_string()
            } else {
                String::new()
            },
        )
    }

    /// Human-readable summary. Per-candidate times are shown only with `timing`.
    pub fn text(&self, timing: bool) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "source      {}", self.source);
        let _ = writeln!(out, "vertices    {}", self.n);
        let _ = writeln!(out, "edges       {}", self.m);
        let _ = writeln!(out, "average deg {}", fmt_f(self.d_avg));
        let _ = writeln!(out, "{}-cliques   {}", self.s, self.t);
        let _ = writeln!(out, "regime      {}", self.bounds.regime);
        let _ = writeln!(out, "bound t1    {}", fmt_f(self.bounds.theorem1));
        if let Some(b) = self.bounds.theorem2 {
            let _ = writeln!(out, "bound t2    {}", fmt_f(b.value));
        }
        if let Some(b) = self.bounds.aks {
            let _ = writeln!(out, "bound aks   {}", fmt_f(b.value));
        }
        if let Some(case) = self.proof_case {
            let _ = writeln!(out, "proof case  {case:?}");
        }
        for c in &self.candidates {
            let what = match &c.result {
                Ok(size) => size.to_string(),
                Err(e) => format!("failed: {e}"),
            };
            if timing {
                let _ = writeln!(out, "  {:<20} {what} ({} ms)", c.algorithm.name(), c.elapsed.as_millis());
            } else {
                let _ = writeln!(out, "  {:<20} {what}", c.algorithm.name());
            }
        }
        let _ = writeln!(out, "best        {} ({})", self.best_size, self.best_algorithm);
        match self.exact_alpha {
            Some(a) => {
                let _ = writeln!(out, "exact alpha {a}");
            }
            None => {
                let _ = writeln!(out, "exact alpha skipped (n > oracle cap)");
            }
        }
        let _ = writeln!(out, "version     {}", self.version);
        out
    }
}

fn chain_for(s: usize) -> Result<ConstantChain> {
    solve_constant_chain(s.max(3), DEFAULT_C2)
}

/// Full report for one graph.
pub fn analyze_graph(g: &Graph, source: &str, kind: &str, cfg: &HarnessConfig) -> Result<RunReport> {
    let start = Instant::now();
    let n = g.vertex_count();
    let s = cfg.s;
    let stats = count_cliques(g, s)?;
    let chain = chain_for(s)?;
    let bounds = bound_report(n, s, stats.t, stats.d_avg(), &chain, cfg.c_t2, cfg.c_aks)?;
    let dispatch = DispatchConfig {
        max_retries: cfg.retries,
        ..DispatchConfig::default()
    };
    let mut rng = Rng::stream(cfg.seed, 1);
    let report = best_certificate(g, s, &chain, &mut rng, &dispatch)?;
    let exact = if n <= cfg.oracle_cap {
        let (a, _) = exact_alpha(g, cfg.oracle_cap)?;
        debug_assert!(a >= report.best.size());
        Some(a)
    } else {
        None
    };
    Ok(RunReport {
        source: source.to_string(),
        kind: kind.to_string(),
        n,
        m: g.edge_count(),
        s,
        t: stats.t,
        d_avg: stats.d_avg(),
        seed: cfg.seed,
        bounds,
        best_algorithm: report.best.algorithm().name().to_string(),
        best_size: report.best.size(),
        candidates: report.candidates,
        exact_alpha: exact,
        proof_case: report.proof_case,
        runtime: start.elapsed(),
        version: VERSION,
    })
}

pub fn cmd_analyze(path: &Path, format: GraphFormat, cfg: &HarnessConfig) -> Result<RunReport> {
    let g = load_graph(path, format)?;
    analyze_graph(&g, &path.display().to_string(), "file", cfg)
}

/// `count` integers spaced evenly in log scale over `[lo, hi]`, deduplicated.
pub fn log_spaced_grid(lo: u64, hi: u64, count: usize) -> Vec<u64> {
    let lo = lo.max(1);
    if count <= 1 || hi <= lo {
        return vec![lo];
    }
    let (a, b) = ((lo as f64).ln(), (hi as f64).ln());
    let mut out: Vec<u64> = (0..count)
        .map(|i| (a + (b - a) * i as f64 / (count - 1) as f64).exp().round() as u64)
        .collect();
    out.dedup();
    out
}

#[derive(Clone, Debug)]
pub struct SweepParams {
    pub n: usize,
    pub t_grid: Vec<u64>,
    pub seeds: usize,
}

#[derive(Clone, Debug)]
pub struct SweepRow {
    pub target_t: u64,
    pub seed: u64,
    pub outcome: std::result::Result<(RunReport, Option<ConstructionSpec>), String>,
}

impl SweepRow {
    pub fn csv(&self, n: usize, s: usize, timing: bool) -> String {
        match &self.outcome {
            Ok((r, _)) => r.csv_row(timing),
            Err(_) => format!("skipped,{n},,{s},{},,{},,,,,,,", self.target_t, self.seed),
        }
    }
}

/// Builds the graph for one sweep cell: the triangle constructions for
/// `s = 3`, otherwise `G(n, p)` with `binomial(n, s) p^binomial(s, 2) = t`.
fn sweep_graph(n: usize, s: usize, t: u64, seed: u64) -> Result<(Graph, String, Option<ConstructionSpec>)> {
    if s == 3 {
        let (g, spec) = build_for_regime(n, t, true, seed)?;
        Ok((g, spec.kind.name().to_string(), Some(spec)))
    } else {
        let total = binomial_f64(n as u64, s as u64);
        if t as f64 > total {
            return Err(Error::arg(format!("t = {t} exceeds binomial({n}, {s})")));
        }
        let pairs = (s * (s - 1) / 2) as f64;
        let p = (t as f64 / total).powf(1.0 / pairs);
        let g = gnp_graph(n, p, &mut Rng::new(seed))?;
        Ok((g, "gnp".to_string(), None))
    }
}

/// Runs every `(t, seed)` cell; rows come back in grid order (t outer, seed
/// inner) whatever order the parallel workers finish in.
pub fn sweep(params: &SweepParams, cfg: &HarnessConfig) -> Result<Vec<SweepRow>> {
    if cfg.s < 2 || cfg.s > params.n {
        return Err(Error::arg(format!(
            "clique order s = {} must satisfy 2 <= s <= n = {}",
            cfg.s, params.n
        )));
    }
    let cells: Vec<(u64, u64)> = params
        .t_grid
        .iter()
        .flat_map(|&t| (0..params.seeds as u64).map(move |i| (t, cfg.seed + i)))
        .collect();
    let rows = cells
        .par_iter()
        .map(|&(t, seed)| {
            let outcome = (|| {
                let (g, kind, spec) = sweep_graph(params.n, cfg.s, t, seed)?;
                let cell_cfg = HarnessConfig { seed, ..cfg.clone() };
                let report = analyze_graph(&g, &kind, &kind, &cell_cfg)?;
                Ok::<_, Error>((report, spec))
            })();
            if let Err(e) = &outcome {
                log::warn!("skipping t = {t}, seed = {seed}: {e}");
            }
            SweepRow {
                target_t: t,
                seed,
                outcome: outcome.map_err(|e| e.to_string()),
            }
        })
        .collect();
    Ok(rows)
}

pub fn sweep_csv(params: &SweepParams, cfg: &HarnessConfig) -> Result<String> {
    let rows = sweep(params, cfg)?;
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in &rows {
        out.push_str(&r.csv(params.n, cfg.s, cfg.timing));
        out.push('\n');
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct ConstructOutcome {
    pub spec: ConstructionSpec,
    pub graph_path: PathBuf,
    pub spec_path: PathBuf,
    pub alpha: usize,
    pub alpha_exact: bool,
}

/// Sidecar path for a construction written to `out`: `<out>.spec`.
pub fn spec_path_for(out: &Path) -> PathBuf {
    let mut s = out.as_os_str().to_owned();
    s.push(".spec");
    PathBuf::from(s)
}

pub fn cmd_construct(
    kind: ConstructionKind,
    n: usize,
    t: u64,
    exact_t: bool,
    out: &Path,
    format: GraphFormat,
    cfg: &HarnessConfig,
) -> Result<ConstructOutcome> {
    let (g, spec) = build(kind, n, t, exact_t, cfg.seed)?;
    save_graph(&g, out, format)?;
    let spec_path = spec_path_for(out);
    std::fs::write(&spec_path, spec.to_kv()).map_err(|source| Error::Io {
        path: spec_path.clone(),
        source,
    })?;
    let (alpha, alpha_exact) = if n <= cfg.oracle_cap {
        (exact_alpha(&g, cfg.oracle_cap)?.0, true)
    } else {
        let chain = chain_for(3)?;
        let mut rng = Rng::stream(cfg.seed, 1);
        let dispatch = DispatchConfig {
            max_retries: cfg.retries,
            ..DispatchConfig::default()
        };
        (best_certificate(&g, 3, &chain, &mut rng, &dispatch)?.best.size(), false)
    };
    Ok(ConstructOutcome {
        spec,
        graph_path: out.to_path_buf(),
        spec_path,
        alpha,
        alpha_exact,
    })
}

pub const CONSTANTS_HEADER: &str = "s,cs_prime,cs,residual_eq1,residual_eq2,residual_eq3,delta";

/// The constant chain as CSV or an aligned text table.
pub fn constants_table(s_max: usize, c2: f64, csv: bool) -> Result<String> {
    let chain = solve_constant_chain(s_max, c2)?;
    let e = |x: f64| format!("{x:.12e}");
    let mut rows: Vec<[String; 7]> = vec![[
        "2".into(),
        String::new(),
        e(chain.c2),
        String::new(),
        String::new(),
        String::new(),
        String::new(),
    ]];
    for o in &chain.orders {
        let delta = if o.s == 3 {
            chain.delta3.map(e).unwrap_or_default()
        } else {
            String::new()
        };
        rows.push([
            o.s.to_string(),
            e(o.cs_prime),
            e(o.cs),
            e(o.residuals[0]),
            e(o.residuals[1]),
            e(o.residuals[2]),
            delta,
        ]);
    }
    let mut out = String::new();
    if csv {
        out.push_str(CONSTANTS_HEADER);
        out.push('\n');
        for r in rows {
            out.push_str(&r.join(","));
            out.push('\n');
        }
    } else {
        let head: Vec<&str> = CONSTANTS_HEADER.split(',').collect();
        let _ = writeln!(
            out,
            "{:>2}  {:>19}  {:>19}  {:>19}  {:>19}  {:>19}  {:>19}",
            head[0], head[1], head[2], head[3], head[4], head[5], head[6]
        );
        for r in rows {
            let _ = writeln!(
                out,
                "{:>2}  {:>19}  {:>19}  {:>19}  {:>19}  {:>19}  {:>19}",
                r[0],
                if r[1].is_empty() { "-" } else { &r[1] },
                r[2],
                if r[3].is_empty() { "-" } else { &r[3] },
                if r[4].is_empty() { "-" } else { &r[4] },
                if r[5].is_empty() { "-" } else { &r[5] },
                if r[6].is_empty() { "-" } else { &r[6] },
            );
        }
    }
    Ok(out)
}

/// An empirical constant `c` such that `achieved >= c * shape` on the
/// calibration data, together with the relative slack allowed when checking
/// other data against `c * shape`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FittedConstant {
    pub c: f64,
    pub slack: f64,
    pub samples: usize,
}

impl FittedConstant {
    /// Fits `c` as the smallest ratio `achieved / shape` over samples with a
    /// positive shape.
    pub fn fit(samples: &[(f64, f64)], slack: f64) -> Option<FittedConstant> {
        let ratios: Vec<f64> = samples
            .iter()
            .filter(|&&(_, shape)| shape > 0.0)
            .map(|&(achieved, shape)| achieved / shape)
            .collect();
        let c = ratios.iter().copied().fold(f64::INFINITY, f64::min);
        (c.is_finite() && c > 0.0).then_some(FittedConstant {
            c,
            slack,
            samples: ratios.len(),
        })
    }

    /// Whether `achieved` stays above the envelope `(1 - slack) c shape`.
    pub fn admits(&self, achieved: f64, shape: f64) -> bool {
        achieved >= (1.0 - self.slack) * self.c * shape
    }
}

/// Least-squares slope of `ln y` against `ln x`.
pub fn loglog_slope(points: &[(f64, f64)]) -> Option<f64> {
    let pts: Vec<(f64, f64)> = points
        .iter()
        .filter(|(x, y)| *x > 0.0 && *y > 0.0)
        .map(|(x, y)| (x.ln(), y.ln()))
        .collect();
    if pts.len() < 2 {
        return None;
    }
    let k = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / k;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / k;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

/// Log-log fit of the best independent set found against the clique count,
/// done separately on each side of the triangle threshold. Each grid target
/// contributes one point: mean achieved count against mean set size over its
/// seeds. Skipped cells are ignored; points whose mean count is zero sit
/// below the threshold but cannot enter a log fit.
#[derive(Clone, Debug)]
pub struct ScalingFit {
    pub threshold: f64,
    pub below: Vec<(f64, f64)>,
    pub above: Vec<(f64, f64)>,
    pub slope_below: Option<f64>,
    pub slope_above: Option<f64>,
}

pub fn scaling_fit(rows: &[SweepRow], n: usize) -> ScalingFit {
    let threshold = crate::bounds::theorem2_threshold(n);
    let mut cells: std::collections::BTreeMap<u64, (f64, f64, usize)> = Default::default();
    for r in rows {
        if let Ok((rep, _)) = &r.outcome {
            let e = cells.entry(r.target_t).or_default();
            e.0 += rep.t as f64;
            e.1 += rep.best_size as f64;
            e.2 += 1;
        }
    }
    let means = cells.into_values().map(|(t, a, k)| (t / k as f64, a / k as f64));
    let (above, below): (Vec<_>, Vec<_>) = means.partition(|&(t, _)| t > threshold);
    ScalingFit {
        threshold,
        slope_below: loglog_slope(&below),
        slope_above: loglog_slope(&above),
        below,
        above,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{complete_graph, petersen_graph};

    #[test]
    fn header_has_fourteen_columns() {
        assert_eq!(CSV_HEADER.split(',').count(), 14);
    }

    #[test]
    fn analyze_petersen() {
        let r = analyze_graph(&petersen_graph(), "petersen", "named", &HarnessConfig::default()).unwrap();
        assert_eq!(r.t, 0);
        assert_eq!(r.exact_alpha, Some(4));
        let turan = r
            .candidates
            .iter()
            .find(|c| c.algorithm == crate::indep::Algorithm::TuranGreedy)
            .unwrap();
        assert!(*turan.result.as_ref().unwrap() >= 3);
        assert_eq!(r.csv_row(false).split(',').count(), 14);
    }

    #[test]
    fn analyze_k10() {
        let r = analyze_graph(&complete_graph(10), "k10", "named", &HarnessConfig::default()).unwrap();
        assert_eq!((r.t, r.exact_alpha, r.best_size), (120, Some(1), 1));
    }

    #[test]
    fn analyze_rejects_big_s() {
        let cfg = HarnessConfig {
            s: 5,
            ..HarnessConfig::default()
        };
        let err = analyze_graph(&complete_graph(4), "k4", "named", &cfg).unwrap_err();
        assert!(err.is_usage());
    }

    #[test]
    fn grid_is_log_spaced() {
        assert_eq!(log_spaced_grid(1, 1000, 4), vec![1, 10, 100, 1000]);
        assert_eq!(log_spaced_grid(5, 5, 3), vec![5]);
    }

    #[test]
    fn slope_of_power_law() {
        let pts: Vec<(f64, f64)> = (1..10).map(|i| (i as f64, 3.0 * (i as f64).powf(-1.0 / 3.0))).collect();
        assert!((loglog_slope(&pts).unwrap() + 1.0 / 3.0).abs() < 1e-12);
        assert!(loglog_slope(&[(1.0, 1.0)]).is_none());
    }

    #[test]
    fn fitted_constant() {
        let f = FittedConstant::fit(&[(4.0, 2.0), (3.0, 1.0), (1.0, 0.0)], 0.25).unwrap();
        assert_eq!(f.c, 2.0);
        assert_eq!(f.samples, 2);
        assert!(f.admits(3.0, 2.0) && !f.admits(2.9, 2.0));
    }

    #[test]
    fn constants_s_max_two() {
        let csv = constants_table(2, DEFAULT_C2, true).unwrap();
        assert_eq!(csv.lines().count(), 2);
        assert!(csv.lines().nth(1).unwrap().starts_with("2,,3.333"));
    }

    #[test]
    fn gnp_sweep_for_s4() {
        let cfg = HarnessConfig {
            s: 4,
            ..HarnessConfig::default()
        };
        let params = SweepParams {
            n: 30,
            t_grid: vec![0, 100, 10_000],
            seeds: 2,
        };
        let csv = sweep_csv(&params, &cfg).unwrap();
        assert_eq!(csv.lines().count(), 7);
        assert!(csv.lines().skip(1).all(|l| l.starts_with("gnp,30,")));
    }
}
