use std::time::{Duration, Instant};

use rand::RngCore;

use crate::bounds::{theorem2_threshold, ConstantChain};
use crate::clique::{count_cliques, CliqueStats};
use crate::error::Result;
use crate::graph::Graph;
use crate::rng::Rng;

use super::greedy::{aks_greedy_seeded, turan_greedy, DEFAULT_GREEDY_REPEATS};
use super::proof::{neighborhood_clean_set, pivot_recursion};
use super::sparsify::{sparsify_and_recurse_seeded, SparsifyRule, DEFAULT_MAX_RETRIES};
use super::{Algorithm, IndependentSetCertificate};

/// Case split of the triangle argument. Defaults: `epsilon = 1/10`, so
/// minimum-degree greedy below average degree `n^(1/4 + epsilon)`, and
/// neighbourhood cleaning above `7 sqrt(n log n)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DispatchConfig {
    pub epsilon: f64,
    pub clean_factor: f64,
    pub greedy_repeats: usize,
    pub max_retries: usize,
}

impl Default for DispatchConfig {
    fn default() -> Self {
        DispatchConfig {
            epsilon: 0.1,
            clean_factor: 7.0,
            greedy_repeats: DEFAULT_GREEDY_REPEATS,
            max_retries: DEFAULT_MAX_RETRIES,
        }
    }
}

/// Which branch of the triangle argument an input falls in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProofCase {
    Turan,
    NeighborhoodClean,
    Aks,
    Sparsify,
}

pub fn triangle_proof_case(n: usize, t: u64, d_avg: f64, config: &DispatchConfig) -> ProofCase {
    if n > 1 && t as f64 > theorem2_threshold(n) {
        return ProofCase::Sparsify;
    }
    let nf = n as f64;
    if d_avg <= nf.powf(0.25 + config.epsilon) {
        ProofCase::Turan
    } else if n > 1 && d_avg > config.clean_factor * (nf * nf.ln()).sqrt() {
        ProofCase::NeighborhoodClean
    } else {
        ProofCase::Aks
    }
}

#[derive(Clone, Debug)]
pub struct CandidateOutcome {
    pub algorithm: Algorithm,
    /// Certificate size, or the error that stopped the candidate.
    pub result: std::result::Result<usize, String>,
    pub elapsed: Duration,
}

#[derive(Clone, Debug)]
pub struct CertificateReport {
    pub best: IndependentSetCertificate,
    pub candidates: Vec<CandidateOutcome>,
    /// Set for `s = 3`.
    pub proof_case: Option<ProofCase>,
}

/// Runs every algorithm that applies and keeps the largest certificate
/// (earliest candidate among ties). Candidates run in a fixed order and draw
/// their seeds from `rng` in that order.
pub fn best_certificate(
    g: &Graph,
    s: usize,
    chain: &ConstantChain,
    rng: &mut Rng,
    config: &DispatchConfig,
) -> Result<CertificateReport> {
    let n = g.vertex_count();
    let mut candidates = Vec::new();
    let mut best: Option<IndependentSetCertificate> = None;
    let mut consider = |algorithm: Algorithm,
                        run: &mut dyn FnMut() -> Result<IndependentSetCertificate>,
                        best: &mut Option<IndependentSetCertificate>| {
        let start = Instant::now();
        let out = run();
        let elapsed = start.elapsed();
        let result = match out {
            Ok(cert) => {
                let size = cert.size();
                if best.as_ref().is_none_or(|b| size > b.size()) {
                    *best = Some(cert);
                }
                Ok(size)
            }
            Err(e) => Err(e.to_string()),
        };
        candidates.push(CandidateOutcome {
            algorithm,
            result,
            elapsed,
        });
    };

    consider(Algorithm::TuranGreedy, &mut || Ok(turan_greedy(g)), &mut best);
    if s >= 2 && chain.cs(s).is_some() {
        consider(Algorithm::PivotRecursion, &mut || pivot_recursion(g, s, chain), &mut best);
    }
    let tri: Option<CliqueStats> = if n >= 3 { Some(count_cliques(g, 3)?) } else { None };
    if let Some(stats) = &tri {
        consider(Algorithm::NeighborhoodClean, &mut || neighborhood_clean_set(g, stats), &mut best);
        let seed = rng.next_u64();
        consider(
            Algorithm::AksGreedy,
            &mut || Ok(aks_greedy_seeded(g, seed, config.greedy_repeats)),
            &mut best,
        );
    }
    if s >= 2 && s <= n {
        let t = count_cliques(g, s)?.t;
        if SparsifyRule::for_order(s).in_regime(n, s, t) {
            let seed = rng.next_u64();
            consider(
                Algorithm::SparsifyRecurse,
                &mut || sparsify_and_recurse_seeded(g, s, chain, seed, config.max_retries),
                &mut best,
            );
        }
    }
    let proof_case = match (&tri, s) {
        (Some(stats), 3) => Some(triangle_proof_case(n, stats.t, stats.d_avg(), config)),
        _ => None,
    };
    Ok(CertificateReport {
        best: best.expect("turan_greedy always yields a certificate"),
        candidates,
        proof_case,
    })
}
