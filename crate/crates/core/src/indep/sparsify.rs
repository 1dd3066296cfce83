//! Random sparsification for the many-cliques regime.
//!
//! Keep each vertex with probability `p`, accept the sample when it is
//! large enough and has at most twice its expected number of cliques, then
//! run the few-cliques algorithm inside it. Rejected samples are redrawn.

use rand::RngCore;

use crate::bounds::{theorem1_threshold, theorem2_threshold, ConstantChain};
use crate::clique::{count_cliques, count_cliques_in_subset};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::rng::Rng;

use super::greedy::{aks_greedy_seeded, DEFAULT_GREEDY_REPEATS};
use super::proof::{neighborhood_clean_set, pivot_recursion};
use super::{Algorithm, IndependentSetCertificate, TraceStep};

pub const DEFAULT_MAX_RETRIES: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SparsifyRule {
    /// `p = n / (t^(2/s) 2^(1 + 2/s))`, regime `t > n^(s/2)`.
    General,
    /// `p = (n / t^(2/3)) (log(n / t^(1/3)))^(1/3) / 4`, regime `t > n^(3/2) sqrt(log n)`.
    Triangle,
}

impl SparsifyRule {
    pub fn for_order(s: usize) -> Self {
        if s == 3 {
            SparsifyRule::Triangle
        } else {
            SparsifyRule::General
        }
    }

    pub fn in_regime(self, n: usize, s: usize, t: u64) -> bool {
        match self {
            SparsifyRule::General => t as f64 > theorem1_threshold(n, s),
            SparsifyRule::Triangle => n > 1 && t as f64 > theorem2_threshold(n),
        }
    }
}

/// Inclusion probability given by `rule`. May fall outside `(0, 1)`.
pub fn sparsify_probability(n: usize, t: u64, s: usize, rule: SparsifyRule) -> f64 {
    let nf = n as f64;
    let tf = t as f64;
    match rule {
        SparsifyRule::General => {
            let sf = s as f64;
            nf / (tf.powf(2.0 / sf) * 2f64.powf(1.0 + 2.0 / sf))
        }
        SparsifyRule::Triangle => 0.25 * (nf / tf.powf(2.0 / 3.0)) * (nf / tf.cbrt()).ln().cbrt(),
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SparsifyAttempt {
    pub subset: VertexSet,
    pub size: usize,
    /// s-cliques inside the sample.
    pub cliques: u64,
    /// `n p / 2`.
    pub size_floor: f64,
    /// `2 t p^s`.
    pub clique_limit: f64,
    pub accepted: bool,
}

/// Draws one sample and evaluates the acceptance event
/// `|S| >= n p / 2` and `T <= 2 t p^s`.
pub fn sparsify_attempt(g: &Graph, s: usize, t: u64, p: f64, rng: &mut Rng) -> Result<SparsifyAttempt> {
    let n = g.vertex_count();
    let mut subset = VertexSet::new(n);
    for v in 0..n {
        if rng.chance(p) {
            subset.insert(v);
        }
    }
    let size = subset.len();
    let cliques = count_cliques_in_subset(g, &subset, s)?.t;
    let size_floor = n as f64 * p / 2.0;
    let clique_limit = 2.0 * t as f64 * p.powi(s as i32);
    Ok(SparsifyAttempt {
        accepted: size as f64 >= size_floor && cliques as f64 <= clique_limit,
        subset,
        size,
        cliques,
        size_floor,
        clique_limit,
    })
}

/// The few-cliques algorithm used inside an accepted sample (or directly,
/// when sparsification does not apply).
fn small_t_algorithm(g: &Graph, s: usize, chain: &ConstantChain, rng: &mut Rng) -> Result<IndependentSetCertificate> {
    if s == 3 && g.vertex_count() >= 3 {
        let stats = count_cliques(g, 3)?;
        let aks = aks_greedy_seeded(g, rng.next_u64(), DEFAULT_GREEDY_REPEATS);
        let clean = neighborhood_clean_set(g, &stats)?;
        Ok(if clean.size() > aks.size() { clean } else { aks })
    } else {
        pivot_recursion(g, s, chain)
    }
}

/// Sparsify-then-recurse with a generator drawn from `rng`.
pub fn sparsify_and_recurse(
    g: &Graph,
    s: usize,
    chain: &ConstantChain,
    rng: &mut Rng,
    max_retries: usize,
) -> Result<IndependentSetCertificate> {
    let seed = rng.next_u64();
    sparsify_and_recurse_seeded(g, s, chain, seed, max_retries)
}

/// Sparsify-then-recurse driven by a generator seeded with `seed`.
///
/// Out of regime, or when the formula puts `p` outside `(0, 1)`, the
/// few-cliques algorithm runs on `g` itself and the trace records the
/// fallthrough. After `max_retries` rejected samples the call fails with the
/// statistics of the last one.
pub fn sparsify_and_recurse_seeded(
    g: &Graph,
    s: usize,
    chain: &ConstantChain,
    seed: u64,
    max_retries: usize,
) -> Result<IndependentSetCertificate> {
    let n = g.vertex_count();
    if s < 2 || s > n {
        return Err(Error::arg(format!("clique order s = {s} must satisfy 2 <= s <= n = {n}")));
    }
    let mut rng = Rng::new(seed);
    let t = count_cliques(g, s)?.t;
    let rule = SparsifyRule::for_order(s);
    let p = sparsify_probability(n, t, s, rule);

    let fallthrough = |reason: &'static str, rng: &mut Rng| -> Result<IndependentSetCertificate> {
        let inner = small_t_algorithm(g, s, chain, rng)?;
        let mut trace = vec![TraceStep::Fallthrough { p, reason }];
        trace.extend(inner.trace().iter().cloned());
        Ok(IndependentSetCertificate::new(
            g,
            inner.vertices().clone(),
            Algorithm::SparsifyRecurse,
            trace,
            Some(seed),
        ))
    };
    if !rule.in_regime(n, s, t) {
        return fallthrough("below_threshold", &mut rng);
    }
    if !(p > 0.0 && p < 1.0) {
        return fallthrough("p_out_of_range", &mut rng);
    }

    let mut last = None;
    for attempt in 1..=max_retries.max(1) {
        let a = sparsify_attempt(g, s, t, p, &mut rng)?;
        if !a.accepted {
            last = Some(a);
            continue;
        }
        let (h, map) = g.induced_subgraph(&a.subset);
        // Re-derive both acceptance quantities from the materialized subgraph.
        let recount = if s <= h.vertex_count() {
            count_cliques(&h, s)?.t
        } else {
            0
        };
        assert_eq!(recount, a.cliques, "masked and materialized clique counts disagree");
        assert!(h.vertex_count() as f64 >= a.size_floor && recount as f64 <= a.clique_limit);

        let inner = if s <= h.vertex_count() {
            small_t_algorithm(&h, s, chain, &mut rng)?
        } else {
            super::turan_greedy(&h)
        };
        let mut trace = vec![TraceStep::Sparsify {
            p,
            attempts: attempt,
            sample_size: a.size,
            cliques: a.cliques,
            clique_limit: a.clique_limit,
        }];
        trace.extend(inner.trace().iter().cloned());
        let ids = inner.vertices().iter().map(|v| map[v]);
        return Ok(IndependentSetCertificate::from_ids(
            g,
            ids,
            Algorithm::SparsifyRecurse,
            trace,
            Some(seed),
        ));
    }
    let last = last.expect("at least one attempt");
    Err(Error::RetriesExhausted {
        retries: max_retries,
        p,
        last_size: last.size,
        last_cliques: last.cliques,
    })
}
