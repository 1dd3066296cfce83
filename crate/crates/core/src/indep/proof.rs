//! Deterministic versions of the clique-order induction.
//!
//! The averaging step ("some vertex does at least as well as a random one")
//! is derandomized by taking the best vertex outright.

use crate::bounds::ConstantChain;
use crate::clique::{count_cliques_in_subset, CliqueStats};
use crate::error::{Error, Result};
use crate::graph::{and_count, Graph, VertexSet};

use super::greedy::min_degree_greedy;
use super::{Algorithm, IndependentSetCertificate, TraceStep};

/// `X_v = d(v) - t(v)^(2/(s-1))` for every vertex.
pub fn pivot_scores(stats: &CliqueStats) -> Vec<f64> {
    let exp = 2.0 / (stats.s as f64 - 1.0);
    stats
        .per_vertex_d
        .iter()
        .zip(&stats.per_vertex_t)
        .map(|(&d, &t)| d as f64 - (t as f64).powf(exp))
        .collect()
}

fn argmax_lowest(scores: &[f64]) -> Option<usize> {
    let mut best: Option<usize> = None;
    for (v, &x) in scores.iter().enumerate() {
        if best.is_none_or(|b| x > scores[b]) {
            best = Some(v);
        }
    }
    best
}

/// Vertex maximizing `X_v`, lowest id among ties. `None` for the empty graph.
pub fn select_pivot_vertex(g: &Graph, stats: &CliqueStats) -> Option<usize> {
    debug_assert_eq!(stats.per_vertex_d.len(), g.vertex_count());
    argmax_lowest(&pivot_scores(stats))
}

fn recurse(
    g: &Graph,
    labels: &[usize],
    s: usize,
    chain: &ConstantChain,
    depth: usize,
    trace: &mut Vec<TraceStep>,
) -> Result<Vec<usize>> {
    let n = g.vertex_count();
    let turan = |trace: &mut Vec<TraceStep>| {
        let ids = min_degree_greedy(g, &VertexSet::full(n));
        trace.push(TraceStep::Turan {
            depth,
            vertices: n,
            edges: g.edge_count(),
            size: ids.len(),
        });
        ids.into_iter().map(|v| labels[v]).collect()
    };
    if n == 0 {
        return Ok(Vec::new());
    }
    if s <= 2 {
        return Ok(turan(trace));
    }
    let cs_prime = chain
        .cs_prime(s)
        .ok_or_else(|| Error::arg(format!("constant chain covers s <= {}, got s = {s}", chain.s_max)))?;
    let threshold = cs_prime.recip() * (n as f64).powf((s as f64 - 2.0) / (s as f64 - 1.0));
    if g.average_degree() <= threshold {
        return Ok(turan(trace));
    }
    let stats = count_cliques_in_subset(g, &VertexSet::full(n), s)?;
    let scores = pivot_scores(&stats);
    let v = argmax_lowest(&scores).expect("n > 0");
    let nbhd = g.neighborhood(v);
    if nbhd.is_empty() {
        return Ok(turan(trace));
    }
    trace.push(TraceStep::Pivot {
        depth,
        s,
        vertex: labels[v],
        score: scores[v],
        neighborhood: nbhd.len(),
    });
    let (h, map) = g.induced_subgraph(&nbhd);
    let sub_labels: Vec<usize> = map.iter().map(|&u| labels[u]).collect();
    recurse(&h, &sub_labels, s - 1, chain, depth + 1, trace)
}

/// Clique-order induction as an algorithm.
///
/// With `s = 2`, or average degree at most `n^((s-2)/(s-1)) / c_s'`, this is
/// minimum-degree greedy. Otherwise it moves to the neighbourhood of the
/// vertex maximizing `X_v` and recurses with order `s - 1`; the depth is at
/// most `s - 2`.
pub fn pivot_recursion(g: &Graph, s: usize, chain: &ConstantChain) -> Result<IndependentSetCertificate> {
    if s < 2 {
        return Err(Error::arg(format!("clique order s = {s} must be at least 2")));
    }
    let labels: Vec<usize> = (0..g.vertex_count()).collect();
    let mut trace = Vec::new();
    let ids = recurse(g, &labels, s, chain, 0, &mut trace)?;
    Ok(IndependentSetCertificate::from_ids(g, ids, Algorithm::PivotRecursion, trace, None))
}

/// Picks `v` maximizing `d(v) - 2 t(v)` (triangle counts in `stats`) and
/// cleans its neighbourhood: while `G[N(v)]` has an edge, delete a vertex of
/// largest degree there. Every edge of `G[N(v)]` is a triangle through `v`,
/// so at most `t(v)` deletions happen and the result has at least
/// `d(v) - t(v)` vertices. Falls back to `{v}` if nothing survives.
pub fn neighborhood_clean_set(g: &Graph, stats: &CliqueStats) -> Result<IndependentSetCertificate> {
    if stats.s != 3 {
        return Err(Error::arg(format!("neighbourhood cleaning needs triangle stats, got s = {}", stats.s)));
    }
    let n = g.vertex_count();
    if n == 0 {
        return Ok(IndependentSetCertificate::new(g, VertexSet::new(0), Algorithm::NeighborhoodClean, Vec::new(), None));
    }
    let scores: Vec<f64> = stats
        .per_vertex_d
        .iter()
        .zip(&stats.per_vertex_t)
        .map(|(&d, &t)| d as f64 - 2.0 * t as f64)
        .collect();
    let v = argmax_lowest(&scores).expect("n > 0");
    let mut keep = g.neighborhood(v);
    let mut removed = 0;
    loop {
        let worst = keep
            .iter()
            .map(|u| (and_count(g.row(u), keep.words()), u))
            .max_by_key(|&(d, u)| (d, std::cmp::Reverse(u)));
        match worst {
            Some((d, u)) if d > 0 => {
                keep.remove(u);
                removed += 1;
            }
            _ => break,
        }
    }
    let degree = stats.per_vertex_d[v];
    let triangles = stats.per_vertex_t[v];
    assert!(
        keep.len() as f64 >= degree as f64 - 2.0 * triangles as f64,
        "cleaning kept {} < d - 2t = {}",
        keep.len(),
        scores[v]
    );
    if keep.is_empty() {
        keep.insert(v);
    }
    let trace = vec![TraceStep::Clean {
        vertex: v,
        degree,
        triangles,
        removed,
    }];
    Ok(IndependentSetCertificate::new(g, keep, Algorithm::NeighborhoodClean, trace, None))
}
