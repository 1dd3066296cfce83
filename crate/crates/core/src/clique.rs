//! Exact s-clique counts, globally and per vertex.
//!
//! Cliques are enumerated once each as rank-increasing tuples under a
//! degeneracy ordering. The last two vertices of every clique are never
//! enumerated individually: once `s - 2` vertices are fixed with common
//! forward neighbourhood `C`, the completions are the edges of `G[C]`,
//! counted with popcounts. Roots are processed in parallel with per-worker
//! accumulators; sums are integers, so the result does not depend on the
//! scheduling.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{and_count, iter_bits, words_for, Graph, VertexSet};

/// Clique statistics of a graph, or of an induced subgraph `G[S]`.
///
/// Per-vertex arrays are indexed by the vertex ids of the host graph;
/// vertices outside `S` have zero entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueStats {
    pub s: usize,
    /// Total number of s-cliques.
    pub t: u64,
    /// `t(v)`: number of s-cliques containing `v`.
    pub per_vertex_t: Vec<u64>,
    /// `d(v)` inside the counted vertex set.
    pub per_vertex_d: Vec<usize>,
    /// Number of vertices in the counted set.
    pub vertices: usize,
    /// Number of edges inside the counted set.
    pub edges: usize,
}

impl CliqueStats {
    /// Average degree `2m / n` of the counted set.
    pub fn d_avg(&self) -> f64 {
        if self.vertices == 0 {
            0.0
        } else {
            2.0 * self.edges as f64 / self.vertices as f64
        }
    }

    fn empty(s: usize, n: usize) -> Self {
        CliqueStats {
            s,
            t: 0,
            per_vertex_t: vec![0; n],
            per_vertex_d: vec![0; n],
            vertices: 0,
            edges: 0,
        }
    }
}

/// Vertices in degeneracy order: repeatedly remove a vertex of minimum
/// remaining degree (lowest id among ties).
pub fn degeneracy_order(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut deg = g.degrees();
    let max = deg.iter().copied().max().unwrap_or(0);
    let mut buckets: Vec<std::collections::BTreeSet<usize>> = vec![Default::default(); max + 1];
    for v in 0..n {
        buckets[deg[v]].insert(v);
    }
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut low = 0;
    for _ in 0..n {
        while buckets[low].is_empty() {
            low += 1;
        }
        let v = buckets[low].pop_first().expect("nonempty bucket");
        removed[v] = true;
        order.push(v);
        for u in g.neighbors(v) {
            if !removed[u] {
                buckets[deg[u]].remove(&u);
                deg[u] -= 1;
                buckets[deg[u]].insert(u);
                low = low.min(deg[u]);
            }
        }
    }
    order
}

/// Adjacency rows restricted to later vertices in degeneracy order.
fn forward_rows(g: &Graph) -> Vec<u64> {
    let n = g.vertex_count();
    let stride = g.stride();
    let mut rank = vec![0usize; n];
    for (i, v) in degeneracy_order(g).into_iter().enumerate() {
        rank[v] = i;
    }
    let mut fwd = vec![0u64; n * stride];
    for v in 0..n {
        for u in g.neighbors(v) {
            if rank[u] > rank[v] {
                fwd[v * stride + u / 64] |= 1 << (u % 64);
            }
        }
    }
    fwd
}

struct Acc {
    t: u64,
    per_vertex: Vec<u64>,
    overflow: bool,
}

impl Acc {
    fn new(n: usize) -> Self {
        Acc {
            t: 0,
            per_vertex: vec![0; n],
            overflow: false,
        }
    }

    fn add_total(&mut self, x: u64) {
        match self.t.checked_add(x) {
            Some(t) => self.t = t,
            None => self.overflow = true,
        }
    }

    fn add_vertex(&mut self, v: usize, x: u64) {
        match self.per_vertex[v].checked_add(x) {
            Some(c) => self.per_vertex[v] = c,
            None => self.overflow = true,
        }
    }

    fn merge(mut self, other: Acc) -> Acc {
        self.overflow |= other.overflow;
        self.add_total(other.t);
        for (v, x) in other.per_vertex.into_iter().enumerate() {
            if x != 0 {
                self.add_vertex(v, x);
            }
        }
        self
    }
}

struct Counter<'a> {
    g: &'a Graph,
    fwd: &'a [u64],
    stride: usize,
}

impl Counter<'_> {
    fn fwd_row(&self, v: usize) -> &[u64] {
        &self.fwd[v * self.stride..(v + 1) * self.stride]
    }

    /// Counts cliques formed by `stack` plus `need` more vertices from `cand`.
    fn extend(&self, stack: &mut Vec<usize>, cand: &[u64], need: usize, acc: &mut Acc) {
        if need == 2 {
            let mut pairs = 0u64;
            for u in iter_bits(cand) {
                let within = and_count(self.g.row(u), cand) as u64;
                if within > 0 {
                    acc.add_vertex(u, within);
                }
                pairs += and_count(self.fwd_row(u), cand) as u64;
            }
            if pairs > 0 {
                acc.add_total(pairs);
                for &v in stack.iter() {
                    acc.add_vertex(v, pairs);
                }
            }
            return;
        }
        let mut next = vec![0u64; self.stride];
        for u in iter_bits(cand) {
            let mut size = 0;
            for ((o, c), f) in next.iter_mut().zip(cand).zip(self.fwd_row(u)) {
                *o = c & f;
                size += o.count_ones() as usize;
            }
            if size + 1 >= need {
                stack.push(u);
                self.extend(stack, &next, need - 1, acc);
                stack.pop();
            }
        }
    }
}

fn count_in_scope(g: &Graph, scope: &VertexSet, s: usize) -> Result<CliqueStats> {
    let n = g.vertex_count();
    let stride = g.stride();
    let members = scope.to_vec();
    let mut stats = CliqueStats::empty(s, n);
    let mut degree_sum = 0usize;
    for &v in &members {
        let d = and_count(g.row(v), scope.words()) as usize;
        stats.per_vertex_d[v] = d;
        degree_sum += d;
    }
    stats.vertices = members.len();
    stats.edges = degree_sum / 2;
    if members.len() < s {
        return Ok(stats);
    }
    if s == 2 {
        stats.t = stats.edges as u64;
        for &v in &members {
            stats.per_vertex_t[v] = stats.per_vertex_d[v] as u64;
        }
        return Ok(stats);
    }

    let fwd = forward_rows(g);
    let counter = Counter { g, fwd: &fwd, stride };
    let acc = members
        .par_iter()
        .with_min_len(16)
        .fold(
            || Acc::new(n),
            |mut acc, &v| {
                let cand: Vec<u64> = counter
                    .fwd_row(v)
                    .iter()
                    .zip(scope.words())
                    .map(|(a, b)| a & b)
                    .collect();
                let mut stack = vec![v];
                counter.extend(&mut stack, &cand, s - 1, &mut acc);
                acc
            },
        )
        .reduce(|| Acc::new(n), Acc::merge);
    if acc.overflow {
        return Err(Error::Overflow);
    }
    stats.t = acc.t;
    stats.per_vertex_t = acc.per_vertex;
    debug_assert_eq!(
        stats.per_vertex_t.iter().map(|&x| x as u128).sum::<u128>(),
        s as u128 * stats.t as u128
    );
    Ok(stats)
}

/// Counts the s-cliques of `g`. Requires `2 <= s <= n`.
pub fn count_cliques(g: &Graph, s: usize) -> Result<CliqueStats> {
    let n = g.vertex_count();
    if s < 2 || s > n {
        return Err(Error::arg(format!("clique order s = {s} must satisfy 2 <= s <= n = {n}")));
    }
    count_in_scope(g, &VertexSet::full(n), s)
}

/// Counts the s-cliques of the induced subgraph `G[subset]` by masking
/// adjacency rows; no subgraph is materialized.
pub fn count_cliques_in_subset(g: &Graph, subset: &VertexSet, s: usize) -> Result<CliqueStats> {
    if s < 2 {
        return Err(Error::arg(format!("clique order s = {s} must be at least 2")));
    }
    if subset.universe() != g.vertex_count() {
        return Err(Error::arg("subset belongs to a graph of a different size"));
    }
    debug_assert_eq!(subset.words().len(), words_for(g.vertex_count()));
    count_in_scope(g, subset, s)
}
