//! Graphs with a prescribed triangle count and small independence number.
//!
//! Two families, one per side of the triangle threshold:
//!
//! - few triangles: a clique `K_a` next to a triangle-free graph, so that
//!   `alpha = alpha(base) + 1`;
//! - many triangles: the lexicographic product of a triangle-free base on
//!   `N` vertices with `K_lambda`, so that `alpha = alpha(base)`.
//!
//! The triangle-free base is a sample of the triangle-free process; its
//! independence number is measured, not assumed.

use std::fmt;
use std::str::FromStr;

use crate::bounds::{binomial, solve_lambda, theorem2_threshold};
use crate::clique::count_cliques;
use crate::error::{Error, Result};
use crate::generate::triangle_free_process;
use crate::graph::{Graph, GraphBuilder, VertexSet};
use crate::indep::{aks_greedy_seeded, exact_alpha, DEFAULT_ORACLE_CAP};
use crate::rng::Rng;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConstructionKind {
    CliquePlusTriangleFree,
    LexBlowup,
}

impl ConstructionKind {
    pub fn name(self) -> &'static str {
        match self {
            ConstructionKind::CliquePlusTriangleFree => "clique_plus_trianglefree",
            ConstructionKind::LexBlowup => "lex_blowup",
        }
    }
}

impl fmt::Display for ConstructionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ConstructionKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "clique_plus_trianglefree" => Ok(ConstructionKind::CliquePlusTriangleFree),
            "lex_blowup" => Ok(ConstructionKind::LexBlowup),
            other => Err(Error::arg(format!("unknown construction kind `{other}`"))),
        }
    }
}

/// Parameters and outcome of one construction.
#[derive(Clone, Debug, PartialEq)]
pub struct ConstructionSpec {
    pub kind: ConstructionKind,
    pub n: usize,
    /// Requested triangle count.
    pub t: u64,
    /// Clique size (clique-plus-triangle-free).
    pub a: Option<usize>,
    /// Block size (lex blowup).
    pub lambda: Option<usize>,
    /// Base graph size `floor(n / lambda)` (lex blowup).
    pub base_n: Option<usize>,
    pub seed: u64,
    pub exact_t: bool,
    /// Triangle count of the built graph, verified by enumeration.
    pub achieved_t: u64,
    /// Vertices outside the product blocks (lex blowup).
    pub padding: usize,
    /// How many of the padding vertices form the extra clique (lex blowup).
    pub padding_clique: usize,
    /// Clique sizes used by the exact top-up, in order.
    pub top_up: Vec<usize>,
    pub base_edges: usize,
    /// Independence number of the triangle-free base, and whether it is exact.
    pub base_alpha: usize,
    pub base_alpha_exact: bool,
    /// Whether `t` lies in the range the family is meant for.
    pub in_regime: bool,
}

impl ConstructionSpec {
    /// `achieved_t / t` (1 when both are 0).
    pub fn triangle_ratio(&self) -> f64 {
        if self.t == 0 {
            if self.achieved_t == 0 {
                1.0
            } else {
                f64::INFINITY
            }
        } else {
            self.achieved_t as f64 / self.t as f64
        }
    }

    /// Key-value text: one `key=value` per line, in a fixed order.
    pub fn to_kv(&self) -> String {
        let opt = |x: Option<usize>| x.map(|v| v.to_string()).unwrap_or_default();
        let top_up: Vec<String> = self.top_up.iter().map(|k| k.to_string()).collect();
        format!(
            "kind={}\nn={}\nt={}\na={}\nlambda={}\nN={}\nseed={}\nexact_t={}\nachieved_t={}\npadding={}\npadding_clique={}\ntop_up={}\nbase_edges={}\nbase_alpha={}\nbase_alpha_exact={}\nin_regime={}\n",
            self.kind,
            self.n,
            self.t,
            opt(self.a),
            opt(self.lambda),
            opt(self.base_n),
            self.seed,
            self.exact_t,
            self.achieved_t,
            self.padding,
            self.padding_clique,
            top_up.join(","),
            self.base_edges,
            self.base_alpha,
            self.base_alpha_exact,
            self.in_regime,
        )
    }

    /// Reads the inputs `kind, n, t, seed, exact_t` back from [`to_kv`](Self::to_kv)
    /// text; everything else is an output and is recomputed by [`rebuild`](Self::rebuild).
    pub fn parse_inputs(text: &str) -> Result<(ConstructionKind, usize, u64, u64, bool)> {
        let mut kind = None;
        let mut n = None;
        let mut t = None;
        let mut seed = None;
        let mut exact = None;
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (k, v) = line.split_once('=').ok_or_else(|| Error::Parse {
                line: i + 1,
                msg: "expected key=value".into(),
            })?;
            let bad = |what: &str| Error::Parse {
                line: i + 1,
                msg: format!("bad {what} `{v}`"),
            };
            match k {
                "kind" => kind = Some(v.parse()?),
                "n" => n = Some(v.parse().map_err(|_| bad("n"))?),
                "t" => t = Some(v.parse().map_err(|_| bad("t"))?),
                "seed" => seed = Some(v.parse().map_err(|_| bad("seed"))?),
                "exact_t" => exact = Some(v.parse().map_err(|_| bad("exact_t"))?),
                _ => {}
            }
        }
        let missing = |k: &str| Error::Parse {
            line: 0,
            msg: format!("missing key `{k}`"),
        };
        Ok((
            kind.ok_or_else(|| missing("kind"))?,
            n.ok_or_else(|| missing("n"))?,
            t.ok_or_else(|| missing("t"))?,
            seed.ok_or_else(|| missing("seed"))?,
            exact.ok_or_else(|| missing("exact_t"))?,
        ))
    }

    /// Rebuilds the graph from the recorded inputs.
    pub fn rebuild(&self) -> Result<(Graph, ConstructionSpec)> {
        build(self.kind, self.n, self.t, self.exact_t, self.seed)
    }
}

pub fn build(kind: ConstructionKind, n: usize, t: u64, exact_t: bool, seed: u64) -> Result<(Graph, ConstructionSpec)> {
    match kind {
        ConstructionKind::CliquePlusTriangleFree => build_clique_plus_trianglefree(n, t, exact_t, seed),
        ConstructionKind::LexBlowup => build_lex_blowup(n, t, exact_t, seed),
    }
}

fn triangles(g: &Graph) -> Result<u64> {
    if g.vertex_count() < 3 {
        Ok(0)
    } else {
        Ok(count_cliques(g, 3)?.t)
    }
}

fn choose3(a: usize) -> u64 {
    binomial(a as u64, 3).expect("fits")
}

/// Independence number of a triangle-free base: exact up to the oracle cap,
/// otherwise the best of the greedy heuristics.
fn measure_alpha(g: &Graph, seed: u64) -> (usize, bool) {
    match exact_alpha(g, DEFAULT_ORACLE_CAP) {
        Ok((a, _)) => (a, true),
        Err(_) => (aks_greedy_seeded(g, seed, 4).size(), false),
    }
}

/// Splits `residue` greedily into terms `binomial(k, 2)`, largest `k` first,
/// with `2 <= k <= max_k`.
fn pair_decomposition(mut residue: u64, max_k: usize) -> Result<Vec<usize>> {
    let mut ks = Vec::new();
    while residue > 0 {
        if max_k < 2 {
            return Err(Error::arg("top-up needs a clique of at least 2 vertices"));
        }
        let mut k = 2;
        while k < max_k && ((k + 1) * k / 2) as u64 <= residue {
            k += 1;
        }
        residue -= (k * (k - 1) / 2) as u64;
        ks.push(k);
    }
    Ok(ks)
}

/// Adds exactly `residue` triangles by joining spare isolated vertices to
/// `k` vertices of the clique `clique_vertices`; each such vertex adds
/// `binomial(k, 2)` triangles and no others. Spares are taken from the
/// highest-numbered isolated vertices outside the clique.
pub fn top_up_triangles(g: &Graph, clique_vertices: &VertexSet, residue: u64) -> Result<Graph> {
    if residue == 0 {
        return Ok(g.clone());
    }
    let members = clique_vertices.to_vec();
    for (i, &u) in members.iter().enumerate() {
        for &v in &members[i + 1..] {
            if !g.has_edge(u, v) {
                return Err(Error::arg(format!("vertices {u} and {v} of the clique are not adjacent")));
            }
        }
    }
    let ks = pair_decomposition(residue, members.len())?;
    let spares: Vec<usize> = (0..g.vertex_count())
        .rev()
        .filter(|&v| g.degree(v) == 0 && !clique_vertices.contains(v))
        .take(ks.len())
        .collect();
    if spares.len() < ks.len() {
        return Err(Error::InsufficientSpare {
            needed: ks.len(),
            available: spares.len(),
        });
    }
    let before = triangles(g)?;
    let mut b = GraphBuilder::from_graph(g);
    for (&w, &k) in spares.iter().zip(&ks) {
        for &c in &members[..k] {
            b.add_edge(w, c);
        }
    }
    let out = b.build();
    let after = triangles(&out)?;
    assert_eq!(after - before, residue, "top-up added the wrong number of triangles");
    Ok(out)
}

/// `K_a` plus a triangle-free process sample on the remaining vertices,
/// with `a` the largest clique size with `binomial(a, 3) <= t` (and `a = 0`
/// when that gives no triangles). With `exact_t`, the remainder
/// `t - binomial(a, 3)` is added by [`top_up_triangles`] using reserved
/// isolated vertices.
pub fn build_clique_plus_trianglefree(n: usize, t: u64, exact_t: bool, seed: u64) -> Result<(Graph, ConstructionSpec)> {
    let max_t = binomial(n as u64, 3).ok_or_else(|| Error::arg("n too large"))?;
    if t > max_t {
        return Err(Error::arg(format!("t = {t} exceeds binomial({n}, 3) = {max_t}")));
    }
    let in_regime = n <= 1 || (t as f64) <= theorem2_threshold(n);
    if !in_regime {
        log::warn!("t = {t} is above the few-triangles range for n = {n}");
    }
    let mut a = 0;
    while a < n && choose3(a + 1) <= t {
        a += 1;
    }
    if choose3(a) == 0 {
        a = 0;
    }
    let residue = t - choose3(a);
    let top_up = if exact_t { pair_decomposition(residue, a)? } else { Vec::new() };
    let spare = top_up.len();
    if a + spare > n {
        return Err(Error::InsufficientSpare {
            needed: spare,
            available: n - a,
        });
    }
    let base_n = n - a - spare;
    let mut rng = Rng::new(seed);
    let base = triangle_free_process(base_n, &mut rng);
    let mut g = crate::generate::complete_graph(a)
        .disjoint_union(&base)
        .disjoint_union(&Graph::empty(spare));
    if exact_t {
        g = top_up_triangles(&g, &VertexSet::from_vertices(n, 0..a), residue)?;
    }
    let achieved = triangles(&g)?;
    let expect = if exact_t { t } else { choose3(a) };
    assert_eq!(achieved, expect, "construction triangle count mismatch");
    let (base_alpha, base_alpha_exact) = measure_alpha(&base, seed);
    let spec = ConstructionSpec {
        kind: ConstructionKind::CliquePlusTriangleFree,
        n,
        t,
        a: Some(a),
        lambda: None,
        base_n: Some(base_n),
        seed,
        exact_t,
        achieved_t: achieved,
        padding: spare,
        padding_clique: 0,
        top_up,
        base_edges: base.edge_count(),
        base_alpha,
        base_alpha_exact,
        in_regime,
    };
    Ok((g, spec))
}

/// Lexicographic product `base[K_lambda]`: every vertex `v` becomes the
/// clique `{v * lambda, ..., v * lambda + lambda - 1}` and blocks of adjacent
/// base vertices are completely joined.
pub fn lex_product(base: &Graph, lambda: usize) -> Graph {
    let n = base.vertex_count();
    let mut b = GraphBuilder::new(n * lambda);
    for v in 0..n {
        for i in 0..lambda {
            for j in i + 1..lambda {
                b.add_edge(v * lambda + i, v * lambda + j);
            }
        }
    }
    for (u, v) in base.edges() {
        for i in 0..lambda {
            for j in 0..lambda {
                b.add_edge(u * lambda + i, v * lambda + j);
            }
        }
    }
    b.build()
}

/// Triangles of `base[K_lambda]` for a triangle-free base:
/// `N binomial(lambda, 3) + 2 |E| lambda binomial(lambda, 2)`.
pub fn lex_triangle_count(base_n: usize, base_edges: usize, lambda: usize) -> u64 {
    let l = lambda as u64;
    base_n as u64 * choose3(lambda) + 2 * base_edges as u64 * l * (l * l.saturating_sub(1) / 2)
}

/// Lex blowup for the many-triangles range `n^(3/2) sqrt(log n) <= t < binomial(n, 3)`.
///
/// `lambda` is the rounded solution of the blowup equation, `N = floor(n / lambda)`.
/// The `n - N lambda` leftover vertices stay isolated, or with `exact_t` the
/// first few form one extra clique whose size brings the count closest to `t`.
pub fn build_lex_blowup(n: usize, t: u64, exact_t: bool, seed: u64) -> Result<(Graph, ConstructionSpec)> {
    let max_t = binomial(n as u64, 3).ok_or_else(|| Error::arg("n too large"))?;
    if n < 2 || (t as f64) < theorem2_threshold(n) || t >= max_t {
        return Err(Error::arg(format!(
            "lex blowup needs n^(3/2) sqrt(log n) <= t < binomial(n, 3); got n = {n}, t = {t}"
        )));
    }
    let lambda = (solve_lambda(n, t as f64)?.round() as usize).clamp(1, n);
    build_lex_with_lambda(n, t, lambda, exact_t, seed)
}

/// [`build_lex_blowup`] with a caller-chosen block size and no regime check.
pub fn build_lex_with_lambda(n: usize, t: u64, lambda: usize, exact_t: bool, seed: u64) -> Result<(Graph, ConstructionSpec)> {
    if lambda == 0 || lambda > n {
        return Err(Error::arg(format!("block size {lambda} must lie in 1..={n}")));
    }
    let base_n = n / lambda;
    let mut rng = Rng::new(seed);
    let base = triangle_free_process(base_n, &mut rng);
    let product = lex_product(&base, lambda);
    let closed = lex_triangle_count(base_n, base.edge_count(), lambda);
    let padding = n - base_n * lambda;
    let padding_clique = if exact_t {
        (0..=padding)
            .min_by_key(|&r| (closed + choose3(r)).abs_diff(t))
            .unwrap_or(0)
    } else {
        0
    };
    let g = product
        .disjoint_union(&crate::generate::complete_graph(padding_clique))
        .disjoint_union(&Graph::empty(padding - padding_clique));
    let achieved = triangles(&g)?;
    assert_eq!(achieved, closed + choose3(padding_clique), "lex triangle identity failed");
    let (base_alpha, base_alpha_exact) = measure_alpha(&base, seed);
    let spec = ConstructionSpec {
        kind: ConstructionKind::LexBlowup,
        n,
        t,
        a: None,
        lambda: Some(lambda),
        base_n: Some(base_n),
        seed,
        exact_t,
        achieved_t: achieved,
        padding,
        padding_clique,
        top_up: Vec::new(),
        base_edges: base.edge_count(),
        base_alpha,
        base_alpha_exact,
        in_regime: n > 1 && (t as f64) >= theorem2_threshold(n),
    };
    Ok((g, spec))
}

/// The family that matches `t`: clique plus triangle-free up to the
/// triangle threshold, lex blowup above it.
pub fn build_for_regime(n: usize, t: u64, exact_t: bool, seed: u64) -> Result<(Graph, ConstructionSpec)> {
    if n > 1 && t as f64 > theorem2_threshold(n) {
        build_lex_blowup(n, t, exact_t, seed)
    } else {
        build_clique_plus_trianglefree(n, t, exact_t, seed)
    }
}
