use rand::RngCore;

use crate::clique::count_cliques;
use crate::graph::{and3_count, and_count, Graph, VertexSet};
use crate::rng::Rng;

use super::{Algorithm, IndependentSetCertificate, TraceStep};

pub const DEFAULT_GREEDY_REPEATS: usize = 8;

/// `size >= n / (d_avg + 1)`, checked in integers as `size (2m + n) >= n^2`.
pub fn turan_guarantee_holds(g: &Graph, size: usize) -> bool {
    let n = g.vertex_count() as u128;
    let m = g.edge_count() as u128;
    size as u128 * (2 * m + n) >= n * n
}

/// Minimum-degree greedy on the live vertices; returns the chosen ids.
pub(crate) fn min_degree_greedy(g: &Graph, live: &VertexSet) -> Vec<usize> {
    let n = g.vertex_count();
    let mut alive = live.clone();
    let mut deg = vec![0usize; n];
    for v in alive.iter() {
        deg[v] = and_count(g.row(v), alive.words()) as usize;
    }
    let mut chosen = Vec::new();
    while !alive.is_empty() {
        let v = alive
            .iter()
            .min_by_key(|&v| (deg[v], v))
            .expect("nonempty");
        chosen.push(v);
        let mut closed: Vec<usize> = g.neighbors(v).filter(|&u| alive.contains(u)).collect();
        closed.push(v);
        for &x in &closed {
            alive.remove(x);
        }
        for &x in &closed {
            for y in g.neighbors(x) {
                if alive.contains(y) {
                    deg[y] -= 1;
                }
            }
        }
    }
    chosen
}

/// Minimum-degree greedy: take a vertex of least remaining degree (lowest id
/// among ties) and delete its closed neighbourhood.
///
/// Always reaches `ceil(n / (d_avg + 1))`; that is asserted on every call.
pub fn turan_greedy(g: &Graph) -> IndependentSetCertificate {
    let chosen = min_degree_greedy(g, &VertexSet::full(g.vertex_count()));
    assert!(
        turan_guarantee_holds(g, chosen.len()),
        "min-degree greedy fell below n/(d+1): {} on n={} m={}",
        chosen.len(),
        g.vertex_count(),
        g.edge_count()
    );
    let trace = vec![TraceStep::Turan {
        depth: 0,
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        size: chosen.len(),
    }];
    IndependentSetCertificate::from_ids(g, chosen, Algorithm::TuranGreedy, trace, None)
}

/// Triangle-aware heuristic for the regime with few triangles.
///
/// Deletes vertices greedily (most triangles first, lowest id among ties)
/// until the rest is triangle-free, runs `repeats` random-order greedy passes
/// on the remainder, and returns the larger of the best pass and
/// [`turan_greedy`] on the whole graph. No size guarantee is claimed.
pub fn aks_greedy(g: &Graph, rng: &mut Rng, repeats: usize) -> IndependentSetCertificate {
    let seed = rng.next_u64();
    aks_greedy_seeded(g, seed, repeats)
}

/// [`aks_greedy`] driven by a generator freshly seeded with `seed`; replays
/// a certificate from its recorded seed.
pub fn aks_greedy_seeded(g: &Graph, seed: u64, repeats: usize) -> IndependentSetCertificate {
    let repeats = repeats.max(1);
    let mut rng = Rng::new(seed);
    let n = g.vertex_count();
    let mut tri: Vec<u64> = if n >= 3 {
        count_cliques(g, 3).expect("s = 3 <= n").per_vertex_t
    } else {
        vec![0; n]
    };
    let mut alive = VertexSet::full(n);
    let mut removed = 0;
    while let Some((x, _)) = tri
        .iter()
        .enumerate()
        .filter(|&(v, &c)| c > 0 && alive.contains(v))
        .max_by_key(|&(v, &c)| (c, std::cmp::Reverse(v)))
    {
        for u in g.neighbors(x) {
            if alive.contains(u) {
                tri[u] -= and3_count(g.row(u), g.row(x), alive.words()) as u64;
            }
        }
        alive.remove(x);
        tri[x] = 0;
        removed += 1;
    }
    let rest = alive.to_vec();

    let mut best: Vec<usize> = Vec::new();
    let mut order = rest.clone();
    for _ in 0..repeats {
        rng.shuffle(&mut order);
        let mut blocked = VertexSet::new(n);
        let mut picked = Vec::new();
        for &v in &order {
            if !blocked.contains(v) {
                picked.push(v);
                blocked.insert(v);
                for u in g.neighbors(v) {
                    blocked.insert(u);
                }
            }
        }
        if picked.len() > best.len() {
            best = picked;
        }
    }

    let turan = turan_greedy(g);
    let mut trace = vec![
        TraceStep::TriangleHitting {
            removed,
            remaining: rest.len(),
        },
        TraceStep::RandomGreedy {
            repeats,
            best: best.len(),
            turan: turan.size(),
        },
    ];
    if turan.size() > best.len() {
        trace.extend(turan.trace().iter().cloned());
        return IndependentSetCertificate::new(g, turan.vertices().clone(), Algorithm::AksGreedy, trace, Some(seed));
    }
    IndependentSetCertificate::from_ids(g, best, Algorithm::AksGreedy, trace, Some(seed))
}
