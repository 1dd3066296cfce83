//! Exact maximum independent set by branch and bound, for small graphs.
//!
//! Branching is include/exclude on a maximum-degree vertex of the remaining
//! candidate set. Vertices of remaining degree 0 or 1 are taken without
//! branching (some maximum independent set always contains them). A greedy
//! clique cover of the candidates bounds how many more vertices can be added.

use crate::error::{Error, Result};
use crate::graph::Graph;

use super::{greedy::turan_greedy, Algorithm, IndependentSetCertificate, TraceStep};

pub const DEFAULT_ORACLE_CAP: usize = 64;

/// Hard ceiling of the bitmask representation.
pub const MAX_ORACLE_VERTICES: usize = 128;

type Mask = u128;

#[inline]
fn bit(v: usize) -> Mask {
    1 << v
}

struct Search {
    adj: Vec<Mask>,
    best: Mask,
    best_size: u32,
    nodes: u64,
}

impl Search {
    fn clique_cover(&self, mut rest: Mask) -> u32 {
        let mut cliques = 0;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= !bit(u);
            let mut cand = rest & self.adj[u];
            while cand != 0 {
                let w = cand.trailing_zeros() as usize;
                rest &= !bit(w);
                cand &= self.adj[w] & !bit(w);
            }
            cliques += 1;
        }
        cliques
    }

    fn run(&mut self, mut cand: Mask, mut cur: Mask) {
        self.nodes += 1;
        // Degree <= 1 reductions, to a fixed point.
        loop {
            let mut changed = false;
            let mut scan = cand;
            while scan != 0 {
                let v = scan.trailing_zeros() as usize;
                scan &= !bit(v);
                if cand & bit(v) == 0 {
                    continue;
                }
                let nb = self.adj[v] & cand;
                if nb.count_ones() <= 1 {
                    cur |= bit(v);
                    cand &= !(nb | bit(v));
                    scan &= !nb;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        let size = cur.count_ones();
        if cand == 0 {
            if size > self.best_size {
                self.best_size = size;
                self.best = cur;
            }
            return;
        }
        if size + self.clique_cover(cand) <= self.best_size {
            return;
        }
        let mut pivot = 0;
        let mut pivot_deg = 0;
        let mut scan = cand;
        while scan != 0 {
            let v = scan.trailing_zeros() as usize;
            scan &= !bit(v);
            let d = (self.adj[v] & cand).count_ones();
            if d > pivot_deg {
                pivot = v;
                pivot_deg = d;
            }
        }
        self.run(cand & !self.adj[pivot] & !bit(pivot), cur | bit(pivot));
        self.run(cand & !bit(pivot), cur);
    }
}

/// Exact independence number with a witnessing certificate.
///
/// Refuses graphs with more than `limit` vertices (and more than
/// [`MAX_ORACLE_VERTICES`] in any case) to rule out accidental exponential runs.
pub fn exact_alpha(g: &Graph, limit: usize) -> Result<(usize, IndependentSetCertificate)> {
    let n = g.vertex_count();
    let cap = limit.min(MAX_ORACLE_VERTICES);
    if n > cap {
        return Err(Error::OracleRefused { n, limit: cap });
    }
    let adj: Vec<Mask> = (0..n)
        .map(|v| g.neighbors(v).fold(0, |acc, u| acc | bit(u)))
        .collect();
    let seed = turan_greedy(g);
    let mut search = Search {
        adj,
        best: seed.vertices().iter().fold(0, |acc, v| acc | bit(v)),
        best_size: seed.size() as u32,
        nodes: 0,
    };
    let all = if n == 0 { 0 } else { Mask::MAX >> (128 - n) };
    search.run(all, 0);
    let ids = (0..n).filter(|&v| search.best & bit(v) != 0);
    let cert = IndependentSetCertificate::from_ids(
        g,
        ids,
        Algorithm::ExactBnb,
        vec![TraceStep::Exact { nodes: search.nodes }],
        None,
    );
    Ok((cert.size(), cert))
}
