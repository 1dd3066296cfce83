//! Random and named graph generators.

use crate::error::{Error, Result};
use crate::graph::{any_common, Graph, GraphBuilder};
use crate::rng::Rng;

/// Erdős–Rényi `G(n, p)`: each pair `u < v`, visited in lexicographic order,
/// is an edge independently with probability `p`.
pub fn gnp_graph(n: usize, p: f64, rng: &mut Rng) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::arg(format!("edge probability {p} outside [0, 1]")));
    }
    let mut b = GraphBuilder::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.chance(p) {
                b.add_edge(u, v);
            }
        }
    }
    Ok(b.build())
}

/// The random greedy triangle-free process, run to saturation.
///
/// All pairs are visited in a uniformly random order and each one is added
/// if its endpoints have no common neighbour. Since a pair that closes a
/// triangle stays forbidden forever, this is the same distribution as
/// repeatedly adding a uniform random admissible pair until none is left.
pub fn triangle_free_process(n: usize, rng: &mut Rng) -> Graph {
    let mut pairs: Vec<(u32, u32)> = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            pairs.push((u, v));
        }
    }
    rng.shuffle(&mut pairs);
    let mut b = GraphBuilder::new(n);
    for (u, v) in pairs {
        let (u, v) = (u as usize, v as usize);
        if !any_common(b.row(u), b.row(v)) {
            b.add_edge(u, v);
        }
    }
    b.build()
}

pub fn complete_graph(n: usize) -> Graph {
    let mut b = GraphBuilder::new(n);
    for u in 0..n {
        for v in u + 1..n {
            b.add_edge(u, v);
        }
    }
    b.build()
}

pub fn cycle_graph(n: usize) -> Graph {
    let mut b = GraphBuilder::new(n);
    if n >= 3 {
        for v in 0..n {
            b.add_edge(v, (v + 1) % n);
        }
    } else if n == 2 {
        b.add_edge(0, 1);
    }
    b.build()
}

pub fn path_graph(n: usize) -> Graph {
    let mut b = GraphBuilder::new(n);
    for v in 1..n {
        b.add_edge(v - 1, v);
    }
    b.build()
}

/// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i -- i+5`.
pub fn petersen_graph() -> Graph {
    let mut b = GraphBuilder::new(10);
    for i in 0..5 {
        b.add_edge(i, (i + 1) % 5);
        b.add_edge(5 + i, 5 + (i + 2) % 5);
        b.add_edge(i, i + 5);
    }
    b.build()
}

/// Wheel with hub `0` and rim cycle `1..=rim`.
pub fn wheel_graph(rim: usize) -> Graph {
    let mut b = GraphBuilder::new(rim + 1);
    for i in 0..rim {
        b.add_edge(0, i + 1);
        b.add_edge(i + 1, (i + 1) % rim + 1);
    }
    b.build()
}
