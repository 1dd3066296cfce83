//! Undirected simple graphs stored as dense bitset adjacency rows.
//!
//! Vertices are `0..n`. Row `v` holds one bit per vertex, so neighbourhood
//! intersections (the inner loop of clique counting and of every
//! independent-set routine here) are word-wise ANDs plus popcounts.

use std::fmt;

use crate::error::{Error, Result};

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

#[inline]
pub(crate) fn and_count(a: &[u64], b: &[u64]) -> u32 {
    a.iter().zip(b).map(|(x, y)| (x & y).count_ones()).sum()
}

#[inline]
pub(crate) fn and3_count(a: &[u64], b: &[u64], c: &[u64]) -> u32 {
    a.iter()
        .zip(b)
        .zip(c)
        .map(|((x, y), z)| (x & y & z).count_ones())
        .sum()
}

#[inline]
pub(crate) fn any_common(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).any(|(x, y)| x & y != 0)
}

/// Iterates the set bit positions of a word slice in increasing order.
pub(crate) fn iter_bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(i, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                None
            } else {
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + b)
            }
        })
    })
}

/// A set of vertices of a graph with `n` vertices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn new(n: usize) -> Self {
        VertexSet {
            n,
            words: vec![0; words_for(n)],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::new(n);
        for v in 0..n {
            s.insert(v);
        }
        s
    }

    pub fn from_vertices(n: usize, vertices: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::new(n);
        for v in vertices {
            s.insert(v);
        }
        s
    }

    pub(crate) fn from_words(n: usize, words: Vec<u64>) -> Self {
        debug_assert_eq!(words.len(), words_for(n));
        VertexSet { n, words }
    }

    /// Size of the vertex universe this set lives in.
    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < self.n, "vertex {v} outside universe of size {}", self.n);
        self.words[v / 64] |= 1 << (v % 64);
    }

    pub fn remove(&mut self, v: usize) {
        if v < self.n {
            self.words[v / 64] &= !(1 << (v % 64));
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.words[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        iter_bits(&self.words)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Mutable adjacency used while a graph is being assembled.
#[derive(Clone, Debug)]
pub struct GraphBuilder {
    n: usize,
    stride: usize,
    rows: Vec<u64>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        let stride = words_for(n);
        GraphBuilder {
            n,
            stride,
            rows: vec![0; n * stride],
        }
    }

    pub fn from_graph(g: &Graph) -> Self {
        GraphBuilder {
            n: g.n,
            stride: g.stride,
            rows: g.rows.clone(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Adds the edge `uv`. Returns `false` if it was already present.
    ///
    /// Panics on a self-loop or an out-of-range endpoint.
    pub fn add_edge(&mut self, u: usize, v: usize) -> bool {
        assert!(u != v, "self-loop on vertex {u}");
        assert!(u < self.n && v < self.n, "edge ({u}, {v}) out of range");
        if self.has_edge(u, v) {
            return false;
        }
        self.rows[u * self.stride + v / 64] |= 1 << (v % 64);
        self.rows[v * self.stride + u / 64] |= 1 << (u % 64);
        true
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.stride + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.stride..(v + 1) * self.stride]
    }

    pub fn build(self) -> Graph {
        let m = self.rows.iter().map(|w| w.count_ones() as usize).sum::<usize>() / 2;
        let g = Graph {
            n: self.n,
            stride: self.stride,
            rows: self.rows,
            m,
        };
        debug_assert!(g.check_invariants().is_ok());
        g
    }
}

/// An immutable undirected simple graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    stride: usize,
    rows: Vec<u64>,
    m: usize,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        GraphBuilder::new(n).build()
    }

    /// Builds a graph from an edge list. Duplicate edges collapse; self-loops
    /// and out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut b = GraphBuilder::new(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::arg(format!("edge ({u}, {v}) out of range for n = {n}")));
            }
            if u == v {
                return Err(Error::arg(format!("self-loop on vertex {u}")));
            }
            b.add_edge(u, v);
        }
        Ok(b.build())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    /// Number of `u64` words per adjacency row.
    pub fn stride(&self) -> usize {
        self.stride
    }

    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.stride..(v + 1) * self.stride]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.stride + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Average degree `2m / n` (zero for the graph with no vertices).
    pub fn average_degree(&self) -> f64 {
        if self.n == 0 {
            0.0
        } else {
            2.0 * self.m as f64 / self.n as f64
        }
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        iter_bits(self.row(v))
    }

    pub fn neighborhood(&self, v: usize) -> VertexSet {
        VertexSet::from_words(self.n, self.row(v).to_vec())
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Induced subgraph on `subset`, relabelled to `0..|subset|` in increasing
    /// vertex order. The second value maps new labels back to original ones.
    pub fn induced_subgraph(&self, subset: &VertexSet) -> (Graph, Vec<usize>) {
        let map = subset.to_vec();
        let mut b = GraphBuilder::new(map.len());
        for (i, &u) in map.iter().enumerate() {
            for (j, &v) in map.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    b.add_edge(i, j);
                }
            }
        }
        (b.build(), map)
    }

    /// Checks that no two members of `set` are adjacent.
    pub fn is_independent(&self, set: &VertexSet) -> bool {
        set.universe() == self.n && set.iter().all(|v| !any_common(self.row(v), set.words()))
    }

    /// Disjoint union; vertices of `other` are shifted by `self.vertex_count()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n;
        let mut b = GraphBuilder::new(self.n + other.n);
        for (u, v) in self.edges() {
            b.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            b.add_edge(u + off, v + off);
        }
        b.build()
    }

    /// Verifies symmetry, absence of self-loops, stray bits, and the edge count.
    pub fn check_invariants(&self) -> std::result::Result<(), String> {
        let tail = if self.n.is_multiple_of(64) {
            0
        } else {
            !0u64 << (self.n % 64)
        };
        let mut half = 0usize;
        for v in 0..self.n {
            let row = self.row(v);
            if let Some(&last) = row.last() {
                if last & tail != 0 {
                    return Err(format!("row {v} has bits beyond n"));
                }
            }
            if self.has_edge(v, v) {
                return Err(format!("self-loop on {v}"));
            }
            for u in self.neighbors(v) {
                if !self.has_edge(u, v) {
                    return Err(format!("asymmetric pair ({v}, {u})"));
                }
            }
            half += self.degree(v);
        }
        if half != 2 * self.m {
            return Err(format!("edge count {} but degree sum {half}", self.m));
        }
        Ok(())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("m", &self.m)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}
