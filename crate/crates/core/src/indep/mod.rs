//! Independent-set algorithms and the certificates they emit.
//!
//! Each routine returns an [`IndependentSetCertificate`]: the vertex set,
//! the algorithm that produced it, and a trace of the decisions taken. The
//! set is checked against the graph when the certificate is built, so a
//! certificate that exists is independent.

use std::fmt;

use crate::graph::{Graph, VertexSet};

mod best;
mod exact;
mod greedy;
mod proof;
mod sparsify;

pub use best::{best_certificate, triangle_proof_case, CandidateOutcome, CertificateReport, DispatchConfig, ProofCase};
pub use exact::{exact_alpha, DEFAULT_ORACLE_CAP, MAX_ORACLE_VERTICES};
pub use greedy::{aks_greedy, aks_greedy_seeded, turan_greedy, turan_guarantee_holds, DEFAULT_GREEDY_REPEATS};
pub use proof::{neighborhood_clean_set, pivot_recursion, pivot_scores, select_pivot_vertex};
pub use sparsify::{
    sparsify_and_recurse, sparsify_and_recurse_seeded, sparsify_attempt, sparsify_probability, SparsifyAttempt,
    SparsifyRule, DEFAULT_MAX_RETRIES,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Algorithm {
    TuranGreedy,
    PivotRecursion,
    NeighborhoodClean,
    AksGreedy,
    SparsifyRecurse,
    ExactBnb,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::TuranGreedy => "turan_greedy",
            Algorithm::PivotRecursion => "pivot_recursion",
            Algorithm::NeighborhoodClean => "neighborhood_clean",
            Algorithm::AksGreedy => "aks_greedy",
            Algorithm::SparsifyRecurse => "sparsify_recurse",
            Algorithm::ExactBnb => "exact_bnb",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One decision recorded while building a certificate. Vertex ids refer to
/// the graph the top-level call received.
#[derive(Clone, Debug, PartialEq)]
pub enum TraceStep {
    Turan {
        depth: usize,
        vertices: usize,
        edges: usize,
        size: usize,
    },
    Pivot {
        depth: usize,
        s: usize,
        vertex: usize,
        score: f64,
        neighborhood: usize,
    },
    Clean {
        vertex: usize,
        degree: usize,
        triangles: u64,
        removed: usize,
    },
    TriangleHitting {
        removed: usize,
        remaining: usize,
    },
    RandomGreedy {
        repeats: usize,
        best: usize,
        turan: usize,
    },
    Sparsify {
        p: f64,
        attempts: usize,
        sample_size: usize,
        cliques: u64,
        clique_limit: f64,
    },
    Fallthrough {
        p: f64,
        reason: &'static str,
    },
    Exact {
        nodes: u64,
    },
}

impl fmt::Display for TraceStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TraceStep::Turan {
                depth,
                vertices,
                edges,
                size,
            } => write!(f, "turan depth={depth} n={vertices} m={edges} size={size}"),
            TraceStep::Pivot {
                depth,
                s,
                vertex,
                score,
                neighborhood,
            } => write!(f, "pivot depth={depth} s={s} v={vertex} score={score:.6} nbhd={neighborhood}"),
            TraceStep::Clean {
                vertex,
                degree,
                triangles,
                removed,
            } => write!(f, "clean v={vertex} d={degree} t={triangles} removed={removed}"),
            TraceStep::TriangleHitting { removed, remaining } => {
                write!(f, "hit_triangles removed={removed} remaining={remaining}")
            }
            TraceStep::RandomGreedy { repeats, best, turan } => {
                write!(f, "random_greedy repeats={repeats} best={best} turan={turan}")
            }
            TraceStep::Sparsify {
                p,
                attempts,
                sample_size,
                cliques,
                clique_limit,
            } => write!(
                f,
                "sparsify p={p:.6e} attempts={attempts} |S|={sample_size} T={cliques} limit={clique_limit:.6e}"
            ),
            TraceStep::Fallthrough { p, reason } => write!(f, "fallthrough p={p:.6e} reason={reason}"),
            TraceStep::Exact { nodes } => write!(f, "exact nodes={nodes}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct IndependentSetCertificate {
    vertices: VertexSet,
    algorithm: Algorithm,
    trace: Vec<TraceStep>,
    seed: Option<u64>,
}

impl IndependentSetCertificate {
    /// Wraps `vertices` after checking that they are independent in `g`.
    ///
    /// Panics if the set is not independent: that is a bug in the producing
    /// algorithm, never a property of the input.
    pub fn new(g: &Graph, vertices: VertexSet, algorithm: Algorithm, trace: Vec<TraceStep>, seed: Option<u64>) -> Self {
        assert!(
            g.is_independent(&vertices),
            "{algorithm} produced a dependent set {vertices:?}"
        );
        IndependentSetCertificate {
            vertices,
            algorithm,
            trace,
            seed,
        }
    }

    pub(crate) fn from_ids(
        g: &Graph,
        ids: impl IntoIterator<Item = usize>,
        algorithm: Algorithm,
        trace: Vec<TraceStep>,
        seed: Option<u64>,
    ) -> Self {
        Self::new(g, VertexSet::from_vertices(g.vertex_count(), ids), algorithm, trace, seed)
    }

    pub fn vertices(&self) -> &VertexSet {
        &self.vertices
    }

    pub fn size(&self) -> usize {
        self.vertices.len()
    }

    pub fn algorithm(&self) -> Algorithm {
        self.algorithm
    }

    pub fn trace(&self) -> &[TraceStep] {
        &self.trace
    }

    /// Seed of the generator the run consumed, for randomized algorithms.
    pub fn seed(&self) -> Option<u64> {
        self.seed
    }

    /// Re-checks independence against `g`.
    pub fn verify(&self, g: &Graph) -> bool {
        g.is_independent(&self.vertices)
    }

    /// The trace, one step per line.
    pub fn trace_text(&self) -> String {
        let mut out = String::new();
        for step in &self.trace {
            out.push_str(&step.to_string());
            out.push('\n');
        }
        out
    }
}
