use std::path::PathBuf;

use thiserror::Error;

#[derive(Error, Debug)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("line {line}: self-loop on vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("clique count overflows 64 bits")]
    Overflow,

    #[error("no feasible constant for s = {s}: {reason}")]
    Infeasible { s: usize, reason: String },

    #[error("root not bracketed: {0}")]
    NoBracket(String),

    #[error("exact oracle refused: n = {n} exceeds the cap of {limit}")]
    OracleRefused { n: usize, limit: usize },

    #[error(
        "sparsification failed after {retries} retries (p = {p}, last |S| = {last_size}, last T = {last_cliques})"
    )]
    RetriesExhausted {
        retries: usize,
        p: f64,
        last_size: usize,
        last_cliques: u64,
    },

    #[error("top-up needs {needed} spare isolated vertices, found {available}")]
    InsufficientSpare { needed: usize, available: usize },
}

impl Error {
    pub(crate) fn arg(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    /// True for errors caused by bad caller input rather than a runtime failure.
    pub fn is_usage(&self) -> bool {
        matches!(self, Error::InvalidArgument(_) | Error::OracleRefused { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
