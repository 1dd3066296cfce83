//! Reading and writing graphs as DIMACS or plain edge lists.
//!
//! DIMACS: optional `c` comment lines, one `p edge <n> <m>` header, then `m`
//! lines `e <u> <v>` with 1-indexed endpoints.
//!
//! Edge list: one whitespace-separated `u v` pair per line, 0-indexed, with
//! `#` starting a comment. A leading `# n=<count>` comment fixes the vertex
//! count and keeps ids as written; without it, ids are relabelled to
//! `0..n` in first-seen order.

use std::collections::HashMap;
use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    Dimacs,
    EdgeList,
}

impl FromStr for GraphFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "dimacs" | "col" => Ok(GraphFormat::Dimacs),
            "edgelist" | "edges" => Ok(GraphFormat::EdgeList),
            other => Err(Error::arg(format!("unknown graph format `{other}`"))),
        }
    }
}

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> Error + '_ {
    move |source| Error::Io {
        path: path.to_path_buf(),
        source,
    }
}

pub fn load_graph(path: impl AsRef<Path>, format: GraphFormat) -> Result<Graph> {
    let path = path.as_ref();
    let file = File::open(path).map_err(io_err(path))?;
    let reader = BufReader::new(file);
    match format {
        GraphFormat::Dimacs => read_dimacs(reader),
        GraphFormat::EdgeList => read_edgelist(reader),
    }
    .map_err(|e| match e {
        Error::Io { source, .. } => Error::Io {
            path: path.to_path_buf(),
            source,
        },
        other => other,
    })
}

pub fn save_graph(g: &Graph, path: impl AsRef<Path>, format: GraphFormat) -> Result<()> {
    let path = path.as_ref();
    let file = File::create(path).map_err(io_err(path))?;
    let mut w = BufWriter::new(file);
    match format {
        GraphFormat::Dimacs => write_dimacs(g, &mut w),
        GraphFormat::EdgeList => write_edgelist(g, &mut w),
    }
    .and_then(|_| w.flush())
    .map_err(io_err(path))
}

fn parse_num(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| Error::Parse {
        line,
        msg: format!("missing {what}"),
    })?;
    tok.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("bad {what} `{tok}`"),
    })
}

fn stream_err(source: std::io::Error) -> Error {
    Error::Io {
        path: "<stream>".into(),
        source,
    }
}

pub fn read_dimacs(reader: impl BufRead) -> Result<Graph> {
    let mut builder: Option<(GraphBuilder, usize)> = None;
    let mut listed = 0usize;
    for (idx, line) in reader.lines().enumerate() {
        let lineno = idx + 1;
        let line = line.map_err(stream_err)?;
        let mut toks = line.split_whitespace();
        match toks.next() {
            None | Some("c") => {}
            Some("p") => {
                if builder.is_some() {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: "duplicate problem line".into(),
                    });
                }
                match toks.next() {
                    Some("edge") | Some("col") => {}
                    other => {
                        return Err(Error::Parse {
                            line: lineno,
                            msg: format!("expected `p edge`, found {other:?}"),
                        })
                    }
                }
                let n = parse_num(toks.next(), lineno, "vertex count")?;
                let m = parse_num(toks.next(), lineno, "edge count")?;
                builder = Some((GraphBuilder::new(n), m));
            }
            Some("e") => {
                let (b, _) = builder.as_mut().ok_or_else(|| Error::Parse {
                    line: lineno,
                    msg: "edge before problem line".into(),
                })?;
                let u = parse_num(toks.next(), lineno, "endpoint")?;
                let v = parse_num(toks.next(), lineno, "endpoint")?;
                let n = b.vertex_count();
                if u == 0 || v == 0 || u > n || v > n {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: format!("endpoint out of range 1..={n}"),
                    });
                }
                if u == v {
                    return Err(Error::SelfLoop {
                        line: lineno,
                        vertex: u - 1,
                    });
                }
                b.add_edge(u - 1, v - 1);
                listed += 1;
            }
            Some(other) => {
                return Err(Error::Parse {
                    line: lineno,
                    msg: format!("unknown line type `{other}`"),
                })
            }
        }
    }
    let (b, declared) = builder.ok_or_else(|| Error::Parse {
        line: 0,
        msg: "missing `p edge` header".into(),
    })?;
    if declared != listed {
        return Err(Error::Parse {
            line: 0,
            msg: format!("header declares {declared} edges but {listed} are listed"),
        });
    }
    Ok(b.build())
}

pub fn read_edgelist(reader: impl BufRead) -> Result<Graph> {
    let mut declared_n: Option<usize> = None;
    let mut labels: HashMap<usize, usize> = HashMap::new();
    let mut edges = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let lineno = idx + 1;
        let line = line.map_err(stream_err)?;
        let (body, comment) = match line.split_once('#') {
            Some((b, c)) => (b, Some(c)),
            None => (line.as_str(), None),
        };
        if let Some(c) = comment {
            if let Some(rest) = c.trim().strip_prefix("n=") {
                if edges.is_empty() && declared_n.is_none() {
                    let n_tok = rest.split_whitespace().next();
                    declared_n = Some(parse_num(n_tok, lineno, "vertex count")?);
                }
            }
        }
        let mut toks = body.split_whitespace();
        let Some(first) = toks.next() else { continue };
        let u = parse_num(Some(first), lineno, "endpoint")?;
        let v = parse_num(toks.next(), lineno, "endpoint")?;
        if toks.next().is_some() {
            return Err(Error::Parse {
                line: lineno,
                msg: "expected exactly two endpoints".into(),
            });
        }
        if u == v {
            return Err(Error::SelfLoop { line: lineno, vertex: u });
        }
        let (u, v) = match declared_n {
            Some(n) => {
                if u >= n || v >= n {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: format!("endpoint out of range 0..{n}"),
                    });
                }
                (u, v)
            }
            None => {
                let mut label = |x: usize| {
                    let next = labels.len();
                    *labels.entry(x).or_insert(next)
                };
                (label(u), label(v))
            }
        };
        edges.push((u, v));
    }
    let n = declared_n.unwrap_or(labels.len());
    Graph::from_edges(n, edges)
}

pub fn write_dimacs(g: &Graph, w: &mut impl Write) -> std::io::Result<()> {
    writeln!(w, "p edge {} {}", g.vertex_count(), g.edge_count())?;
    for (u, v) in g.edges() {
        writeln!(w, "e {} {}", u + 1, v + 1)?;
    }
    Ok(())
}

pub fn write_edgelist(g: &Graph, w: &mut impl Write) -> std::io::Result<()> {
    writeln!(w, "# n={} m={}", g.vertex_count(), g.edge_count())?;
    for (u, v) in g.edges() {
        writeln!(w, "{u} {v}")?;
    }
    Ok(())
}
