//! Edge-list text format and graph hashing.
//!
//! ```text
//! n m
//! u v      (m lines, 0 <= u < v < n, lexicographic order on write)
//! ```

use std::collections::HashSet;
use std::io::{BufRead, Write};
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::{edge, Graph};

pub fn write_edge_list<W: Write>(g: &Graph, mut out: W) -> Result<()> {
    out.write_all(to_edge_list_string(g).as_bytes())?;
    Ok(())
}

pub fn to_edge_list_string(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

fn parse_pair(line: &str, lineno: usize) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace();
    let parse = |tok: Option<&str>| -> Result<usize> {
        tok.ok_or_else(|| Error::Parse {
            line: lineno,
            msg: "expected two integers".into(),
        })?
        .parse::<usize>()
        .map_err(|e| Error::Parse {
            line: lineno,
            msg: format!("bad integer: {e}"),
        })
    };
    let a = parse(it.next())?;
    let b = parse(it.next())?;
    if it.next().is_some() {
        return Err(Error::Parse {
            line: lineno,
            msg: "trailing tokens".into(),
        });
    }
    Ok((a, b))
}

pub fn read_edge_list<R: BufRead>(input: R) -> Result<Graph> {
    let mut lines = input.lines().enumerate();
    let (n, m) = loop {
        match lines.next() {
            Some((i, line)) => {
                let line = line?;
                if line.trim().is_empty() {
                    continue;
                }
                break parse_pair(&line, i + 1).map_err(|e| match e {
                    Error::Parse { line, msg } => Error::Parse {
                        line,
                        msg: format!("malformed header: {msg}"),
                    },
                    other => other,
                })?;
            }
            None => {
                return Err(Error::Parse {
                    line: 1,
                    msg: "malformed header: empty input".into(),
                })
            }
        }
    };
    let mut seen = HashSet::with_capacity(m);
    let mut edges = Vec::with_capacity(m);
    let mut last_line = 1;
    for (i, line) in lines {
        let line = line?;
        let lineno = i + 1;
        last_line = lineno;
        if line.trim().is_empty() {
            continue;
        }
        let (u, v) = parse_pair(&line, lineno)?;
        if u == v {
            return Err(Error::Parse {
                line: lineno,
                msg: format!("self-loop at vertex {u}"),
            });
        }
        if u >= n || v >= n {
            return Err(Error::Parse {
                line: lineno,
                msg: format!("vertex id {} >= n = {n}", u.max(v)),
            });
        }
        let e = edge(u, v);
        if !seen.insert(e) {
            return Err(Error::Parse {
                line: lineno,
                msg: format!("duplicate edge ({}, {})", e.0, e.1),
            });
        }
        edges.push(e);
    }
    if edges.len() != m {
        return Err(Error::Parse {
            line: last_line,
            msg: format!("header declares {m} edges, found {}", edges.len()),
        });
    }
    Graph::from_edges(n, edges)
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    read_edge_list(text.as_bytes())
}

pub fn read_graph_file(path: impl AsRef<Path>) -> Result<Graph> {
    let f = std::fs::File::open(path)?;
    read_edge_list(std::io::BufReader::new(f))
}

const FNV_OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
const FNV_PRIME: u64 = 0x0000_0100_0000_01b3;

/// 64-bit FNV-1a over the canonical edge-list text of `g`
/// (exactly the bytes produced by [`write_edge_list`]).
pub fn host_hash(g: &Graph) -> u64 {
    let mut h = FNV_OFFSET;
    let mut feed = |bytes: &[u8]| {
        for &b in bytes {
            h ^= b as u64;
            h = h.wrapping_mul(FNV_PRIME);
        }
    };
    feed(format!("{} {}\n", g.n(), g.m()).as_bytes());
    for (u, v) in g.edges() {
        feed(format!("{u} {v}\n").as_bytes());
    }
    h
}
