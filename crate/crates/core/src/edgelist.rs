//! Plain-text edge lists.
//!
//! ```text
//! # optional comments
//! n m
//! u v      (m lines, 0 <= u < v < n)
//! ```
//!
//! Blank lines and lines starting with `#` are ignored anywhere. The writer
//! emits no comments and lists edges in ascending order, so a write after a
//! read is byte-stable.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::Graph;

fn parse_pair(line: usize, text: &str, what: &str) -> Result<(usize, usize)> {
    let fields: Vec<&str> = text.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(Error::Parse {
            line,
            message: format!("expected {what} as two integers, found {:?}", text.trim()),
        });
    }
    let num = |s: &str| {
        s.parse::<usize>().map_err(|_| Error::Parse {
            line,
            message: format!("{s:?} is not a non-negative integer"),
        })
    };
    Ok((num(fields[0])?, num(fields[1])?))
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| {
            let t = l.trim();
            !t.is_empty() && !t.starts_with('#')
        });
    let Some((header_line, header)) = lines.next() else {
        return Err(Error::Parse {
            line: text.lines().count() + 1,
            message: "missing \"n m\" header".into(),
        });
    };
    let (n, m) = parse_pair(header_line, header, "header \"n m\"")?;
    let mut edges = Vec::with_capacity(m);
    let mut seen = HashSet::with_capacity(m);
    for (line, body) in lines {
        let (u, v) = parse_pair(line, body, "edge \"u v\"")?;
        if edges.len() == m {
            return Err(Error::Parse {
                line,
                message: format!("more edge lines than the {m} declared in the header"),
            });
        }
        let fail = |message: String| Err(Error::Parse { line, message });
        if u == v {
            return fail(format!("self-loop at vertex {u}"));
        }
        if u > v {
            return fail(format!("edge {u} {v} must be written with the smaller endpoint first"));
        }
        if v >= n {
            return fail(format!("vertex {v} out of range for n = {n}"));
        }
        if !seen.insert((u, v)) {
            return fail(format!("duplicate edge {u} {v}"));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::Parse {
            line: header_line,
            message: format!("header declares {m} edges but {} edge lines follow", edges.len()),
        });
    }
    Graph::from_edges(n, edges)
}

pub fn read_edge_list(path: impl AsRef<Path>) -> Result<Graph> {
    parse_edge_list(&std::fs::read_to_string(path)?)
}

/// Canonical form: header, then edges in ascending order.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", g.n(), g.edge_count()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}
