//! Plain-text edge lists.
//!
//! ```text
//! # optional comments
//! 3 3        <- n m
//! 112        <- vertex types, one character per vertex
//! 0 1        <- m edges "u v", 0-based
//! 0 2
//! 1 2
//! ```
//!
//! The canonical form written by [`write_graph`] has `u < v` on every edge
//! line, edges sorted lexicographically and no comments. The reader accepts
//! edges in any order and orientation, and skips blank lines and lines whose
//! first non-space character is `#`.

use std::collections::HashSet;
use std::fmt::Write as _;

use super::{TypedGraph, VertexType};
use crate::error::{Error, Result};

pub fn read_graph(text: &str) -> Result<TypedGraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing header \"n m\""))?;
    let (n, m) = parse_pair(header_line, header, "header")?;

    let types: Vec<VertexType> = if n == 0 {
        Vec::new()
    } else {
        let (line, s) = lines
            .next()
            .ok_or_else(|| Error::parse(header_line + 1, "missing vertex type line"))?;
        let types = s
            .chars()
            .map(|c| {
                VertexType::from_digit(c).ok_or_else(|| {
                    Error::parse(
                        line,
                        format!("invalid vertex type {c:?}, expected '1' or '2'"),
                    )
                })
            })
            .collect::<Result<Vec<_>>>()?;
        if types.len() != n {
            return Err(Error::parse(
                line,
                format!("type string has length {}, expected {n}", types.len()),
            ));
        }
        types
    };

    let mut seen = HashSet::with_capacity(m);
    let mut edges = Vec::with_capacity(m);
    let mut last_line = header_line;
    for (line, s) in lines {
        if edges.len() == m {
            return Err(Error::parse(
                line,
                format!("more than the declared {m} edges"),
            ));
        }
        let (u, v) = parse_pair(line, s, "edge")?;
        if u >= n || v >= n {
            return Err(Error::parse(
                line,
                format!("vertex {} out of range (n = {n})", u.max(v)),
            ));
        }
        if u == v {
            return Err(Error::parse(line, format!("loop at vertex {u}")));
        }
        let key = (u.min(v), u.max(v));
        if !seen.insert(key) {
            return Err(Error::parse(
                line,
                format!("duplicate edge {} {}", key.0, key.1),
            ));
        }
        edges.push(key);
        last_line = line;
    }
    if edges.len() != m {
        return Err(Error::parse(
            last_line,
            format!("found {} edges, header declares {m}", edges.len()),
        ));
    }
    edges.sort_unstable();
    Ok(TypedGraph::from_canonical(types, edges))
}

pub fn write_graph(g: &TypedGraph) -> String {
    let mut out = String::with_capacity(16 + g.n() + 12 * g.m());
    let _ = writeln!(out, "{} {}", g.n(), g.m());
    out.extend(g.types().iter().map(|t| t.digit()));
    out.push('\n');
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

fn parse_pair(line: usize, s: &str, what: &str) -> Result<(usize, usize)> {
    let mut it = s.split_whitespace();
    let mut next = || -> Result<usize> {
        let tok = it
            .next()
            .ok_or_else(|| Error::parse(line, format!("{what} line needs two integers")))?;
        tok.parse()
            .map_err(|_| Error::parse(line, format!("invalid integer {tok:?} in {what} line")))
    };
    let a = next()?;
    let b = next()?;
    if it.next().is_some() {
        return Err(Error::parse(
            line,
            format!("{what} line has more than two fields"),
        ));
    }
    Ok((a, b))
}
