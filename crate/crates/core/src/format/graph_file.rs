//! `sg` graph files.
//!
//! ```text
//! # negative K2
//! sg 2
//! 0 1 -
//! ```
//!
//! The first non-comment line is `sg <order>`; each further line is an edge
//! `<u> <v> <+|->` with 0-based vertex indices. Lines starting with `#` and
//! blank lines are ignored.

use std::collections::BTreeMap;
use std::fmt::Write;

use thiserror::Error;

use crate::coloring::{Color, Coloration};
use crate::graph::{GraphError, Sign, SignedGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("line {line}: {error}")]
    Invalid { line: usize, error: GraphError },
    #[error("missing `sg <order>` header")]
    MissingHeader,
}

fn malformed(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Malformed {
        line,
        message: message.into(),
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub fn parse_graph(text: &str) -> Result<SignedGraph, ParseError> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or(ParseError::MissingHeader)?;
    let order = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["sg", n] => n
            .parse::<usize>()
            .map_err(|_| malformed(hline, format!("bad order {n:?}")))?,
        _ => return Err(malformed(hline, "expected `sg <order>`")),
    };
    let mut edges = BTreeMap::new();
    for (line, l) in lines {
        let (u, v, sign) = match l.split_whitespace().collect::<Vec<_>>()[..] {
            [u, v, s] => (u, v, s),
            _ => return Err(malformed(line, "expected `<u> <v> <+|->`")),
        };
        let vertex = |t: &str| {
            t.parse::<usize>()
                .map_err(|_| malformed(line, format!("bad vertex {t:?}")))
        };
        let (u, v) = (vertex(u)?, vertex(v)?);
        let sign = match sign {
            "+" => Sign::Positive,
            "-" => Sign::Negative,
            _ => return Err(malformed(line, format!("bad sign {sign:?}"))),
        };
        let invalid = |error| ParseError::Invalid { line, error };
        for vertex in [u, v] {
            if vertex >= order {
                return Err(invalid(GraphError::OutOfRange { vertex, order }));
            }
        }
        if u == v {
            return Err(invalid(GraphError::Loop(u)));
        }
        let key = (u.min(v), u.max(v));
        if edges.insert(key, sign).is_some() {
            return Err(invalid(GraphError::DuplicatePair(key.0, key.1)));
        }
    }
    Ok(
        SignedGraph::new(order, edges.into_iter().map(|((u, v), s)| (u, v, s)))
            .expect("edges were validated line by line"),
    )
}

/// Canonical text: header, then edges in lexicographic pair order.
pub fn print_graph(g: &SignedGraph) -> String {
    let mut out = format!("sg {}\n", g.order());
    for e in g.edges() {
        writeln!(out, "{} {} {}", e.u, e.v, e.sign).unwrap();
    }
    out
}

/// Whitespace-separated integers, one per vertex in index order. `#` starts a
/// comment that runs to the end of the line.
pub fn parse_coloring(text: &str) -> Result<Coloration, ParseError> {
    let mut colors = Vec::new();
    for (i, l) in text.lines().enumerate() {
        let body = l.split('#').next().unwrap_or("");
        for tok in body.split_whitespace() {
            let c: Color = tok
                .parse()
                .map_err(|_| malformed(i + 1, format!("bad color {tok:?}")))?;
            colors.push(c);
        }
    }
    Ok(Coloration::new(colors))
}

pub fn print_coloring(kappa: &Coloration) -> String {
    format!("{kappa}\n")
}
