//! Graphviz output. Positive edges are solid and negative edges dashed.

use std::fmt::Write;

use crate::coloring::Coloration;
use crate::graph::{Sign, SignedGraph};

/// `kappa`, when given, must be total on the vertices of `g`; colors become
/// vertex labels.
pub fn export_dot(g: &SignedGraph, kappa: Option<&Coloration>) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.order() {
        match kappa {
            Some(k) => writeln!(out, "  {v} [label=\"{}\"];", k.color(v)).unwrap(),
            None => writeln!(out, "  {v};").unwrap(),
        }
    }
    for e in g.edges() {
        let style = match e.sign {
            Sign::Positive => "solid",
            Sign::Negative => "dashed",
        };
        writeln!(out, "  {} -- {} [style={style}];", e.u, e.v).unwrap();
    }
    out.push_str("}\n");
    out
}
