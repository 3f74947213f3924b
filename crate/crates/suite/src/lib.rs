//! Fixture graphs shared by the acceptance suite.

use signed_join::coloring::Coloration;
use signed_join::format::{parse_coloring, parse_graph};
use signed_join::graph::SignedGraph;

/// Complete graph on six vertices whose positive edges form the cycle
/// 0-1-2-4-5-3-0.
pub const DEFICIENT_K6: &str = include_str!("../../../fixtures/deficient_k6.sg");
/// The coloration drawn alongside it, using only `{1, -2, 3}`.
pub const DEFICIENT_K6_COLORING: &str = include_str!("../../../fixtures/deficient_k6.col");
/// Six-vertex graph with the r-u pair positive.
pub const RU_POSITIVE: &str = include_str!("../../../fixtures/six_vertex_ru_positive.sg");
/// Six-vertex graph with the r-u pair negative.
pub const RU_NEGATIVE: &str = include_str!("../../../fixtures/six_vertex_ru_negative.sg");

pub fn graph(text: &str) -> SignedGraph {
    parse_graph(text).expect("fixture graphs parse")
}

pub fn coloring(text: &str) -> Coloration {
    parse_coloring(text).expect("fixture colorings parse")
}
