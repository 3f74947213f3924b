//! Signed graph colorings, exact chromatic invariants and constructive
//! colorings of signed joins.

pub mod coloring;
pub mod format;
pub mod graph;
pub mod recolor;
pub mod solver;
pub mod theorem;

pub use coloring::{is_proper, Color, ColorSet, Coloration};
pub use graph::{Sign, SignedGraph, Vertex};
pub use solver::{chromatic_number, graph_stats, GraphStats};
pub use theorem::{predicted_chromatic, SideStats};
