//! Text formats: graph files, coloring files, DOT export and verification
//! reports.

pub mod dot;
pub mod graph_file;
pub mod report;

pub use dot::export_dot;
pub use graph_file::{parse_coloring, parse_graph, print_coloring, print_graph, ParseError};
pub use report::write_report;
