//! Text formats: graph6, edge lists, DOT and CSV metric rows.

pub mod dot;
pub mod edges;
pub mod graph6;
pub mod report;

pub use dot::to_dot;
pub use edges::{parse_edge_list, write_edge_list, EdgeListError};
pub use graph6::{Graph6Error, GRAPH6_HEADER, GRAPH6_MAX_ORDER};
pub use report::{census_csv, metrics_csv, report_json, write_metrics_csv, METRICS_COLUMNS, SCHEMA_VERSION};
