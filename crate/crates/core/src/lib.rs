//! The 2-distance graph operator and diameter bounds on small graphs.
//!
//! `D_2(G)` has the vertices of `G`, with an edge between every pair at
//! distance exactly 2 in `G`. This crate computes it, generates the graph
//! families used to probe how `diam(D_2(G))` relates to `diam(G)`, and runs
//! exhaustive campaigns over all connected graphs up to nine vertices.
//!
//! ```
//! use d2graph::{d2_metrics, make_family, Diameter, FamilySpec};
//!
//! let g = make_family(&FamilySpec::GadgetChain { t: 2, i: 3 }).unwrap();
//! let m = d2_metrics(&g);
//! assert_eq!(m.diam, Diameter::Finite(11));
//! assert_eq!(m.d2_diam, Diameter::Finite(6));
//! ```

pub mod audit;
pub mod canon;
pub mod dist2;
pub mod distance;
pub mod families;
pub mod graph;
pub mod io;
pub mod par;
pub mod search;

pub use canon::{are_isomorphic, canonical_form, canonical_graph, CanonError, CANON_MAX_ORDER};
pub use dist2::{
    check_diam3_upper, check_half_bound, check_lower_bound, d2_metrics, distance_power_graph, Bound,
    BoundCheckResult, D2Analysis, MetricsRecord, PairWitness,
};
pub use distance::{
    all_pairs_distances, diameter, matrix_power_distances, Diameter, DistanceMatrix, DistanceOracle,
};
pub use families::{family_claims, make_family, vertex_names, FamilyError, FamilyName, FamilySpec, Quantity};
pub use graph::{Graph, GraphError, MAX_ORDER};
pub use search::{
    enumerate_connected, random_connected, scan_conjecture, spectrum_census, theorem_sweep, Campaign,
    CampaignConfig, ScanReport, SearchError,
};
