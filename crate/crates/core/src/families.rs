//! Named graph families with fixed vertex labellings.
//!
//! Figure-transcribed graphs are frozen edge lists:
//!
//! * `HOUSE`: 5-cycle `0-1-2-3-4-0` plus chord `0-2`.
//! * `G3`: seven vertices `A B C D E F H -> 0..6`, fourteen edges.
//! * `C5_PENDANT`: pendant `0` on vertex `1` of the cycle `1-2-3-4-5-1`.
//! * `COROLLARY_GRAPH`: `x1 x2 x3 x4 y1 y2 -> 0..5`, path `x1 x2 x3 x4`
//!   plus `x4 y2, y1 y2, x2 y1, x3 y1, x3 y2`.
//!
//! `GADGET_CHAIN(t, i)`: `b_0 = 0`; gadget `j` adds `a_j1..a_j6` as
//! `7(j-1)+1 ..= 7(j-1)+6` and `b_j = 7j`. Each gadget is the 8-cycle
//! `b_{j-1} a_j1 a_j2 a_j3 b_j a_j4 a_j5 a_j6` with chord `a_j2 a_j5`. Then
//! `u = 7t+1` hangs off `b_0` (i >= 1), `v = 7t+2` off `b_t` (i >= 2) and
//! `w = 7t+3` off `v` (i = 3).

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, MAX_ORDER};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("invalid parameters for {family}: {reason}")]
    InvalidParams { family: FamilyName, reason: String },
    #[error("no claimed values recorded for {0}")]
    NoClaim(FamilySpec),
    #[error("unknown family {0:?}")]
    UnknownName(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyName {
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
    ComplementPath,
    House,
    G3,
    C5Pendant,
    CorollaryGraph,
    GadgetChain,
}

impl FamilyName {
    pub const ALL: [FamilyName; 10] = [
        FamilyName::Path,
        FamilyName::Cycle,
        FamilyName::Complete,
        FamilyName::CompleteBipartite,
        FamilyName::ComplementPath,
        FamilyName::House,
        FamilyName::G3,
        FamilyName::C5Pendant,
        FamilyName::CorollaryGraph,
        FamilyName::GadgetChain,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FamilyName::Path => "path",
            FamilyName::Cycle => "cycle",
            FamilyName::Complete => "complete",
            FamilyName::CompleteBipartite => "complete-bipartite",
            FamilyName::ComplementPath => "complement-path",
            FamilyName::House => "house",
            FamilyName::G3 => "g3",
            FamilyName::C5Pendant => "c5-pendant",
            FamilyName::CorollaryGraph => "corollary-graph",
            FamilyName::GadgetChain => "gadget-chain",
        }
    }
}

impl fmt::Display for FamilyName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FamilyName {
    type Err = FamilyError;

    /// Case-insensitive; `_` and `-` are interchangeable (`GADGET_CHAIN`,
    /// `gadget-chain`).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm = s.trim().to_ascii_lowercase().replace('_', "-");
        FamilyName::ALL
            .into_iter()
            .find(|f| f.as_str() == norm)
            .ok_or_else(|| FamilyError::UnknownName(s.to_string()))
    }
}

/// A family together with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Path { order: usize },
    Cycle { order: usize },
    Complete { order: usize },
    CompleteBipartite { left: usize, right: usize },
    /// Complement of the path on `order` vertices; `order >= 5` so that the
    /// complement has diameter 2.
    ComplementPath { order: usize },
    House,
    G3,
    C5Pendant,
    CorollaryGraph,
    GadgetChain { t: usize, i: usize },
}

impl FamilySpec {
    pub fn name(&self) -> FamilyName {
        match self {
            FamilySpec::Path { .. } => FamilyName::Path,
            FamilySpec::Cycle { .. } => FamilyName::Cycle,
            FamilySpec::Complete { .. } => FamilyName::Complete,
            FamilySpec::CompleteBipartite { .. } => FamilyName::CompleteBipartite,
            FamilySpec::ComplementPath { .. } => FamilyName::ComplementPath,
            FamilySpec::House => FamilyName::House,
            FamilySpec::G3 => FamilyName::G3,
            FamilySpec::C5Pendant => FamilyName::C5Pendant,
            FamilySpec::CorollaryGraph => FamilyName::CorollaryGraph,
            FamilySpec::GadgetChain { .. } => FamilyName::GadgetChain,
        }
    }

    /// Vertex count of the generated graph.
    pub fn order(&self) -> usize {
        match *self {
            FamilySpec::Path { order }
            | FamilySpec::Cycle { order }
            | FamilySpec::Complete { order }
            | FamilySpec::ComplementPath { order } => order,
            FamilySpec::CompleteBipartite { left, right } => left + right,
            FamilySpec::House => 5,
            FamilySpec::G3 => 7,
            FamilySpec::C5Pendant | FamilySpec::CorollaryGraph => 6,
            FamilySpec::GadgetChain { t, i } => 7 * t + 1 + i,
        }
    }

    pub fn validate(&self) -> Result<(), FamilyError> {
        let bad = |reason: String| Err(FamilyError::InvalidParams { family: self.name(), reason });
        match *self {
            FamilySpec::Path { order } | FamilySpec::Complete { order } if order < 1 => {
                return bad("order must be at least 1".into())
            }
            FamilySpec::Cycle { order } if order < 3 => return bad("order must be at least 3".into()),
            FamilySpec::ComplementPath { order } if order < 5 => {
                return bad("path order must be at least 5".into())
            }
            FamilySpec::CompleteBipartite { left, right } if left < 1 || right < 1 => {
                return bad("both sides must be non-empty".into())
            }
            FamilySpec::GadgetChain { t, .. } if t < 1 => return bad("t must be at least 1".into()),
            FamilySpec::GadgetChain { i, .. } if i > 3 => return bad("i must be in 0..=3".into()),
            _ => {}
        }
        if self.order() > MAX_ORDER {
            return bad(format!("{} vertices exceed the maximum of {MAX_ORDER}", self.order()));
        }
        Ok(())
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = self.name();
        match *self {
            FamilySpec::Path { order }
            | FamilySpec::Cycle { order }
            | FamilySpec::Complete { order }
            | FamilySpec::ComplementPath { order } => write!(f, "{name}({order})"),
            FamilySpec::CompleteBipartite { left, right } => write!(f, "{name}({left},{right})"),
            FamilySpec::GadgetChain { t, i } => write!(f, "{name}(t={t},i={i})"),
            _ => write!(f, "{name}"),
        }
    }
}

const HOUSE_EDGES: [(usize, usize); 6] = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)];

const G3_EDGES: [(usize, usize); 14] = [
    (0, 1),
    (0, 2),
    (0, 5),
    (0, 6),
    (1, 4),
    (1, 6),
    (2, 3),
    (2, 5),
    (3, 4),
    (3, 5),
    (3, 6),
    (4, 5),
    (4, 6),
    (5, 6),
];

const C5_PENDANT_EDGES: [(usize, usize); 6] = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 1)];

// x1 x2 x3 x4 y1 y2 -> 0..5
const COROLLARY_EDGES: [(usize, usize); 8] = [(0, 1), (1, 2), (2, 3), (3, 5), (4, 5), (1, 4), (2, 5), (2, 4)];

fn gadget_chain_edges(t: usize, i: usize) -> Vec<(usize, usize)> {
    let b = |j: usize| 7 * j;
    let a = |j: usize, k: usize| 7 * (j - 1) + k;
    let mut edges = Vec::with_capacity(9 * t + i);
    for j in 1..=t {
        let ring = [b(j - 1), a(j, 1), a(j, 2), a(j, 3), b(j), a(j, 4), a(j, 5), a(j, 6)];
        for k in 0..8 {
            edges.push((ring[k], ring[(k + 1) % 8]));
        }
        edges.push((a(j, 2), a(j, 5)));
    }
    let (u, v, w) = (7 * t + 1, 7 * t + 2, 7 * t + 3);
    if i >= 1 {
        edges.push((u, b(0)));
    }
    if i >= 2 {
        edges.push((b(t), v));
    }
    if i >= 3 {
        edges.push((v, w));
    }
    edges
}

/// Generates the graph described by `spec` under the labelling documented
/// at module level.
pub fn make_family(spec: &FamilySpec) -> Result<Graph, FamilyError> {
    spec.validate()?;
    let n = spec.order();
    let edges: Vec<(usize, usize)> = match *spec {
        FamilySpec::Path { order } | FamilySpec::ComplementPath { order } => {
            (1..order).map(|v| (v - 1, v)).collect()
        }
        FamilySpec::Cycle { order } => (0..order).map(|v| (v, (v + 1) % order)).collect(),
        FamilySpec::Complete { order } => {
            (0..order).flat_map(|u| (u + 1..order).map(move |v| (u, v))).collect()
        }
        FamilySpec::CompleteBipartite { left, right } => {
            (0..left).flat_map(|u| (left..left + right).map(move |v| (u, v))).collect()
        }
        FamilySpec::House => HOUSE_EDGES.to_vec(),
        FamilySpec::G3 => G3_EDGES.to_vec(),
        FamilySpec::C5Pendant => C5_PENDANT_EDGES.to_vec(),
        FamilySpec::CorollaryGraph => COROLLARY_EDGES.to_vec(),
        FamilySpec::GadgetChain { t, i } => gadget_chain_edges(t, i),
    };
    let g = Graph::new(n, &edges).expect("family edge lists are valid");
    Ok(match spec {
        FamilySpec::ComplementPath { .. } => g.complement(),
        _ => g,
    })
}

/// Display names for the vertices of `spec`, indexed by vertex.
pub fn vertex_names(spec: &FamilySpec) -> Result<Vec<String>, FamilyError> {
    spec.validate()?;
    let fixed = |names: &[&str]| names.iter().map(|s| s.to_string()).collect();
    Ok(match *spec {
        FamilySpec::G3 => fixed(&["A", "B", "C", "D", "E", "F", "H"]),
        FamilySpec::CorollaryGraph => fixed(&["x1", "x2", "x3", "x4", "y1", "y2"]),
        FamilySpec::GadgetChain { t, i } => {
            let mut names = vec!["b0".to_string()];
            for j in 1..=t {
                names.extend((1..=6).map(|k| format!("a{j}{k}")));
                names.push(format!("b{j}"));
            }
            names.extend(["u", "v", "w"].iter().take(i).map(|s| s.to_string()));
            names
        }
        _ => (0..spec.order()).map(|v| v.to_string()).collect(),
    })
}

/// A quantity with a recorded claimed value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Quantity {
    Diam,
    D2Diam,
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Quantity::Diam => "diam",
            Quantity::D2Diam => "d2_diam",
        })
    }
}

/// The published `(diam, diam(D_2))` values for families that carry them.
pub fn family_claims(spec: &FamilySpec) -> Result<Vec<(Quantity, u32)>, FamilyError> {
    spec.validate()?;
    let (diam, d2) = match *spec {
        FamilySpec::GadgetChain { t, i } => {
            let (t, i) = (t as u32, i as u32);
            (4 * t + i, 2 * t + i.div_ceil(2))
        }
        FamilySpec::Cycle { order: 5 } => (2, 2),
        FamilySpec::G3 => (2, 3),
        FamilySpec::House => (2, 4),
        FamilySpec::ComplementPath { order } => (2, order as u32 - 1),
        FamilySpec::C5Pendant => (3, 2),
        FamilySpec::CorollaryGraph => (3, 5),
        _ => return Err(FamilyError::NoClaim(*spec)),
    };
    Ok(vec![(Quantity::Diam, diam), (Quantity::D2Diam, d2)])
}
