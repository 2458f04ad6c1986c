//! The distance-power operator `D_k` and per-graph bound checks on `D_2`.

use serde::Serialize;

use crate::distance::{all_pairs_distances, Diameter, DistanceMatrix, DistanceOracle};
use crate::graph::Graph;

/// `D_k(g)`: same vertices, `u ~ v` iff `d_g(u, v) = k` exactly.
///
/// Panics if `k == 0`.
pub fn distance_power_graph(g: &Graph, k: u32) -> Graph {
    assert!(k >= 1, "distance power needs k >= 1");
    distance_power_from(&all_pairs_distances(g), k)
}

fn distance_power_from(d: &DistanceMatrix, k: u32) -> Graph {
    Graph::from_rows((0..d.order()).map(|v| d.ring(v, k)).collect())
}

/// Derived quantities for one graph and its 2-distance graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MetricsRecord {
    pub n: usize,
    pub edge_count: usize,
    pub connected: bool,
    pub diam: Diameter,
    pub bipartite: bool,
    /// Whether `g` has a spanning complete bipartite subgraph (is a join).
    /// False for a single vertex.
    #[serde(rename = "join")]
    pub has_spanning_complete_bipartite: bool,
    pub d2_connected: bool,
    pub d2_diam: Diameter,
    /// Diameter of each component of `D_2(g)`, components ordered by least
    /// vertex.
    pub d2_component_diams: Vec<u32>,
}

/// Which inequality a [`BoundCheckResult`] tests.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Bound {
    /// `d_2(u, v) >= ceil(d(u, v) / 2)` for every pair with finite `d_2`.
    HalfDistance,
    /// `diam(D_2) >= ceil(diam / 2)` when `D_2` is connected.
    DiameterLower,
    /// `diam(D_2) <= 5` when `diam = 3` and `D_2` is connected.
    Diameter3Upper,
}

/// A pair `(u, v)` with its distances in `g` and in `D_2(g)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PairWitness {
    pub u: usize,
    pub v: usize,
    pub d: Diameter,
    pub d2: Diameter,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundCheckResult {
    pub bound: Bound,
    pub applicable: bool,
    pub passed: bool,
    pub violations: Vec<PairWitness>,
}

impl BoundCheckResult {
    fn vacuous(bound: Bound) -> Self {
        BoundCheckResult { bound, applicable: false, passed: true, violations: Vec::new() }
    }

    fn from_violations(bound: Bound, violations: Vec<PairWitness>) -> Self {
        BoundCheckResult { bound, applicable: true, passed: violations.is_empty(), violations }
    }
}

fn dist(d: Option<u32>) -> Diameter {
    d.map_or(Diameter::Infinite, Diameter::Finite)
}

/// A graph together with its distance matrix, its 2-distance graph and the
/// distance matrix of that, all produced by one [`DistanceOracle`].
#[derive(Debug, Clone)]
pub struct D2Analysis<'a> {
    g: &'a Graph,
    dist: DistanceMatrix,
    d2: Graph,
    dist2: DistanceMatrix,
}

impl<'a> D2Analysis<'a> {
    pub fn new(g: &'a Graph, oracle: DistanceOracle) -> Self {
        let dist = oracle.distances(g);
        let d2 = distance_power_from(&dist, 2);
        let dist2 = oracle.distances(&d2);
        D2Analysis { g, dist, d2, dist2 }
    }

    pub fn graph(&self) -> &Graph {
        self.g
    }

    pub fn distances(&self) -> &DistanceMatrix {
        &self.dist
    }

    pub fn d2_graph(&self) -> &Graph {
        &self.d2
    }

    pub fn d2_distances(&self) -> &DistanceMatrix {
        &self.dist2
    }

    pub fn diam(&self) -> Diameter {
        self.dist.diameter()
    }

    pub fn d2_diam(&self) -> Diameter {
        self.dist2.diameter()
    }

    fn pair(&self, u: usize, v: usize) -> PairWitness {
        PairWitness { u, v, d: dist(self.dist.get(u, v)), d2: dist(self.dist2.get(u, v)) }
    }

    /// A pair realising `diam(D_2)`, when `D_2` is connected.
    pub fn d2_diametral_pair(&self) -> Option<PairWitness> {
        self.dist2.diametral_pair().map(|(u, v, _)| self.pair(u, v))
    }

    pub fn metrics(&self) -> MetricsRecord {
        let g = self.g;
        let n = g.order();
        let d2_component_diams = self
            .d2
            .components()
            .iter()
            .map(|c| self.dist2.diameter_within(c).expect("component is connected"))
            .collect::<Vec<_>>();
        MetricsRecord {
            n,
            edge_count: g.edge_count(),
            connected: g.is_connected(),
            diam: self.diam(),
            bipartite: g.is_bipartite(),
            has_spanning_complete_bipartite: g.has_spanning_complete_bipartite().unwrap_or(false),
            d2_connected: d2_component_diams.len() == 1,
            d2_diam: self.d2_diam(),
            d2_component_diams,
        }
    }

    /// Every pair with finite `d_2` satisfies `2 d_2(u, v) >= d(u, v)`.
    pub fn check_half_bound(&self) -> BoundCheckResult {
        let n = self.g.order();
        let mut violations = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                let Some(d2) = self.dist2.get(u, v) else { continue };
                // a finite d2 path doubles into a walk in g, so d is finite too
                let short = self.dist.get(u, v).is_none_or(|d| 2 * d2 < d);
                if short {
                    violations.push(self.pair(u, v));
                }
            }
        }
        BoundCheckResult::from_violations(Bound::HalfDistance, violations)
    }

    /// With `D_2` connected, `diam(D_2) >= ceil(diam / 2)`. A violation names
    /// a diametral pair of `g`.
    pub fn check_lower_bound(&self) -> BoundCheckResult {
        let (Diameter::Finite(diam), Diameter::Finite(d2_diam)) = (self.diam(), self.d2_diam()) else {
            return BoundCheckResult::vacuous(Bound::DiameterLower);
        };
        let mut violations = Vec::new();
        if d2_diam < diam.div_ceil(2) {
            let (u, v, _) = self.dist.diametral_pair().expect("connected");
            violations.push(self.pair(u, v));
        }
        BoundCheckResult::from_violations(Bound::DiameterLower, violations)
    }

    /// Applicable iff `diam = 3` and `D_2` is connected; every pair must then
    /// have `d_2 <= 5`.
    pub fn check_diam3_upper(&self) -> BoundCheckResult {
        if self.diam() != Diameter::Finite(3) || self.d2_diam().is_infinite() {
            return BoundCheckResult::vacuous(Bound::Diameter3Upper);
        }
        let n = self.g.order();
        let violations = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| self.dist2.get(u, v).is_some_and(|d2| d2 > 5))
            .map(|(u, v)| self.pair(u, v))
            .collect();
        BoundCheckResult::from_violations(Bound::Diameter3Upper, violations)
    }
}

pub fn d2_metrics(g: &Graph) -> MetricsRecord {
    D2Analysis::new(g, DistanceOracle::Bfs).metrics()
}

pub fn check_half_bound(g: &Graph) -> BoundCheckResult {
    D2Analysis::new(g, DistanceOracle::Bfs).check_half_bound()
}

pub fn check_lower_bound(g: &Graph) -> BoundCheckResult {
    D2Analysis::new(g, DistanceOracle::Bfs).check_lower_bound()
}

pub fn check_diam3_upper(g: &Graph) -> BoundCheckResult {
    D2Analysis::new(g, DistanceOracle::Bfs).check_diam3_upper()
}
