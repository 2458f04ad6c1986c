//! All-pairs hop distances and diameters.
//!
//! Two independent routes compute the same matrix: a bitset BFS used
//! everywhere by default, and a boolean matrix-power oracle that only shares
//! the [`Graph::has_edge`] accessor with it.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::graph::{bits, full_mask, Graph};

const UNREACHABLE: u32 = u32::MAX;

/// A diameter or eccentricity: finite, or infinite for disconnected graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Diameter {
    Finite(u32),
    Infinite,
}

impl Diameter {
    pub fn finite(self) -> Option<u32> {
        match self {
            Diameter::Finite(d) => Some(d),
            Diameter::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == Diameter::Infinite
    }
}

impl fmt::Display for Diameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diameter::Finite(d) => write!(f, "{d}"),
            Diameter::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Diameter {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Diameter::Finite(d) => s.serialize_u32(*d),
            Diameter::Infinite => s.serialize_str("inf"),
        }
    }
}

/// Which algorithm produces distance matrices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DistanceOracle {
    #[default]
    Bfs,
    MatrixPower,
}

impl DistanceOracle {
    pub fn distances(self, g: &Graph) -> DistanceMatrix {
        match self {
            DistanceOracle::Bfs => all_pairs_distances(g),
            DistanceOracle::MatrixPower => matrix_power_distances(g),
        }
    }
}

/// Symmetric `n x n` hop-count matrix. Unreachable pairs read as `None`.
#[derive(Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    fn unreachable(n: usize) -> Self {
        let mut d = vec![UNREACHABLE; n * n];
        for v in 0..n {
            d[v * n + v] = 0;
        }
        DistanceMatrix { n, d }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> Option<u32> {
        match self.d[u * self.n + v] {
            UNREACHABLE => None,
            d => Some(d),
        }
    }

    /// Vertices at exactly distance `k` from `v`, as a bitmask.
    pub fn ring(&self, v: usize, k: u32) -> u64 {
        let row = &self.d[v * self.n..(v + 1) * self.n];
        row.iter()
            .enumerate()
            .filter(|&(_, &d)| d == k)
            .fold(0, |m, (u, _)| m | 1 << u)
    }

    pub fn eccentricity(&self, v: usize) -> Diameter {
        let row = &self.d[v * self.n..(v + 1) * self.n];
        match row.iter().max() {
            Some(&UNREACHABLE) => Diameter::Infinite,
            Some(&d) => Diameter::Finite(d),
            None => Diameter::Finite(0),
        }
    }

    pub fn diameter(&self) -> Diameter {
        (0..self.n)
            .map(|v| self.eccentricity(v))
            .max()
            .unwrap_or(Diameter::Finite(0))
    }

    /// Largest finite distance among pairs inside `members`.
    pub fn diameter_within(&self, members: &[usize]) -> Option<u32> {
        members
            .iter()
            .flat_map(|&u| members.iter().map(move |&v| (u, v)))
            .map(|(u, v)| self.get(u, v))
            .collect::<Option<Vec<_>>>()
            .map(|ds| ds.into_iter().max().unwrap_or(0))
    }

    /// A pair realising the diameter, if the matrix is fully finite.
    pub fn diametral_pair(&self) -> Option<(usize, usize, u32)> {
        let mut best: Option<(usize, usize, u32)> = None;
        for u in 0..self.n {
            for v in u + 1..self.n {
                let d = self.get(u, v)?;
                if best.is_none_or(|(_, _, b)| d > b) {
                    best = Some((u, v, d));
                }
            }
        }
        best.or(Some((0, 0, 0)))
    }
}

impl fmt::Debug for DistanceMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "DistanceMatrix(n={})", self.n)?;
        for u in 0..self.n {
            let row: Vec<String> = (0..self.n)
                .map(|v| self.get(u, v).map_or("-".into(), |d| d.to_string()))
                .collect();
            writeln!(f, "  {}", row.join(" "))?;
        }
        Ok(())
    }
}

/// Hop distances by level-synchronous BFS over adjacency bit-rows.
pub fn all_pairs_distances(g: &Graph) -> DistanceMatrix {
    let n = g.order();
    let mut m = DistanceMatrix::unreachable(n);
    for s in 0..n {
        let mut seen = 1u64 << s;
        let mut frontier = seen;
        let mut depth = 0;
        while frontier != 0 {
            depth += 1;
            let mut next = 0;
            for v in bits(frontier) {
                next |= g.neighbors(v);
            }
            frontier = next & !seen;
            seen |= frontier;
            for v in bits(frontier) {
                m.d[s * n + v] = depth;
            }
        }
        debug_assert_eq!(seen & !full_mask(n), 0);
    }
    m
}

/// Hop distances from boolean matrix powers: `d(u, v)` is the least `k`
/// such that `v` is reachable from `u` by a walk of length at most `k`.
///
/// Deliberately naive (plain `Vec<Vec<bool>>`, cubic products) so that it
/// shares nothing with [`all_pairs_distances`] beyond edge lookups.
pub fn matrix_power_distances(g: &Graph) -> DistanceMatrix {
    let n = g.order();
    let adj: Vec<Vec<bool>> = (0..n)
        .map(|u| (0..n).map(|v| g.has_edge(u, v)).collect())
        .collect();
    let mut reach: Vec<Vec<bool>> = (0..n).map(|u| (0..n).map(|v| u == v).collect()).collect();
    let mut m = DistanceMatrix::unreachable(n);
    for k in 1..n as u32 {
        let mut next = reach.clone();
        for u in 0..n {
            for v in 0..n {
                if next[u][v] {
                    continue;
                }
                next[u][v] = (0..n).any(|w| reach[u][w] && adj[w][v]);
            }
        }
        let mut grew = false;
        for u in 0..n {
            for v in 0..n {
                if next[u][v] && !reach[u][v] {
                    m.d[u * n + v] = k;
                    grew = true;
                }
            }
        }
        reach = next;
        if !grew {
            break;
        }
    }
    m
}

/// `diam(g)`: 0 for one vertex, infinite when disconnected.
pub fn diameter(g: &Graph) -> Diameter {
    all_pairs_distances(g).diameter()
}
