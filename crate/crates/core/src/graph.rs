//! Simple undirected graphs stored as adjacency bit-rows.

use std::fmt;

use thiserror::Error;

/// Largest vertex count a [`Graph`] can hold (one `u64` row per vertex).
pub const MAX_ORDER: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("a graph needs at least one vertex")]
    Empty,
    #[error("{n} vertices exceed the supported maximum of {MAX_ORDER}")]
    TooManyVertices { n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge ({u}, {v}) names a vertex outside 0..{n}")]
    VertexOutOfRange { u: usize, v: usize, n: usize },
    #[error("edge ({u}, {v}) appears more than once")]
    DuplicateEdge { u: usize, v: usize },
    #[error("operation needs at least 2 vertices, graph has {n}")]
    TooSmall { n: usize },
}

/// A simple undirected graph on vertices `0..n`.
///
/// Row `v` is a bitmask of the neighbours of `v`. Rows are kept symmetric and
/// loop-free by every constructor.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<u64>,
}

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the set bits of a mask in increasing order.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

impl Graph {
    /// Builds a graph from an explicit edge list, rejecting loops, out-of-range
    /// endpoints and repeated pairs.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Self::edgeless(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if g.has_edge(u, v) {
                return Err(GraphError::DuplicateEdge { u, v });
            }
            g.insert_edge(u, v);
        }
        Ok(g)
    }

    pub fn edgeless(n: usize) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        if n > MAX_ORDER {
            return Err(GraphError::TooManyVertices { n });
        }
        Ok(Graph { n, rows: vec![0; n] })
    }

    /// Builds a graph from raw rows. Caller guarantees symmetry and no loops.
    pub(crate) fn from_rows(rows: Vec<u64>) -> Self {
        let g = Graph { n: rows.len(), rows };
        debug_assert!(g.is_well_formed());
        g
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) {
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
    }

    pub(crate) fn is_well_formed(&self) -> bool {
        let all = full_mask(self.n);
        (1..=MAX_ORDER).contains(&self.n)
            && self.rows.len() == self.n
            && (0..self.n).all(|v| {
                let row = self.rows[v];
                row & !all == 0
                    && row & (1 << v) == 0
                    && bits(row).all(|u| self.rows[u] & (1 << v) != 0)
            })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    /// Neighbourhood of `v` as a bitmask.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.rows[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| bits(self.rows[u] & !full_mask(u + 1)).map(move |v| (u, v)))
    }

    /// Edge `(u, v)` is present iff it is absent here, for `u != v`.
    pub fn complement(&self) -> Graph {
        let all = full_mask(self.n);
        let rows = (0..self.n).map(|v| !self.rows[v] & all & !(1 << v)).collect();
        Graph::from_rows(rows)
    }

    /// Returns the graph with vertex `v` renamed to `perm[v]`.
    ///
    /// Panics if `perm` is not a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        let mut seen = 0u64;
        for &p in perm {
            assert!(p < self.n && seen >> p & 1 == 0, "not a permutation");
            seen |= 1 << p;
        }
        let mut rows = vec![0u64; self.n];
        for (u, v) in self.edges() {
            rows[perm[u]] |= 1 << perm[v];
            rows[perm[v]] |= 1 << perm[u];
        }
        Graph::from_rows(rows)
    }

    /// Adds a new vertex `n` adjacent to `mask`.
    pub(crate) fn with_vertex(&self, mask: u64) -> Graph {
        debug_assert!(self.n < MAX_ORDER && mask & !full_mask(self.n) == 0);
        let mut rows = self.rows.clone();
        for u in bits(mask) {
            rows[u] |= 1 << self.n;
        }
        rows.push(mask);
        Graph { n: self.n + 1, rows }
    }

    /// Vertices reachable from `start` without leaving `within`.
    pub(crate) fn reach(&self, start: usize, within: u64) -> u64 {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.rows[v];
            }
            frontier = next & within & !seen;
            seen |= frontier;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.reach(0, full_mask(self.n)) == full_mask(self.n)
    }

    /// Connected components, each sorted, listed by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut left = full_mask(self.n);
        let mut out = Vec::new();
        while left != 0 {
            let comp = self.reach(left.trailing_zeros() as usize, left);
            out.push(bits(comp).collect());
            left &= !comp;
        }
        out
    }

    /// Vertices whose removal increases the number of components.
    pub fn cut_vertices(&self) -> u64 {
        let all = full_mask(self.n);
        let mut cuts = 0;
        for v in 0..self.n {
            let rest = all & !(1 << v);
            if rest == 0 {
                continue;
            }
            // removing v splits its own component iff its other members are
            // not all reachable from one neighbour
            let comp = self.reach(v, all) & rest;
            let start = match comp {
                0 => continue,
                c => c.trailing_zeros() as usize,
            };
            if self.reach(start, rest) != comp {
                cuts |= 1 << v;
            }
        }
        cuts
    }

    /// Two-colouring by BFS; false iff some odd cycle exists.
    pub fn is_bipartite(&self) -> bool {
        let mut side = 0u64;
        let mut left = full_mask(self.n);
        while left != 0 {
            let start = left.trailing_zeros() as usize;
            let mut seen = 1u64 << start;
            let mut frontier = seen;
            let mut parity = false;
            while frontier != 0 {
                if parity {
                    side |= frontier;
                }
                let mut next = 0;
                for v in bits(frontier) {
                    next |= self.rows[v];
                }
                frontier = next & !seen;
                seen |= frontier;
                parity = !parity;
            }
            left &= !seen;
        }
        (0..self.n).all(|v| {
            let mine = side >> v & 1;
            bits(self.rows[v]).all(|u| side >> u & 1 != mine)
        })
    }

    /// True iff the vertex set splits into two non-empty parts with every
    /// cross pair adjacent, i.e. the complement is disconnected.
    pub fn has_spanning_complete_bipartite(&self) -> Result<bool, GraphError> {
        if self.n < 2 {
            return Err(GraphError::TooSmall { n: self.n });
        }
        Ok(!self.complement().is_connected())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        f.write_str("])")
    }
}
