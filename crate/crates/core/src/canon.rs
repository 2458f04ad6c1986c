//! Canonical labelling for small graphs.
//!
//! Equitable partition refinement followed by an individualisation search
//! tree. The canonical relabelling is the leaf whose upper-triangle adjacency
//! bits (graph6 column order) are lexicographically largest. Branches that
//! differ only by swapping two twins are skipped, since the transposition is
//! an automorphism fixing the current partition.

use thiserror::Error;

use crate::graph::{bits, Graph};
use crate::io::graph6;

/// Largest order accepted by the canonical labeller.
pub const CANON_MAX_ORDER: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CanonError {
    #[error("canonical labelling supports at most {CANON_MAX_ORDER} vertices, got {n}")]
    TooLarge { n: usize },
}

/// Result of a canonical labelling run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Labeling {
    /// Upper-triangle adjacency bits of the canonical graph, first bit most
    /// significant. Only comparable between graphs of equal order.
    pub key: u128,
    /// `position[v]` is the canonical index of vertex `v`.
    pub position: Vec<usize>,
}

type Colors = [u8; CANON_MAX_ORDER];

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    twins: [u64; CANON_MAX_ORDER],
    best: Option<(u128, Colors)>,
}

impl Search<'_> {
    /// Refines `color` (contiguous ranks `0..k`) to the coarsest equitable
    /// partition below it. Returns the number of cells.
    fn refine(&self, color: &mut Colors, mut cells: usize) -> usize {
        let n = self.n;
        loop {
            let mut sig = [(0u8, [0u8; CANON_MAX_ORDER], 0u8); CANON_MAX_ORDER];
            for v in 0..n {
                let mut counts = [0u8; CANON_MAX_ORDER];
                for u in bits(self.g.neighbors(v)) {
                    counts[color[u] as usize] += 1;
                }
                sig[v] = (color[v], counts, v as u8);
            }
            let sig = &mut sig[..n];
            sig.sort_unstable();
            let mut rank = 0u8;
            for i in 0..n {
                if i > 0 && (sig[i].0, sig[i].1) != (sig[i - 1].0, sig[i - 1].1) {
                    rank += 1;
                }
                color[sig[i].2 as usize] = rank;
            }
            let next = rank as usize + 1;
            if next == cells {
                return cells;
            }
            cells = next;
        }
    }

    fn leaf_key(&self, color: &Colors) -> u128 {
        let mut at = [0usize; CANON_MAX_ORDER];
        for v in 0..self.n {
            at[color[v] as usize] = v;
        }
        let mut key = 0u128;
        for j in 1..self.n {
            let row = self.g.neighbors(at[j]);
            for &vi in &at[..j] {
                key = key << 1 | (row >> vi & 1) as u128;
            }
        }
        key
    }

    fn descend(&mut self, color: Colors, cells: usize) {
        let n = self.n;
        if cells == n {
            let key = self.leaf_key(&color);
            if self.best.is_none_or(|(b, _)| key > b) {
                self.best = Some((key, color));
            }
            return;
        }
        // first non-singleton cell
        let mut size = [0u8; CANON_MAX_ORDER];
        for &c in &color[..n] {
            size[c as usize] += 1;
        }
        let target = (0..cells).find(|&c| size[c] > 1).expect("non-discrete partition") as u8;
        let mut tried = 0u64;
        for v in 0..n {
            if color[v] != target || self.twins[v] & tried != 0 {
                continue;
            }
            tried |= 1 << v;
            let mut child = color;
            for (w, c) in child.iter_mut().enumerate().take(n) {
                if w != v && *c >= target {
                    *c += 1;
                }
            }
            let cells = self.refine(&mut child, cells + 1);
            self.descend(child, cells);
        }
    }
}

fn twin_masks(g: &Graph) -> [u64; CANON_MAX_ORDER] {
    let n = g.order();
    let mut twins = [0u64; CANON_MAX_ORDER];
    for u in 0..n {
        for v in u + 1..n {
            let nu = g.neighbors(u) & !(1 << v);
            let nv = g.neighbors(v) & !(1 << u);
            if nu == nv {
                twins[u] |= 1 << v;
                twins[v] |= 1 << u;
            }
        }
    }
    twins
}

fn label(g: &Graph, pinned: Option<usize>) -> Result<Labeling, CanonError> {
    let n = g.order();
    if n > CANON_MAX_ORDER {
        return Err(CanonError::TooLarge { n });
    }
    let mut search = Search {
        g,
        n,
        twins: twin_masks(g),
        best: None,
    };
    let mut color = [0u8; CANON_MAX_ORDER];
    let mut cells = 1;
    if let Some(x) = pinned {
        if n > 1 {
            for (v, c) in color[..n].iter_mut().enumerate() {
                *c = u8::from(v != x);
            }
            cells = 2;
        }
    }
    let cells = search.refine(&mut color, cells);
    search.descend(color, cells);
    let (key, color) = search.best.expect("search reaches at least one leaf");
    Ok(Labeling {
        key,
        position: color[..n].iter().map(|&c| c as usize).collect(),
    })
}

/// Canonical labelling of `g`.
pub fn canonical_labeling(g: &Graph) -> Result<Labeling, CanonError> {
    label(g, None)
}

/// Canonical labelling of `g` with vertex `x` forced to position 0. Two pinned
/// labellings of the same graph have equal keys iff some automorphism maps
/// one pinned vertex onto the other.
pub fn pinned_labeling(g: &Graph, x: usize) -> Result<Labeling, CanonError> {
    label(g, Some(x))
}

/// The canonical relabelling of `g`.
pub fn canonical_graph(g: &Graph) -> Result<Graph, CanonError> {
    let lab = canonical_labeling(g)?;
    Ok(g.relabel(&lab.position))
}

/// Canonical byte string: the graph6 encoding of the canonical relabelling.
/// Identical for isomorphic inputs and decodable with [`graph6::parse`].
pub fn canonical_form(g: &Graph) -> Result<Vec<u8>, CanonError> {
    let c = canonical_graph(g)?;
    Ok(graph6::encode(&c)
        .expect("canonical cap is below the graph6 cap")
        .into_bytes())
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> Result<bool, CanonError> {
    if a.order() != b.order() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    Ok(canonical_labeling(a)?.key == canonical_labeling(b)?.key)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn path(n: usize) -> Graph {
        let e: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::new(n, &e).unwrap()
    }

    #[test]
    fn relabelled_path_matches() {
        let p = path(4);
        let q = p.relabel(&[2, 0, 3, 1]);
        assert_ne!(p, q);
        assert_eq!(canonical_form(&p).unwrap(), canonical_form(&q).unwrap());
    }

    #[test]
    fn path_and_star_differ() {
        let star = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_ne!(canonical_form(&path(4)).unwrap(), canonical_form(&star).unwrap());
    }

    #[test]
    fn eleven_classes_on_four_vertices() {
        let pairs: Vec<(usize, usize)> = (0..4).flat_map(|u| (u + 1..4).map(move |v| (u, v))).collect();
        let mut forms = HashSet::new();
        for mask in 0u32..64 {
            let e: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p).collect();
            forms.insert(canonical_form(&Graph::new(4, &e).unwrap()).unwrap());
        }
        assert_eq!(forms.len(), 11);
    }

    #[test]
    fn too_large() {
        let g = Graph::edgeless(13).unwrap();
        assert_eq!(canonical_form(&g), Err(CanonError::TooLarge { n: 13 }));
    }

    #[test]
    fn symmetric_graphs_at_cap_finish() {
        // complete, edgeless, perfect matching and its complement on 12
        let k12 = Graph::edgeless(12).unwrap().complement();
        let m: Vec<_> = (0..6).map(|i| (2 * i, 2 * i + 1)).collect();
        let matching = Graph::new(12, &m).unwrap();
        for g in [k12.clone(), k12.complement(), matching.clone(), matching.complement()] {
            let c = canonical_graph(&g).unwrap();
            assert_eq!(canonical_graph(&c).unwrap(), c);
        }
    }

    #[test]
    fn pinned_orbits_on_path() {
        let p = path(5);
        let key = |x| pinned_labeling(&p, x).unwrap().key;
        assert_eq!(key(0), key(4));
        assert_eq!(key(1), key(3));
        assert_ne!(key(0), key(1));
        assert_ne!(key(0), key(2));
        assert_eq!(pinned_labeling(&p, 3).unwrap().position[3], 0);
    }
}
