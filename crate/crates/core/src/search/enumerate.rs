//! Connected graphs up to isomorphism by canonical augmentation.
//!
//! Every connected graph on `n` vertices has a non-cut vertex whose removal
//! leaves a connected graph on `n - 1` vertices. Children of a parent are the
//! parent plus a new vertex joined to a non-empty subset. A child is kept only
//! when the new vertex lies in the automorphism orbit of the child's
//! designated vertex: the non-cut vertex with the largest canonical index.
//! That makes the parent of every accepted child unique up to isomorphism;
//! repeats from the same parent are removed by canonical key.

use std::collections::HashSet;

use super::SearchError;
use crate::canon::{canonical_labeling, pinned_labeling};
use crate::graph::{bits, full_mask, Graph};
use crate::par::{default_workers, map_ordered};

/// Largest order [`enumerate_connected`] accepts.
pub const ENUM_MAX_ORDER: usize = 9;

fn children(parent: &Graph) -> Vec<(u128, Graph)> {
    let n = parent.order();
    let x = n;
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for mask in 1..=full_mask(n) {
        let h = parent.with_vertex(mask);
        let cuts = h.cut_vertices();
        if cuts >> x & 1 == 1 {
            continue;
        }
        let lab = canonical_labeling(&h).expect("enumeration stays below the canonical cap");
        let designated = bits(!cuts & full_mask(n + 1))
            .max_by_key(|&v| lab.position[v])
            .expect("a connected graph has a non-cut vertex");
        let accept = designated == x
            || (h.degree(designated) == h.degree(x)
                && pinned_labeling(&h, x).unwrap().key == pinned_labeling(&h, designated).unwrap().key);
        if accept && seen.insert(lab.key) {
            out.push((lab.key, h.relabel(&lab.position)));
        }
    }
    out
}

fn next_level(parents: &[Graph], workers: usize) -> Vec<Graph> {
    let mut level: Vec<(u128, Graph)> = map_ordered(parents, workers, children).into_iter().flatten().collect();
    level.sort_unstable_by_key(|(key, _)| *key);
    level.into_iter().map(|(_, g)| g).collect()
}

/// All connected graphs of each order `1..=max_n`, one canonical
/// representative per isomorphism class, each level sorted by canonical form.
pub fn enumerate_connected_up_to(max_n: usize, workers: usize) -> Result<Vec<Vec<Graph>>, SearchError> {
    if max_n > ENUM_MAX_ORDER {
        return Err(SearchError::TooLarge { n: max_n, cap: ENUM_MAX_ORDER });
    }
    if max_n == 0 {
        return Err(SearchError::InvalidOrder { n: 0, max: ENUM_MAX_ORDER });
    }
    let mut levels = vec![vec![Graph::edgeless(1).expect("K1")]];
    while levels.len() < max_n {
        let next = next_level(levels.last().unwrap(), workers);
        levels.push(next);
    }
    Ok(levels)
}

pub fn enumerate_connected_with(n: usize, workers: usize) -> Result<Vec<Graph>, SearchError> {
    Ok(enumerate_connected_up_to(n, workers)?.pop().expect("at least one level"))
}

/// Connected graphs on `n` vertices up to isomorphism, ordered by canonical
/// form. Uses [`default_workers`].
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>, SearchError> {
    enumerate_connected_with(n, default_workers())
}
