#![allow(dead_code)]

use d2graph::search::enumerate_connected_up_to;
use d2graph::Graph;

/// All labelled graphs on `n` vertices (use for n <= 6).
pub fn labelled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let e: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p).collect();
        Graph::new(n, &e).unwrap()
    })
}

/// Connected class representatives on `1..=max_n` vertices.
pub fn connected_up_to(max_n: usize) -> Vec<Graph> {
    enumerate_connected_up_to(max_n, 1).unwrap().into_iter().flatten().collect()
}

/// One representative per isomorphism class of all graphs on `1..=max_n`
/// vertices: every graph or its complement is connected.
pub fn all_classes_up_to(max_n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for g in connected_up_to(max_n) {
        let c = g.complement();
        if !c.is_connected() {
            out.push(c);
        }
        out.push(g);
    }
    out
}
