use std::fmt::Write;

use crate::graph::Graph;

/// Renders `g` as an undirected DOT graph. With `labels`, vertex `v` is
/// emitted under the quoted name `labels[v]`; otherwise under its index.
pub fn to_dot(g: &Graph, labels: Option<&[String]>) -> String {
    let name = |v: usize| match labels {
        Some(l) => format!("\"{}\"", l[v].replace('"', "\\\"")),
        None => v.to_string(),
    };
    let mut out = String::from("graph G {\n");
    for v in 0..g.order() {
        writeln!(out, "  {};", name(v)).unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {} -- {};", name(u), name(v)).unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k1() {
        let dot = to_dot(&Graph::edgeless(1).unwrap(), None);
        assert_eq!(dot, "graph G {\n  0;\n}\n");
    }

    #[test]
    fn c5() {
        let e: Vec<_> = (0..5).map(|v| (v, (v + 1) % 5)).collect();
        let dot = to_dot(&Graph::new(5, &e).unwrap(), None);
        assert_eq!(dot.matches(" -- ").count(), 5);
        assert_eq!(dot.lines().filter(|l| l.ends_with(';') && !l.contains("--")).count(), 5);
    }

    #[test]
    fn labelled() {
        let names = vec!["u".to_string(), "b0".to_string()];
        let dot = to_dot(&Graph::new(2, &[(0, 1)]).unwrap(), Some(&names));
        assert!(dot.contains("  \"u\" -- \"b0\";\n"));
    }
}
