//! Edge-list text: the vertex count on the first line, then one `u v` pair
//! per line. Blank lines and `#` comments are ignored.

use std::fmt::Write;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EdgeListError {
    #[error("missing vertex count")]
    MissingHeader,
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (line, head) = lines.next().ok_or(EdgeListError::MissingHeader)?;
    let n: usize = head.parse().map_err(|_| EdgeListError::Syntax {
        line,
        message: format!("expected a vertex count, found {head:?}"),
    })?;
    let mut edges = Vec::new();
    for (line, l) in lines {
        let parsed: Vec<usize> = l
            .split_whitespace()
            .map(str::parse)
            .collect::<Result<_, _>>()
            .map_err(|_| EdgeListError::Syntax { line, message: format!("bad vertex in {l:?}") })?;
        match parsed[..] {
            [u, v] => edges.push((u, v)),
            _ => {
                return Err(EdgeListError::Syntax {
                    line,
                    message: format!("expected two vertices, found {l:?}"),
                })
            }
        }
    }
    Ok(Graph::new(n, &edges)?)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.order());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}
