//! Plain-text graph input: graph6 or a 0-indexed edge list, detected from content.
//!
//! Edge-list format: one `u v` pair per line. A line holding a single integer
//! declares the vertex count (needed for isolated trailing vertices); otherwise
//! the order is one more than the largest index seen. Blank lines and lines
//! starting with `#` are ignored.

use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::graph6::{parse_graph6, Graph6Error};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InputError {
    #[error(transparent)]
    Graph6(#[from] Graph6Error),
    #[error("edge list line {line}: {message}")]
    EdgeList { line: usize, message: String },
    #[error("no graph found in input")]
    Empty,
}

pub fn parse_edge_list(text: &str) -> Result<Graph, InputError> {
    let mut declared: Option<usize> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = |message: String| InputError::EdgeList {
            line: idx + 1,
            message,
        };
        let fields = line
            .split_whitespace()
            .map(|f| f.parse::<usize>().map_err(|e| bad(format!("'{f}': {e}"))))
            .collect::<Result<Vec<_>, _>>()?;
        match fields[..] {
            [n] if declared.is_none() && edges.is_empty() => declared = Some(n),
            [u, v] => edges.push((idx + 1, u, v)),
            _ => return Err(bad(format!("expected 'u v', got '{line}'"))),
        }
    }
    let inferred = edges
        .iter()
        .map(|&(_, u, v)| u.max(v) + 1)
        .max()
        .unwrap_or(0);
    let n = match declared {
        Some(n) if n < inferred => {
            return Err(InputError::EdgeList {
                line: 1,
                message: format!("declared {n} vertices but index {} used", inferred - 1),
            })
        }
        Some(n) => n,
        None if edges.is_empty() => return Err(InputError::Empty),
        None => inferred,
    };
    let mut g = Graph::empty(n);
    for (line, u, v) in edges {
        g.try_add_edge(u, v)
            .map_err(|e: GraphError| InputError::EdgeList {
                line,
                message: e.to_string(),
            })?;
    }
    Ok(g)
}

/// Order on the first line, then one `u v` line per edge.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Reads a single graph. Digits never occur in graph6 data, so a first
/// significant line starting with a digit selects the edge-list reader.
pub fn read_graph(text: &str) -> Result<Graph, InputError> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .ok_or(InputError::Empty)?;
    if first.starts_with(|c: char| c.is_ascii_digit()) {
        parse_edge_list(text)
    } else {
        Ok(parse_graph6(first)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::extremal;
    use crate::graph6::write_graph6;

    #[test]
    fn edge_list_round_trip() {
        let g = extremal(8, 2).unwrap();
        let text = write_edge_list(&g);
        assert!(text.starts_with("8\n0 1\n"));
        assert_eq!(parse_edge_list(&text).unwrap(), g);
        assert_eq!(read_graph(&text).unwrap(), g);
    }

    #[test]
    fn detects_graph6() {
        let g = extremal(10, 3).unwrap();
        let text = format!("{}\n", write_graph6(&g));
        assert_eq!(read_graph(&text).unwrap(), g);
    }

    #[test]
    fn inferred_order_and_comments() {
        let g = parse_edge_list("# square\n0 1\n1 2\n\n2 3\n3 0\n").unwrap();
        assert_eq!((g.n(), g.edge_count()), (4, 4));
        let g = parse_edge_list("6\n0 1\n").unwrap();
        assert_eq!(g.n(), 6);
    }

    #[test]
    fn edge_list_errors() {
        assert!(matches!(
            parse_edge_list("0 0\n"),
            Err(InputError::EdgeList { line: 1, .. })
        ));
        assert!(matches!(
            parse_edge_list("0 1\n1 x\n"),
            Err(InputError::EdgeList { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("0 1 2\n"),
            Err(InputError::EdgeList { line: 1, .. })
        ));
        assert!(matches!(
            parse_edge_list("2\n0 5\n"),
            Err(InputError::EdgeList { .. })
        ));
        assert_eq!(read_graph("\n# nothing\n"), Err(InputError::Empty));
    }
}
