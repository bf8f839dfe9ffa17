//! Plain-text graph format.
//!
//! ```text
//! # comment
//! p 4
//! e 0 1
//! e 1 2
//! e 1 2        # repeated line = parallel edge
//! e 3 3        # loop
//! c 2 7        # optional vertex color
//! ```
//!
//! `p <n>` must appear once, before any `e`/`c` line. Vertex ids are
//! 0-based; out-of-range ids are rejected.

use crate::error::{Error, Result};
use crate::graph::Multigraph;

pub fn parse_graph(text: &str) -> Result<Multigraph> {
    let mut graph: Option<Multigraph> = None;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split_whitespace();
        let tag = parts.next().expect("non-empty line");
        let at = |what: &str| Error::Parse(format!("line {}: {}", lineno + 1, what));
        match tag {
            "p" => {
                if graph.is_some() {
                    return Err(at("duplicate p line"));
                }
                let n: usize = parts
                    .next()
                    .ok_or_else(|| at("p needs a vertex count"))?
                    .parse()
                    .map_err(|_| at("p needs a non-negative integer"))?;
                if parts.next().is_some() {
                    return Err(at("trailing tokens after p line"));
                }
                graph = Some(Multigraph::new(n));
            }
            "e" => {
                let g = graph
                    .as_mut()
                    .ok_or_else(|| at("e line before p line"))?;
                let u = parse_u32(parts.next(), || at("e needs two endpoints"))?;
                let v = parse_u32(parts.next(), || at("e needs two endpoints"))?;
                if parts.next().is_some() {
                    return Err(at("trailing tokens after e line"));
                }
                g.add_edge(u, v)
                    .map_err(|e| at(&format!("{e}")))?;
            }
            "c" => {
                let g = graph
                    .as_mut()
                    .ok_or_else(|| at("c line before p line"))?;
                let v = parse_u32(parts.next(), || at("c needs vertex and color"))?;
                let col = parse_u32(parts.next(), || at("c needs vertex and color"))?;
                if parts.next().is_some() {
                    return Err(at("trailing tokens after c line"));
                }
                g.set_vertex_color(v, col)
                    .map_err(|e| at(&format!("{e}")))?;
            }
            other => {
                return Err(at(&format!("unknown directive '{other}'")));
            }
        }
    }
    graph.ok_or_else(|| Error::Parse("no p line found".into()))
}

pub fn read_graph_file(path: &std::path::Path) -> Result<Multigraph> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    parse_graph(&text)
}

fn parse_u32(tok: Option<&str>, missing: impl Fn() -> Error) -> Result<u32> {
    let t = tok.ok_or_else(&missing)?;
    t.parse().map_err(|_| {
        Error::Parse(format!("expected a non-negative integer, got '{t}'"))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_colors_loops_and_parallels() {
        let g = parse_graph("# header\np 4\ne 0 1\ne 1 2\ne 1 2\ne 3 3\nc 2 7\n").unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edge_count(), 4);
        assert_eq!(g.multiplicity(1, 2), 2);
        assert_eq!(g.multiplicity(3, 3), 1);
        assert_eq!(g.vertex_color(2), 7);
        assert_eq!(g.vertex_color(0), 0);
    }

    #[test]
    fn rejects_out_of_range_and_malformed() {
        assert!(parse_graph("p 2\ne 0 2\n").is_err());
        assert!(parse_graph("e 0 1\np 2\n").is_err());
        assert!(parse_graph("p 2\np 2\n").is_err());
        assert!(parse_graph("p 2\nq 1\n").is_err());
        assert!(parse_graph("p -3\n").is_err());
        assert!(parse_graph("").is_err());
        assert!(parse_graph("p 2\ne 0\n").is_err());
        assert!(parse_graph("p 2\nc 0 1 2\n").is_err());
    }

    #[test]
    fn empty_graph_is_fine() {
        let g = parse_graph("p 0\n").unwrap();
        assert_eq!(g.n(), 0);
    }
}
