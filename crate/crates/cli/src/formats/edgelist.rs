//! Edge-list graph files: one `u v` pair per line, 0-based, `#` comments.
//! The writer records the vertex count in a leading `# n <count>` comment so
//! isolated vertices survive a round trip.

use locbox_core::Graph;

use super::FormatError;

/// Writes a graph as an edge list.
pub fn to_edgelist(g: &Graph) -> String {
    let mut out = format!("# n {}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Parses an edge list. The vertex count is the maximum of any `# n <count>`
/// comment and one past the largest endpoint.
pub fn from_edgelist(text: &str) -> Result<Graph, FormatError> {
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut declared_n = 0usize;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            let fields: Vec<&str> = comment.split_whitespace().collect();
            if fields.len() == 2 && fields[0] == "n" {
                if let Ok(n) = fields[1].parse::<usize>() {
                    declared_n = declared_n.max(n);
                }
            }
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(FormatError::new(
                "edge list",
                lineno + 1,
                0,
                format!("expected `u v`, got {} fields", fields.len()),
            ));
        }
        let u: usize = fields[0].parse().map_err(|_| {
            FormatError::new(
                "edge list",
                lineno + 1,
                0,
                format!("bad vertex `{}`", fields[0]),
            )
        })?;
        let v: usize = fields[1].parse().map_err(|_| {
            FormatError::new(
                "edge list",
                lineno + 1,
                raw.find(fields[1]).unwrap_or(0),
                format!("bad vertex `{}`", fields[1]),
            )
        })?;
        if u == v {
            return Err(FormatError::new(
                "edge list",
                lineno + 1,
                0,
                format!("self-loop at {u}"),
            ));
        }
        edges.push((u, v));
    }
    let n = edges
        .iter()
        .map(|&(u, v)| u.max(v) + 1)
        .max()
        .unwrap_or(0)
        .max(declared_n);
    Graph::from_edges(n, &edges)
        .map_err(|e| FormatError::new("edge list", 0, 0, format!("invalid graph: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_path() {
        let g = from_edgelist("0 1\n1 2").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.m(), 2);
        assert!(g.has_edge(0, 1) && g.has_edge(1, 2) && !g.has_edge(0, 2));
    }

    #[test]
    fn comments_and_vertex_count() {
        let g = from_edgelist("# a comment\n# n 5\n0 1\n").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.m(), 1);
    }

    #[test]
    fn roundtrip_preserves_isolated_vertices() {
        let mut rng = locbox_core::rng::Rng::new(3);
        for _ in 0..100 {
            let n = rng.next_below(13) as usize;
            let mut g = Graph::empty(n);
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.next_bool(0.3) {
                        g.add_edge(u, v).unwrap();
                    }
                }
            }
            let text = to_edgelist(&g);
            assert_eq!(from_edgelist(&text).unwrap(), g);
        }
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = from_edgelist("0 1\nbogus line\n").unwrap_err();
        assert_eq!(err.line, 2);
        let err = from_edgelist("3 3\n").unwrap_err();
        assert_eq!(err.line, 1);
    }
}
