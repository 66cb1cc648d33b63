use super::Graph;
use crate::error::{Error, Result};

/// Parses `# comment` lines, an `n <count>` header and `u v` edge lines.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |message: String| Error::EdgeListParse { line: line_no, message };
        let fields: Vec<&str> = line.split_whitespace().collect();
        match n {
            None => {
                if fields.len() != 2 || fields[0] != "n" {
                    return Err(err(format!("expected `n <vertex_count>`, found `{line}`")));
                }
                let count = fields[1]
                    .parse()
                    .map_err(|_| err(format!("bad vertex count `{}`", fields[1])))?;
                n = Some(count);
            }
            Some(count) => {
                if fields.len() != 2 {
                    return Err(err(format!("expected `u v`, found `{line}`")));
                }
                let mut ends = [0usize; 2];
                for (slot, f) in ends.iter_mut().zip(&fields) {
                    *slot = f.parse().map_err(|_| err(format!("bad vertex `{f}`")))?;
                }
                let [u, v] = ends;
                if u >= count || v >= count {
                    return Err(err(format!(
                        "vertex {} out of range for {count} vertices",
                        u.max(v)
                    )));
                }
                if u == v {
                    return Err(err(format!("self-loop at vertex {u}")));
                }
                edges.push((u, v));
            }
        }
    }
    let n = n.ok_or(Error::EdgeListParse {
        line: text.lines().count().max(1),
        message: "missing `n <vertex_count>` header".to_string(),
    })?;
    Graph::new(n, &edges)
}

/// Renders a graph in the edge-list format, optionally with a comment line.
pub fn write_edge_list(g: &Graph, comment: Option<&str>) -> String {
    let mut out = String::new();
    if let Some(c) = comment {
        out.push_str(&format!("# {c}\n"));
    }
    out.push_str(&format!("n {}\n", g.vertex_count()));
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments() {
        let g = parse_edge_list("# triangle\n\nn 3\n0 1\n1 2\n# tail\n2 0\n").unwrap();
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn reports_line_numbers() {
        let e = parse_edge_list("n 3\n0 1\n1 x\n").unwrap_err();
        assert!(matches!(e, Error::EdgeListParse { line: 3, .. }));
        let e = parse_edge_list("# c\n3\n").unwrap_err();
        assert!(matches!(e, Error::EdgeListParse { line: 2, .. }));
        let e = parse_edge_list("n 2\n0 1 1\n").unwrap_err();
        assert!(matches!(e, Error::EdgeListParse { line: 2, .. }));
        let e = parse_edge_list("n 2\n0 2\n").unwrap_err();
        assert!(matches!(e, Error::EdgeListParse { line: 2, .. }));
        let e = parse_edge_list("n 2\n1 1\n").unwrap_err();
        assert!(matches!(e, Error::EdgeListParse { line: 2, .. }));
        assert!(parse_edge_list("# only\n").is_err());
    }

    #[test]
    fn round_trip() {
        let g = Graph::new(5, &[(0, 1), (3, 4), (1, 3)]).unwrap();
        assert_eq!(parse_edge_list(&write_edge_list(&g, Some("x"))).unwrap(), g);
    }
}
