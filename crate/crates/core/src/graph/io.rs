//! Plain edge-list text: a first line holding `n`, then one `u v` pair per
//! line. Blank lines and lines starting with `#` are ignored.

use std::fmt::Write as _;
use std::path::Path;

use super::{Graph, GraphError};

fn line_error(line: usize, message: impl Into<String>) -> GraphError {
    GraphError::EdgeList { line, message: message.into() }
}

pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut lines =
        text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or_else(|| line_error(1, "missing order header"))?;
    let n: usize = header.parse().map_err(|_| line_error(header_line, format!("invalid order {header:?}")))?;

    let mut edges = Vec::new();
    for (line, content) in lines {
        let mut fields = content.split_whitespace();
        let mut endpoint = || -> Result<usize, GraphError> {
            let field = fields.next().ok_or_else(|| line_error(line, "expected two endpoints"))?;
            field.parse().map_err(|_| line_error(line, format!("invalid vertex {field:?}")))
        };
        let (u, v) = (endpoint()?, endpoint()?);
        if fields.next().is_some() {
            return Err(line_error(line, "expected exactly two endpoints"));
        }
        edges.push((u, v));
    }
    Graph::from_edge_list(n, &edges)
}

pub fn read_edge_list_file(path: impl AsRef<Path>) -> Result<Graph, std::io::Error> {
    let text = std::fs::read_to_string(path)?;
    parse_edge_list(&text).map_err(|e| std::io::Error::new(std::io::ErrorKind::InvalidData, e))
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.order());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").expect("writing to a String cannot fail");
    }
    out
}
