//! Plain-text graph files and matrix dumps.
//!
//! A graph file is `n m` on the first line followed by `m` lines `u v` with
//! `u < v`, 0-indexed, in lexicographic order. Nothing else is allowed: no
//! comments, no blank lines between edges.

use std::io::{self, BufRead, Write};

use hamspan_core::{Graph, GraphError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("header declares {declared} edges but {found} were given")]
    EdgeCount { declared: usize, found: usize },
    #[error("line {line}: edge ({u}, {v}) is out of order")]
    Unsorted { line: usize, u: usize, v: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax { line, message: message.into() }
}

fn pair(text: &str, line: usize) -> Result<(usize, usize), FormatError> {
    let mut fields = text.split_ascii_whitespace();
    let mut next = |what: &str| -> Result<usize, FormatError> {
        let field = fields.next().ok_or_else(|| syntax(line, format!("missing {what}")))?;
        field.parse().map_err(|_| syntax(line, format!("`{field}` is not a non-negative integer")))
    };
    let a = next("first field")?;
    let b = next("second field")?;
    if fields.next().is_some() {
        return Err(syntax(line, "expected exactly two fields"));
    }
    Ok((a, b))
}

/// Parses the graph file format.
pub fn read_graph(input: impl BufRead) -> Result<Graph, FormatError> {
    let mut lines = input.lines();
    let header = lines.next().transpose()?.ok_or_else(|| syntax(1, "empty input"))?;
    let (n, m) = pair(&header, 1)?;
    let mut edges = Vec::with_capacity(m);
    for (i, text) in lines.enumerate() {
        let text = text?;
        let line = i + 2;
        if text.trim().is_empty() && edges.len() == m {
            // Tolerate a trailing empty line.
            continue;
        }
        let (u, v) = pair(&text, line)?;
        if u >= v {
            return Err(syntax(line, format!("edge ({u}, {v}) must satisfy u < v")));
        }
        if edges.last().is_some_and(|&last| last >= (u, v)) {
            return Err(FormatError::Unsorted { line, u, v });
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(FormatError::EdgeCount { declared: m, found: edges.len() });
    }
    Ok(Graph::new(n, edges)?)
}

pub fn parse_graph(text: &str) -> Result<Graph, FormatError> {
    read_graph(text.as_bytes())
}

pub fn write_graph(g: &Graph, mut out: impl Write) -> io::Result<()> {
    writeln!(out, "{} {}", g.n(), g.m())?;
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}")?;
    }
    out.flush()
}

pub fn graph_to_string(g: &Graph) -> String {
    let mut buf = Vec::new();
    write_graph(g, &mut buf).expect("writing to memory");
    String::from_utf8(buf).expect("ASCII output")
}

/// Writes a 0/1 matrix whose rows are labelled by edges: `u,v` followed by
/// one space-separated entry per column.
pub fn write_matrix(edges: &[(usize, usize)], rows: &[Vec<u8>], mut out: impl Write) -> io::Result<()> {
    for ((u, v), row) in edges.iter().zip(rows) {
        write!(out, "{u},{v}")?;
        for bit in row {
            write!(out, " {bit}")?;
        }
        writeln!(out)?;
    }
    out.flush()
}

pub type EdgeMatrix = (Vec<(usize, usize)>, Vec<Vec<u8>>);

/// Parses [`write_matrix`] output back into labels and rows.
pub fn read_matrix(input: impl BufRead) -> Result<EdgeMatrix, FormatError> {
    let mut edges = Vec::new();
    let mut rows = Vec::new();
    for (i, text) in input.lines().enumerate() {
        let text = text?;
        let line = i + 1;
        if text.trim().is_empty() {
            continue;
        }
        let mut fields = text.split_ascii_whitespace();
        let label = fields.next().expect("non-empty line");
        let (u, v) = label
            .split_once(',')
            .and_then(|(u, v)| Some((u.parse().ok()?, v.parse().ok()?)))
            .ok_or_else(|| syntax(line, format!("bad row label `{label}`")))?;
        let row = fields
            .map(|f| match f {
                "0" => Ok(0),
                "1" => Ok(1),
                other => Err(syntax(line, format!("entry `{other}` is not 0 or 1"))),
            })
            .collect::<Result<Vec<u8>, _>>()?;
        edges.push((u, v));
        rows.push(row);
    }
    Ok((edges, rows))
}
