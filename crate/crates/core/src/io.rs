//! The `p sgc` graph text format.
//!
//! ```text
//! c optional comment lines
//! p sgc <n> <m>
//! e <u> <v>        (m lines, 0-based vertices)
//! ```
//!
//! Repeated `e` lines create parallel edges. The writer emits edges in id
//! order, so reading back a written graph preserves edge ids.

use std::fmt::Write as _;
use std::io::BufRead;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn parse_graph(text: &str) -> Result<Graph> {
    read_graph(text.as_bytes())
}

pub fn read_graph<R: BufRead>(reader: R) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = idx + 1;
        let mut tokens = line.split_whitespace();
        let Some(tag) = tokens.next() else {
            continue;
        };
        match tag {
            "c" => continue,
            "p" => {
                if header.is_some() {
                    return Err(Error::parse(lineno, "duplicate header"));
                }
                if tokens.next() != Some("sgc") {
                    return Err(Error::parse(lineno, "expected `p sgc <n> <m>`"));
                }
                let n = number(tokens.next(), lineno, "vertex count")?;
                let m = number(tokens.next(), lineno, "edge count")?;
                trailing(tokens.next(), lineno)?;
                header = Some((n, m));
            }
            "e" => {
                let Some((n, _)) = header else {
                    return Err(Error::parse(lineno, "edge before header"));
                };
                let u = number(tokens.next(), lineno, "endpoint")?;
                let v = number(tokens.next(), lineno, "endpoint")?;
                trailing(tokens.next(), lineno)?;
                if u >= n || v >= n {
                    return Err(Error::parse(
                        lineno,
                        format!("edge ({u},{v}) out of range for n = {n}"),
                    ));
                }
                if u == v {
                    return Err(Error::parse(lineno, format!("loop at vertex {u}")));
                }
                edges.push((u, v));
            }
            other => {
                return Err(Error::parse(lineno, format!("unknown line tag `{other}`")));
            }
        }
    }
    let (n, m) = header.ok_or_else(|| Error::parse(0, "missing `p sgc` header"))?;
    if edges.len() != m {
        return Err(Error::parse(
            0,
            format!("header declares {m} edges, found {}", edges.len()),
        ));
    }
    Graph::new(n, edges)
}

fn number(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| Error::parse(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| Error::parse(line, format!("invalid {what} `{tok}`")))
}

fn trailing(tok: Option<&str>, line: usize) -> Result<()> {
    match tok {
        None => Ok(()),
        Some(t) => Err(Error::parse(line, format!("unexpected token `{t}`"))),
    }
}

pub fn read_graph_file<P: AsRef<Path>>(path: P) -> Result<Graph> {
    let file = std::fs::File::open(path)?;
    read_graph(std::io::BufReader::new(file))
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "p sgc {} {}", g.vertex_count(), g.edge_count()).unwrap();
    for &(u, v) in g.edges() {
        writeln!(out, "e {u} {v}").unwrap();
    }
    out
}

pub fn write_graph_file<P: AsRef<Path>>(g: &Graph, path: P) -> Result<()> {
    std::fs::write(path, write_graph(g))?;
    Ok(())
}
