//! Line-oriented input formats.
//!
//! Plumbing graph files: `# comment`, `v <name> <selfint>`, `e <a> <b>`.
//! Splice diagram files: `n <name>`, `l <name>`, `e <a> <b> <wa> <wb>`
//! where a weight is a positive integer at a node end and `-` at a leaf
//! end. The two formats are auto-detected by the first directive.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::graph::PlumbingGraph;
use crate::splice::SpliceDiagram;

#[derive(Debug, Clone)]
pub enum Input {
    Graph(PlumbingGraph),
    Splice(SpliceDiagram),
}

fn valid_name(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn parse_int(line: usize, s: &str, what: &str) -> Result<BigInt> {
    s.parse()
        .map_err(|_| Error::parse(line, format!("invalid {what} `{s}`")))
}

fn tokens(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            return None;
        }
        Some((i + 1, line.split_whitespace().collect()))
    })
}

pub fn parse_graph(text: &str) -> Result<PlumbingGraph> {
    let mut g = PlumbingGraph::new();
    let mut any = false;
    for (lineno, toks) in tokens(text) {
        any = true;
        match toks[0] {
            "v" => {
                if toks.len() != 3 {
                    return Err(Error::parse(lineno, "expected 2 arguments"));
                }
                if !valid_name(toks[1]) {
                    return Err(Error::parse(lineno, format!("invalid name `{}`", toks[1])));
                }
                let si = parse_int(lineno, toks[2], "self-intersection")?;
                g.add_vertex(toks[1], si)
                    .map_err(|e| Error::parse(lineno, e.to_string()))?;
            }
            "e" => {
                if toks.len() != 3 {
                    return Err(Error::parse(lineno, "expected 2 arguments"));
                }
                g.add_edge(toks[1], toks[2])
                    .map_err(|e| Error::parse(lineno, e.to_string()))?;
            }
            other => {
                return Err(Error::parse(
                    lineno,
                    format!("unknown graph directive `{other}`"),
                ))
            }
        }
    }
    if !any {
        return Err(Error::parse(1, "empty graph file"));
    }
    Ok(g)
}

pub fn parse_splice(text: &str) -> Result<SpliceDiagram> {
    let mut vertices = Vec::new();
    let mut kinds = Vec::new();
    let mut edges = Vec::new();
    for (lineno, toks) in tokens(text) {
        match toks[0] {
            "n" | "l" => {
                if toks.len() != 2 {
                    return Err(Error::parse(lineno, "expected 1 argument"));
                }
                if !valid_name(toks[1]) {
                    return Err(Error::parse(lineno, format!("invalid name `{}`", toks[1])));
                }
                vertices.push(toks[1].to_string());
                kinds.push((toks[0] == "n", lineno));
            }
            "e" => {
                if toks.len() != 5 {
                    return Err(Error::parse(lineno, "expected 4 arguments"));
                }
                let parse_weight = |s: &str| -> Result<Option<BigInt>> {
                    if s == "-" {
                        return Ok(None);
                    }
                    let w = parse_int(lineno, s, "edge weight")?;
                    if w < BigInt::from(1) {
                        return Err(Error::parse(lineno, format!("edge weight {w} must be >= 1")));
                    }
                    Ok(Some(w))
                };
                edges.push((
                    toks[1].to_string(),
                    toks[2].to_string(),
                    parse_weight(toks[3])?,
                    parse_weight(toks[4])?,
                ));
            }
            other => {
                return Err(Error::parse(
                    lineno,
                    format!("unknown splice directive `{other}`"),
                ))
            }
        }
    }
    if vertices.is_empty() {
        return Err(Error::parse(1, "empty splice file"));
    }
    let d = SpliceDiagram::build(vertices.clone(), edges)?;
    // declared kinds must match valencies
    for (name, &(is_node, lineno)) in vertices.iter().zip(&kinds) {
        let v = d.vertex_id(name)?;
        if is_node != d.is_node(v) {
            return Err(Error::parse(
                lineno,
                format!(
                    "`{name}` declared as {} but has valency {}",
                    if is_node { "node" } else { "leaf" },
                    d.valency(v)
                ),
            ));
        }
    }
    Ok(d)
}

/// Auto-detect the format from the first directive: `v`/`e` files are
/// plumbing graphs, `n`/`l` files are splice diagrams. Directives of the
/// other format later in the file are reported with their line number.
pub fn parse_input(text: &str) -> Result<Input> {
    for (lineno, toks) in tokens(text) {
        return match toks[0] {
            "v" => parse_graph(text).map(Input::Graph),
            "n" | "l" => parse_splice(text).map(Input::Splice),
            "e" => Err(Error::parse(
                lineno,
                "file must declare a vertex before any edge",
            )),
            other => Err(Error::parse(lineno, format!("unknown directive `{other}`"))),
        };
    }
    Err(Error::parse(1, "empty input file"))
}
