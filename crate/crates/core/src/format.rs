//! Plain-text edge-list format and DOT export.
//!
//! ```text
//! # comment
//! digraph 3
//! 0 1
//! 1 2 2
//! ```
//!
//! The header is `digraph <n>` or `graph <n>`. Body lines are `u v [mult]`
//! with 0-indexed vertices and `mult >= 1` (default 1). Repeated digraph
//! lines accumulate; a `graph` file lists each unordered pair at most once.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{DirectedMultigraph, UndirectedMultigraph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphFile {
    Directed(DirectedMultigraph),
    Undirected(UndirectedMultigraph),
}

impl GraphFile {
    pub fn n(&self) -> usize {
        match self {
            GraphFile::Directed(d) => d.n(),
            GraphFile::Undirected(g) => g.n(),
        }
    }

    pub fn to_text(&self) -> String {
        match self {
            GraphFile::Directed(d) => write_digraph(d),
            GraphFile::Undirected(g) => write_graph(g),
        }
    }

    pub fn to_dot(&self) -> String {
        match self {
            GraphFile::Directed(d) => digraph_to_dot(d),
            GraphFile::Undirected(g) => graph_to_dot(g),
        }
    }
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn number<T: std::str::FromStr>(tok: &str, line: usize, what: &str) -> Result<T> {
    tok.parse()
        .map_err(|_| parse_err(line, format!("{what} {tok:?} is not a non-negative integer")))
}

pub fn parse(text: &str) -> Result<GraphFile> {
    let mut body = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = body.next().ok_or_else(|| parse_err(0, "missing header"))?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    let (directed, n) = match toks.as_slice() {
        ["digraph", n] => (true, number::<usize>(n, hline, "vertex count")?),
        ["graph", n] => (false, number::<usize>(n, hline, "vertex count")?),
        _ => return Err(parse_err(hline, "header must be `digraph <n>` or `graph <n>`")),
    };
    if n == 0 {
        return Err(parse_err(hline, "vertex count must be positive"));
    }

    let mut d = DirectedMultigraph::new(n)?;
    let mut g = UndirectedMultigraph::new(n)?;
    for (line, l) in body {
        let toks: Vec<&str> = l.split_whitespace().collect();
        let (u, v, k) = match toks.as_slice() {
            [u, v] => (number(u, line, "vertex")?, number(v, line, "vertex")?, 1u64),
            [u, v, k] => (
                number(u, line, "vertex")?,
                number(v, line, "vertex")?,
                number(k, line, "multiplicity")?,
            ),
            _ => return Err(parse_err(line, "expected `u v [mult]`")),
        };
        if k == 0 {
            return Err(parse_err(line, "multiplicity must be at least 1"));
        }
        let res = if directed {
            d.add_edges(u, v, k)
        } else if u < n && v < n && g.mult(u, v) > 0 {
            return Err(parse_err(line, format!("pair {{{u}, {v}}} listed twice")));
        } else {
            g.add_edges(u, v, k)
        };
        res.map_err(|e| parse_err(line, e.to_string()))?;
    }
    Ok(if directed {
        GraphFile::Directed(d)
    } else {
        GraphFile::Undirected(g)
    })
}

fn edge_line(out: &mut String, u: usize, v: usize, k: u64) {
    if k == 1 {
        let _ = writeln!(out, "{u} {v}");
    } else {
        let _ = writeln!(out, "{u} {v} {k}");
    }
}

pub fn write_digraph(d: &DirectedMultigraph) -> String {
    let mut out = format!("digraph {}\n", d.n());
    for (u, v, k) in d.edges() {
        edge_line(&mut out, u, v, k);
    }
    out
}

pub fn write_graph(g: &UndirectedMultigraph) -> String {
    let mut out = format!("graph {}\n", g.n());
    for (u, v, k) in g.pairs() {
        edge_line(&mut out, u, v, k);
    }
    out
}

/// One DOT edge per parallel edge.
pub fn digraph_to_dot(d: &DirectedMultigraph) -> String {
    let mut out = String::from("digraph G {\n");
    for v in 0..d.n() {
        let _ = writeln!(out, "  {v};");
    }
    for (u, v, k) in d.edges() {
        for _ in 0..k {
            let _ = writeln!(out, "  {u} -> {v};");
        }
    }
    out.push_str("}\n");
    out
}

pub fn graph_to_dot(g: &UndirectedMultigraph) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.n() {
        let _ = writeln!(out, "  {v};");
    }
    for (u, v, k) in g.pairs() {
        for _ in 0..k {
            let _ = writeln!(out, "  {u} -- {v};");
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{complete_bipartite, paley, random_digraph, swirl};

    #[test]
    fn parses_comments_and_defaults() {
        let f = parse("# tri\n\ndigraph 3\n0 1\n1 2 2\n# x\n1 2\n2 0\n").unwrap();
        let GraphFile::Directed(d) = f else { panic!() };
        assert_eq!(d.mult(0, 1), 1);
        assert_eq!(d.mult(1, 2), 3);
        assert_eq!(d.mult(2, 0), 1);
    }

    #[test]
    fn rejects_bad_input() {
        for bad in [
            "",
            "digraph",
            "digraph 0",
            "tree 3",
            "digraph 3\n0 0",
            "digraph 3\n0 3",
            "digraph 3\n0 1 0",
            "digraph 3\n0 x",
            "digraph 3\n0 1 2 3",
            "graph 3\n0 1\n1 0",
        ] {
            assert!(matches!(parse(bad), Err(Error::Parse { .. })), "{bad:?}");
        }
    }

    #[test]
    fn error_reports_line() {
        let Err(Error::Parse { line, .. }) = parse("digraph 2\n\n0 1\n1 5\n") else {
            panic!()
        };
        assert_eq!(line, 4);
    }

    #[test]
    fn round_trips() {
        for d in [swirl(7).unwrap(), paley(11).unwrap(), random_digraph(6, 3, 9).unwrap()] {
            let f = GraphFile::Directed(d);
            assert_eq!(parse(&f.to_text()).unwrap(), f);
        }
        let g = GraphFile::Undirected(complete_bipartite(2, 3).unwrap());
        assert_eq!(parse(&g.to_text()).unwrap(), g);
    }

    #[test]
    fn dot_has_one_line_per_edge() {
        let dot = digraph_to_dot(&swirl(7).unwrap());
        assert_eq!(dot.matches("->").count(), 21);
        assert!(dot.starts_with("digraph G {"));
    }
}
