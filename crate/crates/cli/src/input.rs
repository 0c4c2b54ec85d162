//! Reading graphs from files, stdin, or `family:params` specs.

use std::io::Read;
use std::path::Path;

use arborist::construct::{complete_bipartite, complete_graph, cycle_graph, double, path_graph};
use arborist::format::parse;
use arborist::{DirectedMultigraph, GraphFile, UndirectedMultigraph};

use crate::Failure;

/// Reads edge-list text from `path`, or stdin when `path` is absent or `-`.
pub fn read_text(path: Option<&Path>) -> Result<String, Failure> {
    match path {
        Some(p) if p != Path::new("-") => std::fs::read_to_string(p)
            .map_err(|e| Failure::Input(format!("cannot read {}: {e}", p.display()))),
        _ => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::Input(format!("cannot read stdin: {e}")))?;
            Ok(s)
        }
    }
}

pub fn read_graph(path: Option<&Path>) -> Result<GraphFile, Failure> {
    Ok(parse(&read_text(path)?)?)
}

/// Undirected graphs are read as their symmetric digraph.
pub fn read_digraph(path: Option<&Path>) -> Result<DirectedMultigraph, Failure> {
    Ok(match read_graph(path)? {
        GraphFile::Directed(d) => d,
        GraphFile::Undirected(g) => g.as_symmetric_digraph(),
    })
}

/// Directed input is read as its underlying graph.
pub fn read_undirected(path: Option<&Path>) -> Result<UndirectedMultigraph, Failure> {
    Ok(match read_graph(path)? {
        GraphFile::Directed(d) => d.underlying(),
        GraphFile::Undirected(g) => g,
    })
}

pub fn numbers(params: &str) -> Result<Vec<usize>, Failure> {
    params
        .split(',')
        .map(|p| {
            p.trim()
                .parse()
                .map_err(|_| Failure::Input(format!("bad numeric parameter {p:?}")))
        })
        .collect()
}

fn arity<const K: usize>(family: &str, params: &str) -> Result<[usize; K], Failure> {
    numbers(params)?
        .try_into()
        .map_err(|_| Failure::Input(format!("{family} takes {K} parameter(s)")))
}

/// Resolves `complete:N`, `complete-bipartite:N,M`, `cycle:N`, `path:N` and
/// `double-complete:N`; anything else is read as a graph file.
pub fn graph_spec(spec: &str) -> Result<(String, UndirectedMultigraph), Failure> {
    let Some((family, params)) = spec.split_once(':') else {
        return Ok((spec.to_string(), read_undirected(Some(Path::new(spec)))?));
    };
    let g = match family {
        "complete" => complete_graph(arity::<1>(family, params)?[0])?,
        "complete-bipartite" => {
            let [n, m] = arity::<2>(family, params)?;
            complete_bipartite(n, m)?
        }
        "cycle" => cycle_graph(arity::<1>(family, params)?[0])?,
        "path" => path_graph(arity::<1>(family, params)?[0])?,
        "double-complete" => double(&complete_graph(arity::<1>(family, params)?[0])?),
        _ => return Err(Failure::Input(format!("unknown graph family {family:?}"))),
    };
    Ok((spec.to_string(), g))
}
