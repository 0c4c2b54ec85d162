//! Brute-force isomorphism test for small digraphs.
//!
//! Vertices are mapped one at a time; a candidate image must carry the same
//! (out-degree, in-degree) pair and agree on every multiplicity with the
//! vertices mapped so far.

use crate::error::{Error, Result};
use crate::graph::{DirectedMultigraph, UndirectedMultigraph};

/// Largest vertex count accepted by the isomorphism search.
pub const ISO_CAP: usize = 10;

pub fn digraphs_isomorphic(a: &DirectedMultigraph, b: &DirectedMultigraph) -> Result<bool> {
    Ok(find_isomorphism(a, b)?.is_some())
}

pub fn graphs_isomorphic(a: &UndirectedMultigraph, b: &UndirectedMultigraph) -> Result<bool> {
    digraphs_isomorphic(&a.as_symmetric_digraph(), &b.as_symmetric_digraph())
}

/// A bijection `f` with `a.mult(u, v) == b.mult(f[u], f[v])` for all `u, v`.
pub fn find_isomorphism(
    a: &DirectedMultigraph,
    b: &DirectedMultigraph,
) -> Result<Option<Vec<usize>>> {
    let n = a.n();
    if n > ISO_CAP || b.n() > ISO_CAP {
        return Err(Error::CapExceeded {
            what: "vertex count for isomorphism search",
            limit: ISO_CAP as u64,
        });
    }
    if n != b.n() || a.edge_count() != b.edge_count() {
        return Ok(None);
    }
    let sig_a = signatures(a);
    let sig_b = signatures(b);
    let (mut sa, mut sb) = (sig_a.clone(), sig_b.clone());
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return Ok(None);
    }

    // Map rare signatures first to cut the tree early.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| sig_a.iter().filter(|&&s| s == sig_a[v]).count());

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let found = extend(a, b, &sig_a, &sig_b, &order, 0, &mut map, &mut used);
    Ok(found.then_some(map))
}

fn signatures(d: &DirectedMultigraph) -> Vec<(u64, u64)> {
    (0..d.n()).map(|v| (d.out_degree(v), d.in_degree(v))).collect()
}

#[allow(clippy::too_many_arguments)]
fn extend(
    a: &DirectedMultigraph,
    b: &DirectedMultigraph,
    sig_a: &[(u64, u64)],
    sig_b: &[(u64, u64)],
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    for image in 0..b.n() {
        if used[image] || sig_b[image] != sig_a[v] {
            continue;
        }
        let consistent = order[..depth].iter().all(|&u| {
            let fu = map[u];
            a.mult(u, v) == b.mult(fu, image) && a.mult(v, u) == b.mult(image, fu)
        });
        if !consistent {
            continue;
        }
        map[v] = image;
        used[image] = true;
        if extend(a, b, sig_a, sig_b, order, depth + 1, map, used) {
            return true;
        }
        used[image] = false;
        map[v] = usize::MAX;
    }
    false
}
