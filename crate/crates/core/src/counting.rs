//! Exact counts of arborescences, spanning trees and Eulerian tours.
//!
//! The primary routes are determinant based (directed and undirected
//! Matrix-Tree theorems, BEST). Independent routes through characteristic
//! polynomials and brute-force enumeration are provided alongside so the
//! determinant results can be cross-checked.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{DirectedMultigraph, UndirectedMultigraph};
use crate::linalg::{char_poly, det, factorial, minor_det, IntMatrix};

/// Vertex cap of [`brute_force_arb`].
pub const BRUTE_FORCE_MAX_N: usize = 10;
/// Cap on the number of out-edge selections [`brute_force_arb`] may examine.
pub const BRUTE_FORCE_MAX_CHOICES: u64 = 10_000_000;
/// Edge cap of [`brute_force_tours`].
pub const BRUTE_FORCE_MAX_EDGES: u64 = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Quantity {
    ArbRooted,
    Allarb,
    Arb,
    Sp,
    EulerTours,
}

impl Quantity {
    pub fn name(self) -> &'static str {
        match self {
            Quantity::ArbRooted => "arb-rooted",
            Quantity::Allarb => "allarb",
            Quantity::Arb => "arb",
            Quantity::Sp => "sp",
            Quantity::EulerTours => "euler-tours",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Determinant,
    Charpoly,
    BruteForce,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Determinant => "determinant",
            Method::Charpoly => "charpoly",
            Method::BruteForce => "brute-force",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountResult {
    pub quantity: Quantity,
    #[serde(serialize_with = "crate::report::ser_bigint")]
    pub value: BigInt,
    pub method: Method,
}

fn check_vertex(d: &DirectedMultigraph, v: usize) -> Result<()> {
    if v < d.n() {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "root {v} outside 0..{}",
            d.n()
        )))
    }
}

/// Arborescences rooted at `v` (all edges pointing towards `v`).
pub fn arb_rooted(d: &DirectedMultigraph, v: usize) -> Result<BigInt> {
    check_vertex(d, v)?;
    minor_det(&d.laplacian(), v, v)
}

fn rooted_counts(d: &DirectedMultigraph) -> Vec<BigInt> {
    let l = d.laplacian();
    (0..d.n())
        .map(|v| minor_det(&l, v, v).expect("square Laplacian"))
        .collect()
}

/// Arborescences summed over all roots.
pub fn allarb(d: &DirectedMultigraph) -> BigInt {
    rooted_counts(d).into_iter().sum()
}

/// `allarb` read off the characteristic polynomial of the Laplacian: the
/// coefficient of `x` times `(-1)^(n-1)`.
pub fn allarb_via_charpoly(d: &DirectedMultigraph) -> BigInt {
    let p = char_poly(&d.laplacian()).expect("square Laplacian");
    let a1 = p.coeff(1);
    if d.n() % 2 == 1 {
        a1
    } else {
        -a1
    }
}

/// The common rooted arborescence count of a balanced digraph.
///
/// Panics if the rooted counts disagree, which would mean the Laplacian
/// was built wrong.
pub fn arb_eulerian(d: &DirectedMultigraph) -> Result<BigInt> {
    d.ensure_balanced()?;
    let counts = rooted_counts(d);
    assert!(
        counts.windows(2).all(|w| w[0] == w[1]),
        "rooted arborescence counts of a balanced digraph differ: {counts:?}"
    );
    Ok(counts.into_iter().next().expect("n >= 1"))
}

/// Spanning trees of an undirected multigraph.
pub fn spanning_trees(g: &UndirectedMultigraph) -> BigInt {
    let n = g.n();
    minor_det(&g.laplacian(), n - 1, n - 1).expect("square Laplacian")
}

/// Eulerian circuits of a connected balanced digraph, parallel edges
/// distinguishable: `arb(D) * prod_v (d+(v) - 1)!`.
pub fn eulerian_tours(d: &DirectedMultigraph) -> Result<BigInt> {
    d.ensure_balanced()?;
    if !d.is_strongly_connected() {
        return Err(Error::NotStronglyConnected);
    }
    let arb = arb_eulerian(d)?;
    Ok(d
        .out_degrees()
        .iter()
        .fold(arb, |acc, &k| acc * factorial(k.saturating_sub(1))))
}

/// Arborescences rooted at `root` by direct enumeration: every non-root
/// vertex picks one out-edge, and the picks are kept when they lead every
/// vertex to the root without a cycle.
pub fn brute_force_arb(d: &DirectedMultigraph, root: usize) -> Result<BigInt> {
    check_vertex(d, root)?;
    let n = d.n();
    if n > BRUTE_FORCE_MAX_N {
        return Err(Error::CapExceeded {
            what: "vertex count for brute-force arborescences",
            limit: BRUTE_FORCE_MAX_N as u64,
        });
    }
    let mut choices: u64 = 1;
    for v in (0..n).filter(|&v| v != root) {
        choices = choices.saturating_mul(d.out_degree(v));
    }
    if choices > BRUTE_FORCE_MAX_CHOICES {
        return Err(Error::CapExceeded {
            what: "out-edge selections for brute-force arborescences",
            limit: BRUTE_FORCE_MAX_CHOICES,
        });
    }
    let others: Vec<usize> = (0..n).filter(|&v| v != root).collect();
    let mut parent = vec![usize::MAX; n];
    let mut total = BigInt::zero();
    enumerate_parents(d, root, &others, 0, &mut parent, &BigInt::one(), &mut total);
    Ok(total)
}

fn enumerate_parents(
    d: &DirectedMultigraph,
    root: usize,
    others: &[usize],
    idx: usize,
    parent: &mut [usize],
    weight: &BigInt,
    total: &mut BigInt,
) {
    let Some(&v) = others.get(idx) else {
        if reaches_root(parent, root) {
            *total += weight;
        }
        return;
    };
    for w in 0..d.n() {
        let k = d.mult(v, w);
        if k == 0 {
            continue;
        }
        parent[v] = w;
        enumerate_parents(d, root, others, idx + 1, parent, &(weight * k), total);
    }
    parent[v] = usize::MAX;
}

fn reaches_root(parent: &[usize], root: usize) -> bool {
    let n = parent.len();
    (0..n).all(|start| {
        let mut v = start;
        for _ in 0..n {
            if v == root {
                return true;
            }
            v = parent[v];
        }
        v == root
    })
}

/// Eulerian circuits by backtracking over labelled edges, fixing the first
/// edge so that rotations of the same circuit are counted once.
pub fn brute_force_tours(d: &DirectedMultigraph) -> Result<BigInt> {
    let m = d.edge_count();
    if m > BRUTE_FORCE_MAX_EDGES {
        return Err(Error::CapExceeded {
            what: "edge count for brute-force tours",
            limit: BRUTE_FORCE_MAX_EDGES,
        });
    }
    let edges: Vec<(usize, usize)> = d
        .edges()
        .flat_map(|(u, v, k)| std::iter::repeat_n((u, v), k as usize))
        .collect();
    let Some(&(_, first_head)) = edges.first() else {
        return Ok(BigInt::zero());
    };
    let mut used = vec![false; edges.len()];
    used[0] = true;
    let mut count = 0u64;
    walk_tours(&edges, first_head, 1, &mut used, &mut count);
    Ok(BigInt::from(count))
}

fn walk_tours(
    edges: &[(usize, usize)],
    at: usize,
    used_count: usize,
    used: &mut [bool],
    count: &mut u64,
) {
    if used_count == edges.len() {
        if at == edges[0].0 {
            *count += 1;
        }
        return;
    }
    for i in 0..edges.len() {
        if !used[i] && edges[i].0 == at {
            used[i] = true;
            walk_tours(edges, edges[i].1, used_count + 1, used, count);
            used[i] = false;
        }
    }
}

/// Counts `quantity` of `d` by `method`. `root` is required for
/// [`Quantity::ArbRooted`] and ignored otherwise. Spanning trees are counted
/// on the underlying graph.
pub fn count(
    d: &DirectedMultigraph,
    quantity: Quantity,
    root: Option<usize>,
    method: Method,
) -> Result<CountResult> {
    let unsupported = || {
        Error::InvalidParameter(format!(
            "{} is not available for {}",
            method.name(),
            quantity.name()
        ))
    };
    let value = match (quantity, method) {
        (Quantity::ArbRooted, _) => {
            let root = root.ok_or_else(|| {
                Error::InvalidParameter("rooted count needs a root vertex".into())
            })?;
            match method {
                Method::Determinant => arb_rooted(d, root)?,
                Method::BruteForce => brute_force_arb(d, root)?,
                Method::Charpoly => return Err(unsupported()),
            }
        }
        (Quantity::Arb, Method::Determinant) => arb_eulerian(d)?,
        (Quantity::Arb, Method::BruteForce) => {
            d.ensure_balanced()?;
            brute_force_arb(d, 0)?
        }
        (Quantity::Arb, Method::Charpoly) => {
            d.ensure_balanced()?;
            let all = allarb_via_charpoly(d);
            let (q, r) = all.div_rem(&BigInt::from(d.n()));
            debug_assert!(r.is_zero());
            q
        }
        (Quantity::Allarb, Method::Determinant) => allarb(d),
        (Quantity::Allarb, Method::Charpoly) => allarb_via_charpoly(d),
        (Quantity::Allarb, Method::BruteForce) => {
            let mut total = BigInt::zero();
            for v in 0..d.n() {
                total += brute_force_arb(d, v)?;
            }
            total
        }
        (Quantity::Sp, Method::Determinant) => spanning_trees(&d.underlying()),
        (Quantity::EulerTours, Method::Determinant) => eulerian_tours(d)?,
        (Quantity::EulerTours, Method::BruteForce) => {
            d.ensure_balanced()?;
            brute_force_tours(d)?
        }
        _ => return Err(unsupported()),
    };
    Ok(CountResult {
        quantity,
        value,
        method,
    })
}

/// `det(L + alpha J) == n * alpha * allarb(D)`.
pub fn j_perturbation_check(d: &DirectedMultigraph, alpha: u64) -> bool {
    let n = d.n();
    let shifted = d
        .laplacian()
        .add(&IntMatrix::all_ones(n).scale(&BigInt::from(alpha)))
        .expect("same shape");
    let lhs = det(&shifted).expect("square");
    lhs == BigInt::from(n) * alpha * allarb(d)
}

/// `arb(T) = phi_{M(T)}(n) / (n^2 2^(n-1))` for a regular tournament on odd `n`.
pub fn arb_via_skew_charpoly(t: &DirectedMultigraph) -> Result<BigInt> {
    t.ensure_tournament()?;
    let n = t.n();
    let d = (n as u64).saturating_sub(1) / 2;
    if n % 2 == 0 || t.out_degrees().iter().any(|&k| k != d) {
        return Err(Error::NotRegularTournament);
    }
    let phi = char_poly(&t.skew_adjacency()?)?;
    let value = phi.eval_int(&BigInt::from(n));
    let denom = BigInt::from(n * n) << (n - 1);
    let (q, r) = value.div_rem(&denom);
    assert!(
        r.is_zero(),
        "skew characteristic polynomial value {value} not divisible by {denom}"
    );
    Ok(q)
}
