//! Dense directed and undirected multigraphs and the matrices attached to
//! them.
//!
//! Vertices are `0..n`. Both types store a full `n x n` multiplicity matrix;
//! the instances this crate works with are complete or complete bipartite
//! graphs and their multiples, so a dense layout is the natural one.

use std::collections::VecDeque;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;

/// Directed multigraph without loops. `mult(u, v)` counts edges `u -> v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DirectedMultigraph {
    n: usize,
    mult: Vec<u64>,
}

/// Undirected multigraph without loops, stored as a symmetric matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UndirectedMultigraph {
    n: usize,
    mult: Vec<u64>,
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::InvalidGraph("graph needs at least one vertex".into()))
    } else {
        Ok(())
    }
}

fn check_pair(n: usize, u: usize, v: usize) -> Result<()> {
    if u >= n || v >= n {
        return Err(Error::InvalidGraph(format!(
            "edge ({u}, {v}) references a vertex outside 0..{n}"
        )));
    }
    if u == v {
        return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
    }
    Ok(())
}

impl DirectedMultigraph {
    /// Edgeless digraph on `n` vertices.
    pub fn new(n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(DirectedMultigraph {
            n,
            mult: vec![0; n * n],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut d = Self::new(n)?;
        for &(u, v) in edges {
            d.add_edges(u, v, 1)?;
        }
        Ok(d)
    }

    pub fn from_matrix(rows: &[Vec<u64>]) -> Result<Self> {
        let n = rows.len();
        let mut d = Self::new(n)?;
        for (u, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidGraph("multiplicity matrix is not square".into()));
            }
            for (v, &k) in row.iter().enumerate() {
                if k > 0 {
                    d.add_edges(u, v, k)?;
                }
            }
        }
        Ok(d)
    }

    /// Adds `k` parallel edges `u -> v`.
    pub fn add_edges(&mut self, u: usize, v: usize, k: u64) -> Result<()> {
        check_pair(self.n, u, v)?;
        self.mult[u * self.n + v] += k;
        Ok(())
    }

    pub(crate) fn set_mult(&mut self, u: usize, v: usize, k: u64) {
        debug_assert!(u != v);
        self.mult[u * self.n + v] = k;
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn mult(&self, u: usize, v: usize) -> u64 {
        self.mult[u * self.n + v]
    }

    pub fn out_degree(&self, v: usize) -> u64 {
        self.mult[v * self.n..(v + 1) * self.n].iter().sum()
    }

    pub fn in_degree(&self, v: usize) -> u64 {
        (0..self.n).map(|w| self.mult(w, v)).sum()
    }

    pub fn out_degrees(&self) -> Vec<u64> {
        (0..self.n).map(|v| self.out_degree(v)).collect()
    }

    pub fn in_degrees(&self) -> Vec<u64> {
        (0..self.n).map(|v| self.in_degree(v)).collect()
    }

    pub fn edge_count(&self) -> u64 {
        self.mult.iter().sum()
    }

    /// Edges as `(u, v, multiplicity)` triples with positive multiplicity,
    /// in row-major order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        (0..self.n).flat_map(move |u| {
            (0..self.n).filter_map(move |v| {
                let k = self.mult(u, v);
                (k > 0).then_some((u, v, k))
            })
        })
    }

    /// Out-neighbours of `v` (each listed once regardless of multiplicity).
    pub fn out_neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&w| self.mult(v, w) > 0)
    }

    pub fn is_balanced(&self) -> bool {
        (0..self.n).all(|v| self.out_degree(v) == self.in_degree(v))
    }

    pub(crate) fn ensure_balanced(&self) -> Result<()> {
        match (0..self.n).find(|&v| self.out_degree(v) != self.in_degree(v)) {
            Some(v) => Err(Error::Unbalanced(v)),
            None => Ok(()),
        }
    }

    /// Strong connectivity over edges with positive multiplicity.
    pub fn is_strongly_connected(&self) -> bool {
        let forward = self.reachable_from(0, false);
        let backward = self.reachable_from(0, true);
        forward.iter().all(|&b| b) && backward.iter().all(|&b| b)
    }

    fn reachable_from(&self, start: usize, reversed: bool) -> Vec<bool> {
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        while let Some(u) = queue.pop_front() {
            for w in 0..self.n {
                let k = if reversed { self.mult(w, u) } else { self.mult(u, w) };
                if k > 0 && !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen
    }

    /// Exactly one edge between every pair of distinct vertices.
    pub fn is_tournament(&self) -> bool {
        (0..self.n).all(|u| (u + 1..self.n).all(|v| self.mult(u, v) + self.mult(v, u) == 1))
    }

    pub(crate) fn ensure_tournament(&self) -> Result<()> {
        if self.is_tournament() {
            Ok(())
        } else {
            Err(Error::NotTournament)
        }
    }

    /// At most one edge (in either direction) between any two vertices.
    pub fn is_simple(&self) -> bool {
        self.first_non_simple_pair().is_none()
    }

    fn first_non_simple_pair(&self) -> Option<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| (u + 1..self.n).map(move |v| (u, v)))
            .find(|&(u, v)| self.mult(u, v) + self.mult(v, u) > 1)
    }

    pub(crate) fn ensure_simple(&self) -> Result<()> {
        match self.first_non_simple_pair() {
            Some((u, v)) => Err(Error::NotSimple(u, v)),
            None => Ok(()),
        }
    }

    pub fn adjacency(&self) -> IntMatrix {
        IntMatrix::from_fn(self.n, self.n, |u, v| self.mult(u, v))
    }

    /// `diag(out-degrees) - A`; every row sums to zero.
    pub fn laplacian(&self) -> IntMatrix {
        let out = self.out_degrees();
        IntMatrix::from_fn(self.n, self.n, |u, v| {
            if u == v {
                BigInt::from(out[u])
            } else {
                -BigInt::from(self.mult(u, v))
            }
        })
    }

    /// `A - A^T`, defined when the underlying graph is simple.
    pub fn skew_adjacency(&self) -> Result<IntMatrix> {
        self.ensure_simple()?;
        Ok(IntMatrix::from_fn(self.n, self.n, |u, v| {
            self.mult(u, v) as i64 - self.mult(v, u) as i64
        }))
    }

    /// Subdigraph induced by `vertices`; vertex `i` of the result is
    /// `vertices[i]`.
    pub fn induced(&self, vertices: &[usize]) -> Result<Self> {
        let mut seen = vec![false; self.n];
        for &v in vertices {
            if v >= self.n || std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidParameter(format!(
                    "vertex subset must list distinct vertices below {}",
                    self.n
                )));
            }
        }
        let mut d = Self::new(vertices.len())?;
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate() {
                if i != j {
                    d.set_mult(i, j, self.mult(u, v));
                }
            }
        }
        Ok(d)
    }

    /// Digraph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        check_permutation(perm, self.n)?;
        let mut d = Self::new(self.n)?;
        for (u, v, k) in self.edges() {
            d.set_mult(perm[u], perm[v], k);
        }
        Ok(d)
    }

    /// Every edge reversed.
    pub fn reverse(&self) -> Self {
        let mut d = self.clone();
        for u in 0..self.n {
            for v in 0..self.n {
                d.mult[u * self.n + v] = self.mult(v, u);
            }
        }
        d
    }

    /// The undirected multigraph obtained by forgetting directions.
    pub fn underlying(&self) -> UndirectedMultigraph {
        let mut g = UndirectedMultigraph::new(self.n).expect("n >= 1");
        for (u, v, k) in self.edges() {
            g.add_edges(u, v, k).expect("valid pair");
        }
        g
    }

    /// Whether this digraph orients `g`: for every pair the two directed
    /// multiplicities add up to the undirected one.
    pub fn is_orientation_of(&self, g: &UndirectedMultigraph) -> bool {
        self.n == g.n()
            && (0..self.n).all(|u| {
                (u + 1..self.n).all(|v| self.mult(u, v) + self.mult(v, u) == g.mult(u, v))
            })
    }
}

pub(crate) fn check_permutation(perm: &[usize], n: usize) -> Result<()> {
    let mut seen = vec![false; n];
    if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
        return Err(Error::InvalidParameter(format!(
            "not a permutation of 0..{n}"
        )));
    }
    Ok(())
}

impl UndirectedMultigraph {
    pub fn new(n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(UndirectedMultigraph {
            n,
            mult: vec![0; n * n],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::new(n)?;
        for &(u, v) in edges {
            g.add_edges(u, v, 1)?;
        }
        Ok(g)
    }

    pub fn add_edges(&mut self, u: usize, v: usize, k: u64) -> Result<()> {
        check_pair(self.n, u, v)?;
        self.mult[u * self.n + v] += k;
        self.mult[v * self.n + u] += k;
        Ok(())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn mult(&self, u: usize, v: usize) -> u64 {
        self.mult[u * self.n + v]
    }

    pub fn degree(&self, v: usize) -> u64 {
        self.mult[v * self.n..(v + 1) * self.n].iter().sum()
    }

    pub fn degrees(&self) -> Vec<u64> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn edge_count(&self) -> u64 {
        self.pairs().map(|(_, _, k)| k).sum()
    }

    /// Adjacent pairs `(u, v, multiplicity)` with `u < v`, in lexicographic order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        (0..self.n).flat_map(move |u| {
            (u + 1..self.n).filter_map(move |v| {
                let k = self.mult(u, v);
                (k > 0).then_some((u, v, k))
            })
        })
    }

    pub fn is_simple(&self) -> bool {
        self.mult.iter().all(|&k| k <= 1)
    }

    pub fn is_connected(&self) -> bool {
        self.as_symmetric_digraph().is_strongly_connected()
    }

    pub fn all_degrees_even(&self) -> bool {
        self.degrees().iter().all(|d| d % 2 == 0)
    }

    pub fn laplacian(&self) -> IntMatrix {
        IntMatrix::from_fn(self.n, self.n, |u, v| {
            if u == v {
                BigInt::from(self.degree(u))
            } else {
                -BigInt::from(self.mult(u, v))
            }
        })
    }

    /// Digraph with `mult(u, v)` edges in each direction for every pair.
    pub fn as_symmetric_digraph(&self) -> DirectedMultigraph {
        DirectedMultigraph {
            n: self.n,
            mult: self.mult.clone(),
        }
    }

    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        check_permutation(perm, self.n)?;
        let mut g = Self::new(self.n)?;
        for (u, v, k) in self.pairs() {
            g.add_edges(perm[u], perm[v], k)?;
        }
        Ok(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle3() -> DirectedMultigraph {
        DirectedMultigraph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    fn transitive(n: usize) -> DirectedMultigraph {
        let edges: Vec<_> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        DirectedMultigraph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn rejects_loops_and_bad_vertices() {
        assert!(DirectedMultigraph::new(0).is_err());
        assert!(DirectedMultigraph::from_edges(2, &[(1, 1)]).is_err());
        assert!(DirectedMultigraph::from_edges(2, &[(0, 2)]).is_err());
        assert!(UndirectedMultigraph::from_edges(2, &[(0, 0)]).is_err());
    }

    #[test]
    fn degrees() {
        assert_eq!(cycle3().out_degrees(), vec![1, 1, 1]);
        assert_eq!(transitive(4).out_degrees(), vec![3, 2, 1, 0]);
        let t = transitive(4);
        assert_eq!(
            t.out_degrees().iter().sum::<u64>(),
            t.in_degrees().iter().sum::<u64>()
        );
    }

    #[test]
    fn balance_and_connectivity() {
        assert!(cycle3().is_balanced());
        assert!(!transitive(3).is_balanced());
        assert!(cycle3().is_strongly_connected());
        assert!(!transitive(4).is_strongly_connected());
        let two = DirectedMultigraph::from_edges(
            6,
            &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)],
        )
        .unwrap();
        assert!(two.is_balanced());
        assert!(!two.is_strongly_connected());
    }

    #[test]
    fn tournament_predicate() {
        assert!(cycle3().is_tournament());
        assert!(transitive(5).is_tournament());
        let mut d = transitive(3);
        d.add_edges(1, 0, 1).unwrap();
        assert!(!d.is_tournament());
        assert!(!DirectedMultigraph::new(3).unwrap().is_tournament());
    }

    #[test]
    fn laplacian_examples() {
        let l = cycle3().laplacian();
        assert_eq!(
            l,
            IntMatrix::from_rows(&[vec![1, -1, 0], vec![0, 1, -1], vec![-1, 0, 1]]).unwrap()
        );
        let e = DirectedMultigraph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(e.laplacian(), IntMatrix::from_rows(&[vec![1, -1], vec![0, 0]]).unwrap());
        assert!(l.row_sums().iter().all(|s| *s == BigInt::from(0)));
    }

    #[test]
    fn skew_adjacency_examples() {
        let m = cycle3().skew_adjacency().unwrap();
        assert_eq!(
            m,
            IntMatrix::from_rows(&[vec![0, 1, -1], vec![-1, 0, 1], vec![1, -1, 0]]).unwrap()
        );
        let e = DirectedMultigraph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(
            e.skew_adjacency().unwrap(),
            IntMatrix::from_rows(&[vec![0, 1], vec![-1, 0]]).unwrap()
        );
        let both = DirectedMultigraph::from_edges(2, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(both.skew_adjacency(), Err(Error::NotSimple(0, 1)));
    }

    #[test]
    fn undirected_laplacian_is_symmetric() {
        let g = UndirectedMultigraph::from_edges(3, &[(0, 1), (1, 2), (0, 1)]).unwrap();
        let l = g.laplacian();
        assert_eq!(l, l.transpose());
        assert_eq!(g.degrees(), vec![2, 3, 1]);
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn induced_subdigraph() {
        let t = transitive(5);
        let s = t.induced(&[4, 1, 2]).unwrap();
        assert_eq!(s.out_degrees(), vec![0, 2, 1]);
        assert!(t.induced(&[0, 0]).is_err());
        assert!(t.induced(&[7]).is_err());
    }

    #[test]
    fn relabel_and_reverse() {
        let c = cycle3();
        let r = c.relabel(&[1, 2, 0]).unwrap();
        assert_eq!(r, c);
        assert!(c.relabel(&[0, 0, 1]).is_err());
        assert_eq!(c.reverse().mult(1, 0), 1);
        assert!(c.is_orientation_of(&c.underlying()));
    }
}
