//! Builders for the named graph families plus seeded random instances.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{DirectedMultigraph, UndirectedMultigraph};

/// Largest modulus accepted by [`paley`].
pub const PALEY_CAP: u64 = 10_000;

/// Swirl tournament on odd `n >= 3`: vertex `i` beats `i+1, ..., i+(n-1)/2` mod `n`.
pub fn swirl(n: usize) -> Result<DirectedMultigraph> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::InvalidParameter(format!(
            "swirl tournament needs an odd order >= 3, got {n}"
        )));
    }
    let d = (n - 1) / 2;
    let mut t = DirectedMultigraph::new(n)?;
    for i in 0..n {
        for k in 1..=d {
            t.add_edges(i, (i + k) % n, 1)?;
        }
    }
    Ok(t)
}

/// Transitive tournament: `i -> j` iff `i < j`.
pub fn transitive(n: usize) -> Result<DirectedMultigraph> {
    let mut t = DirectedMultigraph::new(n)?;
    for i in 0..n {
        for j in i + 1..n {
            t.add_edges(i, j, 1)?;
        }
    }
    Ok(t)
}

fn pow_mod(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut acc = 1 % modulus;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % modulus;
        }
        base = base * base % modulus;
        exp >>= 1;
    }
    acc
}

fn is_prime(q: u64) -> bool {
    q >= 2 && (2..).take_while(|p| p * p <= q).all(|p| q % p != 0)
}

/// Euler's criterion; `x` must be nonzero mod `q`.
fn is_quadratic_residue(x: u64, q: u64) -> bool {
    pow_mod(x, (q - 1) / 2, q) == 1
}

/// Paley tournament on a prime `q ≡ 3 (mod 4)`: `i -> j` iff `j - i` is a
/// nonzero square mod `q`.
pub fn paley(q: u64) -> Result<DirectedMultigraph> {
    if q > PALEY_CAP {
        return Err(Error::CapExceeded {
            what: "Paley modulus",
            limit: PALEY_CAP,
        });
    }
    if !is_prime(q) || q % 4 != 3 {
        return Err(Error::InvalidParameter(format!(
            "Paley tournament needs a prime q = 3 mod 4, got {q}"
        )));
    }
    let n = q as usize;
    let mut t = DirectedMultigraph::new(n)?;
    for i in 0..q {
        for j in 0..q {
            if i != j && is_quadratic_residue((j + q - i) % q, q) {
                t.add_edges(i as usize, j as usize, 1)?;
            }
        }
    }
    Ok(t)
}

pub fn complete_graph(n: usize) -> Result<UndirectedMultigraph> {
    let mut g = UndirectedMultigraph::new(n)?;
    for u in 0..n {
        for v in u + 1..n {
            g.add_edges(u, v, 1)?;
        }
    }
    Ok(g)
}

/// `K_{n,m}` with parts `0..n` and `n..n+m`.
pub fn complete_bipartite(n: usize, m: usize) -> Result<UndirectedMultigraph> {
    if n == 0 || m == 0 {
        return Err(Error::InvalidParameter("both parts must be nonempty".into()));
    }
    let mut g = UndirectedMultigraph::new(n + m)?;
    for u in 0..n {
        for v in n..n + m {
            g.add_edges(u, v, 1)?;
        }
    }
    Ok(g)
}

/// Cycle `0 - 1 - ... - (n-1) - 0`; `n >= 3`.
pub fn cycle_graph(n: usize) -> Result<UndirectedMultigraph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("cycle needs n >= 3, got {n}")));
    }
    let mut g = UndirectedMultigraph::new(n)?;
    for v in 0..n {
        g.add_edges(v, (v + 1) % n, 1)?;
    }
    Ok(g)
}

/// Path `0 - 1 - ... - (n-1)`.
pub fn path_graph(n: usize) -> Result<UndirectedMultigraph> {
    let mut g = UndirectedMultigraph::new(n)?;
    for v in 1..n {
        g.add_edges(v - 1, v, 1)?;
    }
    Ok(g)
}

/// Eulerian orientation of `K_{n,m}` obtained by blowing up an oriented
/// 4-cycle `A1 -> B1 -> A2 -> B2 -> A1`.
///
/// The first part `0..n` is split into `A1 = 0..n/2` and `A2 = n/2..n`, the
/// second part into `B1 = n..n+m/2` and `B2 = n+m/2..n+m`.
pub fn bipartite_blowup_minimizer(n: usize, m: usize) -> Result<DirectedMultigraph> {
    if n < 2 || m < 2 || n % 2 == 1 || m % 2 == 1 {
        return Err(Error::InvalidParameter(format!(
            "blow-up needs even part sizes >= 2, got ({n}, {m})"
        )));
    }
    let a1 = 0..n / 2;
    let a2 = n / 2..n;
    let b1 = n..n + m / 2;
    let b2 = n + m / 2..n + m;
    let mut d = DirectedMultigraph::new(n + m)?;
    for (from, to) in [(&a1, &b1), (&b1, &a2), (&a2, &b2), (&b2, &a1)] {
        for u in from.clone() {
            for v in to.clone() {
                d.add_edges(u, v, 1)?;
            }
        }
    }
    Ok(d)
}

/// Every multiplicity doubled.
pub fn double(g: &UndirectedMultigraph) -> UndirectedMultigraph {
    let mut out = g.clone();
    for (u, v, k) in g.pairs() {
        out.add_edges(u, v, k).expect("valid pair");
    }
    out
}

/// Splits the edges of every pair evenly between the two directions.
pub fn symmetric_orientation(g: &UndirectedMultigraph) -> Result<DirectedMultigraph> {
    let mut d = DirectedMultigraph::new(g.n())?;
    for (u, v, k) in g.pairs() {
        if k % 2 == 1 {
            return Err(Error::OddMultiplicity(u, v));
        }
        d.add_edges(u, v, k / 2)?;
        d.add_edges(v, u, k / 2)?;
    }
    Ok(d)
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniformly random labelled tournament.
pub fn random_tournament(n: usize, seed: u64) -> Result<DirectedMultigraph> {
    random_orientation(&complete_graph(n)?, seed)
}

/// Each edge of `g` independently oriented by a fair coin.
pub fn random_orientation(g: &UndirectedMultigraph, seed: u64) -> Result<DirectedMultigraph> {
    let mut rng = rng(seed);
    let mut d = DirectedMultigraph::new(g.n())?;
    for (u, v, k) in g.pairs() {
        let forward = (0..k).filter(|_| rng.gen_bool(0.5)).count() as u64;
        d.add_edges(u, v, forward)?;
        d.add_edges(v, u, k - forward)?;
    }
    Ok(d)
}

/// Uniformly random permutation of `0..n`.
pub fn random_permutation(n: usize, seed: u64) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut rng(seed));
    perm
}

/// Simple graph with each pair present independently with probability 1/2.
pub fn random_graph(n: usize, seed: u64) -> Result<UndirectedMultigraph> {
    let mut rng = rng(seed);
    let mut g = UndirectedMultigraph::new(n)?;
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(0.5) {
                g.add_edges(u, v, 1)?;
            }
        }
    }
    Ok(g)
}

/// Random digraph with each ordered pair receiving `0..=max_mult` parallel edges.
pub fn random_digraph(n: usize, max_mult: u64, seed: u64) -> Result<DirectedMultigraph> {
    let mut rng = rng(seed);
    let mut d = DirectedMultigraph::new(n)?;
    for u in 0..n {
        for v in 0..n {
            if u != v {
                d.add_edges(u, v, rng.gen_range(0..=max_mult))?;
            }
        }
    }
    Ok(d)
}

/// A balanced orientation of an even-degree multigraph.
///
/// Each component is oriented along an Euler circuit (Hierholzer), then
/// `10 * |E|` randomly found directed cycles are reversed. Reversing a
/// directed cycle keeps every vertex balanced. No claim is made about the
/// output distribution.
pub fn random_eulerian_orientation(
    g: &UndirectedMultigraph,
    seed: u64,
) -> Result<DirectedMultigraph> {
    if let Some(v) = g.degrees().iter().position(|d| d % 2 == 1) {
        return Err(Error::OddDegree { vertex: v });
    }
    let n = g.n();
    let mut d = DirectedMultigraph::new(n)?;
    let mut rem: Vec<u64> = (0..n * n).map(|i| g.mult(i / n, i % n)).collect();

    for start in 0..n {
        let mut stack = vec![start];
        let mut circuit = Vec::new();
        while let Some(&v) = stack.last() {
            match (0..n).find(|&w| rem[v * n + w] > 0) {
                Some(w) => {
                    rem[v * n + w] -= 1;
                    rem[w * n + v] -= 1;
                    stack.push(w);
                }
                None => circuit.push(stack.pop().expect("nonempty")),
            }
        }
        for pair in circuit.windows(2) {
            d.add_edges(pair[1], pair[0], 1)?;
        }
    }
    debug_assert!(d.is_balanced());

    let mut rng = rng(seed);
    let steps = 10 * g.edge_count();
    let active: Vec<usize> = (0..n).filter(|&v| g.degree(v) > 0).collect();
    if active.is_empty() {
        return Ok(d);
    }
    for _ in 0..steps {
        let start = *active.choose(&mut rng).expect("nonempty");
        reverse_random_cycle(&mut d, start, &mut rng);
    }
    Ok(d)
}

fn reverse_random_cycle(d: &mut DirectedMultigraph, start: usize, rng: &mut ChaCha8Rng) {
    let n = d.n();
    let mut position = vec![usize::MAX; n];
    let mut walk = vec![start];
    position[start] = 0;
    loop {
        let v = *walk.last().expect("nonempty");
        let out = d.out_degree(v);
        // Balanced and reached by an edge (or active start), so out > 0.
        debug_assert!(out > 0);
        let mut pick = rng.gen_range(0..out);
        let next = (0..n)
            .find(|&w| {
                let k = d.mult(v, w);
                if pick < k {
                    true
                } else {
                    pick -= k;
                    false
                }
            })
            .expect("pick below out-degree");
        if position[next] != usize::MAX {
            let cycle = &walk[position[next]..];
            for (i, &a) in cycle.iter().enumerate() {
                let b = *cycle.get(i + 1).unwrap_or(&next);
                d.set_mult(a, b, d.mult(a, b) - 1);
                d.set_mult(b, a, d.mult(b, a) + 1);
            }
            return;
        }
        position[next] = walk.len();
        walk.push(next);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::digraphs_isomorphic;

    #[test]
    fn swirl_small_cases() {
        let s3 = swirl(3).unwrap();
        assert_eq!(s3, DirectedMultigraph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap());
        let s7 = swirl(7).unwrap();
        assert!([1, 2, 3].iter().all(|&v| s7.mult(0, v) == 1));
        assert!(s7.is_balanced() && s7.is_tournament());
        assert_eq!(swirl(5).unwrap().out_degrees(), vec![2; 5]);
        assert!(swirl(4).is_err());
        assert!(swirl(1).is_err());
    }

    #[test]
    fn transitive_degrees() {
        assert_eq!(transitive(4).unwrap().out_degrees(), vec![3, 2, 1, 0]);
    }

    #[test]
    fn paley_small_cases() {
        assert!(digraphs_isomorphic(&paley(3).unwrap(), &swirl(3).unwrap()).unwrap());
        let p7 = paley(7).unwrap();
        assert!(p7.is_tournament() && p7.is_balanced());
        // Squares mod 7 are {1, 2, 4}.
        assert_eq!(p7.out_neighbors(0).collect::<Vec<_>>(), vec![1, 2, 4]);
        assert!(paley(5).is_err());
        assert!(paley(15).is_err());
        assert!(paley(10_007).is_err());
    }

    #[test]
    fn paley_gram_identity() {
        // A A^T = ((q+1)/4) I + ((q-3)/4) J
        for q in [3u64, 7, 11, 19, 23] {
            let a = paley(q).unwrap().adjacency();
            let g = a.mul(&a.transpose()).unwrap();
            let n = q as usize;
            for i in 0..n {
                for j in 0..n {
                    let expected = if i == j { (q + 1) / 4 + (q - 3) / 4 } else { (q - 3) / 4 };
                    assert_eq!(g[(i, j)], expected.into());
                }
            }
        }
    }

    #[test]
    fn blowup_shapes() {
        let c4 = bipartite_blowup_minimizer(2, 2).unwrap();
        assert!(c4.is_balanced());
        assert_eq!(c4.edge_count(), 4);
        let d = bipartite_blowup_minimizer(4, 6).unwrap();
        assert!(d.is_balanced());
        assert!(d.is_orientation_of(&complete_bipartite(4, 6).unwrap()));
        assert!(bipartite_blowup_minimizer(3, 4).is_err());
    }

    #[test]
    fn double_and_symmetric() {
        let k3 = complete_graph(3).unwrap();
        let dk3 = double(&k3);
        assert!(dk3.pairs().all(|(_, _, k)| k == 2));
        let o = symmetric_orientation(&dk3).unwrap();
        assert!(o.is_balanced());
        assert_eq!(o.laplacian().scale(&2.into()), dk3.laplacian());
        assert_eq!(symmetric_orientation(&k3), Err(Error::OddMultiplicity(0, 1)));
    }

    #[test]
    fn random_generators_are_deterministic() {
        assert_eq!(random_tournament(7, 42).unwrap(), random_tournament(7, 42).unwrap());
        let g = double(&complete_graph(5).unwrap());
        let a = random_eulerian_orientation(&g, 9).unwrap();
        assert_eq!(a, random_eulerian_orientation(&g, 9).unwrap());
        assert!(a.is_balanced() && a.is_orientation_of(&g));
    }

    #[test]
    fn random_eulerian_rejects_odd_degrees() {
        let k4 = complete_graph(4).unwrap();
        assert!(matches!(
            random_eulerian_orientation(&k4, 0),
            Err(Error::OddDegree { .. })
        ));
    }

    proptest::proptest! {
        #[test]
        fn random_eulerian_orientations_are_balanced(seed in 0u64..500, n in 3usize..=9) {
            let g = if n % 2 == 1 {
                complete_graph(n).unwrap()
            } else {
                double(&complete_graph(n).unwrap())
            };
            let d = random_eulerian_orientation(&g, seed).unwrap();
            proptest::prop_assert!(d.is_balanced());
            proptest::prop_assert!(d.is_orientation_of(&g));
        }
    }
}
