//! Independent oracles and the seeded corpus shared by the integration tests.
//!
//! Nothing here calls the library's search or isomorphism code, so the
//! helpers can serve as ground truth for it.

#![allow(dead_code)]

use std::collections::BTreeSet;

use arborist::construct::{
    double, random_digraph, random_eulerian_orientation, random_graph, random_orientation,
    random_tournament,
};
use arborist::{BigInt, DirectedMultigraph, UndirectedMultigraph};
use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Every labelled tournament on `n` vertices, from the bits of a counter.
pub fn tournaments_by_bitmask(n: usize) -> Vec<DirectedMultigraph> {
    let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
    (0u64..1 << pairs.len())
        .map(|mask| {
            let mut t = DirectedMultigraph::new(n).unwrap();
            for (i, &(u, v)) in pairs.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    t.add_edges(u, v, 1).unwrap();
                } else {
                    t.add_edges(v, u, 1).unwrap();
                }
            }
            t
        })
        .collect()
}

/// Canonical form by minimising the relabelled multiplicity matrix over all
/// permutations.
pub fn canonical_digraph(d: &DirectedMultigraph) -> Vec<u64> {
    let n = d.n();
    (0..n)
        .permutations(n)
        .map(|p| {
            let mut m = vec![0u64; n * n];
            for u in 0..n {
                for v in 0..n {
                    m[p[u] * n + p[v]] = d.mult(u, v);
                }
            }
            m
        })
        .min()
        .unwrap()
}

pub fn automorphism_count(d: &DirectedMultigraph) -> usize {
    let n = d.n();
    (0..n)
        .permutations(n)
        .filter(|p| (0..n).all(|u| (0..n).all(|v| d.mult(u, v) == d.mult(p[u], p[v]))))
        .count()
}

pub fn same_class(a: &DirectedMultigraph, b: &DirectedMultigraph) -> bool {
    a.n() == b.n() && canonical_digraph(a) == canonical_digraph(b)
}

pub fn class_count(graphs: &[DirectedMultigraph]) -> usize {
    graphs.iter().map(canonical_digraph).collect::<BTreeSet<_>>().len()
}

/// Arborescences rooted at `root`: every `(n-1)`-subset of the labelled
/// edges is tested directly.
pub fn arborescences_by_edge_subsets(d: &DirectedMultigraph, root: usize) -> BigInt {
    let n = d.n();
    let edges: Vec<(usize, usize)> = d
        .edges()
        .flat_map(|(u, v, k)| std::iter::repeat_n((u, v), k as usize))
        .collect();
    let mut count = 0u64;
    for subset in edges.iter().combinations(n - 1) {
        let mut parent = vec![usize::MAX; n];
        let mut ok = true;
        for &&(u, v) in &subset {
            if u == root || parent[u] != usize::MAX {
                ok = false;
                break;
            }
            parent[u] = v;
        }
        if ok && (0..n).all(|s| reaches(&parent, s, root, n)) {
            count += 1;
        }
    }
    BigInt::from(count)
}

fn reaches(parent: &[usize], mut v: usize, root: usize, n: usize) -> bool {
    for _ in 0..=n {
        if v == root {
            return true;
        }
        v = parent[v];
        if v == usize::MAX {
            return false;
        }
    }
    false
}

/// Balanced orientations counted by brute force over every split of every
/// pair, with no pruning.
pub fn eulerian_orientation_count(g: &UndirectedMultigraph) -> u64 {
    let pairs: Vec<_> = g.pairs().collect();
    let mut count = 0;
    let choices = pairs.iter().map(|&(_, _, k)| 0..=k).multi_cartesian_product();
    let n = g.n();
    if pairs.is_empty() {
        return 1;
    }
    for split in choices {
        let mut imbalance = vec![0i64; n];
        for (&(u, v, k), &f) in pairs.iter().zip(&split) {
            let delta = 2 * f as i64 - k as i64;
            imbalance[u] += delta;
            imbalance[v] -= delta;
        }
        if imbalance.iter().all(|&x| x == 0) {
            count += 1;
        }
    }
    count
}

/// Connected simple graphs with between 1 and `max_edges` edges and no
/// isolated vertices, one per isomorphism class, grown by edge addition.
pub fn connected_graphs_up_to(max_edges: usize) -> Vec<UndirectedMultigraph> {
    let mut layer: BTreeSet<(usize, Vec<(usize, usize)>)> = BTreeSet::new();
    layer.insert(canonical_edges(2, &[(0, 1)]));
    let mut all: Vec<(usize, Vec<(usize, usize)>)> = layer.iter().cloned().collect();
    for _ in 1..max_edges {
        let mut next = BTreeSet::new();
        for (n, edges) in &layer {
            let present: BTreeSet<_> = edges.iter().copied().collect();
            for (u, v) in (0..*n).tuple_combinations() {
                if !present.contains(&(u, v)) {
                    let mut e = edges.clone();
                    e.push((u, v));
                    next.insert(canonical_edges(*n, &e));
                }
            }
            for u in 0..*n {
                let mut e = edges.clone();
                e.push((u, *n));
                next.insert(canonical_edges(n + 1, &e));
            }
        }
        all.extend(next.iter().cloned());
        layer = next;
    }
    all.into_iter()
        .map(|(n, edges)| UndirectedMultigraph::from_edges(n, &edges).unwrap())
        .collect()
}

fn canonical_edges(n: usize, edges: &[(usize, usize)]) -> (usize, Vec<(usize, usize)>) {
    let best = (0..n)
        .permutations(n)
        .map(|p| {
            let mut e: Vec<(usize, usize)> = edges
                .iter()
                .map(|&(u, v)| (p[u].min(p[v]), p[u].max(p[v])))
                .collect();
            e.sort_unstable();
            e
        })
        .min()
        .unwrap();
    (n, best)
}

/// Balanced, strongly connected digraph made of a Hamiltonian cycle plus
/// random directed cycles, with at most `max_edges` edges in total.
pub fn random_eulerian_digraph(n: usize, max_edges: usize, seed: u64) -> DirectedMultigraph {
    assert!(n >= 2 && n <= max_edges);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut d = DirectedMultigraph::new(n).unwrap();
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut edges = 0;
    for i in 0..n {
        d.add_edges(order[i], order[(i + 1) % n], 1).unwrap();
        edges += 1;
    }
    loop {
        let len = rng.gen_range(2..=n);
        if edges + len > max_edges || rng.gen_bool(0.3) {
            break;
        }
        let mut cyc: Vec<usize> = (0..n).collect();
        cyc.shuffle(&mut rng);
        for i in 0..len {
            d.add_edges(cyc[i], cyc[(i + 1) % len], 1).unwrap();
        }
        edges += len;
    }
    d
}

/// The seeded corpus: at least 500 digraphs and tournaments on `2..=9`
/// vertices, with parallel edges and Eulerian instances mixed in.
pub fn corpus() -> Vec<(String, DirectedMultigraph)> {
    let mut out = Vec::new();
    for seed in 0..40u64 {
        for n in 2..=9usize {
            out.push((format!("tournament n={n} s={seed}"), random_tournament(n, seed).unwrap()));
            if seed % 2 == 0 {
                out.push((format!("digraph n={n} s={seed}"), random_digraph(n, 2, seed).unwrap()));
            } else {
                let g = random_graph(n, seed).unwrap();
                out.push((format!("oriented graph n={n} s={seed}"), random_orientation(&g, seed).unwrap()));
            }
        }
        let n = 3 + (seed as usize % 6);
        let g = double(&random_graph(n, seed + 1000).unwrap());
        out.push((
            format!("eulerian multigraph n={n} s={seed}"),
            random_eulerian_orientation(&g, seed).unwrap(),
        ));
    }
    out
}
