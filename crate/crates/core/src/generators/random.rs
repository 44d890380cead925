//! Seeded random sources. Every function is a pure function of its arguments.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::{Color, Coloring, Graph};

/// Rejection attempts before giving up on twin-freeness.
pub const TWIN_FREE_ATTEMPTS: usize = 1000;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn check_prob(p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::Spec(format!("edge probability {p} outside [0, 1]")))
    }
}

fn reject_until_twin_free(mut sample: impl FnMut() -> Result<Graph>) -> Result<Graph> {
    for _ in 0..TWIN_FREE_ATTEMPTS {
        let g = sample()?;
        if g.is_twin_free() {
            return Ok(g);
        }
    }
    Err(Error::TwinFreeUnreachable { attempts: TWIN_FREE_ATTEMPTS })
}

fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

/// Erdős–Rényi G(n, p) conditioned on being twin-free.
pub fn gen_random_twin_free(n: usize, edge_prob: f64, seed: u64) -> Result<Graph> {
    check_prob(edge_prob)?;
    let mut r = rng(seed);
    let pairs = all_pairs(n);
    reject_until_twin_free(|| Graph::from_edges(n, pairs.iter().copied().filter(|_| r.gen_bool(edge_prob))))
}

/// Random triangle-free twin-free graph: pairs are visited in random order
/// and kept with probability `edge_prob` unless they close a triangle.
pub fn gen_random_triangle_free(n: usize, edge_prob: f64, seed: u64) -> Result<Graph> {
    check_prob(edge_prob)?;
    let mut r = rng(seed);
    let mut pairs = all_pairs(n);
    reject_until_twin_free(|| {
        pairs.shuffle(&mut r);
        let mut adj = vec![VertexSet::new(n); n];
        let mut kept = Vec::new();
        for &(u, v) in &pairs {
            if r.gen_bool(edge_prob) && adj[u].is_disjoint(&adj[v]) {
                adj[u].insert(v);
                adj[v].insert(u);
                kept.push((u, v));
            }
        }
        Graph::from_edges(n, kept)
    })
}

/// Random twin-free graph with maximum degree at most `max_degree`.
pub fn gen_random_bounded_degree(n: usize, max_degree: usize, edge_prob: f64, seed: u64) -> Result<Graph> {
    check_prob(edge_prob)?;
    let mut r = rng(seed);
    let mut pairs = all_pairs(n);
    reject_until_twin_free(|| {
        pairs.shuffle(&mut r);
        let mut deg = vec![0; n];
        let mut kept = Vec::new();
        for &(u, v) in &pairs {
            if deg[u] < max_degree && deg[v] < max_degree && r.gen_bool(edge_prob) {
                deg[u] += 1;
                deg[v] += 1;
                kept.push((u, v));
            }
        }
        Graph::from_edges(n, kept)
    })
}

/// Tree encoded by a Prüfer sequence over `0..seq.len() + 2`.
pub fn tree_from_prufer(seq: &[usize]) -> Result<Graph> {
    let n = seq.len() + 2;
    if let Some(&v) = seq.iter().find(|&&v| v >= n) {
        return Err(Error::VertexOutOfRange { vertex: v, n });
    }
    let mut degree = vec![1usize; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut leaves: std::collections::BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &v in seq {
        let leaf = leaves.pop_first().expect("a Prüfer step always has a leaf");
        edges.push((leaf, v));
        degree[v] -= 1;
        if degree[v] == 1 {
            leaves.insert(v);
        }
    }
    let last: Vec<usize> = leaves.into_iter().collect();
    edges.push((last[0], last[1]));
    Graph::from_edges(n, edges)
}

/// Uniform random labeled tree on `n` vertices.
pub fn gen_random_tree(n: usize, seed: u64) -> Result<Graph> {
    match n {
        0 => Err(Error::TooSmall { n, min: 1 }),
        1 => Ok(Graph::empty(1)),
        _ => {
            let mut r = rng(seed);
            let seq: Vec<usize> = (0..n - 2).map(|_| r.gen_range(0..n)).collect();
            tree_from_prufer(&seq)
        }
    }
}

/// Each vertex red with probability 1/2.
pub fn random_coloring(n: usize, seed: u64) -> Coloring {
    let mut r = rng(seed);
    Coloring::new((0..n).map(|_| if r.gen_bool(0.5) { Color::Red } else { Color::Blue }).collect())
}
