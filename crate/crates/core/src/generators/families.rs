//! Named graph families and extremal families with their adversarial colorings.

use crate::error::{Error, Result};
use crate::graph::{Color, Coloring, Graph};

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("valid path")
}

/// Cycle on `n ≥ 3` vertices; smaller `n` degrades to a path.
pub fn cycle(n: usize) -> Graph {
    let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    if n >= 3 {
        edges.push((0, n - 1));
    }
    Graph::from_edges(n, edges).expect("valid cycle")
}

/// Star with center 0 and leaves `1..=leaves`.
pub fn star(leaves: usize) -> Graph {
    Graph::from_edges(leaves + 1, (1..=leaves).map(|l| (0, l))).expect("valid star")
}

pub fn complete(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).expect("valid clique")
}

/// Largest `k` accepted by [`gen_power_set_graph`] (order 2^k).
pub const POWER_SET_MAX_K: usize = 16;

/// Graph of order 2^k with maxsep_RB = k.
///
/// Vertices: `s_1..s_k` at `0..k`, then one vertex per subset of size ≥ 2 in
/// increasing bitmask order (adjacent to its members and to every other
/// subset vertex), then the isolated `v_∅` last.
pub fn gen_power_set_graph(k: usize) -> Result<(Graph, Coloring)> {
    if k == 0 || k > POWER_SET_MAX_K {
        return Err(Error::Spec(format!("power-set k must be in 1..={POWER_SET_MAX_K}, got {k}")));
    }
    let masks: Vec<u32> = (0u32..1 << k).filter(|m| m.count_ones() >= 2).collect();
    let n = 1usize << k;
    let empty = n - 1;
    let mut edges = Vec::new();
    for (i, &m) in masks.iter().enumerate() {
        let t = k + i;
        for s in 0..k {
            if m >> s & 1 == 1 {
                edges.push((s, t));
            }
        }
        for j in i + 1..masks.len() {
            edges.push((t, k + j));
        }
    }
    let g = Graph::from_edges(n, edges)?;
    let coloring = match k {
        1 | 2 => Coloring::from_reds(n, 0..k),
        _ => {
            let full = k + masks.len() - 1;
            Coloring::from_reds(n, (0..n).filter(|&v| v != full))
        }
    };
    debug_assert_eq!(coloring.get(empty), if k <= 2 { Color::Blue } else { Color::Red });
    Ok((g, coloring))
}

/// Complement of the half-graph H_k: cliques `v_1..v_k` at `0..k` and
/// `w_1..w_k` at `k..2k`, with `v_i ~ w_j` iff `i > j`. maxsep_RB = 2k − 1.
pub fn gen_half_graph_complement(k: usize) -> Result<(Graph, Coloring)> {
    if k == 0 {
        return Err(Error::Spec("half-complement k must be at least 1".into()));
    }
    let n = 2 * k;
    let mut edges = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            edges.push((i, j));
            edges.push((k + i, k + j));
        }
        for j in 0..i {
            edges.push((i, k + j));
        }
    }
    let g = Graph::from_edges(n, edges)?;
    let mut colors = Vec::with_capacity(n);
    for i in 1..=k {
        colors.push(if i % 2 == 1 { Color::Blue } else { Color::Red });
    }
    for i in 1..=k {
        let odd = i % 2 == 1;
        let red = if k % 2 == 1 { odd } else { !odd };
        colors.push(if red { Color::Red } else { Color::Blue });
    }
    Ok((g, Coloring::new(colors)))
}

/// Complete multipartite graph with parts laid out consecutively; each part
/// colors its first ⌈k_i/2⌉ vertices red and the rest blue. With `strict`,
/// every part must be odd and at least 5.
pub fn gen_complete_multipartite(parts: &[usize], strict: bool) -> Result<(Graph, Coloring)> {
    if parts.len() < 2 {
        return Err(Error::InvalidParts(format!("need at least two parts, got {}", parts.len())));
    }
    if let Some(i) = parts.iter().position(|&p| p == 0) {
        return Err(Error::InvalidParts(format!("part {i} is empty")));
    }
    if strict {
        if let Some(i) = parts.iter().position(|&p| p < 5 || p % 2 == 0) {
            return Err(Error::InvalidParts(format!("part {i} has size {}, need odd and ≥ 5", parts[i])));
        }
    }
    let n: usize = parts.iter().sum();
    let mut part_of = Vec::with_capacity(n);
    let mut reds = Vec::new();
    for (i, &p) in parts.iter().enumerate() {
        let start = part_of.len();
        reds.extend(start..start + p.div_ceil(2));
        part_of.extend(std::iter::repeat_n(i, p));
    }
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| part_of[u] != part_of[v]);
    Ok((Graph::from_edges(n, edges)?, Coloring::from_reds(n, reds)))
}

/// `k` paths of order 6 sharing the endpoint `x = 0`; path `i` (0-based)
/// occupies `1 + 5i ..= 5 + 5i` outward from `x`. `x` is red and colors
/// alternate along the bipartition. maxsep_RB = 3k.
pub fn gen_spider(k: usize) -> Result<(Graph, Coloring)> {
    if k == 0 {
        return Err(Error::Spec("spider k must be at least 1".into()));
    }
    let n = 5 * k + 1;
    let mut edges = Vec::with_capacity(n - 1);
    for i in 0..k {
        let base = 1 + 5 * i;
        edges.push((0, base));
        for j in 1..5 {
            edges.push((base + j - 1, base + j));
        }
    }
    let reds = std::iter::once(0).chain((0..k).flat_map(|i| [2 + 5 * i, 4 + 5 * i]));
    Ok((Graph::from_edges(n, edges)?, Coloring::from_reds(n, reds)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn power_set_shapes() {
        let (g, c) = gen_power_set_graph(2).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.edges(), vec![(0, 2), (1, 2)]);
        assert_eq!(c.to_string(), "RRBB");
        let (g, c) = gen_power_set_graph(3).unwrap();
        assert_eq!(g.order(), 8);
        // masks 0b011, 0b101, 0b110, 0b111 occupy 3..=6; the full set is vertex 6
        assert_eq!(c.class(Color::Blue), vec![6]);
        assert_eq!(g.degree(7), 0);
        assert!(g.is_twin_free());
        assert_eq!(gen_power_set_graph(1).unwrap().1.to_string(), "RB");
    }

    #[test]
    fn half_graph_complement_shape() {
        let (g, c) = gen_half_graph_complement(3).unwrap();
        assert_eq!(g.order(), 6);
        assert!(g.has_edge(0, 1) && g.has_edge(3, 5));
        assert!(g.has_edge(1, 3) && g.has_edge(2, 4) && !g.has_edge(0, 3) && !g.has_edge(1, 4));
        assert_eq!(c.to_string(), "BRBRBR");
        assert_eq!(gen_half_graph_complement(2).unwrap().1.to_string(), "BRBR");
        assert_eq!(gen_half_graph_complement(1).unwrap().0.edge_count(), 0);
    }

    #[test]
    fn multipartite_and_spider() {
        let (g, c) = gen_complete_multipartite(&[5, 5], true).unwrap();
        assert_eq!((g.order(), g.edge_count()), (10, 25));
        assert_eq!(c.class_sizes(), (6, 4));
        assert!(gen_complete_multipartite(&[1, 1], true).is_err());
        assert!(!gen_complete_multipartite(&[1, 1], false).unwrap().0.is_twin_free());
        assert!(matches!(gen_complete_multipartite(&[3, 0], false), Err(Error::InvalidParts(_))));
        let (t, c) = gen_spider(1).unwrap();
        assert_eq!(t, path(6));
        assert_eq!(c.to_string(), "RBRBRB");
        let (t, _) = gen_spider(2).unwrap();
        assert!(t.is_tree() && t.order() == 11);
    }
}
