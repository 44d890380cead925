mod common;

use common::{set_cover_oracle, Oracle};
use proptest::prelude::*;
use rbsep::exact::{gamma_exact, maxsep_exact, sep_exact, sep_rb_exact};
use rbsep::generators::*;
use rbsep::graph::{verify_rb_separating, verify_separating};
use rbsep::io::{write_coloring, write_graph};
use rbsep::{Color, Coloring, Error, Graph};

#[test]
fn power_set_family() {
    let (g, c) = gen_power_set_graph(1).unwrap();
    assert_eq!((g.order(), g.edge_count(), c.to_string()), (2, 0, "RB".to_string()));
    let (g, c) = gen_power_set_graph(2).unwrap();
    assert_eq!(g.order(), 4);
    assert_eq!(c.class(Color::Red), vec![0, 1]);
    for k in 1..=3 {
        let (g, c) = gen_power_set_graph(k).unwrap();
        assert_eq!(g.order(), 1 << k);
        assert!(g.is_twin_free());
        assert_eq!(sep_rb_exact(&g, &c, None).unwrap().optimum, k);
        assert_eq!(maxsep_exact(&g, 14).unwrap().value, k);
    }
    let (g, c) = gen_power_set_graph(4).unwrap();
    assert_eq!(c.class(Color::Blue).len(), 1);
    assert_eq!(sep_rb_exact(&g, &c, None).unwrap().optimum, 4);
    assert!(gen_power_set_graph(0).is_err());
}

#[test]
fn half_graph_family() {
    let (g, _) = gen_half_graph_complement(1).unwrap();
    assert_eq!((g.order(), g.edge_count()), (2, 0));
    let (g, c) = gen_half_graph_complement(2).unwrap();
    assert_eq!(g.order(), 4);
    assert_eq!(sep_rb_exact(&g, &c, None).unwrap().optimum, 3);
    for k in 1..=4 {
        let (g, c) = gen_half_graph_complement(k).unwrap();
        for i in 0..k {
            for j in 0..k {
                assert!(i == j || g.has_edge(i, j) && g.has_edge(k + i, k + j));
                assert_eq!(g.has_edge(i, k + j), i > j);
            }
        }
        assert_eq!(sep_rb_exact(&g, &c, None).unwrap().optimum, 2 * k - 1);
        if k <= 3 {
            assert_eq!(maxsep_exact(&g, 14).unwrap().value, 2 * k - 1);
        }
    }
}

#[test]
fn multipartite_family() {
    let (g, c) = gen_complete_multipartite(&[5, 5], true).unwrap();
    assert_eq!((g.order(), g.edge_count(), c.class_sizes()), (10, 25, (6, 4)));
    assert_eq!(sep_exact(&g, None).unwrap().optimum, 8);
    assert_eq!(maxsep_exact(&g, 14).unwrap().value, 4);

    let (g, c) = gen_complete_multipartite(&[5, 5, 5], true).unwrap();
    assert_eq!(sep_exact(&g, None).unwrap().optimum, 12);
    assert_eq!(sep_rb_exact(&g, &c, None).unwrap().optimum, 6);

    let (k2, _) = gen_complete_multipartite(&[1, 1], false).unwrap();
    assert!(!k2.is_twin_free());
    assert!(matches!(gen_complete_multipartite(&[1, 1], true), Err(Error::InvalidParts(_))));
    assert!(matches!(gen_complete_multipartite(&[3, 0], false), Err(Error::InvalidParts(_))));
    assert!(matches!(gen_complete_multipartite(&[4], false), Err(Error::InvalidParts(_))));
}

#[test]
fn spider_family() {
    let (g, c) = gen_spider(1).unwrap();
    assert_eq!(g, path(6));
    assert_eq!(sep_rb_exact(&g, &c, None).unwrap().optimum, 3);
    let (g, c) = gen_spider(2).unwrap();
    assert!(g.is_tree());
    assert_eq!(g.order(), 11);
    for (u, v) in g.edges() {
        assert_ne!(c.get(u), c.get(v));
    }
    assert_eq!(c.get(0), Color::Red);
    assert_eq!(sep_rb_exact(&g, &c, None).unwrap().optimum, 6);
    assert_eq!(maxsep_exact(&g, 14).unwrap().value, 6);
}

fn assert_split(r: &SplitReduction) {
    let g = &r.graph;
    let clique: Vec<usize> = r.elements.clone().chain([r.red]).collect();
    for (i, &u) in clique.iter().enumerate() {
        assert!(clique[i + 1..].iter().all(|&v| g.has_edge(u, v)));
    }
    let independent: Vec<usize> = r.sets.clone().chain(r.isolated).collect();
    for (i, &u) in independent.iter().enumerate() {
        assert!(independent[i + 1..].iter().all(|&v| !g.has_edge(u, v)));
    }
    assert_eq!(r.coloring.class(Color::Red), vec![r.red]);
}

#[test]
fn split_reduction_examples() {
    let r = gen_split_from_set_cover(1, &[vec![0]]).unwrap();
    assert_split(&r);
    assert_eq!(sep_rb_exact(&r.graph, &r.coloring, None).unwrap().optimum, 2);

    let sets = vec![vec![0, 1], vec![1, 2], vec![2]];
    let r = gen_split_from_set_cover(3, &sets).unwrap();
    assert_split(&r);
    let cover = set_cover_oracle(3, &sets).unwrap();
    assert_eq!(sep_rb_exact(&r.graph, &r.coloring, None).unwrap().optimum, SplitReduction::budget_for_cover(cover));
    assert!(verify_rb_separating(&r.graph, &r.coloring, &r.separating_set_from_cover(&[0, 1])).is_valid());
    assert!(matches!(gen_split_from_set_cover(2, &[vec![0]]), Err(Error::Uncoverable { element: 1 })));
}

#[test]
fn two_copies_examples() {
    for (g, pivot) in [(path(4), 1), (cycle(6), 0)] {
        let h = gen_two_copies_ds(&g, pivot).unwrap();
        let gamma = gamma_exact(&g);
        assert_eq!(sep_rb_exact(&h.graph, &h.coloring, None).unwrap().optimum, gamma.optimum + 1);
        assert!(verify_rb_separating(&h.graph, &h.coloring, &h.separating_set_from_dominating(&gamma.witness)).is_valid());
        let (r, b) = h.coloring.class_sizes();
        assert!(r.abs_diff(b) <= 2);
    }
    assert!(matches!(gen_two_copies_ds(&path(4), 0), Err(Error::BadPivot { vertex: 0, degree: 1 })));
}

#[test]
fn copies_plus_independent_examples() {
    let (g, c) = gen_copies_plus_independent(&path(3), 1).unwrap();
    assert_eq!(sep_rb_exact(&g, &c, None).unwrap().optimum, 1);
    let (g, c) = gen_copies_plus_independent(&path(6), 2).unwrap();
    assert_eq!(sep_rb_exact(&g, &c, None).unwrap().optimum, 2);
    let (g, c) = gen_copies_plus_independent(&path(6), 1).unwrap();
    assert!(matches!(sep_rb_exact(&g, &c, Some(1)), Err(Error::Infeasible { budget: 1 })));
}

#[test]
fn maxsep_gadget_structure() {
    let sat = SatInstance::new(1, vec![vec![1]]).unwrap();
    let h = gen_maxsep_gadget(&sat).unwrap();
    assert_eq!((h.graph.order(), h.k), (48, 13));
    let s = h.prescribed_set(&sat.brute_force().unwrap());
    assert_eq!(s.len(), h.k);
    assert!(verify_separating(&h.graph, &s).is_valid());
    assert!(verify_rb_separating(&h.graph, &h.coloring, &s).is_valid());
    for gadget in h.domination_gadgets() {
        for (hi, &u) in gadget.u.iter().enumerate() {
            let (p, q) = gadget.pair_separated_only_by(hi);
            assert_eq!(h.graph.closed(p).symmetric_difference(h.graph.closed(q)).to_vec(), vec![u]);
            assert_ne!(h.coloring.get(p), h.coloring.get(q));
        }
        let clique: Vec<usize> = gadget.p.iter().chain(&gadget.q).copied().collect();
        assert!(clique.iter().all(|&x| clique.iter().all(|&y| x == y || h.graph.has_edge(x, y))));
        assert!(gadget.p.iter().all(|&p| h.graph.degree(p) == 9 + 2));
        assert!(gadget.q.iter().all(|&q| h.graph.degree(q) == 9 + 3));
    }

    let two = SatInstance::new(2, vec![vec![1, -2], vec![2, 1]]).unwrap();
    let h = gen_maxsep_gadget(&two).unwrap();
    assert_eq!((h.graph.order(), h.k), (16 * 6, 4 * 2 + 9 * 2));
    assert!(matches!(SatInstance::new(1, vec![vec![1], vec![1], vec![1]]), Err(Error::LiteralCapExceeded(1))));
}

#[test]
fn random_sampler_contracts() {
    assert!(matches!(gen_random_twin_free(2, 1.0, 0), Err(Error::TwinFreeUnreachable { .. })));
    let t = tree_from_prufer(&[3, 3, 3, 4]).unwrap();
    assert_eq!((t.order(), t.edge_count()), (6, 5));
    assert!(t.is_tree());
}

#[test]
fn specs_are_deterministic() {
    for spec in [
        "random-twin-free:n=9,seed=3",
        "random-triangle-free:n=10,seed=4,coloring-seed=1",
        "random-tree:n=20,seed=7",
        "maxsep-gadget:vars=2,clauses=1+-2/2+1",
    ] {
        let spec: GeneratorSpec = spec.parse().unwrap();
        let (a, b) = (spec.generate().unwrap(), spec.generate().unwrap());
        assert_eq!(write_graph(&a.graph), write_graph(&b.graph));
        assert_eq!(a.coloring.as_ref().map(write_coloring), b.coloring.as_ref().map(write_coloring));
    }
}

fn prufer_decode_oracle(seq: &[usize]) -> Vec<(usize, usize)> {
    let n = seq.len() + 2;
    let mut degree = vec![1; n];
    seq.iter().for_each(|&v| degree[v] += 1);
    let mut edges = Vec::new();
    for &v in seq {
        let leaf = (0..n).find(|&u| degree[u] == 1).unwrap();
        edges.push((leaf.min(v), leaf.max(v)));
        degree[leaf] -= 1;
        degree[v] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&u| degree[u] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges.sort();
    edges
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn split_reduction_adds_one(universe in 1usize..=4, raw in prop::collection::vec(1u8..16, 1..=5)) {
        let mut sets: Vec<Vec<usize>> = raw.iter().map(|&m| (0..universe).filter(|&e| m >> e & 1 == 1).collect()).collect();
        sets.push((0..universe).filter(|e| e % 2 == 0).collect());
        sets.push((0..universe).filter(|e| e % 2 == 1).collect());
        let r = gen_split_from_set_cover(universe, &sets).unwrap();
        assert_split(&r);
        let cover = set_cover_oracle(universe, &sets).unwrap();
        prop_assert_eq!(Oracle::new(&r.graph).sep_rb(&r.coloring), Some(cover + 1));
    }

    #[test]
    fn copies_plus_independent_is_gamma(n in 2usize..=7, seed in any::<u64>(), extra in 0usize..3) {
        let g = gen_random_tree(n, seed).unwrap();
        let gamma = gamma_exact(&g).optimum;
        let k = gamma.saturating_sub(1) + extra;
        let (h, c) = gen_copies_plus_independent(&g, k).unwrap();
        prop_assert_eq!(sep_rb_exact(&h, &c, None).unwrap().optimum, gamma.min(k + 1));
    }

    #[test]
    fn prufer_matches_decoder(seq in (0usize..10).prop_flat_map(|len| prop::collection::vec(0..len + 2, len))) {
        let t = tree_from_prufer(&seq).unwrap();
        prop_assert_eq!(t.edges(), prufer_decode_oracle(&seq));
    }

    #[test]
    fn random_graphs_meet_their_profiles(n in 3usize..=14, p in 0.1f64..0.9, seed in any::<u64>()) {
        if let Ok(g) = gen_random_twin_free(n, p, seed) {
            prop_assert!(g.is_twin_free());
        }
        if let Ok(g) = gen_random_triangle_free(n, p, seed) {
            prop_assert!(g.is_twin_free() && g.find_triangle().is_none());
        }
        if let Ok(g) = gen_random_bounded_degree(n, 4, p, seed) {
            prop_assert!(g.is_twin_free() && g.max_degree() <= 4);
        }
        let t = gen_random_tree(n, seed).unwrap();
        prop_assert!(t.is_tree());
        let c: Coloring = random_coloring(n, seed);
        prop_assert_eq!(c.len(), n);
    }

    #[test]
    fn two_copies_is_gamma_plus_one(n in 3usize..=6, seed in any::<u64>()) {
        let g: Graph = gen_random_tree(n, seed).unwrap();
        let Some(pivot) = (0..n).find(|&v| g.degree(v) == 2) else { return Ok(()) };
        let h = gen_two_copies_ds(&g, pivot).unwrap();
        prop_assert_eq!(sep_rb_exact(&h.graph, &h.coloring, None).unwrap().optimum, gamma_exact(&g).optimum + 1);
    }
}
