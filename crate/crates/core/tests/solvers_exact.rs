mod common;

use common::{subsets_of_size, Oracle};
use proptest::prelude::*;
use rbsep::approx::{ceil_log2, floor_log2};
use rbsep::exact::{bondy_remove, gamma_exact, maxsep_exact, sep_exact, sep_exact_allow_twins, sep_rb_exact};
use rbsep::generators::{
    complete, gen_complete_multipartite, gen_half_graph_complement, gen_power_set_graph, gen_random_tree, gen_random_twin_free, path,
    random_coloring, tree_from_prufer,
};
use rbsep::graph::{verify_dominating, verify_rb_separating, verify_separating};
use rbsep::{Color, Coloring, Error, Graph, VertexSet};

/// Worst coloring of `g` according to the oracle.
fn oracle_worst(g: &Graph) -> (Coloring, usize) {
    let oracle = Oracle::new(g);
    (0u64..1 << g.order())
        .map(|m| {
            let c = Coloring::from_mask(g.order(), m);
            let v = oracle.sep_rb(&c).unwrap();
            (c, v)
        })
        .max_by_key(|(_, v)| *v)
        .unwrap()
}

#[test]
fn p6_single_vertex_coloring_exists() {
    let p6 = path(6);
    let oracle = Oracle::new(&p6);
    let c = (0u64..64).map(|m| Coloring::from_mask(6, m)).find(|c| oracle.sep_rb(c) == Some(1)).unwrap();
    let r = sep_rb_exact(&p6, &c, None).unwrap();
    assert_eq!(r.optimum, 1);
    assert!(verify_rb_separating(&p6, &c, &r.witness).is_valid());
}

#[test]
fn monochromatic_needs_nothing() {
    for g in [path(5), complete(4)] {
        let r = sep_rb_exact(&g, &Coloring::monochromatic(g.order(), Color::Blue), None).unwrap();
        assert_eq!(r.optimum, 0);
        assert!(r.witness.is_empty());
    }
}

#[test]
fn k55_values() {
    let (k55, c) = gen_complete_multipartite(&[5, 5], true).unwrap();
    assert_eq!(sep_rb_exact(&k55, &c, None).unwrap().optimum, 4);
    assert_eq!(sep_exact(&k55, None).unwrap().optimum, 8);
    assert_eq!(sep_exact_allow_twins(&k55, None).unwrap().optimum, 8);
    assert_eq!(gamma_exact(&k55).optimum, 2);
}

#[test]
fn sep_examples() {
    let r = sep_exact(&path(5), None).unwrap();
    assert_eq!(r.optimum, 3);
    assert!(verify_separating(&path(5), &r.witness).is_valid());
    let (h2, _) = gen_half_graph_complement(2).unwrap();
    assert_eq!(sep_exact(&h2, None).unwrap().optimum, 3);
    assert!(matches!(sep_exact(&complete(2), None), Err(Error::NotTwinFree(_))));
}

#[test]
fn twins_allowed_variant_skips_twin_pairs() {
    // Pendant pair 2, 3 are twins on the triangle 1-2-3.
    let g = Graph::from_edges(4, [(0, 1), (1, 2), (1, 3), (2, 3)]).unwrap();
    let r = sep_exact_allow_twins(&g, None).unwrap();
    let oracle = Oracle::new(&g);
    let smallest = (0..=4)
        .find(|&k| {
            subsets_of_size(4, k).any(|s| {
                let m = common::to_mask(&s);
                (0..4).all(|u| (u + 1..4).all(|v| oracle.twins(u, v) || oracle.closed[u] & m != oracle.closed[v] & m))
            })
        })
        .unwrap();
    assert_eq!(r.optimum, smallest);
}

#[test]
fn budget_and_twins() {
    let p6 = path(6);
    let (c, worst) = oracle_worst(&p6);
    assert_eq!(worst, 3);
    assert!(matches!(sep_rb_exact(&p6, &c, Some(2)), Err(Error::Infeasible { budget: 2 })));
    assert_eq!(sep_rb_exact(&p6, &c, Some(3)).unwrap().optimum, 3);
    let rb = Coloring::from_reds(2, [0]);
    assert!(matches!(sep_rb_exact(&complete(2), &rb, None), Err(Error::Unseparable { red: 0, blue: 1 })));
}

#[test]
fn gamma_examples() {
    assert_eq!(gamma_exact(&path(3)).optimum, 1);
    let r = gamma_exact(&path(6));
    assert_eq!(r.optimum, 2);
    assert!(verify_dominating(&path(6), &r.witness).is_valid());
}

#[test]
fn maxsep_examples() {
    let r = maxsep_exact(&path(6), 14).unwrap();
    assert_eq!(r.value, 3);
    assert_eq!(sep_rb_exact(&path(6), &r.worst_coloring, None).unwrap().optimum, 3);
    for (k, expected) in [(1, 1), (2, 3), (3, 5)] {
        let (g, _) = gen_half_graph_complement(k).unwrap();
        assert_eq!(maxsep_exact(&g, 14).unwrap().value, expected);
    }
    let (g, _) = gen_power_set_graph(3).unwrap();
    assert_eq!(maxsep_exact(&g, 14).unwrap().value, 3);
    assert!(matches!(maxsep_exact(&path(15), 14), Err(Error::CapExceeded { n: 15, cap: 14 })));
}

#[test]
fn bondy_examples() {
    let family = [VertexSet::from_indices(2, [0]), VertexSet::from_indices(2, [0, 1])];
    assert_eq!(bondy_remove(&family).unwrap(), 0);
    for g in [path(4), gen_half_graph_complement(2).unwrap().0] {
        let n = g.order();
        let family: Vec<VertexSet> = (0..n).map(|v| g.closed(v).clone()).collect();
        let x = bondy_remove(&family).unwrap();
        let rest = VertexSet::full(n).difference(&VertexSet::from_indices(n, [x]));
        assert!(verify_separating(&g, &rest).is_valid());
    }
    assert!(matches!(bondy_remove(&[VertexSet::new(2), VertexSet::new(2)]), Err(Error::NoDistinctFamily { .. })));
}

#[test]
fn every_small_labeled_tree_matches_oracle() {
    for n in 3..=6usize {
        let codes = n.pow(n as u32 - 2);
        for code in 0..codes {
            let seq: Vec<usize> = (0..n - 2).map(|i| code / n.pow(i as u32) % n).collect();
            let t = tree_from_prufer(&seq).unwrap();
            let oracle = Oracle::new(&t);
            for mask in 0..1u64 << n {
                let c = Coloring::from_mask(n, mask);
                match sep_rb_exact(&t, &c, None) {
                    Ok(r) => assert_eq!(Some(r.optimum), oracle.sep_rb(&c), "{seq:?} {c}"),
                    Err(e) => panic!("{seq:?} {c}: {e}"),
                }
            }
        }
    }
}

fn twin_free_instance() -> impl Strategy<Value = (Graph, Coloring)> {
    (3usize..=8, 0.2f64..0.8, any::<u64>(), any::<u64>()).prop_filter_map("twin-free sample", |(n, p, seed, cseed)| {
        gen_random_twin_free(n, p, seed).ok().map(|g| (g, random_coloring(n, cseed)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn sep_rb_matches_oracle_and_is_tight((g, c) in twin_free_instance()) {
        let oracle = Oracle::new(&g);
        let r = sep_rb_exact(&g, &c, None).unwrap();
        prop_assert_eq!(Some(r.optimum), oracle.sep_rb(&c));
        prop_assert_eq!(r.witness.len(), r.optimum);
        prop_assert!(oracle.is_rb_separating(&c, &r.witness));
        if r.optimum > 0 {
            prop_assert!(!subsets_of_size(g.order(), r.optimum - 1).any(|s| oracle.is_rb_separating(&c, &s)));
        }
    }

    #[test]
    fn swap_preserves_value((g, c) in twin_free_instance()) {
        prop_assert_eq!(sep_rb_exact(&g, &c, None).unwrap().optimum, sep_rb_exact(&g, &c.swapped(), None).unwrap().optimum);
    }

    #[test]
    fn sep_and_gamma_match_oracle((g, _) in twin_free_instance()) {
        let oracle = Oracle::new(&g);
        let sep = sep_exact(&g, None).unwrap();
        prop_assert_eq!(Some(sep.optimum), oracle.sep());
        prop_assert!(oracle.is_separating(&sep.witness));
        let gamma = gamma_exact(&g);
        prop_assert_eq!(gamma.optimum, oracle.gamma());
        prop_assert!(oracle.is_dominating(&gamma.witness));
    }

    #[test]
    fn maxsep_bounds((g, _) in twin_free_instance()) {
        let n = g.order();
        let oracle = Oracle::new(&g);
        let maxsep = maxsep_exact(&g, 14).unwrap();
        let sep = sep_exact(&g, None).unwrap().optimum;
        let gamma = gamma_exact(&g).optimum;
        prop_assert_eq!(Some(maxsep.value), oracle.maxsep());
        prop_assert!(maxsep.value <= sep);
        if n != 8 && n != 9 {
            prop_assert!(maxsep.value >= floor_log2(n));
        }
        prop_assert!(sep <= ceil_log2(n) * maxsep.value);
        prop_assert!(sep <= ceil_log2(g.max_degree() + 1) * maxsep.value + gamma);
    }

    #[test]
    fn bondy_output_keeps_traces_distinct(n in 2usize..=9, seed in any::<u64>()) {
        let g = gen_random_tree(n, seed).unwrap();
        if !g.is_twin_free() {
            return Ok(());
        }
        let family: Vec<VertexSet> = (0..n).map(|v| g.closed(v).clone()).collect();
        let x = bondy_remove(&family).unwrap();
        let keep = VertexSet::full(n).difference(&VertexSet::from_indices(n, [x]));
        for i in 0..n {
            for j in i + 1..n {
                prop_assert!(!family[i].eq_within(&family[j], &keep));
            }
        }
    }
}
