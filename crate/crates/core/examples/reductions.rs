//! Hardness reductions, checked against exact solvers on small sources.

use rbsep::approx::{LabeledSet, SetSystem};
use rbsep::exact::{gamma_exact, sep_rb_exact, set_cover_exact};
use rbsep::generators::{
    cycle, gen_copies_plus_independent, gen_maxsep_gadget, gen_split_from_set_cover, gen_two_copies_ds, path, SatInstance,
};
use rbsep::graph::verify_separating;
use rbsep::VertexSet;

fn main() -> rbsep::Result<()> {
    let sets = vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3], vec![1]];
    let sys = SetSystem {
        universe_size: 4,
        element_labels: (0..4).map(|e| e.to_string()).collect(),
        sets: sets
            .iter()
            .enumerate()
            .map(|(i, s)| LabeledSet { label: i.to_string(), members: VertexSet::from_indices(4, s.iter().copied()) })
            .collect(),
    };
    let split = gen_split_from_set_cover(4, &sets)?;
    println!(
        "split graph: cover optimum {} -> sep_RB {}",
        set_cover_exact(&sys)?.optimum,
        sep_rb_exact(&split.graph, &split.coloring, None)?.optimum
    );

    for (name, g, pivot) in [("P4", path(4), 1), ("C6", cycle(6), 0)] {
        let h = gen_two_copies_ds(&g, pivot)?;
        println!("two copies of {name}: γ={} sep_RB={}", gamma_exact(&g).optimum, sep_rb_exact(&h.graph, &h.coloring, None)?.optimum);
    }

    let p6 = path(6);
    for k in 1..=3 {
        let (h, c) = gen_copies_plus_independent(&p6, k)?;
        println!("P6 plus {} red isolated: sep_RB={}", k + 1, sep_rb_exact(&h, &c, None)?.optimum);
    }

    let sat = SatInstance::new(2, vec![vec![1, 2], vec![-1, 2]])?;
    let gadget = gen_maxsep_gadget(&sat)?;
    let assignment = sat.brute_force().expect("satisfiable");
    let set = gadget.prescribed_set(&assignment);
    println!(
        "gadget: n={} k={} prescribed set of size {} is {:?}",
        gadget.graph.order(),
        gadget.k,
        set.len(),
        verify_separating(&gadget.graph, &set)
    );
    Ok(())
}
