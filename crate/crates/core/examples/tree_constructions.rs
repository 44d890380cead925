//! Tree constructions: parity sets, the n - s all-pairs set, and the (n + s)/2 red-blue set.

use rbsep::exact::maxsep_exact;
use rbsep::generators::{gen_random_tree, random_coloring};
use rbsep::graph::{verify_rb_separating, verify_separating};
use rbsep::trees::{parity_sets, single_red_sep, tree_all_pairs_construct, tree_profile, tree_rb_construct_detailed};
use rbsep::Coloring;

fn main() -> rbsep::Result<()> {
    let t = gen_random_tree(14, 42)?;
    let prof = tree_profile(&t)?;
    let (n, s) = (t.order(), prof.support_count());
    println!("tree n={n} leaves={} supports={s}", prof.leaf_count());

    let root = (0..n).find(|&v| !prof.is_leaf(v)).expect("n >= 3");
    let (c1, c2) = parity_sets(&t, root)?;
    println!(
        "parity sets from {root}: |C1|={} |C2|={} ({:?}, {:?})",
        c1.len(),
        c2.len(),
        verify_separating(&t, &c1),
        verify_separating(&t, &c2)
    );

    let all = tree_all_pairs_construct(&t)?;
    println!("all-pairs set: {} = n - s", all.len());

    let worst = maxsep_exact(&t, 16)?;
    let built = tree_rb_construct_detailed(&t, &worst.worst_coloring)?;
    println!(
        "worst coloring {}: maxsep={} constructed={} bound (n+s)/2={}",
        worst.worst_coloring,
        worst.value,
        built.set.len(),
        (n + s) / 2
    );

    let c = random_coloring(n, 1);
    let built = tree_rb_construct_detailed(&t, &c)?;
    println!("random coloring {c}: constructed {} ({:?})", built.set.len(), verify_rb_separating(&t, &c, &built.set));

    let lone = Coloring::from_reds(n, [root]);
    println!("single red vertex {root}: separated by {}", single_red_sep(&t, &lone)?);
    Ok(())
}
