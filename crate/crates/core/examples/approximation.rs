//! Greedy set cover against the exact optimum, plus the small-class constructions.

use rbsep::approx::{bounded_degree_construct, sep_rb_greedy, triangle_free_construct, xp_exact_small_class, DEFAULT_XP_NODE_BUDGET};
use rbsep::exact::sep_rb_exact;
use rbsep::generators::{gen_random_bounded_degree, gen_random_triangle_free, gen_random_twin_free, random_coloring};

fn main() -> rbsep::Result<()> {
    println!("greedy vs exact on random twin-free graphs");
    for seed in 0..8 {
        let n = 8 + seed as usize % 5;
        let g = gen_random_twin_free(n, 0.4, seed)?;
        let c = random_coloring(n, seed);
        let exact = sep_rb_exact(&g, &c, None)?.optimum;
        let greedy = sep_rb_greedy(&g, &c)?;
        println!("  n={n:<3} exact={exact} greedy={} bound={:.2}", greedy.solution.len(), greedy.guarantee * exact as f64);
    }

    let g = gen_random_triangle_free(14, 0.3, 7)?;
    let c = random_coloring(14, 3);
    let built = triangle_free_construct(&g, &c)?;
    let xp = xp_exact_small_class(&g, &c, DEFAULT_XP_NODE_BUDGET)?;
    println!("triangle-free: constructed {} (<= 3·{}), optimum {}", built.solution.len(), c.min_class_size(), xp.optimum);

    let g = gen_random_bounded_degree(14, 4, 0.5, 11)?;
    let c = random_coloring(14, 5);
    let built = bounded_degree_construct(&g, &c)?;
    println!(
        "Δ={}: constructed {} (<= {:?}), optimum {}",
        g.max_degree(),
        built.solution.len(),
        built.size_bound,
        sep_rb_exact(&g, &c, None)?.optimum
    );
    Ok(())
}
