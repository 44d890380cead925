//! Lower bound on maxsep_RB and the sep/maxsep_RB ratio inequalities.

use rbsep::approx::{ceil_log2, counting_lower_bound, floor_log2, maxsep_lower_bound};
use rbsep::exact::{gamma_exact, maxsep_exact, sep_exact};
use rbsep::generators::gen_random_twin_free;

fn main() -> rbsep::Result<()> {
    println!(" n  floor_log2  counting  reported");
    for n in 2..=20 {
        println!("{n:>2}  {:>10}  {:>8}  {:>8}", floor_log2(n), counting_lower_bound(n), maxsep_lower_bound(n));
    }
    println!();
    for seed in 0..6 {
        let n = 10 + seed as usize;
        let g = gen_random_twin_free(n, 0.35, seed)?;
        let maxsep = maxsep_exact(&g, 16)?.value;
        let sep = sep_exact(&g, None)?.optimum;
        let gamma = gamma_exact(&g).optimum;
        println!(
            "n={n:<3} maxsep={maxsep} sep={sep} <= {} and <= {}",
            ceil_log2(n) * maxsep,
            ceil_log2(g.max_degree() + 1) * maxsep + gamma
        );
    }
    Ok(())
}
