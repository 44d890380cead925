//! Closed-form values on the extremal families, recomputed exactly.

use rbsep::exact::{maxsep_exact, sep_exact, sep_rb_exact};
use rbsep::generators::{gen_complete_multipartite, gen_half_graph_complement, gen_power_set_graph, gen_spider};
use rbsep::{Coloring, Graph};

fn row(name: &str, g: &Graph, c: &Coloring, expected: usize) -> rbsep::Result<()> {
    let adversarial = sep_rb_exact(g, c, None)?.optimum;
    let maxsep = maxsep_exact(g, 14).map(|r| r.value.to_string()).unwrap_or_else(|_| "-".into());
    let sep = sep_exact(g, None)?.optimum;
    println!("{name:<22} n={:<3} sep={sep:<3} maxsep={maxsep:<3} generated={adversarial:<3} expected={expected}", g.order());
    Ok(())
}

fn main() -> rbsep::Result<()> {
    for k in 1..=3 {
        let (g, c) = gen_half_graph_complement(k)?;
        row(&format!("half-complement k={k}"), &g, &c, 2 * k - 1)?;
    }
    for k in 1..=3 {
        let (g, c) = gen_power_set_graph(k)?;
        row(&format!("power-set k={k}"), &g, &c, k)?;
    }
    for parts in [vec![5, 5], vec![5, 5, 5]] {
        let (g, c) = gen_complete_multipartite(&parts, true)?;
        row(&format!("multipartite {parts:?}"), &g, &c, (g.order() - parts.len()) / 2)?;
    }
    for k in 1..=2 {
        let (g, c) = gen_spider(k)?;
        row(&format!("spider k={k}"), &g, &c, 3 * k)?;
    }
    Ok(())
}
