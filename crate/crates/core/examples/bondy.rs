//! Removing one element from n distinct sets over n elements keeps them distinct.

use rbsep::exact::bondy_remove;
use rbsep::generators::gen_half_graph_complement;
use rbsep::graph::verify_separating;
use rbsep::VertexSet;

fn main() -> rbsep::Result<()> {
    let (g, _) = gen_half_graph_complement(4)?;
    let n = g.order();
    let family: Vec<VertexSet> = (0..n).map(|v| g.closed(v).clone()).collect();
    let x = bondy_remove(&family)?;
    let rest = VertexSet::full(n).difference(&VertexSet::from_indices(n, [x]));
    println!("drop vertex {x}; V - {{{x}}} = {rest} separates all pairs: {:?}", verify_separating(&g, &rest));
    Ok(())
}
