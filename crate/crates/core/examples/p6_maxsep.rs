//! Worst and best colorings of the path on six vertices.

use rbsep::exact::{maxsep_exact, sep_rb_exact};
use rbsep::generators::path;
use rbsep::graph::verify_rb_separating;
use rbsep::Coloring;

fn main() -> rbsep::Result<()> {
    let p6 = path(6);
    let worst = maxsep_exact(&p6, 14)?;
    let solved = sep_rb_exact(&p6, &worst.worst_coloring, None)?;
    println!("maxsep_RB(P6) = {} under {}", worst.value, worst.worst_coloring);
    println!("  witness {} ({:?})", solved.witness, verify_rb_separating(&p6, &worst.worst_coloring, &solved.witness));

    for mask in 0..64 {
        let c = Coloring::from_mask(6, mask);
        let r = sep_rb_exact(&p6, &c, None)?;
        if r.optimum == 1 {
            println!("sep_RB(P6, {c}) = 1 with witness {}", r.witness);
            break;
        }
    }
    Ok(())
}
