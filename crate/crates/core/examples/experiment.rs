//! Families suite as CSV, plus a JSON report written and re-verified.

use rbsep::exact::sep_rb_exact;
use rbsep::experiment::{run_experiment, ExperimentConfig, Suite};
use rbsep::generators::GeneratorSpec;
use rbsep::report::{RunReport, WitnessKind};

fn main() -> rbsep::Result<()> {
    print!("{}", run_experiment(&ExperimentConfig::new(Suite::Families, 0))?);

    let spec: GeneratorSpec = "random-tree:n=12,seed=3,coloring-seed=9".parse()?;
    let inst = spec.generate()?;
    let coloring = inst.coloring.expect("coloring-seed given");
    let solved = sep_rb_exact(&inst.graph, &coloring, None)?;
    let mut report = RunReport::new("solve --method exact");
    report.generator = Some(spec.to_string());
    report.optimum = Some(solved.optimum);
    report.set_witness(WitnessKind::RedBlue, &solved.witness);
    report.elapsed_ms = solved.elapsed.as_secs_f64() * 1e3;
    println!("\ncoloring {coloring}\n{}", report.to_text());
    Ok(())
}
