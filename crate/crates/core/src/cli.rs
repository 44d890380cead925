//! Command-line interface.
//!
//! Exit codes: 0 success, 1 infeasible or unseparable (or a witness that
//! fails verification), 2 input error, 3 cap exceeded.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use crate::approx::{
    bounded_degree_construct, ceil_log2, floor_log2, maxsep_lower_bound, reduce_rb_to_set_cover, sep_all_pairs_greedy, sep_rb_greedy,
    triangle_free_construct, xp_exact_small_class, DEFAULT_XP_NODE_BUDGET, LOG_BOUND_EXCEPTIONS,
};
use crate::error::{Error, Result};
use crate::exact::{gamma_exact, maxsep_exact, sep_exact, sep_rb_exact, DEFAULT_MAXSEP_CAP};
use crate::experiment::{run_experiment, ExperimentConfig, Suite};
use crate::generators::GeneratorSpec;
use crate::graph::{verify_dominating, verify_rb_separating, verify_separating, Coloring, Graph, Verdict};
use crate::io::{read_coloring, read_graph, read_vertex_set, write_coloring, write_graph};
use crate::report::{BoundCheck, InputDigest, RunReport, TreeCounts, WitnessKind};
use crate::trees::{tree_profile, tree_rb_construct};

/// Default cap on the order accepted by exact sep and γ computations.
pub const DEFAULT_SEP_CAP: usize = 64;

#[derive(Parser, Debug)]
#[command(name = "rbsep", version, about = "Red-blue separating sets in graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SolveMethod {
    Exact,
    Greedy,
    TriangleFree,
    BoundedDegree,
    Xp,
    Tree,
    Auto,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MaxsepMethod {
    Exact,
    Approx,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VerifyMode {
    /// Red-blue pairs under `--coloring`.
    RedBlue,
    /// All vertex pairs.
    AllPairs,
    Dominating,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Red-blue separating set for a colored graph.
    Solve {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        coloring: PathBuf,
        #[arg(long, value_enum, default_value = "auto")]
        method: SolveMethod,
        /// Decision threshold: exit 1 if sep_RB exceeds it (exact and xp).
        #[arg(long)]
        budget: Option<usize>,
        /// Largest order solved exactly.
        #[arg(long, default_value_t = DEFAULT_SEP_CAP)]
        cap: usize,
        /// JSON sidecar path.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// maxsep_RB: exact over all colorings, or greedy sandwich bounds.
    Maxsep {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum, default_value = "exact")]
        method: MaxsepMethod,
        #[arg(long, default_value_t = DEFAULT_MAXSEP_CAP)]
        cap: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate every applicable inequality between sep, maxsep_RB, γ, Δ and s(T).
    Bounds {
        #[arg(long)]
        graph: PathBuf,
        /// Largest order for exact maxsep_RB.
        #[arg(long, default_value_t = DEFAULT_MAXSEP_CAP)]
        cap: usize,
        /// Largest order for exact sep and γ.
        #[arg(long, default_value_t = DEFAULT_SEP_CAP)]
        sep_cap: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write `<out>.graph`, `<out>.coloring` (when defined) and `<out>.spec`.
    Generate {
        /// `family:key=value,...`
        spec: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Write the set cover instance of a colored graph.
    Reduce {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        coloring: PathBuf,
        /// Output path; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a vertex set, or re-verify the witness of a JSON report.
    Verify {
        #[arg(long, required_unless_present = "report")]
        graph: Option<PathBuf>,
        #[arg(long, required_unless_present = "report")]
        set: Option<PathBuf>,
        #[arg(long)]
        coloring: Option<PathBuf>,
        /// Defaults to red-blue when `--coloring` is given, all pairs otherwise.
        #[arg(long, value_enum)]
        mode: Option<VerifyMode>,
        #[arg(long, conflicts_with_all = ["graph", "set", "coloring"])]
        report: Option<PathBuf>,
    },
    /// Run a batch suite and write CSV.
    Experiment {
        #[arg(long)]
        suite: Suite,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Comma-separated graph orders.
        #[arg(long, value_delimiter = ',')]
        sizes: Vec<usize>,
        /// Instances per order.
        #[arg(long, default_value_t = 10)]
        count: usize,
        /// Output path; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Unseparable { .. } | Error::Infeasible { .. } => 1,
        Error::CapExceeded { .. } | Error::BudgetExceeded { .. } => 3,
        _ => 2,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

fn emit(report: &RunReport, out: Option<&Path>) -> Result<()> {
    print!("{}", report.to_text());
    if let Some(p) = out {
        report.write_json(p)?;
    }
    Ok(())
}

fn write_or_print(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => fs::write(p, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn verdict_code(v: &Verdict) -> i32 {
    if v.is_valid() {
        0
    } else {
        1
    }
}

fn verdict_text(v: &Verdict) -> String {
    match v {
        Verdict::Valid => "valid".to_string(),
        Verdict::Pair(u, w) => format!("invalid: vertices {u} and {w} share a code"),
        Verdict::Undominated(u) => format!("invalid: vertex {u} is not dominated"),
    }
}

fn require_cap(g: &Graph, cap: usize) -> Result<()> {
    if g.order() > cap {
        Err(Error::CapExceeded { n: g.order(), cap })
    } else {
        Ok(())
    }
}

fn execute(cmd: Command) -> Result<i32> {
    match cmd {
        Command::Solve { graph, coloring, method, budget, cap, out } => {
            let g = read_graph(&graph)?;
            let c = read_coloring(&coloring, g.order())?;
            let mut report = RunReport::new(format!("solve --method {}", method_name(method)));
            report.inputs = vec![InputDigest::of_file("graph", &graph)?, InputDigest::of_file("coloring", &coloring)?];
            let code = solve(&g, &c, method, budget, cap, &mut report)?;
            emit(&report, out.as_deref())?;
            Ok(code)
        }
        Command::Maxsep { graph, method, cap, out } => {
            let g = read_graph(&graph)?;
            g.require_twin_free()?;
            let t0 = Instant::now();
            let mut report = RunReport::new(format!("maxsep --method {method:?}").to_lowercase());
            report.inputs = vec![InputDigest::of_file("graph", &graph)?];
            match method {
                MaxsepMethod::Exact => {
                    let r = maxsep_exact(&g, cap)?;
                    let witness = sep_rb_exact(&g, &r.worst_coloring, None)?;
                    report.method = Some("exact".into());
                    report.value = Some(r.value);
                    report.worst_coloring = Some(r.worst_coloring.to_string());
                    report.nodes_explored = Some(r.nodes_explored);
                    report.set_witness(WitnessKind::RedBlue, &witness.witness);
                    report.verified = Some(verify_rb_separating(&g, &r.worst_coloring, &witness.witness).is_valid());
                }
                MaxsepMethod::Approx => {
                    let r = sep_all_pairs_greedy(&g)?;
                    report.method = Some("all-pairs-greedy".into());
                    report.upper_bound = Some(r.solution.len());
                    report.lower_bound = Some(maxsep_lower_bound(g.order()));
                    report.guarantee = Some(r.guarantee);
                    report.verified = Some(verify_separating(&g, &r.solution).is_valid());
                    report.set_witness(WitnessKind::AllPairs, &r.solution);
                }
            }
            report.elapsed_ms = t0.elapsed().as_secs_f64() * 1e3;
            emit(&report, out.as_deref())?;
            Ok(0)
        }
        Command::Bounds { graph, cap, sep_cap, out } => {
            let g = read_graph(&graph)?;
            let mut report = RunReport::new("bounds");
            report.inputs = vec![InputDigest::of_file("graph", &graph)?];
            bounds(&g, cap, sep_cap, &mut report)?;
            emit(&report, out.as_deref())?;
            Ok(0)
        }
        Command::Generate { spec, out } => {
            let spec: GeneratorSpec = spec.parse()?;
            let generated = spec.generate()?;
            let with_ext = |ext: &str| {
                let mut p = out.clone().into_os_string();
                p.push(ext);
                PathBuf::from(p)
            };
            fs::write(with_ext(".graph"), write_graph(&generated.graph))?;
            if let Some(c) = &generated.coloring {
                fs::write(with_ext(".coloring"), write_coloring(c))?;
            }
            let mut provenance = spec.to_string();
            if let Some(k) = generated.k {
                provenance.push_str(&format!(" k={k}"));
            }
            fs::write(with_ext(".spec"), provenance.clone() + "\n")?;
            println!("generated {provenance} n={} m={}", generated.graph.order(), generated.graph.edge_count());
            Ok(0)
        }
        Command::Reduce { graph, coloring, out } => {
            let g = read_graph(&graph)?;
            let c = read_coloring(&coloring, g.order())?;
            write_or_print(out.as_deref(), &reduce_rb_to_set_cover(&g, &c)?.to_text())?;
            Ok(0)
        }
        Command::Verify { graph, set, coloring, mode, report } => {
            if let Some(path) = report {
                let v = RunReport::load(&path)?.reverify()?;
                println!("{}", verdict_text(&v));
                return Ok(verdict_code(&v));
            }
            let g = read_graph(graph.expect("required by clap"))?;
            let s = read_vertex_set(set.expect("required by clap"), g.order())?;
            let mode = mode.unwrap_or(if coloring.is_some() { VerifyMode::RedBlue } else { VerifyMode::AllPairs });
            let v = match mode {
                VerifyMode::RedBlue => {
                    let path = coloring.ok_or_else(|| Error::Spec("red-blue mode needs --coloring".into()))?;
                    verify_rb_separating(&g, &read_coloring(path, g.order())?, &s)
                }
                VerifyMode::AllPairs => verify_separating(&g, &s),
                VerifyMode::Dominating => verify_dominating(&g, &s),
            };
            println!("{}", verdict_text(&v));
            Ok(verdict_code(&v))
        }
        Command::Experiment { suite, seed, sizes, count, out } => {
            let cfg = ExperimentConfig { suite, seed, sizes, count };
            write_or_print(out.as_deref(), &run_experiment(&cfg)?)?;
            Ok(0)
        }
    }
}

fn method_name(m: SolveMethod) -> &'static str {
    match m {
        SolveMethod::Exact => "exact",
        SolveMethod::Greedy => "greedy",
        SolveMethod::TriangleFree => "triangle-free",
        SolveMethod::BoundedDegree => "bounded-degree",
        SolveMethod::Xp => "xp",
        SolveMethod::Tree => "tree",
        SolveMethod::Auto => "auto",
    }
}

/// Exact when within the cap, else the first construction whose
/// precondition holds, else greedy.
fn auto_method(g: &Graph, cap: usize) -> SolveMethod {
    let p = g.profile();
    if g.order() <= cap {
        SolveMethod::Exact
    } else if p.tree && g.order() >= 5 {
        SolveMethod::Tree
    } else if p.triangle_free && p.twin_free {
        SolveMethod::TriangleFree
    } else {
        SolveMethod::Greedy
    }
}

fn solve(g: &Graph, c: &Coloring, method: SolveMethod, budget: Option<usize>, cap: usize, report: &mut RunReport) -> Result<i32> {
    let t0 = Instant::now();
    let method = if method == SolveMethod::Auto { auto_method(g, cap) } else { method };
    report.method = Some(method_name(method).into());
    let solution = match method {
        SolveMethod::Exact => {
            require_cap(g, cap)?;
            let r = sep_rb_exact(g, c, budget)?;
            report.optimum = Some(r.optimum);
            report.nodes_explored = Some(r.nodes_explored);
            r.witness
        }
        SolveMethod::Xp => {
            let r = xp_exact_small_class(g, c, DEFAULT_XP_NODE_BUDGET)?;
            report.optimum = Some(r.optimum);
            report.nodes_explored = Some(r.nodes_explored);
            if let Some(b) = budget.filter(|&b| r.optimum > b) {
                return Err(Error::Infeasible { budget: b });
            }
            r.witness
        }
        SolveMethod::Greedy | SolveMethod::TriangleFree | SolveMethod::BoundedDegree => {
            let r = match method {
                SolveMethod::Greedy => sep_rb_greedy(g, c)?,
                SolveMethod::TriangleFree => triangle_free_construct(g, c)?,
                _ => bounded_degree_construct(g, c)?,
            };
            report.guarantee = Some(r.guarantee);
            report.size_bound = r.size_bound;
            report.lower_bound = Some(r.optimum_lower_bound);
            r.solution
        }
        SolveMethod::Tree => {
            let s = tree_rb_construct(g, c)?;
            let prof = tree_profile(g)?;
            report.size_bound = Some((g.order() + prof.support_count()) / 2);
            report.tree = Some(TreeCounts::from(&prof));
            s
        }
        SolveMethod::Auto => unreachable!("resolved above"),
    };
    report.elapsed_ms = t0.elapsed().as_secs_f64() * 1e3;
    let verdict = verify_rb_separating(g, c, &solution);
    report.verified = Some(verdict.is_valid());
    report.set_witness(WitnessKind::RedBlue, &solution);
    Ok(verdict_code(&verdict))
}

fn bounds(g: &Graph, cap: usize, sep_cap: usize, report: &mut RunReport) -> Result<()> {
    let t0 = Instant::now();
    g.require_twin_free()?;
    let n = g.order();
    let delta = g.max_degree();
    let (sep, gamma) = if n <= sep_cap {
        let s = sep_exact(g, None)?;
        report.set_witness(WitnessKind::AllPairs, &s.witness);
        (Some(s.optimum), Some(gamma_exact(g).optimum))
    } else {
        (None, None)
    };
    let maxsep = match maxsep_exact(g, cap) {
        Ok(r) => {
            report.worst_coloring = Some(r.worst_coloring.to_string());
            Some(r.value)
        }
        Err(Error::CapExceeded { .. }) => None,
        Err(e) => return Err(e),
    };
    report.optimum = sep;
    report.value = maxsep;
    report.upper_bound = Some(sep_all_pairs_greedy(g)?.solution.len());
    report.lower_bound = Some(maxsep_lower_bound(n));

    let f = |x: usize| x as f64;
    let checks = &mut report.bound_checks;
    let cap_note = |what: &str, c: usize| format!("{what} needs n <= {c}");
    match maxsep {
        Some(_) if LOG_BOUND_EXCEPTIONS.contains(&n) => checks.push(BoundCheck::skipped(
            "floor_log2_n_le_maxsep",
            format!("not claimed for n = {n}; counting bound is {}", maxsep_lower_bound(n)),
        )),
        Some(m) => checks.push(BoundCheck::at_most("floor_log2_n_le_maxsep", f(floor_log2(n)), f(m))),
        None => checks.push(BoundCheck::skipped("floor_log2_n_le_maxsep", cap_note("maxsep", cap))),
    }
    match (sep, maxsep, gamma) {
        (Some(s), Some(m), Some(gm)) => {
            checks.push(BoundCheck::at_most("maxsep_le_sep", f(m), f(s)));
            checks.push(BoundCheck::at_most("sep_le_ceil_log2_n_maxsep", f(s), f(ceil_log2(n) * m)));
            checks.push(BoundCheck::at_most("sep_le_ceil_log2_delta_maxsep_plus_gamma", f(s), f(ceil_log2(delta + 1) * m + gm)));
        }
        _ => {
            let mut missing = Vec::new();
            if sep.is_none() {
                missing.push(cap_note("sep", sep_cap));
            }
            if maxsep.is_none() {
                missing.push(cap_note("maxsep", cap));
            }
            for name in ["maxsep_le_sep", "sep_le_ceil_log2_n_maxsep", "sep_le_ceil_log2_delta_maxsep_plus_gamma"] {
                checks.push(BoundCheck::skipped(name, missing.join("; ")));
            }
        }
    }
    match sep {
        Some(s) if n >= 2 => checks.push(BoundCheck::at_most("sep_le_n_minus_1", f(s), f(n - 1))),
        Some(_) => {}
        None => checks.push(BoundCheck::skipped("sep_le_n_minus_1", cap_note("sep", sep_cap))),
    }
    if g.is_tree() && n >= 5 {
        let prof = tree_profile(g)?;
        let s = prof.support_count();
        report.tree = Some(TreeCounts::from(&prof));
        match maxsep {
            Some(m) => {
                checks.push(BoundCheck::at_most("tree_maxsep_le_half_n_plus_s", f(m), f(n + s) / 2.0));
                checks.push(BoundCheck::at_most("tree_maxsep_le_two_thirds_n", f(m), 2.0 * f(n) / 3.0));
            }
            None => {
                for name in ["tree_maxsep_le_half_n_plus_s", "tree_maxsep_le_two_thirds_n"] {
                    checks.push(BoundCheck::skipped(name, cap_note("maxsep", cap)));
                }
            }
        }
        match sep {
            Some(sv) => checks.push(BoundCheck::at_most("tree_sep_le_n_minus_s", f(sv), f(n - s))),
            None => checks.push(BoundCheck::skipped("tree_sep_le_n_minus_s", cap_note("sep", sep_cap))),
        }
    }
    report.elapsed_ms = t0.elapsed().as_secs_f64() * 1e3;
    Ok(())
}
