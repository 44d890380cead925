use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use proptest::prelude::*;
use rbsep::approx::{greedy_set_cover, sep_rb_greedy, SetSystem};
use rbsep::generators::{gen_complete_multipartite, gen_random_tree, gen_random_twin_free, path, random_coloring};
use rbsep::io::{read_coloring, read_graph, write_coloring, write_graph};
use rbsep::report::RunReport;
use rbsep::{Coloring, Graph};
use tempfile::TempDir;

fn rbsep(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rbsep")).current_dir(dir).args(args).output().unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn field<'a>(text: &'a str, key: &str) -> Option<&'a str> {
    text.lines().find_map(|l| l.strip_prefix(key).and_then(|r| r.strip_prefix(": ")))
}

struct Workspace(TempDir);

impl Workspace {
    fn new() -> Self {
        Workspace(tempfile::tempdir().unwrap())
    }

    fn dir(&self) -> &Path {
        self.0.path()
    }

    fn write(&self, name: &str, text: &str) -> PathBuf {
        let p = self.dir().join(name);
        std::fs::write(&p, text).unwrap();
        p
    }

    fn graph(&self, name: &str, g: &Graph) -> String {
        self.write(name, &write_graph(g)).to_str().unwrap().to_string()
    }

    fn coloring(&self, name: &str, c: &Coloring) -> String {
        self.write(name, &write_coloring(c)).to_str().unwrap().to_string()
    }

    fn run(&self, args: &[&str]) -> Output {
        rbsep(self.dir(), args)
    }
}

#[test]
fn solve_examples() {
    let ws = Workspace::new();
    let g = ws.graph("p6.graph", &path(6));
    let mono = ws.write("mono.coloring", "BBBBBB\n");
    let out = ws.run(&["solve", "--graph", &g, "--coloring", mono.to_str().unwrap(), "--method", "exact"]);
    assert_eq!(code(&out), 0);
    assert_eq!(field(&stdout(&out), "optimum"), Some("0"));

    let alt = ws.write("alt.coloring", "RBRBRB\n");
    let out = ws.run(&["solve", "--graph", &g, "--coloring", alt.to_str().unwrap(), "--method", "exact"]);
    assert_eq!(field(&stdout(&out), "optimum"), Some("3"));
    let out = ws.run(&["solve", "--graph", &g, "--coloring", alt.to_str().unwrap(), "--method", "exact", "--budget", "2"]);
    assert_eq!(code(&out), 1);

    let (k55, c) = gen_complete_multipartite(&[5, 5], true).unwrap();
    let (kg, kc) = (ws.graph("k55.graph", &k55), ws.coloring("k55.coloring", &c));
    let out = ws.run(&["solve", "--graph", &kg, "--coloring", &kc, "--method", "greedy"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert_eq!(field(&text, "verified"), Some("true"));
    let guarantee: f64 = field(&text, "guarantee").unwrap().parse().unwrap();
    assert!((guarantee - 2.0 * 10f64.ln()).abs() < 1e-3);
}

#[test]
fn exit_codes() {
    let ws = Workspace::new();
    let k2 = ws.write("k2.graph", "2 1\n0 1\n");
    let rb = ws.write("rb.coloring", "RB\n");
    let out = ws.run(&["solve", "--graph", k2.to_str().unwrap(), "--coloring", rb.to_str().unwrap()]);
    assert_eq!(code(&out), 1);

    let bad = ws.write("bad.graph", "3 2\n0 1\n1 x\n");
    let out = ws.run(&["bounds", "--graph", bad.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));

    let g = ws.graph("p15.graph", &path(15));
    assert_eq!(code(&ws.run(&["maxsep", "--graph", &g, "--cap", "14"])), 3);
    let tri = ws.graph("k3.graph", &rbsep::generators::complete(3));
    assert_eq!(code(&ws.run(&["maxsep", "--graph", &tri])), 2);
}

#[test]
fn maxsep_and_bounds() {
    let ws = Workspace::new();
    let p6 = ws.graph("p6.graph", &path(6));
    let out = ws.run(&["maxsep", "--graph", &p6]);
    assert_eq!(field(&stdout(&out), "value"), Some("3"));

    let out = ws.run(&["generate", "half-complement:k=3", "--out", "h3"]);
    assert_eq!(code(&out), 0);
    let out = ws.run(&["maxsep", "--graph", "h3.graph"]);
    assert_eq!(field(&stdout(&out), "value"), Some("5"));

    for g in ["p6.graph", "h3.graph"] {
        let out = ws.run(&["maxsep", "--graph", g, "--method", "approx"]);
        let text = stdout(&out);
        let lower: usize = field(&text, "lower_bound").unwrap().parse().unwrap();
        let upper: usize = field(&text, "upper_bound").unwrap().parse().unwrap();
        assert!(lower <= upper);
    }

    let out = ws.run(&["bounds", "--graph", &p6]);
    let text = stdout(&out);
    assert_eq!(code(&out), 0);
    assert!(text.contains("bound: floor_log2_n_le_maxsep 2 <= 3 holds"));
    assert!(text.contains("bound: tree_maxsep_le_half_n_plus_s 3 <= 4 holds"));
    assert!(!text.contains("fails"));

    ws.run(&["generate", "spider:k=2", "--out", "spider"]);
    let text = stdout(&ws.run(&["bounds", "--graph", "spider.graph"]));
    assert_eq!(field(&text, "value"), Some("6"));

    ws.run(&["generate", "multipartite:parts=5/5", "--out", "k55"]);
    let text = stdout(&ws.run(&["bounds", "--graph", "k55.graph"]));
    assert_eq!((field(&text, "optimum"), field(&text, "value")), (Some("8"), Some("4")));

    ws.run(&["generate", "random-twin-free:n=16,seed=2", "--out", "r16"]);
    let text = stdout(&ws.run(&["bounds", "--graph", "r16.graph", "--cap", "10"]));
    assert!(text.contains("bound: floor_log2_n_le_maxsep - <= - skipped (maxsep needs n <= 10)"));
    assert!(text.contains("bound: maxsep_le_sep - <= - skipped (maxsep needs n <= 10)"));
    assert!(text.contains("bound: sep_le_n_minus_1 "));
}

#[test]
fn generate_outputs() {
    let ws = Workspace::new();
    ws.run(&["generate", "half-complement:k=2", "--out", "h2"]);
    let g = read_graph(ws.dir().join("h2.graph")).unwrap();
    assert_eq!(g.order(), 4);
    assert_eq!(read_coloring(ws.dir().join("h2.coloring"), 4).unwrap().len(), 4);
    assert_eq!(std::fs::read_to_string(ws.dir().join("h2.spec")).unwrap().trim(), "half-complement:k=2");

    ws.run(&["generate", "spider:k=1", "--out", "s1"]);
    assert_eq!(read_graph(ws.dir().join("s1.graph")).unwrap(), path(6));
    ws.run(&["generate", "power-set:k=3", "--out", "ps"]);
    assert_eq!(read_graph(ws.dir().join("ps.graph")).unwrap().order(), 8);
    ws.run(&["generate", "path:n=4", "--out", "plain"]);
    assert!(!ws.dir().join("plain.coloring").exists());
    assert_eq!(code(&ws.run(&["generate", "spider:q=1", "--out", "x"])), 2);
}

#[test]
fn reduce_round_trip() {
    let ws = Workspace::new();
    let g = ws.graph("p3.graph", &path(3));
    let c = ws.write("c", "RBB\n");
    ws.run(&["reduce", "--graph", &g, "--coloring", c.to_str().unwrap(), "--out", "sys.txt"]);
    assert_eq!(std::fs::read_to_string(ws.dir().join("sys.txt")).unwrap(), "2 3\n0: 1\n1:\n2: 0 1\n");

    let mono = ws.write("m", "BBB\n");
    let out = ws.run(&["reduce", "--graph", &g, "--coloring", mono.to_str().unwrap()]);
    assert_eq!(stdout(&out), "0 3\n0:\n1:\n2:\n");

    let tree = gen_random_tree(12, 5).unwrap();
    let coloring = random_coloring(12, 9);
    let (tg, tc) = (ws.graph("t.graph", &tree), ws.coloring("t.coloring", &coloring));
    ws.run(&["reduce", "--graph", &tg, "--coloring", &tc, "--out", "t.sys"]);
    let sys = SetSystem::parse(&std::fs::read_to_string(ws.dir().join("t.sys")).unwrap()).unwrap();
    assert_eq!(greedy_set_cover(&sys).unwrap().solution, sep_rb_greedy(&tree, &coloring).unwrap().solution);
}

#[test]
fn verify_modes() {
    let ws = Workspace::new();
    let g = ws.graph("p6.graph", &path(6));
    let good = ws.write("good", "1 2 3 4\n");
    let bad = ws.write("bad", "0 1 3\n");
    let (good, bad) = (good.to_str().unwrap(), bad.to_str().unwrap());
    assert_eq!(code(&ws.run(&["verify", "--graph", &g, "--set", good])), 0);
    assert_eq!(code(&ws.run(&["verify", "--graph", &g, "--set", bad])), 1);
    assert_eq!(code(&ws.run(&["verify", "--graph", &g, "--set", good, "--mode", "dominating"])), 0);
    let dom = ws.write("dom", "1 2\n");
    assert_eq!(code(&ws.run(&["verify", "--graph", &g, "--set", dom.to_str().unwrap(), "--mode", "dominating"])), 1);
}

#[test]
fn reports_reverify_from_disk() {
    let ws = Workspace::new();
    let g = ws.graph("p6.graph", &path(6));
    let c = ws.write("c", "RRBRBB\n");
    let c = c.to_str().unwrap();
    for (cmd, extra) in [
        (vec!["solve", "--graph", &g, "--coloring", c], vec!["--method", "exact"]),
        (vec!["solve", "--graph", &g, "--coloring", c], vec!["--method", "tree"]),
        (vec!["maxsep", "--graph", &g], vec![]),
        (vec!["bounds", "--graph", &g], vec![]),
    ] {
        let report = ws.dir().join("report.json");
        let mut args = cmd.clone();
        args.extend(extra);
        args.extend(["--out", report.to_str().unwrap()]);
        assert_eq!(code(&ws.run(&args)), 0, "{args:?}");
        let loaded = RunReport::load(&report).unwrap();
        assert!(loaded.reverify().unwrap().is_valid(), "{args:?}");
        assert_eq!(code(&ws.run(&["verify", "--report", report.to_str().unwrap()])), 0);
    }
    std::fs::write(ws.dir().join("p6.graph"), "6 0\n").unwrap();
    assert_ne!(code(&ws.run(&["verify", "--report", ws.dir().join("report.json").to_str().unwrap()])), 0);
}

#[test]
fn experiment_is_deterministic() {
    let ws = Workspace::new();
    for suite in ["ratio", "families", "fuzz"] {
        let args = ["experiment", "--suite", suite, "--seed", "1", "--sizes", "6,7", "--count", "3"];
        let a = stdout(&ws.run(&args));
        let b = stdout(&ws.run(&args));
        assert!(a.lines().count() > 1);
        assert_eq!(a, b);
        for row in a.lines().skip(1) {
            assert!(!row.contains(",false,"), "{suite}: {row}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn auto_dispatch_respects_preconditions(n in 3usize..=14, p in 0.1f64..0.6, seed in any::<u64>(), tree in any::<bool>(), cap in 0usize..16) {
        let g = if tree { gen_random_tree(n, seed).unwrap() } else {
            match gen_random_twin_free(n, p, seed) {
                Ok(g) => g,
                Err(_) => return Ok(()),
            }
        };
        if !g.is_twin_free() {
            return Ok(());
        }
        let ws = Workspace::new();
        let (gp, cp) = (ws.graph("g", &g), ws.coloring("c", &random_coloring(n, seed)));
        let cap = cap.to_string();
        let out = ws.run(&["solve", "--graph", &gp, "--coloring", &cp, "--method", "auto", "--cap", &cap]);
        prop_assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
        let text = stdout(&out);
        prop_assert_eq!(field(&text, "verified"), Some("true"));
    }
}
