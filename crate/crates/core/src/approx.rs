//! Polynomial-time algorithms for red-blue separation: the set-cover reduction
//! with greedy covering, greedy all-pairs separation, the constructive
//! triangle-free and bounded-degree sets, and bounded-size exhaustive search.

use std::fmt;
use std::time::Instant;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::exact::{red_blue_twin, Method, SolveReport};
use crate::graph::{Color, Coloring, Graph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledSet {
    pub label: String,
    pub members: VertexSet,
}

/// A universe `0..universe_size` together with a labeled family of subsets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetSystem {
    pub universe_size: usize,
    pub element_labels: Vec<String>,
    pub sets: Vec<LabeledSet>,
}

impl SetSystem {
    /// `U S` header followed by one `label: e1 e2 ...` line per set.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.universe_size, self.sets.len());
        for s in &self.sets {
            out.push_str(&s.label);
            out.push(':');
            for e in s.members.iter() {
                out.push_str(&format!(" {e}"));
            }
            out.push('\n');
        }
        out
    }

    pub fn parse(text: &str) -> Result<SetSystem> {
        let err = |line: usize, message: String| Error::Parse { line, message };
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
        let (_, header) = lines.next().ok_or_else(|| err(1, "missing header".into()))?;
        let head: Vec<usize> =
            header.split_whitespace().map(|t| t.parse().map_err(|_| err(1, format!("invalid number {t:?}")))).collect::<Result<_>>()?;
        let [universe_size, count] = head[..] else {
            return Err(err(1, "header must be `U S`".into()));
        };
        let mut sets = Vec::with_capacity(count);
        for (lineno, line) in lines {
            if line.is_empty() && sets.len() == count {
                continue;
            }
            let (label, rest) = line.split_once(':').ok_or_else(|| err(lineno, "set line must be `label: e1 e2 ...`".into()))?;
            let mut members = VertexSet::new(universe_size);
            for tok in rest.split_whitespace() {
                let e: usize = tok.parse().map_err(|_| err(lineno, format!("invalid element {tok:?}")))?;
                if e >= universe_size {
                    return Err(err(lineno, format!("element {e} outside universe {universe_size}")));
                }
                members.insert(e);
            }
            sets.push(LabeledSet { label: label.to_string(), members });
        }
        if sets.len() != count {
            return Err(err(1, format!("header declares {count} sets, found {}", sets.len())));
        }
        Ok(SetSystem { universe_size, element_labels: (0..universe_size).map(|e| e.to_string()).collect(), sets })
    }
}

impl fmt::Display for SetSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Result of an approximation or construction.
///
/// `guarantee` is the multiplicative factor the algorithm claims: against the
/// optimum for the greedy routes, against the smaller color class for the
/// constructions. `size_bound` is the absolute cardinality bound when one is
/// known up front.
#[derive(Clone, Debug)]
pub struct ApproxReport {
    pub solution: VertexSet,
    pub guarantee: f64,
    pub optimum_lower_bound: usize,
    pub size_bound: Option<usize>,
}

fn harmonic(d: usize) -> f64 {
    (1..=d).map(|i| 1.0 / i as f64).sum()
}

/// One element per red-blue pair `(r, b)` (reds ascending, then blues), one
/// set per vertex `v` holding the pairs with `v` in exactly one of N[r], N[b].
pub fn reduce_rb_to_set_cover(g: &Graph, c: &Coloring) -> Result<SetSystem> {
    g.check_coloring(c)?;
    let n = g.order();
    let reds = c.class(Color::Red);
    let blues = c.class(Color::Blue);
    let pairs: Vec<(usize, usize)> = reds.iter().flat_map(|&r| blues.iter().map(move |&b| (r, b))).collect();
    let mut members = vec![VertexSet::new(pairs.len()); n];
    for (e, &(r, b)) in pairs.iter().enumerate() {
        let diff = g.closed(r).symmetric_difference(g.closed(b));
        if diff.is_empty() {
            return Err(Error::Unseparable { red: r, blue: b });
        }
        for v in diff.iter() {
            members[v].insert(e);
        }
    }
    Ok(SetSystem {
        universe_size: pairs.len(),
        element_labels: pairs.iter().map(|(r, b)| format!("{r}-{b}")).collect(),
        sets: members.into_iter().enumerate().map(|(v, members)| LabeledSet { label: v.to_string(), members }).collect(),
    })
}

/// Greedy set cover: repeatedly take the set covering the most uncovered
/// elements, lowest index on ties. The solution holds set indices.
pub fn greedy_set_cover(sys: &SetSystem) -> Result<ApproxReport> {
    let u = sys.universe_size;
    let mut coverable = VertexSet::new(u);
    for s in &sys.sets {
        coverable.union_with(&s.members);
    }
    if let Some(e) = (0..u).find(|&e| !coverable.contains(e)) {
        return Err(Error::Uncoverable { element: e });
    }
    let mut covered = VertexSet::new(u);
    let mut chosen = VertexSet::new(sys.sets.len());
    let mut remaining = u;
    while remaining > 0 {
        let (best, gain) = sys.sets.iter().enumerate().map(|(i, s)| (i, s.members.difference(&covered).len())).fold((0, 0), |acc, x| {
            if x.1 > acc.1 {
                x
            } else {
                acc
            }
        });
        debug_assert!(gain > 0);
        chosen.insert(best);
        covered.union_with(&sys.sets[best].members);
        remaining -= gain;
    }
    let max_set = sys.sets.iter().map(|s| s.members.len()).max().unwrap_or(0);
    let optimum_lower_bound = if u == 0 {
        0
    } else {
        let by_size = u.div_ceil(max_set);
        let by_harmonic = (chosen.len() as f64 / harmonic(max_set) - 1e-9).ceil() as usize;
        by_size.max(by_harmonic)
    };
    Ok(ApproxReport {
        solution: chosen,
        guarantee: if u == 0 { 1.0 } else { (u as f64).ln() + 1.0 },
        optimum_lower_bound,
        size_bound: None,
    })
}

/// Greedy 2 ln n approximation of sep_RB via the set-cover reduction.
pub fn sep_rb_greedy(g: &Graph, c: &Coloring) -> Result<ApproxReport> {
    let sys = reduce_rb_to_set_cover(g, c)?;
    let mut report = greedy_set_cover(&sys)?;
    let n = g.order() as f64;
    report.guarantee = (2.0 * n.ln()).max(1.0);
    Ok(report)
}

/// Greedy separating set for all vertex pairs.
///
/// The recorded guarantee is the factor against maxsep_RB:
/// (2 ln n + 1) · ⌈log2 n⌉.
pub fn sep_all_pairs_greedy(g: &Graph) -> Result<ApproxReport> {
    g.require_twin_free()?;
    let n = g.order();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut members = vec![VertexSet::new(pairs.len()); n];
    for (e, &(u, v)) in pairs.iter().enumerate() {
        for x in g.closed(u).symmetric_difference(g.closed(v)).iter() {
            members[x].insert(e);
        }
    }
    let sys = SetSystem {
        universe_size: pairs.len(),
        element_labels: pairs.iter().map(|(u, v)| format!("{u}-{v}")).collect(),
        sets: members.into_iter().enumerate().map(|(v, members)| LabeledSet { label: v.to_string(), members }).collect(),
    };
    let mut report = greedy_set_cover(&sys)?;
    let nf = n.max(1) as f64;
    report.guarantee = (2.0 * nf.ln() + 1.0) * ceil_log2(n) as f64;
    Ok(report)
}

pub fn ceil_log2(n: usize) -> usize {
    if n <= 1 {
        0
    } else {
        (usize::BITS - (n - 1).leading_zeros()) as usize
    }
}

pub fn floor_log2(n: usize) -> usize {
    if n == 0 {
        0
    } else {
        (usize::BITS - 1 - n.leading_zeros()) as usize
    }
}

/// Orders for which ⌊log2 n⌋ is not a proven lower bound on maxsep_RB.
pub const LOG_BOUND_EXCEPTIONS: [usize; 4] = [8, 9, 16, 17];

/// Smallest k with 2^n ≤ C(n, k)·2^(2^k): every coloring of a twin-free
/// graph of order n is separated by one of at most C(n, k) sets of size k,
/// each serving at most 2^(2^k) colorings.
pub fn counting_lower_bound(n: usize) -> usize {
    let log2_binom = |k: usize| -> f64 { (0..k).map(|i| ((n - i) as f64).log2() - ((i + 1) as f64).log2()).sum() };
    (0..=n)
        .find(|&k| {
            let capacity = if k >= 11 { f64::INFINITY } else { (1u64 << k) as f64 };
            n as f64 <= log2_binom(k) + capacity + 1e-9
        })
        .unwrap_or(n)
}

/// Proven lower bound on maxsep_RB for twin-free graphs of order `n`.
pub fn maxsep_lower_bound(n: usize) -> usize {
    let counting = counting_lower_bound(n);
    if LOG_BOUND_EXCEPTIONS.contains(&n) {
        counting
    } else {
        counting.max(floor_log2(n))
    }
}

fn lowest_other(set: &VertexSet, skip: usize) -> Option<usize> {
    set.iter().find(|&x| x != skip)
}

fn construction_report(solution: VertexSet, factor: usize, min_class: usize) -> ApproxReport {
    ApproxReport {
        solution,
        guarantee: factor as f64,
        optimum_lower_bound: usize::from(min_class > 0),
        size_bound: Some(factor * min_class),
    }
}

/// Red-blue separating set of size at most 3·min{|R|, |B|} on triangle-free
/// twin-free graphs.
///
/// Every vertex of the smaller class goes in, plus its two lowest neighbors
/// when it has two, or one further neighbor of its only neighbor when that
/// neighbor has the other color.
pub fn triangle_free_construct(g: &Graph, c: &Coloring) -> Result<ApproxReport> {
    g.check_coloring(c)?;
    if let Some(t) = g.find_triangle() {
        return Err(Error::NotTriangleFree(t));
    }
    g.require_twin_free()?;
    let small = c.minority();
    let class = c.class(small);
    let mut s = VertexSet::new(g.order());
    for &v in &class {
        s.insert(v);
        let nb = g.neighbors(v);
        if nb.len() >= 2 {
            nb.iter().take(2).for_each(|w| {
                s.insert(w);
            });
        } else if let Some(w) = nb.first() {
            if c.get(w) != small {
                let z = lowest_other(g.neighbors(w), v).expect("twin-free: w has another neighbor");
                s.insert(z);
            }
        }
    }
    Ok(construction_report(s, 3, class.len()))
}

/// Red-blue separating set of size at most Δ·min{|R|, |B|} on twin-free graphs
/// with Δ ≥ 3. Graphs with Δ ≤ 2 are handed to [`triangle_free_construct`].
///
/// For each vertex `v` of the smaller class:
/// - if some `w` of the other class, not adjacent to `v`, has N(v) ⊆ N[w],
///   add `v` and `w`;
/// - else if such a `w` exists only among the neighbors of `v`, add `v` and,
///   for every other-class neighbor `u` of `v` not yet told apart from `v`,
///   the lowest vertex of N[u] △ N[v];
/// - otherwise add all neighbors of `v`.
///
/// In the adjacent case N[v] ⊊ N[w] forces deg(v) ≤ Δ − 1, so at most Δ
/// vertices are added per `v`.
pub fn bounded_degree_construct(g: &Graph, c: &Coloring) -> Result<ApproxReport> {
    g.check_coloring(c)?;
    let delta = g.max_degree();
    if delta < 3 {
        return triangle_free_construct(g, c);
    }
    g.require_twin_free()?;
    let small = c.minority();
    let class = c.class(small);
    let mut s = VertexSet::new(g.order());
    for &v in &class {
        let nv = g.neighbors(v);
        let covering = |w: &usize| c.get(*w) != small && nv.is_subset(g.closed(*w));
        let far = (0..g.order()).filter(|&w| w != v && !g.has_edge(v, w)).find(covering);
        let near = nv.iter().find(covering);
        match (far, near) {
            (Some(w), _) => {
                s.insert(v);
                s.insert(w);
            }
            (None, Some(_)) => {
                let mut local = VertexSet::from_indices(g.order(), [v]);
                for u in nv.iter().filter(|&u| c.get(u) != small) {
                    let diff = g.closed(u).symmetric_difference(g.closed(v));
                    if diff.is_disjoint(&local) {
                        local.insert(diff.first().expect("twin-free"));
                    }
                }
                s.union_with(&local);
            }
            (None, None) => s.union_with(nv),
        }
    }
    Ok(construction_report(s, delta, class.len()))
}

pub const DEFAULT_XP_NODE_BUDGET: u64 = 50_000_000;

/// Exact sep_RB by enumerating all vertex subsets of size at most B in
/// ascending size and lexicographic order, where B = 3·min{|R|, |B|} on
/// triangle-free graphs and Δ·min{|R|, |B|} otherwise. The constructive
/// bounds guarantee an optimum within that size.
pub fn xp_exact_small_class(g: &Graph, c: &Coloring, node_budget: u64) -> Result<SolveReport> {
    let t0 = Instant::now();
    g.check_coloring(c)?;
    g.require_twin_free()?;
    if let Some((red, blue)) = red_blue_twin(g, c) {
        return Err(Error::Unseparable { red, blue });
    }
    let n = g.order();
    let min_class = c.min_class_size();
    let delta = g.max_degree();
    let multiplier = if g.find_triangle().is_none() { 3 } else { delta };
    let bound = (multiplier * min_class).min(n);
    let diffs: Vec<VertexSet> = c
        .class(Color::Red)
        .into_iter()
        .flat_map(|r| c.class(Color::Blue).into_iter().map(move |b| (r, b)))
        .map(|(r, b)| g.closed(r).symmetric_difference(g.closed(b)))
        .collect();
    let mut nodes = 0u64;
    for size in 0..=bound {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            nodes += 1;
            if nodes > node_budget {
                return Err(Error::BudgetExceeded { bound, budget: node_budget });
            }
            let cand = VertexSet::from_indices(n, idx.iter().copied());
            if diffs.iter().all(|d| !d.is_disjoint(&cand)) {
                return Ok(SolveReport {
                    optimum: size,
                    witness: cand,
                    nodes_explored: nodes,
                    method: Method::Exhaustive,
                    elapsed: t0.elapsed(),
                });
            }
            if !next_combination(&mut idx, n) {
                break;
            }
        }
    }
    unreachable!("constructive bound guarantees a separating set of size at most {bound}")
}

/// Advances `idx` to the next `k`-subset of `0..n` in lexicographic order.
pub(crate) fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
