//! Exact solvers: sep_RB(G, c), sep(G), γ(G), maxsep_RB(G), plus the
//! constructive single-element removal of Bondy's theorem.
//!
//! All three minimization problems reduce to minimum hitting set over a family
//! of vertex sets: a red-blue pair `(r, b)` is separated by exactly the
//! vertices of N[r] △ N[b], and a vertex is dominated by exactly N[v]. The
//! kernel below solves hitting set by iterative deepening over a
//! branch-and-bound search.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::approx::SetSystem;
use crate::bitset::{words_for, VertexSet};
use crate::error::{Error, Result};
use crate::graph::{Color, Coloring, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    BranchAndBound,
    Exhaustive,
    IterativeDeepening,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::BranchAndBound => "branch-and-bound",
            Method::Exhaustive => "exhaustive",
            Method::IterativeDeepening => "iterative-deepening",
        }
    }
}

#[derive(Clone, Debug)]
pub struct SolveReport {
    pub optimum: usize,
    pub witness: VertexSet,
    pub nodes_explored: u64,
    pub method: Method,
    pub elapsed: Duration,
}

#[derive(Clone, Debug)]
pub struct MaxSepReport {
    pub value: usize,
    pub worst_coloring: Coloring,
    pub per_coloring_count: u64,
    pub nodes_explored: u64,
    pub elapsed: Duration,
}

pub const DEFAULT_MAXSEP_CAP: usize = 14;

/// Minimum hitting set over a family of vertex sets, stored as flat blocks.
pub(crate) struct HittingSet {
    n: usize,
    words: usize,
    sets: Vec<u64>,
}

struct Search<'a> {
    inst: &'a HittingSet,
    nodes: u64,
    chosen: Vec<u64>,
    forbidden: Vec<u64>,
    picked: Vec<usize>,
}

impl HittingSet {
    /// Drops duplicate sets and sets that contain another member of the
    /// family; hitting the smaller one hits the larger.
    pub(crate) fn new(n: usize, family: impl IntoIterator<Item = VertexSet>) -> Self {
        let words = words_for(n);
        let mut seen = HashSet::new();
        let mut uniq: Vec<VertexSet> = family.into_iter().filter(|s| seen.insert(s.clone())).collect();
        uniq.sort_by_key(|s| s.len());
        let mut kept: Vec<VertexSet> = Vec::with_capacity(uniq.len());
        let reduce = uniq.len() <= 4096;
        for s in uniq {
            if reduce && kept.iter().any(|k| k.is_subset(&s)) {
                continue;
            }
            kept.push(s);
        }
        let mut sets = Vec::with_capacity(kept.len() * words);
        for s in &kept {
            sets.extend_from_slice(s.blocks());
        }
        HittingSet { n, words, sets }
    }

    fn count(&self) -> usize {
        self.sets.len().checked_div(self.words).unwrap_or(0)
    }

    fn set(&self, i: usize) -> &[u64] {
        &self.sets[i * self.words..(i + 1) * self.words]
    }

    /// Smallest hitting set of size at most `limit`, or `None`. Also returns
    /// the number of search nodes visited.
    pub(crate) fn solve(&self, limit: usize) -> (Option<VertexSet>, u64) {
        if (0..self.count()).any(|i| self.set(i).iter().all(|&w| w == 0)) {
            return (None, 0);
        }
        let mut search = Search { inst: self, nodes: 0, chosen: vec![0; self.words], forbidden: vec![0; self.words], picked: Vec::new() };
        let start = search.packing_bound();
        let limit = limit.min(self.n);
        for k in start..=limit {
            if search.dfs(k) {
                let witness = VertexSet::from_indices(self.n, search.picked.iter().copied());
                return (Some(witness), search.nodes);
            }
        }
        (None, search.nodes)
    }
}

#[inline]
fn popcount_diff(a: &[u64], b: &[u64]) -> usize {
    a.iter().zip(b).map(|(x, y)| (x & !y).count_ones() as usize).sum()
}

impl Search<'_> {
    fn is_hit(&self, set: &[u64]) -> bool {
        set.iter().zip(&self.chosen).any(|(a, b)| a & b != 0)
    }

    /// Greedy packing of pairwise-disjoint unhit sets, restricted to
    /// non-forbidden vertices. Any hitting set needs one vertex per packed set.
    fn packing_bound(&self) -> usize {
        let inst = self.inst;
        let mut open: Vec<(usize, usize)> =
            (0..inst.count()).filter(|&i| !self.is_hit(inst.set(i))).map(|i| (popcount_diff(inst.set(i), &self.forbidden), i)).collect();
        open.sort_unstable();
        let mut used = vec![0u64; inst.words];
        let mut bound = 0;
        for (_, i) in open {
            let s = inst.set(i);
            let free = s.iter().zip(&self.forbidden).zip(&used).all(|((a, f), u)| a & !f & u == 0);
            if free {
                bound += 1;
                for ((u, a), f) in used.iter_mut().zip(s).zip(&self.forbidden) {
                    *u |= a & !f;
                }
            }
        }
        bound
    }

    fn dfs(&mut self, budget: usize) -> bool {
        self.nodes += 1;
        let inst = self.inst;
        // Unhit set with the fewest allowed vertices; ties to the lowest index.
        let mut best: Option<(usize, usize)> = None;
        let mut open = 0;
        for i in 0..inst.count() {
            let s = inst.set(i);
            if self.is_hit(s) {
                continue;
            }
            open += 1;
            let size = popcount_diff(s, &self.forbidden);
            if size == 0 {
                return false;
            }
            if best.is_none_or(|(b, _)| size < b) {
                best = Some((size, i));
            }
        }
        let Some((_, branch_set)) = best else {
            return true;
        };
        if budget == 0 {
            return false;
        }
        if open > 1 && self.packing_bound() > budget {
            return false;
        }
        let candidates: Vec<usize> = {
            let s = inst.set(branch_set);
            let allowed: Vec<u64> = s.iter().zip(&self.forbidden).map(|(a, f)| a & !f).collect();
            VertexSet::from_blocks(inst.n, allowed).to_vec()
        };
        let saved = self.forbidden.clone();
        let mut found = false;
        for &v in &candidates {
            self.chosen[v / 64] |= 1 << (v % 64);
            self.picked.push(v);
            if self.dfs(budget - 1) {
                found = true;
                break;
            }
            self.picked.pop();
            self.chosen[v / 64] &= !(1 << (v % 64));
            // Subtrees that contain v have been exhausted.
            self.forbidden[v / 64] |= 1 << (v % 64);
        }
        self.forbidden = saved;
        found
    }
}

fn red_blue_pairs(c: &Coloring) -> impl Iterator<Item = (usize, usize)> + '_ {
    let reds = c.class(Color::Red);
    let blues = c.class(Color::Blue);
    reds.into_iter().flat_map(move |r| blues.clone().into_iter().map(move |b| (r, b)))
}

/// First red-blue pair with identical closed neighborhoods, ordered by `(red, blue)`.
pub fn red_blue_twin(g: &Graph, c: &Coloring) -> Option<(usize, usize)> {
    red_blue_pairs(c).find(|&(r, b)| g.closed(r) == g.closed(b))
}

fn finish(optimum_set: Option<VertexSet>, nodes: u64, budget: Option<usize>, t0: Instant) -> Result<SolveReport> {
    match optimum_set {
        Some(witness) => Ok(SolveReport {
            optimum: witness.len(),
            witness,
            nodes_explored: nodes,
            method: Method::BranchAndBound,
            elapsed: t0.elapsed(),
        }),
        None => Err(Error::Infeasible { budget: budget.unwrap_or(usize::MAX) }),
    }
}

fn rb_instance(g: &Graph, c: &Coloring) -> Result<HittingSet> {
    g.check_coloring(c)?;
    if let Some((red, blue)) = red_blue_twin(g, c) {
        return Err(Error::Unseparable { red, blue });
    }
    Ok(HittingSet::new(g.order(), red_blue_pairs(c).map(|(r, b)| g.closed(r).symmetric_difference(g.closed(b)))))
}

/// Minimum red-blue separating set. With `budget = Some(k)` this answers the
/// decision question "sep_RB(G, c) ≤ k", returning `Infeasible` otherwise.
///
/// Same-colored twins are allowed; a red-blue twin pair is `Unseparable`.
pub fn sep_rb_exact(g: &Graph, c: &Coloring, budget: Option<usize>) -> Result<SolveReport> {
    let t0 = Instant::now();
    let inst = rb_instance(g, c)?;
    let (found, nodes) = inst.solve(budget.unwrap_or(usize::MAX));
    finish(found, nodes, budget, t0)
}

/// Minimum separating set of all vertex pairs. Requires a twin-free graph.
pub fn sep_exact(g: &Graph, budget: Option<usize>) -> Result<SolveReport> {
    g.require_twin_free()?;
    sep_exact_allow_twins(g, budget)
}

/// Like [`sep_exact`], but pairs of twins are exempt from separation.
pub fn sep_exact_allow_twins(g: &Graph, budget: Option<usize>) -> Result<SolveReport> {
    let t0 = Instant::now();
    let n = g.order();
    let family = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter_map(|(u, v)| {
        let d = g.closed(u).symmetric_difference(g.closed(v));
        (!d.is_empty()).then_some(d)
    });
    let inst = HittingSet::new(n, family);
    let (found, nodes) = inst.solve(budget.unwrap_or(usize::MAX));
    finish(found, nodes, budget, t0)
}

/// Minimum dominating set.
pub fn gamma_exact(g: &Graph) -> SolveReport {
    let t0 = Instant::now();
    let inst = HittingSet::new(g.order(), (0..g.order()).map(|v| g.closed(v).clone()));
    let (found, nodes) = inst.solve(usize::MAX);
    finish(found, nodes, None, t0).expect("V(G) always dominates")
}

/// Minimum set cover. The witness holds indices into `sys.sets`.
pub fn set_cover_exact(sys: &SetSystem) -> Result<SolveReport> {
    let t0 = Instant::now();
    let k = sys.sets.len();
    let mut family = Vec::with_capacity(sys.universe_size);
    for e in 0..sys.universe_size {
        let holders = VertexSet::from_indices(k, (0..k).filter(|&i| sys.sets[i].members.contains(e)));
        if holders.is_empty() {
            return Err(Error::Uncoverable { element: e });
        }
        family.push(holders);
    }
    let (found, nodes) = HittingSet::new(k, family).solve(usize::MAX);
    finish(found, nodes, None, t0)
}

/// maxsep_RB(G): the largest sep_RB over all colorings.
///
/// Vertex 0 is fixed blue (sep_RB is invariant under swapping colors), so
/// 2^(n-1) colorings are visited in increasing mask order. Each coloring is
/// first asked whether it is solvable within the current best; only colorings
/// that exceed it are solved to optimality.
pub fn maxsep_exact(g: &Graph, n_cap: usize) -> Result<MaxSepReport> {
    let t0 = Instant::now();
    let n = g.order();
    g.require_twin_free()?;
    if n > n_cap || n > 63 {
        return Err(Error::CapExceeded { n, cap: n_cap.min(63) });
    }
    let mut best = 0;
    let mut worst = Coloring::monochromatic(n, Color::Blue);
    let mut nodes = 0;
    let total: u64 = if n == 0 { 1 } else { 1 << (n - 1) };
    for half in 0..total {
        let c = Coloring::from_mask(n, half << 1);
        let inst = rb_instance(g, &c)?;
        let (within, k) = inst.solve(best);
        nodes += k;
        if within.is_some() {
            continue;
        }
        let (opt, k) = inst.solve(usize::MAX);
        nodes += k;
        best = opt.expect("twin-free graphs are always separable").len();
        worst = c;
    }
    Ok(MaxSepReport { value: best, worst_coloring: worst, per_coloring_count: total, nodes_explored: nodes, elapsed: t0.elapsed() })
}

/// Lower bound on maxsep_RB from a random sample of colorings; never a
/// substitute for [`maxsep_exact`].
pub fn maxsep_sampled_lower_bound(g: &Graph, colorings: impl IntoIterator<Item = Coloring>) -> Result<(usize, Coloring)> {
    let mut best = (0, Coloring::monochromatic(g.order(), Color::Blue));
    for c in colorings {
        let inst = rb_instance(g, &c)?;
        if inst.solve(best.0).0.is_none() {
            let v = inst.solve(usize::MAX).0.map(|s| s.len()).unwrap_or(0);
            best = (v, c);
        }
    }
    Ok(best)
}

/// Given `n` pairwise distinct subsets of an `n`-element ground set, returns
/// the smallest element whose deletion keeps all traces distinct.
///
/// Two traces collide after deleting `x` exactly when the sets differ only in
/// `x`, i.e. `A △ {x}` is also in the family. Bondy's theorem guarantees some
/// element has no such pair.
pub fn bondy_remove(family: &[VertexSet]) -> Result<usize> {
    let ground = family.first().map(|s| s.universe()).unwrap_or(0);
    if family.len() != ground || family.iter().any(|s| s.universe() != ground) {
        return Err(Error::FamilySize { sets: family.len(), ground });
    }
    let mut index = std::collections::HashMap::with_capacity(family.len());
    for (i, s) in family.iter().enumerate() {
        if let Some(&j) = index.get(s) {
            return Err(Error::NoDistinctFamily { first: j, second: i });
        }
        index.insert(s.clone(), i);
    }
    for x in 0..ground {
        let collides = family.iter().any(|s| {
            let mut flipped = s.clone();
            if !flipped.remove(x) {
                flipped.insert(x);
            }
            index.contains_key(&flipped)
        });
        if !collides {
            return Ok(x);
        }
    }
    unreachable!("n distinct subsets of an n-set always admit a removable element")
}
