//! Instance factories for the hardness reductions.

use std::ops::Range;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::{Color, Coloring, Graph};

/// Split graph built from a set cover instance. Layout: element vertices,
/// then set vertices, then the isolated blue pair, then the red vertex.
/// A cover of size k corresponds to a red-blue separating set of size k + 1.
#[derive(Clone, Debug)]
pub struct SplitReduction {
    pub graph: Graph,
    pub coloring: Coloring,
    pub elements: Range<usize>,
    pub sets: Range<usize>,
    pub isolated: [usize; 2],
    pub red: usize,
}

impl SplitReduction {
    pub fn budget_for_cover(cover_size: usize) -> usize {
        cover_size + 1
    }

    pub fn cover_size_for_budget(budget: usize) -> usize {
        budget.saturating_sub(1)
    }

    /// Set vertices of the cover plus the red vertex.
    pub fn separating_set_from_cover(&self, cover: &[usize]) -> VertexSet {
        let mut s = VertexSet::from_indices(self.graph.order(), cover.iter().map(|&j| self.sets.start + j));
        s.insert(self.red);
        s
    }
}

pub fn gen_split_from_set_cover(universe: usize, sets: &[Vec<usize>]) -> Result<SplitReduction> {
    if universe == 0 {
        return Err(Error::Spec("set cover universe must be nonempty".into()));
    }
    if let Some(&e) = sets.iter().flatten().find(|&&e| e >= universe) {
        return Err(Error::Spec(format!("element {e} outside universe of size {universe}")));
    }
    if let Some(element) = (0..universe).find(|e| !sets.iter().any(|s| s.contains(e))) {
        return Err(Error::Uncoverable { element });
    }
    let first_set = universe;
    let b = first_set + sets.len();
    let red = b + 2;
    let n = red + 1;
    let mut edges = Vec::new();
    for e in 0..universe {
        for f in e + 1..universe {
            edges.push((e, f));
        }
        edges.push((e, red));
    }
    for (j, s) in sets.iter().enumerate() {
        edges.extend(s.iter().map(|&e| (e, first_set + j)));
    }
    Ok(SplitReduction {
        graph: Graph::from_edges(n, edges)?,
        coloring: Coloring::from_reds(n, [red]),
        elements: 0..universe,
        sets: first_set..b,
        isolated: [b, b + 1],
        red,
    })
}

/// Red copy, blue copy and a four-vertex path whose head joins the pivot in
/// both copies. Layout: red copy `0..n`, blue copy `n..2n`, path `2n..2n+4`.
/// sep_RB = γ + 1.
#[derive(Clone, Debug)]
pub struct TwoCopies {
    pub graph: Graph,
    pub coloring: Coloring,
    pub red_copy: Range<usize>,
    pub blue_copy: Range<usize>,
    pub path: [usize; 4],
}

impl TwoCopies {
    /// The dominating set placed in the red copy plus the second path vertex.
    pub fn separating_set_from_dominating(&self, d: &VertexSet) -> VertexSet {
        let mut s = VertexSet::from_indices(self.graph.order(), d.iter().map(|v| self.red_copy.start + v));
        s.insert(self.path[1]);
        s
    }
}

pub fn gen_two_copies_ds(g: &Graph, pivot: usize) -> Result<TwoCopies> {
    g.check_vertex(pivot)?;
    if g.degree(pivot) != 2 {
        return Err(Error::BadPivot { vertex: pivot, degree: g.degree(pivot) });
    }
    let n = g.order();
    let path = [2 * n, 2 * n + 1, 2 * n + 2, 2 * n + 3];
    let mut edges: Vec<(usize, usize)> = g.edges().into_iter().flat_map(|(u, v)| [(u, v), (n + u, n + v)]).collect();
    edges.extend([(path[0], path[1]), (path[1], path[2]), (path[2], path[3])]);
    edges.extend([(pivot, path[0]), (n + pivot, path[0])]);
    let total = 2 * n + 4;
    let reds = (0..n).chain(path[..3].iter().copied());
    Ok(TwoCopies {
        graph: Graph::from_edges(total, edges)?,
        coloring: Coloring::from_reds(total, reds),
        red_copy: 0..n,
        blue_copy: n..2 * n,
        path,
    })
}

/// Blue copy of `g` at `0..n` plus `k + 1` isolated red vertices.
/// For k ≥ γ(g) − 1, sep_RB = γ(g).
pub fn gen_copies_plus_independent(g: &Graph, k: usize) -> Result<(Graph, Coloring)> {
    let n = g.order();
    let total = n + k + 1;
    Ok((Graph::from_edges(total, g.edges())?, Coloring::from_reds(total, n..total)))
}

/// CNF formula over variables `1..=variables`; literal `i` is x_i, `-i` its
/// negation. Each clause has one to three literals and each literal occurs
/// at most twice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SatInstance {
    variables: usize,
    clauses: Vec<Vec<i32>>,
}

pub const LITERAL_OCCURRENCE_CAP: usize = 2;

impl SatInstance {
    pub fn new(variables: usize, clauses: Vec<Vec<i32>>) -> Result<Self> {
        let mut occurrences = std::collections::HashMap::new();
        for (ci, clause) in clauses.iter().enumerate() {
            if clause.is_empty() || clause.len() > 3 {
                return Err(Error::InvalidSat(format!("clause {ci} has {} literals", clause.len())));
            }
            for &lit in clause {
                if lit == 0 || lit.unsigned_abs() as usize > variables {
                    return Err(Error::InvalidSat(format!("literal {lit} outside 1..={variables}")));
                }
                let count = occurrences.entry(lit).or_insert(0);
                *count += 1;
                if *count > LITERAL_OCCURRENCE_CAP {
                    return Err(Error::LiteralCapExceeded(lit));
                }
            }
        }
        Ok(SatInstance { variables, clauses })
    }

    pub fn variables(&self) -> usize {
        self.variables
    }

    pub fn clauses(&self) -> &[Vec<i32>] {
        &self.clauses
    }

    /// `assignment[i]` is the value of x_{i+1}.
    pub fn is_satisfied_by(&self, assignment: &[bool]) -> bool {
        self.clauses.iter().all(|c| c.iter().any(|&l| assignment[l.unsigned_abs() as usize - 1] == (l > 0)))
    }

    /// First satisfying assignment in counting order, by exhaustion.
    pub fn brute_force(&self) -> Option<Vec<bool>> {
        assert!(self.variables < 30, "exhaustive SAT limited to < 30 variables");
        (0u64..1 << self.variables)
            .map(|m| (0..self.variables).map(|i| m >> i & 1 == 1).collect::<Vec<_>>())
            .find(|a| self.is_satisfied_by(a))
    }
}

/// Sixteen-vertex domination gadget on `v1, v2`: both are adjacent to
/// `u_1..u_4`; `p_1..p_6, q_1..q_4` form a clique, each `p_i` is adjacent to
/// one pair of `u`s and each `q_j` to one triple, both in lexicographic order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DominationGadget {
    pub v1: usize,
    pub v2: usize,
    pub u: [usize; 4],
    pub p: [usize; 6],
    pub q: [usize; 4],
}

pub const GADGET_ORDER: usize = 16;
const PAIRS: [[usize; 2]; 6] = [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]];
const TRIPLES: [[usize; 3]; 4] = [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]];

impl DominationGadget {
    /// Layout at `base`: v1, v2, u_1..u_4, p_1..p_6, q_1..q_4.
    fn at(base: usize) -> Self {
        let idx = |off: usize| base + off;
        DominationGadget {
            v1: idx(0),
            v2: idx(1),
            u: std::array::from_fn(|h| idx(2 + h)),
            p: std::array::from_fn(|i| idx(6 + i)),
            q: std::array::from_fn(|j| idx(12 + j)),
        }
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        let mut e = Vec::with_capacity(54);
        for &u in &self.u {
            e.push((self.v1, u));
            e.push((self.v2, u));
        }
        for (i, pair) in PAIRS.iter().enumerate() {
            e.extend(pair.iter().map(|&h| (self.u[h], self.p[i])));
        }
        for (j, triple) in TRIPLES.iter().enumerate() {
            e.extend(triple.iter().map(|&h| (self.u[h], self.q[j])));
        }
        let clique: Vec<usize> = self.p.iter().chain(&self.q).copied().collect();
        for (a, &x) in clique.iter().enumerate() {
            e.extend(clique[a + 1..].iter().map(|&y| (x, y)));
        }
        e
    }

    /// A `(p_i, q_j)` pair whose closed neighborhoods differ exactly in `u_h`.
    pub fn pair_separated_only_by(&self, h: usize) -> (usize, usize) {
        let j = TRIPLES.iter().position(|t| t.contains(&h)).expect("every u lies in a triple");
        let pair: Vec<usize> = TRIPLES[j].iter().copied().filter(|&x| x != h).collect();
        let i = PAIRS.iter().position(|p| p[..] == pair[..]).expect("every pair is present");
        (self.p[i], self.q[j])
    }
}

/// Per variable x: a selector gadget on `(x^a, x^b)` and a literal gadget on
/// `(x, x̄)`.
#[derive(Clone, Copy, Debug)]
pub struct VariableGadget {
    pub selector: DominationGadget,
    pub literals: DominationGadget,
}

impl VariableGadget {
    pub fn positive(&self) -> usize {
        self.literals.v1
    }

    pub fn negative(&self) -> usize {
        self.literals.v2
    }
}

/// The max red-blue separation instance built from a [`SatInstance`]:
/// sep(H) = maxsep_RB(H) = k iff the formula is satisfiable, where
/// k = 4·clauses + 9·variables. Variables take 32 vertices each, then
/// clauses 16 each.
#[derive(Clone, Debug)]
pub struct MaxSepGadget {
    pub graph: Graph,
    pub coloring: Coloring,
    pub k: usize,
    pub variables: Vec<VariableGadget>,
    pub clauses: Vec<DominationGadget>,
}

impl MaxSepGadget {
    pub fn domination_gadgets(&self) -> impl Iterator<Item = &DominationGadget> {
        self.variables.iter().flat_map(|v| [&v.selector, &v.literals]).chain(&self.clauses)
    }

    pub fn literal_vertex(&self, lit: i32) -> usize {
        let var = &self.variables[lit.unsigned_abs() as usize - 1];
        if lit > 0 {
            var.positive()
        } else {
            var.negative()
        }
    }

    /// Every `u` vertex plus the literal vertex made true by `assignment`.
    pub fn prescribed_set(&self, assignment: &[bool]) -> VertexSet {
        let mut s = VertexSet::new(self.graph.order());
        for g in self.domination_gadgets() {
            g.u.iter().for_each(|&u| {
                s.insert(u);
            });
        }
        for (var, &value) in self.variables.iter().zip(assignment) {
            s.insert(if value { var.positive() } else { var.negative() });
        }
        s
    }
}

pub fn gen_maxsep_gadget(sat: &SatInstance) -> Result<MaxSepGadget> {
    let nv = sat.variables();
    let nc = sat.clauses().len();
    let order = GADGET_ORDER * (2 * nv + nc);
    let variables: Vec<VariableGadget> = (0..nv)
        .map(|i| VariableGadget {
            selector: DominationGadget::at(2 * GADGET_ORDER * i),
            literals: DominationGadget::at(2 * GADGET_ORDER * i + GADGET_ORDER),
        })
        .collect();
    let clauses: Vec<DominationGadget> = (0..nc).map(|j| DominationGadget::at(2 * GADGET_ORDER * nv + GADGET_ORDER * j)).collect();

    let mut edges = Vec::new();
    for v in &variables {
        edges.extend(v.selector.edges());
        edges.extend(v.literals.edges());
        let a = v.selector.v1;
        edges.extend([(a, v.selector.v2), (a, v.positive()), (a, v.negative())]);
    }
    for (gadget, clause) in clauses.iter().zip(sat.clauses()) {
        edges.extend(gadget.edges());
        edges.push((gadget.v1, gadget.v2));
        for &lit in clause {
            let var = &variables[lit.unsigned_abs() as usize - 1];
            edges.push((gadget.v1, if lit > 0 { var.positive() } else { var.negative() }));
        }
    }

    // q's red, p's blue; x^a and c^a red against blue x^b and c^b; all else blue
    let mut coloring = Coloring::monochromatic(order, Color::Blue);
    let all = variables.iter().flat_map(|v| [v.selector, v.literals]).chain(clauses.iter().copied());
    for g in all {
        g.q.iter().for_each(|&q| coloring.set(q, Color::Red));
    }
    for v in &variables {
        coloring.set(v.selector.v1, Color::Red);
    }
    for c in &clauses {
        coloring.set(c.v1, Color::Red);
    }

    Ok(MaxSepGadget { graph: Graph::from_edges(order, edges)?, coloring, k: 4 * nc + 9 * nv, variables, clauses })
}
