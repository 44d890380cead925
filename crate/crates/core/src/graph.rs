//! Simple undirected graphs, red-blue colorings, codes and the verifiers every
//! solver certifies against.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};

/// Undirected simple graph on vertices `0..n`.
///
/// Open and closed neighborhoods are both precomputed as bit sets; the graph
/// is immutable once built.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<VertexSet>,
    closed: Vec<VertexSet>,
    m: usize,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        let adj = vec![VertexSet::new(n); n];
        let closed = (0..n).map(|v| VertexSet::from_indices(n, [v])).collect();
        Graph { adj, closed, m: 0 }
    }

    /// Builds a graph from an edge list. Duplicate edges are merged; self-loops
    /// and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if g.adj[u].insert(v) {
                g.adj[v].insert(u);
                g.closed[u].insert(v);
                g.closed[v].insert(u);
                g.m += 1;
            }
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adj[u].contains(v)
    }

    /// Open neighborhood N(v). Panics when `v` is out of range.
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    /// Closed neighborhood N[v]. Panics when `v` is out of range.
    pub fn closed(&self, v: usize) -> &VertexSet {
        &self.closed[v]
    }

    /// Checked form of [`Graph::closed`].
    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self.closed[v].clone())
    }

    /// The code of `v` with respect to `s`: N[v] ∩ S.
    pub fn code(&self, s: &VertexSet, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        self.check_set(s)?;
        Ok(self.closed[v].intersection(s))
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.order() {
            out.extend(self.adj[u].iter().filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.order() })
        }
    }

    pub fn check_set(&self, s: &VertexSet) -> Result<()> {
        if s.universe() == self.order() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: s.universe().saturating_sub(1), n: self.order() })
        }
    }

    pub fn check_coloring(&self, c: &Coloring) -> Result<()> {
        if c.len() == self.order() {
            Ok(())
        } else {
            Err(Error::ColoringLength { expected: self.order(), got: c.len() })
        }
    }

    pub fn is_connected(&self) -> bool {
        let n = self.order();
        if n == 0 {
            return true;
        }
        let mut seen = VertexSet::new(n);
        let mut stack = vec![0];
        seen.insert(0);
        while let Some(u) = stack.pop() {
            for w in self.adj[u].iter() {
                if seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        seen.len() == n
    }

    pub fn is_tree(&self) -> bool {
        self.order() >= 1 && self.m + 1 == self.order() && self.is_connected()
    }

    /// Lexicographically smallest triangle, if any.
    pub fn find_triangle(&self) -> Option<(usize, usize, usize)> {
        for (u, v) in self.edges() {
            let common = self.adj[u].intersection(&self.adj[v]);
            if let Some(w) = common.iter().find(|&w| w > v) {
                return Some((u, v, w));
            }
        }
        None
    }

    /// BFS distances from `src`; unreachable vertices get `usize::MAX`.
    pub fn distances_from(&self, src: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.order()];
        dist[src] = 0;
        let mut queue = std::collections::VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            for w in self.adj[u].iter() {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn twin_classes(&self) -> TwinReport {
        let mut groups: HashMap<&VertexSet, Vec<usize>> = HashMap::new();
        for v in 0..self.order() {
            groups.entry(&self.closed[v]).or_default().push(v);
        }
        let mut classes: Vec<Vec<usize>> = groups.into_values().collect();
        classes.sort_by_key(|c| c[0]);
        TwinReport { classes }
    }

    pub fn is_twin_free(&self) -> bool {
        self.twin_classes().is_twin_free()
    }

    /// Errors with the twin report unless every twin class is a singleton.
    pub fn require_twin_free(&self) -> Result<()> {
        let report = self.twin_classes();
        if report.is_twin_free() {
            Ok(())
        } else {
            Err(Error::NotTwinFree(report))
        }
    }

    pub fn profile(&self) -> GraphProfile {
        let n = self.order();
        GraphProfile {
            n,
            m: self.m,
            max_degree: self.max_degree(),
            min_degree: (0..n).map(|v| self.degree(v)).min().unwrap_or(0),
            triangle_free: self.find_triangle().is_none(),
            connected: self.is_connected(),
            tree: self.is_tree(),
            twin_free: self.is_twin_free(),
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph").field("n", &self.order()).field("edges", &self.edges()).finish()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    pub fn swap(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Color::Red => 'R',
            Color::Blue => 'B',
        }
    }
}

/// Total red-blue labeling of the vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Coloring(Vec<Color>);

impl Coloring {
    pub fn new(colors: Vec<Color>) -> Self {
        Coloring(colors)
    }

    pub fn monochromatic(n: usize, color: Color) -> Self {
        Coloring(vec![color; n])
    }

    /// Bit `i` of `mask` set means vertex `i` is red. Only `n <= 64`.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        assert!(n <= 64);
        Coloring((0..n).map(|i| if mask >> i & 1 == 1 { Color::Red } else { Color::Blue }).collect())
    }

    pub fn from_reds(n: usize, reds: impl IntoIterator<Item = usize>) -> Self {
        let mut c = Coloring::monochromatic(n, Color::Blue);
        for r in reds {
            c.0[r] = Color::Red;
        }
        c
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, v: usize) -> Color {
        self.0[v]
    }

    pub fn set(&mut self, v: usize, color: Color) {
        self.0[v] = color;
    }

    pub fn colors(&self) -> &[Color] {
        &self.0
    }

    pub fn class(&self, color: Color) -> Vec<usize> {
        (0..self.len()).filter(|&v| self.0[v] == color).collect()
    }

    /// `(#red, #blue)`.
    pub fn class_sizes(&self) -> (usize, usize) {
        let reds = self.0.iter().filter(|&&c| c == Color::Red).count();
        (reds, self.len() - reds)
    }

    /// The color of the smaller class; red on ties.
    pub fn minority(&self) -> Color {
        let (r, b) = self.class_sizes();
        if r <= b {
            Color::Red
        } else {
            Color::Blue
        }
    }

    pub fn min_class_size(&self) -> usize {
        let (r, b) = self.class_sizes();
        r.min(b)
    }

    pub fn swapped(&self) -> Coloring {
        Coloring(self.0.iter().map(|c| c.swap()).collect())
    }
}

impl fmt::Display for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.0 {
            write!(f, "{}", c.as_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Coloring({self})")
    }
}

impl FromStr for Coloring {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .enumerate()
            .map(|(i, ch)| match ch {
                'R' => Ok(Color::Red),
                'B' => Ok(Color::Blue),
                other => Err(Error::Parse { line: 1, message: format!("column {}: expected 'R' or 'B', found {other:?}", i + 1) }),
            })
            .collect::<Result<Vec<_>>>()
            .map(Coloring)
    }
}

/// Partition of the vertices by closed-neighborhood equality, classes ordered
/// by their smallest member.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwinReport {
    pub classes: Vec<Vec<usize>>,
}

impl TwinReport {
    pub fn is_twin_free(&self) -> bool {
        self.classes.iter().all(|c| c.len() == 1)
    }

    pub fn non_trivial(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.classes.iter().filter(|c| c.len() > 1)
    }
}

/// Outcome of a verifier.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    /// Lexicographically smallest `(u, v)`, `u < v`, left unseparated.
    Pair(usize, usize),
    Undominated(usize),
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphProfile {
    pub n: usize,
    pub m: usize,
    pub max_degree: usize,
    pub min_degree: usize,
    pub triangle_free: bool,
    pub connected: bool,
    pub tree: bool,
    pub twin_free: bool,
}

pub fn closed_neighborhood(g: &Graph, v: usize) -> Result<VertexSet> {
    g.closed_neighborhood(v)
}

pub fn code(g: &Graph, s: &VertexSet, v: usize) -> Result<VertexSet> {
    g.code(s, v)
}

pub fn twin_classes(g: &Graph) -> TwinReport {
    g.twin_classes()
}

pub fn graph_profile(g: &Graph) -> GraphProfile {
    g.profile()
}

/// Smallest pair `(u, v)`, `u < v`, with equal codes under `s` for which
/// `conflict(u, v)` holds.
fn smallest_collision(g: &Graph, s: &VertexSet, conflict: impl Fn(usize, usize) -> bool) -> Verdict {
    let mut groups: HashMap<VertexSet, Vec<usize>> = HashMap::new();
    for v in 0..g.order() {
        groups.entry(g.closed(v).intersection(s)).or_default().push(v);
    }
    let mut best: Option<(usize, usize)> = None;
    for members in groups.values() {
        'outer: for (i, &u) in members.iter().enumerate() {
            if best.is_some_and(|(bu, _)| bu < u) {
                break;
            }
            for &v in &members[i + 1..] {
                if conflict(u, v) {
                    if best.is_none_or(|b| (u, v) < b) {
                        best = Some((u, v));
                    }
                    break 'outer;
                }
            }
        }
    }
    match best {
        Some((u, v)) => Verdict::Pair(u, v),
        None => Verdict::Valid,
    }
}

/// Checks that every red vertex has a code different from every blue vertex.
pub fn verify_rb_separating(g: &Graph, c: &Coloring, s: &VertexSet) -> Verdict {
    assert_eq!(c.len(), g.order(), "coloring length mismatch");
    assert_eq!(s.universe(), g.order(), "vertex set universe mismatch");
    smallest_collision(g, s, |u, v| c.get(u) != c.get(v))
}

/// Checks that all `n` codes are pairwise distinct.
pub fn verify_separating(g: &Graph, s: &VertexSet) -> Verdict {
    assert_eq!(s.universe(), g.order(), "vertex set universe mismatch");
    smallest_collision(g, s, |_, _| true)
}

/// Checks that every closed neighborhood meets `d`.
pub fn verify_dominating(g: &Graph, d: &VertexSet) -> Verdict {
    assert_eq!(d.universe(), g.order(), "vertex set universe mismatch");
    match (0..g.order()).find(|&v| g.closed(v).is_disjoint(d)) {
        Some(v) => Verdict::Undominated(v),
        None => Verdict::Valid,
    }
}
