//! Brute-force oracles. They rebuild closed neighborhoods as `u32` masks from
//! the edge list and share no code with the library's solvers or verifiers.

#![allow(dead_code)]

use rbsep::{Color, Coloring, Graph, VertexSet};

pub struct Oracle {
    pub n: usize,
    pub closed: Vec<u32>,
}

impl Oracle {
    pub fn new(g: &Graph) -> Self {
        let n = g.order();
        assert!(n <= 24, "oracle limited to 24 vertices");
        let mut closed: Vec<u32> = (0..n).map(|v| 1 << v).collect();
        for (u, v) in g.edges() {
            closed[u] |= 1 << v;
            closed[v] |= 1 << u;
        }
        Oracle { n, closed }
    }

    fn separates_rb(&self, reds: &[usize], blues: &[usize], s: u32) -> bool {
        reds.iter().all(|&r| blues.iter().all(|&b| self.closed[r] & s != self.closed[b] & s))
    }

    fn separates_all(&self, s: u32) -> bool {
        (0..self.n).all(|u| (u + 1..self.n).all(|v| self.closed[u] & s != self.closed[v] & s))
    }

    fn dominates(&self, s: u32) -> bool {
        self.closed.iter().all(|&c| c & s != 0)
    }

    /// Smallest mask satisfying `ok`, visiting sizes in increasing order.
    fn smallest(&self, ok: impl Fn(u32) -> bool) -> Option<usize> {
        let full: u32 = if self.n == 32 { u32::MAX } else { (1u32 << self.n) - 1 };
        let mut best: Option<usize> = None;
        let mut s: u32 = 0;
        loop {
            let k = s.count_ones() as usize;
            if best.is_none_or(|b| k < b) && ok(s) {
                best = Some(k);
            }
            if s == full {
                break;
            }
            s += 1;
        }
        best
    }

    pub fn sep_rb(&self, c: &Coloring) -> Option<usize> {
        let reds = c.class(Color::Red);
        let blues = c.class(Color::Blue);
        self.smallest(|s| self.separates_rb(&reds, &blues, s))
    }

    pub fn sep(&self) -> Option<usize> {
        self.smallest(|s| self.separates_all(s))
    }

    pub fn gamma(&self) -> usize {
        self.smallest(|s| self.dominates(s)).expect("V dominates")
    }

    /// Over all 2^n colorings.
    pub fn maxsep(&self) -> Option<usize> {
        let mut best = 0;
        for mask in 0u64..1 << self.n {
            best = best.max(self.sep_rb(&Coloring::from_mask(self.n, mask))?);
        }
        Some(best)
    }

    pub fn is_rb_separating(&self, c: &Coloring, s: &VertexSet) -> bool {
        self.separates_rb(&c.class(Color::Red), &c.class(Color::Blue), to_mask(s))
    }

    pub fn is_separating(&self, s: &VertexSet) -> bool {
        self.separates_all(to_mask(s))
    }

    pub fn is_dominating(&self, s: &VertexSet) -> bool {
        self.dominates(to_mask(s))
    }

    pub fn twins(&self, u: usize, v: usize) -> bool {
        self.closed[u] == self.closed[v]
    }
}

pub fn to_mask(s: &VertexSet) -> u32 {
    s.iter().fold(0, |m, v| m | 1 << v)
}

/// Minimum number of sets covering `0..universe`, by subset enumeration.
pub fn set_cover_oracle(universe: usize, sets: &[Vec<usize>]) -> Option<usize> {
    let full: u64 = (1u64 << universe) - 1;
    let masks: Vec<u64> = sets.iter().map(|s| s.iter().fold(0, |m, &e| m | 1 << e)).collect();
    (0u64..1 << masks.len())
        .filter(|pick| {
            let covered = masks.iter().enumerate().filter(|(i, _)| pick >> i & 1 == 1).fold(0, |a, (_, m)| a | m);
            covered == full
        })
        .map(|pick| pick.count_ones() as usize)
        .min()
}

/// Every vertex set of `n` vertices with exactly `k` members.
pub fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = VertexSet> {
    (0u64..1 << n)
        .filter(move |m| m.count_ones() as usize == k)
        .map(move |m| VertexSet::from_indices(n, (0..n).filter(|&i| m >> i & 1 == 1)))
}

/// Edge lists on `n` vertices drawn from a mask over all pairs; used by proptest strategies.
pub fn graph_from_pair_mask(n: usize, mask: u64) -> Graph {
    let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::from_edges(n, pairs.enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, e)| e)).unwrap()
}
