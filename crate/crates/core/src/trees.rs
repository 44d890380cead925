//! Constructions on trees: the two-vertex set for a single minority vertex,
//! the parity separating sets C1/C2, the (n + s)/2 red-blue set and the
//! n − s all-pairs set, where s is the number of support vertices.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::{Color, Coloring, Graph};

/// Leaves, support vertices and their classification by number of adjacent
/// leaves. `support_classes[i]` is S_i and `leaf_classes[i]` is L_i.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TreeProfile {
    pub n: usize,
    pub leaves: Vec<usize>,
    pub supports: Vec<usize>,
    pub support_classes: BTreeMap<usize, Vec<usize>>,
    pub leaf_classes: BTreeMap<usize, Vec<usize>>,
    pub s_plus: Vec<usize>,
    pub l_plus: Vec<usize>,
    #[serde(skip)]
    adjacent_leaves: Vec<usize>,
}

impl TreeProfile {
    pub fn leaf_count(&self) -> usize {
        self.leaves.len()
    }

    pub fn support_count(&self) -> usize {
        self.supports.len()
    }

    pub fn s_i(&self, i: usize) -> &[usize] {
        self.support_classes.get(&i).map_or(&[], |v| v.as_slice())
    }

    pub fn l_i(&self, i: usize) -> &[usize] {
        self.leaf_classes.get(&i).map_or(&[], |v| v.as_slice())
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.leaves.binary_search(&v).is_ok()
    }

    pub fn is_support(&self, v: usize) -> bool {
        self.adjacent_leaves[v] > 0
    }

    /// Number of leaves adjacent to `v`.
    pub fn adjacent_leaves(&self, v: usize) -> usize {
        self.adjacent_leaves[v]
    }

    pub fn is_star(&self) -> bool {
        self.n >= 3 && self.supports.len() == 1
    }
}

fn require_tree(t: &Graph) -> Result<()> {
    if t.is_tree() {
        Ok(())
    } else {
        Err(Error::NotATree)
    }
}

fn require_order(t: &Graph, min: usize) -> Result<()> {
    if t.order() >= min {
        Ok(())
    } else {
        Err(Error::TooSmall { n: t.order(), min })
    }
}

pub fn tree_profile(t: &Graph) -> Result<TreeProfile> {
    require_tree(t)?;
    let n = t.order();
    let leaves: Vec<usize> = (0..n).filter(|&v| t.degree(v) == 1).collect();
    let mut adjacent_leaves = vec![0; n];
    for &l in &leaves {
        for u in t.neighbors(l).iter() {
            adjacent_leaves[u] += 1;
        }
    }
    let supports: Vec<usize> = (0..n).filter(|&v| adjacent_leaves[v] > 0).collect();
    let mut support_classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    let mut leaf_classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &u in &supports {
        support_classes.entry(adjacent_leaves[u]).or_default().push(u);
    }
    for &l in &leaves {
        // in K2 each leaf is also the other's support; classify by that support
        let u = t.neighbors(l).first().expect("leaf has a neighbor");
        leaf_classes.entry(adjacent_leaves[u]).or_default().push(l);
    }
    for v in leaf_classes.values_mut() {
        v.sort_unstable();
    }
    let s_plus = supports.iter().copied().filter(|&u| adjacent_leaves[u] >= 2).collect();
    let l_plus = leaves.iter().copied().filter(|&l| t.neighbors(l).iter().any(|u| adjacent_leaves[u] >= 2)).collect();
    Ok(TreeProfile { n, leaves, supports, support_classes, leaf_classes, s_plus, l_plus, adjacent_leaves })
}

/// Red-blue separating set of size at most 2 when exactly one vertex `v` has
/// the minority color: two neighbors of `v` when `v` is internal, otherwise
/// `v` together with a vertex at distance two from it.
pub fn single_red_sep(t: &Graph, c: &Coloring) -> Result<VertexSet> {
    require_tree(t)?;
    t.check_coloring(c)?;
    require_order(t, 3)?;
    let minority = c.class(c.minority());
    if minority.len() != 1 {
        return Err(Error::WrongClassSize(minority.len()));
    }
    let v = minority[0];
    let n = t.order();
    let nb = t.neighbors(v);
    if nb.len() >= 2 {
        return Ok(VertexSet::from_indices(n, nb.iter().take(2)));
    }
    let u = nb.first().expect("n >= 3 tree has no isolated vertex");
    let w = t.neighbors(u).iter().find(|&w| w != v).expect("n >= 3: support has another neighbor");
    Ok(VertexSet::from_indices(n, [v, w]))
}

struct Rooted {
    dist: Vec<usize>,
}

impl Rooted {
    fn parity(&self, v: usize) -> usize {
        self.dist[v] % 2
    }
}

fn lowest_non_leaf_neighbor(t: &Graph, prof: &TreeProfile, u: usize) -> usize {
    t.neighbors(u).iter().find(|&w| !prof.is_leaf(w)).expect("support vertex of a non-star tree on n >= 5 has a non-leaf neighbor")
}

/// The unshifted set: every vertex whose distance to the root has the given
/// parity, plus every leaf.
fn parity_base(t: &Graph, prof: &TreeProfile, rooted: &Rooted, parity: usize) -> VertexSet {
    let mut c = VertexSet::new(t.order());
    for v in 0..t.order() {
        if rooted.parity(v) == parity || prof.is_leaf(v) {
            c.insert(v);
        }
    }
    c
}

/// For each support vertex with exactly one leaf and the given parity, moves
/// the leaf's membership to the support's lowest non-leaf neighbor.
fn shift_from_single_leaves(t: &Graph, prof: &TreeProfile, rooted: &Rooted, parity: usize, set: &mut VertexSet) {
    for &u in prof.s_i(1) {
        if rooted.parity(u) != parity {
            continue;
        }
        let leaf = t.neighbors(u).iter().find(|&l| prof.is_leaf(l)).expect("support has a leaf");
        set.remove(leaf);
        set.insert(lowest_non_leaf_neighbor(t, prof, u));
    }
}

fn parity_precheck(t: &Graph, x: usize) -> Result<TreeProfile> {
    require_tree(t)?;
    require_order(t, 5)?;
    t.check_vertex(x)?;
    let prof = tree_profile(t)?;
    if prof.is_leaf(x) {
        return Err(Error::XIsLeaf(x));
    }
    Ok(prof)
}

/// The two separating sets built around root `x`: C1 from odd-distance
/// vertices and all leaves, C2 from even-distance vertices and all leaves,
/// each with single leaves shifted onto a non-leaf neighbor of their support.
pub fn parity_sets(t: &Graph, x: usize) -> Result<(VertexSet, VertexSet)> {
    let prof = parity_precheck(t, x)?;
    let rooted = Rooted { dist: t.distances_from(x) };
    let mut c1 = parity_base(t, &prof, &rooted, 1);
    let mut c2 = parity_base(t, &prof, &rooted, 0);
    shift_from_single_leaves(t, &prof, &rooted, 1, &mut c1);
    shift_from_single_leaves(t, &prof, &rooted, 0, &mut c2);
    Ok((c1, c2))
}

/// Details of a [`tree_rb_construct`] run, for checking its size accounting.
#[derive(Clone, Debug)]
pub struct TreeRbConstruction {
    pub set: VertexSet,
    /// `None` for stars, otherwise the root and which parity set was used (1 or 2).
    pub root: Option<usize>,
    pub parity_set: Option<u8>,
    pub ns3: VertexSet,
    pub profile: TreeProfile,
}

impl TreeRbConstruction {
    /// (n − ℓ − s₊ − |NS₃|)/2 + ℓ₁ + (ℓ₊ + |NS₃|)/2 + s₊, doubled to stay integral.
    pub fn doubled_accounting_bound(&self) -> usize {
        let p = &self.profile;
        let ns3 = self.ns3.len();
        let l1 = p.l_i(1).len();
        (p.n - p.leaf_count() - p.s_plus.len() - ns3) + 2 * l1 + (p.l_plus.len() + ns3) + 2 * p.s_plus.len()
    }
}

/// The NS₃ set: for every S₃ vertex with no S₊ neighbor, one non-leaf
/// neighbor, chosen lowest-first and shared where possible.
fn ns3_set(t: &Graph, prof: &TreeProfile) -> VertexSet {
    let mut ns3 = VertexSet::new(t.order());
    for &v in prof.s_i(3) {
        if t.neighbors(v).iter().any(|w| prof.adjacent_leaves(w) >= 2) {
            continue;
        }
        let non_leaf = t.neighbors(v).difference(&VertexSet::from_indices(t.order(), prof.leaves.iter().copied()));
        if non_leaf.is_disjoint(&ns3) {
            ns3.insert(non_leaf.first().expect("non-star tree"));
        }
    }
    ns3
}

fn star_construct(t: &Graph, c: &Coloring, prof: TreeProfile) -> TreeRbConstruction {
    let n = t.order();
    let reds: Vec<usize> = prof.leaves.iter().copied().filter(|&l| c.get(l) == Color::Red).collect();
    let blues: Vec<usize> = prof.leaves.iter().copied().filter(|&l| c.get(l) == Color::Blue).collect();
    let keep = if reds.len() <= blues.len() { reds } else { blues };
    let mut set = VertexSet::from_indices(n, keep);
    for &l in &prof.leaves {
        if set.len() >= 2 {
            break;
        }
        set.insert(l);
    }
    TreeRbConstruction { set, root: None, parity_set: None, ns3: VertexSet::new(n), profile: prof }
}

/// Red-blue separating set of size at most (n + s(T))/2 for any coloring of a
/// tree on at least five vertices.
pub fn tree_rb_construct(t: &Graph, c: &Coloring) -> Result<VertexSet> {
    tree_rb_construct_detailed(t, c).map(|r| r.set)
}

pub fn tree_rb_construct_detailed(t: &Graph, c: &Coloring) -> Result<TreeRbConstruction> {
    require_tree(t)?;
    t.check_coloring(c)?;
    require_order(t, 5)?;
    let n = t.order();
    let prof = tree_profile(t)?;
    if prof.is_star() {
        return Ok(star_construct(t, c, prof));
    }
    let leaf_set = VertexSet::from_indices(n, prof.leaves.iter().copied());
    let x = (0..n).find(|&v| !prof.is_leaf(v)).expect("n >= 5");
    let rooted = Rooted { dist: t.distances_from(x) };
    let ns3 = ns3_set(t, &prof);

    let mut excluded = leaf_set.union(&ns3);
    prof.s_plus.iter().for_each(|&u| {
        excluded.insert(u);
    });
    let c1 = parity_base(t, &prof, &rooted, 1);
    let c2 = parity_base(t, &prof, &rooted, 0);
    let (base, parity, which) = if c1.difference(&excluded).len() <= c2.difference(&excluded).len() { (c1, 1, 1) } else { (c2, 0, 2) };
    let mut set = base.clone();

    // Among the leaves of each S₊ vertex, drop the more common color (blue on ties).
    for &u in &prof.s_plus {
        let leaves: Vec<usize> = t.neighbors(u).iter().filter(|&l| prof.is_leaf(l)).collect();
        let reds = leaves.iter().filter(|&&l| c.get(l) == Color::Red).count();
        let common = if reds > leaves.len() - reds { Color::Red } else { Color::Blue };
        for &l in &leaves {
            if c.get(l) == common {
                set.remove(l);
            }
        }
    }

    for (&i, supports) in prof.support_classes.range(2..) {
        for &u in supports {
            let leaves: Vec<usize> = t.neighbors(u).iter().filter(|&l| prof.is_leaf(l)).collect();
            match i {
                2 => {
                    let (a, b) = (leaves[0], leaves[1]);
                    if c.get(a) == c.get(b) {
                        if base.contains(u) {
                            set.insert(lowest_non_leaf_neighbor(t, &prof, u));
                        } else {
                            set.insert(u);
                            set.insert(a);
                        }
                    } else {
                        let (same, other) = if c.get(a) == c.get(u) { (a, b) } else { (b, a) };
                        set.insert(u);
                        set.insert(same);
                        set.remove(other);
                    }
                }
                3 => {
                    set.insert(u);
                    if let Some(w) = t.neighbors(u).iter().find(|&w| ns3.contains(w)) {
                        set.insert(w);
                    }
                    if leaves.iter().all(|&l| c.get(l) == c.get(leaves[0])) {
                        set.insert(leaves[0]);
                    }
                }
                _ => {
                    set.insert(u);
                    for &l in &leaves {
                        if t.neighbors(u).intersection(&set).len() >= 2 {
                            break;
                        }
                        set.insert(l);
                    }
                }
            }
        }
    }

    shift_from_single_leaves(t, &prof, &rooted, parity, &mut set);
    Ok(TreeRbConstruction { set, root: Some(x), parity_set: Some(which), ns3, profile: prof })
}

/// Separating set of size exactly n − s(T): every vertex except one leaf
/// (the lowest) per support vertex.
pub fn tree_all_pairs_construct(t: &Graph) -> Result<VertexSet> {
    require_tree(t)?;
    require_order(t, 5)?;
    t.require_twin_free()?;
    let prof = tree_profile(t)?;
    let mut s = t.vertex_set();
    for &u in &prof.supports {
        let leaf = t.neighbors(u).iter().find(|&l| prof.is_leaf(l)).expect("support has a leaf");
        s.remove(leaf);
    }
    Ok(s)
}
