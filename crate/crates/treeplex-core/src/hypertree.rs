//! Noncrossing hypertrees on cyclically arranged vertices.
//!
//! A noncrossing hypertree on `1..=n` is a set of hyperedges (vertex
//! subsets of size >= 2) that pairwise share at most one vertex, have
//! disjoint convex hulls apart from shared vertices, and connect all `n`
//! vertices acyclically (total weight `sum(|e| - 1) = n - 1`).
//!
//! These objects index the classes above an unmarked star in the reduced
//! order: each unmarked vertex of a reduced tree spans the hyperedge of
//! its neighboring marks, and marked-marked edges contribute pairs.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::poset::FinitePoset;
use crate::tree::PlanarTree;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HypertreeError {
    /// Vertex count outside the supported range for the operation.
    NOutOfRange { n: u32, lo: u32, hi: u32 },
    /// A hyperedge member outside `1..=n`.
    BadVertex { v: u32 },
    /// A hyperedge with fewer than two distinct members.
    HyperedgeTooSmall,
    /// The same hyperedge listed twice.
    DuplicateHyperedge,
    /// Two hyperedges sharing two vertices or crossing.
    CrossingHyperedges,
    /// Total weight `sum(|e|-1)` differs from `n - 1`.
    WrongWeight { weight: u32, expected: u32 },
    /// The hyperedges do not connect all vertices.
    NotSpanning,
    /// A tree whose unmarked vertices have unmarked neighbors.
    NotReduced,
}

impl core::fmt::Display for HypertreeError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            HypertreeError::NOutOfRange { n, lo, hi } => {
                write!(f, "vertex count {n} outside supported range {lo}..={hi}")
            }
            HypertreeError::BadVertex { v } => write!(f, "hyperedge member {v} out of range"),
            HypertreeError::HyperedgeTooSmall => {
                write!(f, "hyperedges need at least two distinct members")
            }
            HypertreeError::DuplicateHyperedge => write!(f, "hyperedge listed twice"),
            HypertreeError::CrossingHyperedges => {
                write!(f, "hyperedges share two vertices or cross")
            }
            HypertreeError::WrongWeight { weight, expected } => {
                write!(f, "total weight {weight}, expected {expected}")
            }
            HypertreeError::NotSpanning => write!(f, "hyperedges do not connect all vertices"),
            HypertreeError::NotReduced => {
                write!(f, "tree has an edge between two unmarked vertices")
            }
        }
    }
}

impl core::error::Error for HypertreeError {}

/// Whether two hyperedges (sorted, deduplicated) can coexist in a
/// noncrossing hypertree on `1..=n`: they share at most one vertex and
/// their convex hulls meet only there.
///
/// With a shared vertex `x` the test cuts the circle at `x` and requires
/// the two remainder spans to be disjoint; testing only pairwise
/// interleaving would wrongly accept nested spans such as `{1,2,6}` and
/// `{1,3,4}` on six vertices.
pub fn hyperedges_compatible(n: u32, a: &[u32], b: &[u32]) -> bool {
    let shared: Vec<u32> = a.iter().copied().filter(|x| b.contains(x)).collect();
    if shared.len() > 1 {
        return false;
    }
    if let [x] = shared[..] {
        let spin = |e: &[u32]| -> (u32, u32) {
            let offs: Vec<u32> = e
                .iter()
                .copied()
                .filter(|&w| w != x)
                .map(|w| (w + n - x) % n)
                .collect();
            (
                offs.iter().copied().min().expect("size >= 2"),
                offs.iter().copied().max().expect("size >= 2"),
            )
        };
        let (alo, ahi) = spin(a);
        let (blo, bhi) = spin(b);
        return ahi < blo || bhi < alo;
    }
    // disjoint hyperedges: the cyclic membership sequence must split into
    // one block of each
    let pts: BTreeSet<u32> = a.iter().chain(b.iter()).copied().collect();
    let marks: Vec<bool> = pts.iter().map(|p| a.contains(p)).collect();
    let blocks = (0..marks.len())
        .filter(|&i| marks[i] != marks[(i + marks.len() - 1) % marks.len()])
        .count();
    blocks <= 2
}

/// A noncrossing hypertree on the cyclically arranged vertices `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct NoncrossingHypertree {
    n: u32,
    hyperedges: Vec<Vec<u32>>,
}

const NCHT_MIN_N: u32 = 3;
const NCHT_NEW_MAX_N: u32 = 9;
const NCHT_ENUM_MAX_N: u32 = 7;
const NCHT_POSET_MAX_N: u32 = 6;

impl NoncrossingHypertree {
    pub fn new(n: u32, hyperedges: &[Vec<u32>]) -> Result<Self, HypertreeError> {
        if !(NCHT_MIN_N..=NCHT_NEW_MAX_N).contains(&n) {
            return Err(HypertreeError::NOutOfRange { n, lo: NCHT_MIN_N, hi: NCHT_NEW_MAX_N });
        }
        let mut edges: Vec<Vec<u32>> = Vec::with_capacity(hyperedges.len());
        for e in hyperedges {
            let mut s: Vec<u32> = e.clone();
            s.sort_unstable();
            s.dedup();
            if s.len() < 2 {
                return Err(HypertreeError::HyperedgeTooSmall);
            }
            if let Some(&v) = s.iter().find(|&&v| v < 1 || v > n) {
                return Err(HypertreeError::BadVertex { v });
            }
            if edges.contains(&s) {
                return Err(HypertreeError::DuplicateHyperedge);
            }
            edges.push(s);
        }
        edges.sort();
        for i in 0..edges.len() {
            for j in i + 1..edges.len() {
                if !hyperedges_compatible(n, &edges[i], &edges[j]) {
                    return Err(HypertreeError::CrossingHyperedges);
                }
            }
        }
        let weight: u32 = edges.iter().map(|e| e.len() as u32 - 1).sum();
        if weight != n - 1 {
            return Err(HypertreeError::WrongWeight { weight, expected: n - 1 });
        }
        if !connected_spanning(n, &edges) {
            return Err(HypertreeError::NotSpanning);
        }
        Ok(NoncrossingHypertree { n, hyperedges: edges })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Hyperedges, each sorted ascending, in lexicographic order.
    pub fn hyperedges(&self) -> &[Vec<u32>] {
        &self.hyperedges
    }

    /// Poset key such as `{12,134}` (members concatenated as digits).
    pub fn key(&self) -> String {
        let parts: Vec<String> = self
            .hyperedges
            .iter()
            .map(|e| e.iter().map(|v| v.to_string()).collect::<String>())
            .collect();
        format!("{{{}}}", parts.join(","))
    }

    /// Refinement order: `self <= other` when every hyperedge of `self` is
    /// contained in some hyperedge of `other`.
    pub fn leq(&self, other: &NoncrossingHypertree) -> bool {
        self.n == other.n
            && self.hyperedges.iter().all(|e| {
                other
                    .hyperedges
                    .iter()
                    .any(|f| e.iter().all(|v| f.contains(v)))
            })
    }
}

fn connected_spanning(n: u32, edges: &[Vec<u32>]) -> bool {
    let n = n as usize;
    let mut parent: Vec<usize> = (0..=n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for e in edges {
        let mut it = e.iter();
        let a = find(&mut parent, *it.next().expect("nonempty") as usize);
        for &w in it {
            let b = find(&mut parent, w as usize);
            if a != b {
                parent[b] = a;
            }
        }
    }
    let root = find(&mut parent, 1);
    (2..=n).all(|v| find(&mut parent, v) == root)
}

/// All noncrossing hypertrees on `1..=n` (`3..=7`), sorted.
pub fn enumerate_ncht(n: u32) -> Result<Vec<NoncrossingHypertree>, HypertreeError> {
    if !(NCHT_MIN_N..=NCHT_ENUM_MAX_N).contains(&n) {
        return Err(HypertreeError::NOutOfRange { n, lo: NCHT_MIN_N, hi: NCHT_ENUM_MAX_N });
    }
    // candidate hyperedges by (size, lexicographic)
    let mut cands: Vec<Vec<u32>> = (0u32..1 << n)
        .filter(|m| m.count_ones() >= 2)
        .map(|m| (1..=n).filter(|v| m >> (v - 1) & 1 == 1).collect())
        .collect();
    cands.sort_by_key(|e: &Vec<u32>| (e.len(), e.clone()));
    let target = n - 1;
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    fn rec(
        i: usize,
        weight: u32,
        n: u32,
        target: u32,
        cands: &[Vec<u32>],
        chosen: &mut Vec<usize>,
        out: &mut Vec<NoncrossingHypertree>,
    ) {
        if weight == target {
            let edges: Vec<Vec<u32>> = chosen.iter().map(|&k| cands[k].clone()).collect();
            if connected_spanning(n, &edges) {
                let mut sorted = edges;
                sorted.sort();
                out.push(NoncrossingHypertree { n, hyperedges: sorted });
            }
            return;
        }
        if i == cands.len() {
            return;
        }
        rec(i + 1, weight, n, target, cands, chosen, out);
        let w = cands[i].len() as u32 - 1;
        if weight + w <= target
            && chosen
                .iter()
                .all(|&k| hyperedges_compatible(n, &cands[k], &cands[i]))
        {
            chosen.push(i);
            rec(i + 1, weight + w, n, target, cands, chosen, out);
            chosen.pop();
        }
    }
    rec(0, 0, n, target, &cands, &mut chosen, &mut out);
    out.sort();
    Ok(out)
}

/// The refinement poset of all noncrossing hypertrees on `1..=n` (`3..=6`),
/// keyed by [`NoncrossingHypertree::key`].
pub fn ncht_poset(n: u32) -> Result<FinitePoset, HypertreeError> {
    if n > NCHT_POSET_MAX_N {
        return Err(HypertreeError::NOutOfRange { n, lo: NCHT_MIN_N, hi: NCHT_POSET_MAX_N });
    }
    let hs = enumerate_ncht(n)?;
    let elements: Vec<String> = hs.iter().map(|h| h.key()).collect();
    Ok(FinitePoset::from_leq(elements, |i, j| hs[i].leq(&hs[j]))
        .expect("refinement is a partial order"))
}

/// The hyperedges spanned by a reduced planar tree: one hyperedge of
/// neighbor marks per unmarked vertex, one pair per marked-marked edge.
/// Fails when the tree has unmarked-unmarked edges or when the collected
/// hyperedges do not form a noncrossing hypertree.
pub fn tree_to_hypertree(t: &PlanarTree) -> Result<NoncrossingHypertree, HypertreeError> {
    let mut edges: BTreeSet<Vec<u32>> = BTreeSet::new();
    for v in 0..t.vertex_count() {
        if t.is_marked(v) {
            continue;
        }
        let mut e = Vec::with_capacity(t.valence(v));
        for &w in t.rotation(v) {
            e.push(t.label(w).ok_or(HypertreeError::NotReduced)?);
        }
        e.sort_unstable();
        edges.insert(e);
    }
    for (a, b) in t.edges() {
        if let (Some(la), Some(lb)) = (t.label(a), t.label(b)) {
            let mut e = vec![la, lb];
            e.sort_unstable();
            edges.insert(e);
        }
    }
    let edges: Vec<Vec<u32>> = edges.into_iter().collect();
    NoncrossingHypertree::new(t.n(), &edges)
}

/// The reduced planar tree realizing a noncrossing hypertree: hyperedges
/// of size >= 3 become unmarked vertices whose rotation lists their marks
/// in ascending order, pairs become marked-marked edges, and each mark
/// orders its incident hyperedges by cyclic distance.
pub fn hypertree_to_tree(h: &NoncrossingHypertree) -> PlanarTree {
    let n = h.n;
    let big: Vec<&Vec<u32>> = h.hyperedges.iter().filter(|e| e.len() >= 3).collect();
    let pairs: Vec<&Vec<u32>> = h.hyperedges.iter().filter(|e| e.len() == 2).collect();
    let v_count = n as usize + big.len();
    let mut labels: Vec<Option<u32>> = (1..=n).map(Some).collect();
    labels.extend(core::iter::repeat_n(None, big.len()));
    let mut rot: Vec<Vec<usize>> = vec![Vec::new(); v_count];
    // (hyperedge, far endpoint) pairs incident to each mark
    let mut inc: BTreeMap<u32, Vec<(&Vec<u32>, usize)>> =
        (1..=n).map(|m| (m, Vec::new())).collect();
    for (i, e) in big.iter().enumerate() {
        let u = n as usize + i;
        rot[u] = e.iter().map(|&m| m as usize - 1).collect();
        for &m in e.iter() {
            inc.get_mut(&m).expect("mark in range").push((e, u));
        }
    }
    for e in &pairs {
        let (a, b) = (e[0], e[1]);
        inc.get_mut(&a).expect("mark in range").push((e, b as usize - 1));
        inc.get_mut(&b).expect("mark in range").push((e, a as usize - 1));
    }
    for m in 1..=n {
        let items = inc.get_mut(&m).expect("mark in range");
        items.sort_by_key(|(e, _)| {
            e.iter()
                .filter(|&&w| w != m)
                .map(|&w| (w + n - m) % n)
                .min()
                .expect("size >= 2")
        });
        rot[m as usize - 1] = items.iter().map(|&(_, v)| v).collect();
    }
    PlanarTree::new(n, labels, rot).expect("hypertrees realize valid reduced trees")
}
