//! Partial triangulations of convex polygons and their face posets.
//!
//! A partial triangulation of the `m`-gon is a set of pairwise noncrossing
//! diagonals.  Under *reverse* containment (fewer diagonals = higher) these
//! form the face poset of the associahedron: the empty set is the top cell
//! and full triangulations are the vertices.  Centrally symmetric partial
//! triangulations of the `2n`-gon form the face poset of the cyclohedron.
//!
//! The dual tree construction turns a partial triangulation into a planar
//! marked tree whose marks are the polygon sides, and the half-turn
//! quotient of a symmetric triangulation's dual produces a tree with one
//! extra mark at the fold.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::poset::FinitePoset;
use crate::tree::PlanarTree;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TriangulationError {
    /// Polygon size outside the supported range for the operation.
    NGonOutOfRange { ngon: u32, lo: u32, hi: u32 },
    /// A vertex pair that is not a diagonal of the polygon (out of range,
    /// equal, or cyclically adjacent).
    NotADiagonal { ngon: u32, a: u32, b: u32 },
    /// The same diagonal listed twice.
    DuplicateDiagonal { a: u32, b: u32 },
    /// Two crossing diagonals.
    CrossingDiagonals { d1: (u32, u32), d2: (u32, u32) },
    /// A polygon with an odd number of sides cannot be halved.
    OddPolygon { ngon: u32 },
    /// The diagonal set is not fixed by the half-turn.
    NotSymmetric,
    /// A tree that is not the dual tree of any partial triangulation.
    NotDualizable,
}

impl core::fmt::Display for TriangulationError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            TriangulationError::NGonOutOfRange { ngon, lo, hi } => {
                write!(f, "polygon size {ngon} outside supported range {lo}..={hi}")
            }
            TriangulationError::NotADiagonal { ngon, a, b } => {
                write!(f, "({a}, {b}) is not a diagonal of the {ngon}-gon")
            }
            TriangulationError::DuplicateDiagonal { a, b } => {
                write!(f, "diagonal ({a}, {b}) listed twice")
            }
            TriangulationError::CrossingDiagonals { d1, d2 } => {
                write!(
                    f,
                    "diagonals ({}, {}) and ({}, {}) cross",
                    d1.0, d1.1, d2.0, d2.1
                )
            }
            TriangulationError::OddPolygon { ngon } => {
                write!(f, "the {ngon}-gon has no half-turn symmetry")
            }
            TriangulationError::NotSymmetric => {
                write!(f, "diagonal set is not fixed by the half-turn")
            }
            TriangulationError::NotDualizable => {
                write!(f, "tree is not the dual tree of a partial triangulation")
            }
        }
    }
}

impl core::error::Error for TriangulationError {}

/// A set of pairwise noncrossing diagonals of a convex polygon with
/// corners `1..=ngon` in counterclockwise order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct PartialTriangulation {
    ngon: u32,
    diagonals: Vec<(u32, u32)>,
}

fn check_diagonal(ngon: u32, a: u32, b: u32) -> Result<(u32, u32), TriangulationError> {
    let (p, q) = (a.min(b), a.max(b));
    if p < 1 || q > ngon || q - p < 2 || (p == 1 && q == ngon) {
        return Err(TriangulationError::NotADiagonal { ngon, a, b });
    }
    Ok((p, q))
}

/// Whether two diagonals of the `ngon`-gon cross in the interior.
/// Diagonals sharing an endpoint do not cross.
pub fn diagonals_cross(
    ngon: u32,
    d1: (u32, u32),
    d2: (u32, u32),
) -> Result<bool, TriangulationError> {
    let (p, q) = check_diagonal(ngon, d1.0, d1.1)?;
    let (r, s) = check_diagonal(ngon, d2.0, d2.1)?;
    if p == r || p == s || q == r || q == s {
        return Ok(false);
    }
    Ok((p < r && r < q && q < s) || (r < p && p < s && s < q))
}

/// All diagonals of the `ngon`-gon, sorted.
pub fn all_diagonals(ngon: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for i in 1..=ngon {
        for j in i + 2..=ngon {
            if !(i == 1 && j == ngon) {
                out.push((i, j));
            }
        }
    }
    out
}

impl PartialTriangulation {
    pub fn new(ngon: u32, diagonals: &[(u32, u32)]) -> Result<Self, TriangulationError> {
        if ngon < 3 {
            return Err(TriangulationError::NGonOutOfRange { ngon, lo: 3, hi: u32::MAX });
        }
        let mut norm = Vec::with_capacity(diagonals.len());
        for &(a, b) in diagonals {
            let d = check_diagonal(ngon, a, b)?;
            if norm.contains(&d) {
                return Err(TriangulationError::DuplicateDiagonal { a: d.0, b: d.1 });
            }
            norm.push(d);
        }
        norm.sort_unstable();
        for i in 0..norm.len() {
            for j in i + 1..norm.len() {
                if diagonals_cross(ngon, norm[i], norm[j])? {
                    return Err(TriangulationError::CrossingDiagonals {
                        d1: norm[i],
                        d2: norm[j],
                    });
                }
            }
        }
        Ok(PartialTriangulation { ngon, diagonals: norm })
    }

    pub fn ngon(&self) -> u32 {
        self.ngon
    }

    /// The diagonals, normalized `(min, max)` and sorted.
    pub fn diagonals(&self) -> &[(u32, u32)] {
        &self.diagonals
    }

    /// Poset key such as `{1-3,2-6}`; the empty set is `{}`.
    pub fn key(&self) -> String {
        let parts: Vec<String> = self
            .diagonals
            .iter()
            .map(|&(a, b)| format!("{a}-{b}"))
            .collect();
        format!("{{{}}}", parts.join(","))
    }

    /// Reverse containment: `self <= other` when `other`'s diagonals are a
    /// subset of `self`'s (removing diagonals moves up).
    pub fn leq(&self, other: &PartialTriangulation) -> bool {
        self.ngon == other.ngon
            && other.diagonals.iter().all(|d| self.diagonals.contains(d))
    }

    /// Image under the half-turn `k -> k + ngon/2 (mod ngon)`.
    /// Errors on odd polygons.
    pub fn half_turn(&self) -> Result<PartialTriangulation, TriangulationError> {
        if !self.ngon.is_multiple_of(2) {
            return Err(TriangulationError::OddPolygon { ngon: self.ngon });
        }
        let h = self.ngon / 2;
        let shift = |k: u32| (k - 1 + h) % self.ngon + 1;
        let diags: Vec<(u32, u32)> = self
            .diagonals
            .iter()
            .map(|&(a, b)| (shift(a), shift(b)))
            .collect();
        PartialTriangulation::new(self.ngon, &diags)
    }

    /// Whether the diagonal set is fixed by the half-turn.
    pub fn is_symmetric(&self) -> Result<bool, TriangulationError> {
        Ok(self.half_turn()?.diagonals == self.diagonals)
    }
}

const ENUMERATE_MAX_NGON: u32 = 11;

/// All partial triangulations of the `ngon`-gon (`3..=11`), sorted by key
/// data.
pub fn enumerate_partial_triangulations(
    ngon: u32,
) -> Result<Vec<PartialTriangulation>, TriangulationError> {
    if !(3..=ENUMERATE_MAX_NGON).contains(&ngon) {
        return Err(TriangulationError::NGonOutOfRange { ngon, lo: 3, hi: ENUMERATE_MAX_NGON });
    }
    let ds = all_diagonals(ngon);
    // crossing table
    let mut crosses = vec![Vec::new(); ds.len()];
    for i in 0..ds.len() {
        for j in 0..ds.len() {
            crosses[i]
                .push(diagonals_cross(ngon, ds[i], ds[j]).expect("valid diagonals"));
        }
    }
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    fn rec(
        i: usize,
        ds: &[(u32, u32)],
        crosses: &[Vec<bool>],
        chosen: &mut Vec<usize>,
        ngon: u32,
        out: &mut Vec<PartialTriangulation>,
    ) {
        if i == ds.len() {
            let diagonals: Vec<(u32, u32)> = chosen.iter().map(|&k| ds[k]).collect();
            out.push(PartialTriangulation { ngon, diagonals });
            return;
        }
        rec(i + 1, ds, crosses, chosen, ngon, out);
        if chosen.iter().all(|&k| !crosses[k][i]) {
            chosen.push(i);
            rec(i + 1, ds, crosses, chosen, ngon, out);
            chosen.pop();
        }
    }
    rec(0, &ds, &crosses, &mut chosen, ngon, &mut out);
    out.sort();
    Ok(out)
}

fn poset_from_triangulations(pts: &[PartialTriangulation]) -> FinitePoset {
    // encode each diagonal set as a bitmask for O(1) containment tests
    let all: Vec<(u32, u32)> = if pts.is_empty() {
        Vec::new()
    } else {
        all_diagonals(pts[0].ngon)
    };
    let pos: BTreeMap<(u32, u32), usize> =
        all.iter().enumerate().map(|(i, &d)| (d, i)).collect();
    let masks: Vec<u64> = pts
        .iter()
        .map(|p| {
            p.diagonals
                .iter()
                .fold(0u64, |acc, d| acc | 1 << pos[d])
        })
        .collect();
    let elements: Vec<String> = pts.iter().map(|p| p.key()).collect();
    FinitePoset::from_leq(elements, |i, j| masks[j] & !masks[i] == 0)
        .expect("reverse containment is a partial order")
}

const TRI_POSET_MAX_NGON: u32 = 9;

/// Face poset of all partial triangulations of the `ngon`-gon under reverse
/// containment (`3..=9`).  This is the face poset of the associahedron
/// `K_{ngon-1}`, including its top cell (the empty diagonal set).
pub fn tri_poset(ngon: u32) -> Result<FinitePoset, TriangulationError> {
    if !(3..=TRI_POSET_MAX_NGON).contains(&ngon) {
        return Err(TriangulationError::NGonOutOfRange { ngon, lo: 3, hi: TRI_POSET_MAX_NGON });
    }
    Ok(poset_from_triangulations(&enumerate_partial_triangulations(
        ngon,
    )?))
}

/// All centrally symmetric partial triangulations of the `2n`-gon, sorted.
pub fn enumerate_symmetric_triangulations(
    n: u32,
) -> Result<Vec<PartialTriangulation>, TriangulationError> {
    if !(2..=5).contains(&n) {
        return Err(TriangulationError::NGonOutOfRange { ngon: n, lo: 2, hi: 5 });
    }
    let mut out = Vec::new();
    for pt in enumerate_partial_triangulations(2 * n)? {
        if pt.is_symmetric()? {
            out.push(pt);
        }
    }
    Ok(out)
}

/// Face poset of the cyclohedron `W_n` (`2..=5`): centrally symmetric
/// partial triangulations of the `2n`-gon under reverse containment.
pub fn sym_tri_poset(n: u32) -> Result<FinitePoset, TriangulationError> {
    Ok(poset_from_triangulations(&enumerate_symmetric_triangulations(n)?))
}

/// Face poset of the associahedron `K_m` (`2..=8`), i.e. the partial
/// triangulations of the `(m+1)`-gon.
pub fn associahedron(m: u32) -> Result<FinitePoset, TriangulationError> {
    if !(2..=8).contains(&m) {
        return Err(TriangulationError::NGonOutOfRange { ngon: m, lo: 2, hi: 8 });
    }
    tri_poset(m + 1)
}

/// Face poset of the cyclohedron `W_n` (`2..=5`).
pub fn cyclohedron(n: u32) -> Result<FinitePoset, TriangulationError> {
    sym_tri_poset(n)
}

/// The regions of the polygon cut by the diagonals, each as its corner list
/// in ascending cyclic order.
fn regions(ngon: u32, diags: &[(u32, u32)]) -> Vec<Vec<u32>> {
    fn split(corners: Vec<u32>, diags: &[(u32, u32)]) -> Vec<Vec<u32>> {
        for &(a, b) in diags {
            let ia = corners.iter().position(|&c| c == a);
            let ib = corners.iter().position(|&c| c == b);
            if let (Some(ia), Some(ib)) = (ia, ib) {
                let len = corners.len();
                let gap = (ib + len - ia) % len;
                if gap != 1 && gap != len - 1 {
                    let (lo, hi) = (ia.min(ib), ia.max(ib));
                    let r1: Vec<u32> = corners[lo..=hi].to_vec();
                    let mut r2: Vec<u32> = corners[hi..].to_vec();
                    r2.extend_from_slice(&corners[..=lo]);
                    let mut out = split(r1, diags);
                    out.extend(split(r2, diags));
                    return out;
                }
            }
        }
        vec![corners]
    }
    split((1..=ngon).collect(), diags)
}

/// The dual tree of a partial triangulation: one marked leaf per polygon
/// side (side `k`, between corners `k` and `k+1`, becomes the mark `k`) and
/// one unmarked vertex per region, with rotations read off the boundary.
pub fn dual_tree(pt: &PartialTriangulation) -> PlanarTree {
    let m = pt.ngon as usize;
    let regs = regions(pt.ngon, &pt.diagonals);
    let nreg = regs.len();
    let mut labels: Vec<Option<u32>> = (1..=pt.ngon).map(Some).collect();
    labels.extend(core::iter::repeat_n(None, nreg));
    let mut rot: Vec<Vec<usize>> = vec![Vec::new(); m + nreg];
    for (r, corners) in regs.iter().enumerate() {
        let len = corners.len();
        let mut out = Vec::with_capacity(len);
        for i in 0..len {
            let a = corners[i];
            let b = corners[(i + 1) % len];
            if b == a % pt.ngon + 1 {
                // polygon side a
                out.push(a as usize - 1);
            } else {
                // the unique adjacent region sharing this diagonal as a
                // boundary segment
                let mut found = None;
                for (j, cj) in regs.iter().enumerate() {
                    if j == r {
                        continue;
                    }
                    if let (Some(ia), Some(ib)) = (
                        cj.iter().position(|&c| c == a),
                        cj.iter().position(|&c| c == b),
                    ) {
                        let g = (ib + cj.len() - ia) % cj.len();
                        if g == 1 || g == cj.len() - 1 {
                            found = Some(j);
                            break;
                        }
                    }
                }
                out.push(m + found.expect("each diagonal bounds two regions"));
            }
        }
        rot[m + r] = out;
    }
    for s in 0..m {
        let owner = (0..nreg)
            .find(|&r| rot[m + r].contains(&s))
            .expect("each side bounds one region");
        rot[s] = vec![m + owner];
    }
    PlanarTree::new(pt.ngon, labels, rot).expect("dual trees are valid")
}

/// Recover the partial triangulation whose dual tree is `t`.
///
/// Each unmarked-unmarked edge separates the marks into two cyclic
/// intervals and contributes the diagonal between them.  Fails when `t` is
/// not a dual tree (marks not in standard boundary position).
pub fn from_dual_tree(t: &PlanarTree) -> Result<PartialTriangulation, TriangulationError> {
    let m = t.n();
    let mut diagonals = Vec::new();
    for (a, b) in t.edges() {
        if t.is_marked(a) || t.is_marked(b) {
            continue;
        }
        // marks on the `a` side of the edge
        let mut side = BTreeSet::new();
        let mut stack = vec![a];
        let mut seen = vec![false; t.vertex_count()];
        seen[a] = true;
        seen[b] = true;
        while let Some(v) = stack.pop() {
            if let Some(l) = t.label(v) {
                side.insert(l);
            }
            for &w in t.rotation(v) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        let interval = |s: &BTreeSet<u32>| -> Option<(u32, u32)> {
            let lo = *s.iter().next()?;
            let hi = *s.iter().next_back()?;
            if hi - lo + 1 == s.len() as u32 && hi < m {
                Some((lo, hi + 1))
            } else {
                None
            }
        };
        let complement: BTreeSet<u32> = (1..=m).filter(|k| !side.contains(k)).collect();
        let d = interval(&side)
            .or_else(|| interval(&complement))
            .ok_or(TriangulationError::NotDualizable)?;
        diagonals.push(d);
    }
    let pt = PartialTriangulation::new(m, &diagonals)
        .map_err(|_| TriangulationError::NotDualizable)?;
    if dual_tree(&pt).canonical_code() != t.canonical_code() {
        return Err(TriangulationError::NotDualizable);
    }
    Ok(pt)
}

/// Quotient of a centrally symmetric partial triangulation's dual tree by
/// the half-turn.  Mark orbits `{k, k+n}` fold to the mark `1 + (k-1 mod n)`
/// and the fixed vertex (or fixed edge midpoint) becomes a new mark `n+1`,
/// yielding a planar `(n+1)`-tree.
pub fn sym_quotient(pt: &PartialTriangulation) -> Result<PlanarTree, TriangulationError> {
    if !pt.ngon.is_multiple_of(2) {
        return Err(TriangulationError::OddPolygon { ngon: pt.ngon });
    }
    let n = pt.ngon / 2;
    let t = dual_tree(pt);
    let v_count = t.vertex_count();
    // relabel marks by the half-turn and find the induced automorphism
    let tau = {
        let labels: Vec<Option<u32>> = (0..v_count)
            .map(|v| t.label(v).map(|k| (k - 1 + n) % pt.ngon + 1))
            .collect();
        let rot: Vec<Vec<usize>> = (0..v_count).map(|v| t.rotation(v).to_vec()).collect();
        PlanarTree::new(pt.ngon, labels, rot).expect("relabeled dual tree is valid")
    };
    let sigma = tau
        .unique_isomorphism(&t)
        .ok_or(TriangulationError::NotSymmetric)?;
    let newlab = |k: u32| (k - 1) % n + 1;
    let fixed: Vec<usize> = (0..v_count).filter(|&v| sigma[v] == v).collect();
    let (labels, rot);
    if let Some(&u) = fixed.first() {
        assert_eq!(fixed.len(), 1, "half-turn fixes at most one vertex");
        let d = t.valence(u) / 2;
        let mut rep = vec![usize::MAX; v_count];
        for v in 0..v_count {
            if v != u {
                rep[v] = v.min(sigma[v]);
            }
        }
        let reps: Vec<usize> = {
            let s: BTreeSet<usize> = (0..v_count).filter(|&v| v != u).map(|v| rep[v]).collect();
            s.into_iter().collect()
        };
        let idx: BTreeMap<usize, usize> = reps.iter().enumerate().map(|(i, &r)| (r, i)).collect();
        let cidx = reps.len();
        let mut nl: Vec<Option<u32>> = Vec::with_capacity(cidx + 1);
        let mut nr: Vec<Vec<usize>> = Vec::with_capacity(cidx + 1);
        for &r in &reps {
            nl.push(t.label(r).map(newlab));
            nr.push(
                t.rotation(r)
                    .iter()
                    .map(|&w| if w == u { cidx } else { idx[&rep[w]] })
                    .collect(),
            );
        }
        nl.push(Some(n + 1));
        nr.push(
            t.rotation(u)[..d]
                .iter()
                .map(|&w| idx[&rep[w]])
                .collect(),
        );
        labels = nl;
        rot = nr;
    } else {
        // fixed edge: the half-turn swaps two adjacent vertices
        let mut pair = None;
        for v in 0..v_count {
            if sigma[v] != v && t.rotation(v).contains(&sigma[v]) && sigma[sigma[v]] == v {
                pair = Some((v, sigma[v]));
                break;
            }
        }
        let (a, b) = pair.ok_or(TriangulationError::NotSymmetric)?;
        let (u, su) = (a.min(b), a.max(b));
        let mut rep = vec![usize::MAX; v_count];
        for v in 0..v_count {
            rep[v] = v.min(sigma[v]);
        }
        let reps: Vec<usize> = {
            let s: BTreeSet<usize> = (0..v_count).map(|v| rep[v]).collect();
            s.into_iter().collect()
        };
        let idx: BTreeMap<usize, usize> = reps.iter().enumerate().map(|(i, &r)| (r, i)).collect();
        let cidx = reps.len();
        let mut nl: Vec<Option<u32>> = Vec::with_capacity(cidx + 1);
        let mut nr: Vec<Vec<usize>> = Vec::with_capacity(cidx + 1);
        for &r in &reps {
            nl.push(t.label(r).map(newlab));
            nr.push(
                t.rotation(r)
                    .iter()
                    .map(|&w| {
                        if r == u && w == su {
                            cidx
                        } else {
                            idx[&rep[w]]
                        }
                    })
                    .collect(),
            );
        }
        nl.push(Some(n + 1));
        nr.push(vec![idx[&rep[u]]]);
        labels = nl;
        rot = nr;
    }
    Ok(PlanarTree::new(n + 1, labels, rot).expect("half-turn quotient is a valid tree"))
}
