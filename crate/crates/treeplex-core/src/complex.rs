//! The planar tree poset and the polyhedral complex it describes.
//!
//! Planar `n`-trees are the cells of a polyhedral complex: a tree with
//! cell dimension `d` names a `d`-cell whose face lattice is the tree's
//! lower set.  This module enumerates all planar `n`-trees, assembles the
//! full poset, and verifies the product decomposition of each cell into
//! associahedra and cyclohedra together with the barycentric (flag) count
//! of its boundary.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::poset::{boolean_lattice, FinitePoset};
use crate::tree::{factor_key, CellFactor, PlanarTree};
use crate::triangulation::{associahedron, cyclohedron};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ComplexError {
    /// Mark count outside the supported range for the operation.
    NOutOfRange { n: u32, lo: u32, hi: u32 },
}

impl core::fmt::Display for ComplexError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            ComplexError::NOutOfRange { n, lo, hi } => {
                write!(f, "mark count {n} outside supported range {lo}..={hi}")
            }
        }
    }
}

impl core::error::Error for ComplexError {}

/// Streaming generator state.  Trees grow parent-first: each vertex's
/// rotation starts with its parent and gains children in planar order, so
/// every partial state is a prefix of a valid embedding and backtracking
/// is truncation.
struct Gen {
    n: u32,
    labels: Vec<Option<u32>>,
    rot: Vec<Vec<usize>>,
}

impl Gen {
    /// Build every subtree shape consuming exactly the mark set `s`
    /// (bit `k` encodes mark `k + 2`), rooted at a child of `parent`.
    /// `next` runs once per variant with the new subtree root.
    fn subtree(&mut self, s: u32, parent: usize, next: &mut dyn FnMut(&mut Gen, usize)) {
        // marked root: any mark of s, remaining marks in any child forest
        let mut bits = s;
        while bits != 0 {
            let mb = bits & bits.wrapping_neg();
            bits &= bits - 1;
            let vid = self.labels.len();
            self.labels.push(Some(mb.trailing_zeros() + 2));
            self.rot.push(vec![parent]);
            self.forest(s & !mb, 0, vid, &mut |g| next(g, vid));
            self.labels.truncate(vid);
            self.rot.truncate(vid);
        }
        // unmarked root: needs at least two children to reach valence 3
        if s.count_ones() >= 2 {
            let vid = self.labels.len();
            self.labels.push(None);
            self.rot.push(vec![parent]);
            self.forest(s, 2, vid, &mut |g| next(g, vid));
            self.labels.truncate(vid);
            self.rot.truncate(vid);
        }
    }

    /// Attach an ordered forest of at least `minlen` subtrees under
    /// `parent`, partitioning the mark set `s`; `done` runs once per
    /// complete variant.
    fn forest(&mut self, s: u32, minlen: usize, parent: usize, done: &mut dyn FnMut(&mut Gen)) {
        if s == 0 {
            if minlen == 0 {
                done(self);
            }
            return;
        }
        let total = s.count_ones() as usize;
        // leave one mark for each further mandatory subtree
        let rmax = total - minlen.saturating_sub(1);
        let mut t = s;
        while t != 0 {
            if t.count_ones() as usize <= rmax {
                self.subtree(t, parent, &mut |g, vid| {
                    g.rot[parent].push(vid);
                    g.forest(s & !t, minlen.saturating_sub(1), parent, done);
                    g.rot[parent].pop();
                });
            }
            t = (t - 1) & s;
        }
    }
}

const ENUMERATE_MIN_N: u32 = 3;
const ENUMERATE_MAX_N: u32 = 7;
const POSET_MAX_N: u32 = 6;

/// Visit every planar `n`-tree (`3..=7`) exactly once, in a deterministic
/// order, without materializing the whole set.
///
/// The tree is rooted at mark 1 and the planar representative is pinned by
/// requiring the first child subtree to contain mark 2.
pub fn for_each_planar_tree<F: FnMut(&PlanarTree)>(n: u32, mut f: F) -> Result<(), ComplexError> {
    if !(ENUMERATE_MIN_N..=ENUMERATE_MAX_N).contains(&n) {
        return Err(ComplexError::NOutOfRange { n, lo: ENUMERATE_MIN_N, hi: ENUMERATE_MAX_N });
    }
    let mut g = Gen { n, labels: vec![Some(1)], rot: vec![Vec::new()] };
    let all: u32 = (1 << (n - 1)) - 1;
    let mut t = all;
    while t != 0 {
        // the first child subtree must contain mark 2 (bit 0): this picks
        // one representative among the cyclic rotations at the root
        if t & 1 == 1 {
            g.subtree(t, 0, &mut |g, vid| {
                g.rot[0].push(vid);
                g.forest(all & !t, 0, 0, &mut |g| {
                    let tree = PlanarTree::new(g.n, g.labels.clone(), g.rot.clone())
                        .expect("generated trees are valid");
                    f(&tree);
                });
                g.rot[0].pop();
            });
        }
        t = (t - 1) & all;
    }
    Ok(())
}

/// All planar `n`-trees (`3..=6`), sorted by canonical code.
pub fn enumerate_planar_trees(n: u32) -> Result<Vec<PlanarTree>, ComplexError> {
    if n > POSET_MAX_N {
        return Err(ComplexError::NOutOfRange { n, lo: ENUMERATE_MIN_N, hi: POSET_MAX_N });
    }
    let mut out: Vec<(String, PlanarTree)> = Vec::new();
    for_each_planar_tree(n, |t| out.push((t.canonical_code(), t.clone())))?;
    out.sort_by(|a, b| a.0.cmp(&b.0));
    debug_assert!(out.windows(2).all(|w| w[0].0 != w[1].0));
    Ok(out.into_iter().map(|(_, t)| t).collect())
}

/// The poset of all planar `n`-trees (`3..=6`), keyed by canonical code.
/// Contraction moves up; covers are the single-edge contractions.
pub fn build_pnr_poset(n: u32) -> Result<FinitePoset, ComplexError> {
    let trees = enumerate_planar_trees(n)?;
    let elements: Vec<String> = trees.iter().map(|t| t.canonical_code()).collect();
    let index: BTreeMap<&str, usize> = elements
        .iter()
        .enumerate()
        .map(|(i, e)| (e.as_str(), i))
        .collect();
    let mut covers = Vec::new();
    for (i, t) in trees.iter().enumerate() {
        for f in single_edge_subforests(t) {
            let code = t.contract(&f).canonical_code();
            covers.push((i, index[code.as_str()]));
        }
    }
    Ok(FinitePoset::new(elements, covers).expect("single-edge contractions are covers"))
}

fn single_edge_subforests(t: &PlanarTree) -> Vec<crate::tree::Subforest> {
    t.edges()
        .into_iter()
        .filter(|&(a, b)| !(t.is_marked(a) && t.is_marked(b)))
        .map(|e| crate::tree::Subforest::new(t, &[e]).expect("edge of the tree"))
        .collect()
}

/// Cell counts of the complex of planar `n`-trees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellCensus {
    /// Trees per cell dimension.
    pub by_dimension: BTreeMap<usize, usize>,
    /// Trees per factor multiset, keyed like `"K3*W2"` (point factors such
    /// as `K2` included, so every valid tree lands on a nonempty key).
    pub by_factor_type: BTreeMap<String, usize>,
}

impl CellCensus {
    pub fn total(&self) -> usize {
        self.by_dimension.values().sum()
    }
}

/// Census of all planar `n`-trees (`3..=7`) by dimension and factor type.
pub fn cell_census(n: u32) -> Result<CellCensus, ComplexError> {
    let mut by_dimension = BTreeMap::new();
    let mut by_factor_type = BTreeMap::new();
    for_each_planar_tree(n, |t| {
        *by_dimension.entry(t.cell_dimension()).or_insert(0) += 1;
        *by_factor_type
            .entry(factor_key(&t.cell_factors()))
            .or_insert(0) += 1;
    })?;
    Ok(CellCensus { by_dimension, by_factor_type })
}

/// The lower set of `t` in its tree poset, as a standalone poset keyed by
/// canonical code: all trees that contract to `t`, i.e. the face lattice
/// of the cell named by `t` (with `t` itself as the top face).
pub fn lower_set(t: &PlanarTree) -> FinitePoset {
    let mut members: BTreeMap<String, PlanarTree> = BTreeMap::new();
    for s in t.lower_set_trees() {
        members.insert(s.canonical_code(), s);
    }
    let elements: Vec<String> = members.keys().cloned().collect();
    let index: BTreeMap<&str, usize> = elements
        .iter()
        .enumerate()
        .map(|(i, e)| (e.as_str(), i))
        .collect();
    let mut covers = Vec::new();
    for (code, s) in &members {
        let i = index[code.as_str()];
        for f in single_edge_subforests(s) {
            // contractions move up; those leaving the lower set are not faces
            let up = s.contract(&f).canonical_code();
            if let Some(&j) = index.get(up.as_str()) {
                covers.push((i, j));
            }
        }
    }
    FinitePoset::new(elements, covers).expect("contraction covers are acyclic")
}

/// A cell's polytope decomposition: its factors, its face lattice, the
/// model face poset built as a product of associahedra and cyclohedra,
/// and (when found) the isomorphism between them.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub factors: Vec<CellFactor>,
    pub lower: FinitePoset,
    pub model: FinitePoset,
    /// Map from `lower` indices to `model` indices, if the two are
    /// isomorphic (they always are; `None` would signal a bug).
    pub witness: Option<Vec<usize>>,
}

/// Decompose the cell of `t` (`n <= 6`) as a product of associahedra and
/// cyclohedra: one `K_{val-1}` per unmarked vertex, one `W_val` per marked
/// interior vertex, and an isomorphism between the face lattice of `t`'s
/// lower set and the product of the factor face posets.
pub fn decompose_lower_set(t: &PlanarTree) -> Result<Decomposition, ComplexError> {
    if t.n() > POSET_MAX_N {
        return Err(ComplexError::NOutOfRange { n: t.n(), lo: ENUMERATE_MIN_N, hi: POSET_MAX_N });
    }
    let factors = t.cell_factors();
    let model = factors
        .iter()
        .map(|f| match *f {
            CellFactor::Associahedron(m) => {
                associahedron(m).expect("factor size within range")
            }
            CellFactor::Cyclohedron(k) => cyclohedron(k).expect("factor size within range"),
        })
        .reduce(|a, b| a.product(&b))
        .unwrap_or_else(|| boolean_lattice(0));
    let lower = lower_set(t);
    let witness = lower.is_isomorphic(&model);
    Ok(Decomposition { factors, lower, model, witness })
}

/// Counts of the elements strictly above `t` by cell dimension: the
/// f-vector of the link of the cell named by `t` (`n <= 6`).
pub fn star_census(t: &PlanarTree) -> Result<BTreeMap<usize, usize>, ComplexError> {
    if t.n() > POSET_MAX_N {
        return Err(ComplexError::NOutOfRange { n: t.n(), lo: ENUMERATE_MIN_N, hi: POSET_MAX_N });
    }
    let mut out = BTreeMap::new();
    // distinct subforests contract to distinct trees, so no deduplication
    for f in t.subforests() {
        if f.is_empty() {
            continue;
        }
        *out.entry(t.contract(&f).cell_dimension()).or_insert(0) += 1;
    }
    Ok(out)
}

/// Flag-count comparison between a cell's face lattice and its product
/// model: the chain counts of both order complexes.  The top entry of the
/// chain vector counts the top-dimensional simplices of the barycentric
/// subdivision of the cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BarycentricReport {
    pub chains_lower: Vec<u128>,
    pub chains_model: Vec<u128>,
    pub top_simplices: u128,
    pub matches: bool,
}

/// Compare the chain counts of `t`'s lower set with those of its product
/// model (`n <= 6`).
pub fn verify_barycentric(t: &PlanarTree) -> Result<BarycentricReport, ComplexError> {
    let d = decompose_lower_set(t)?;
    let chains_lower = d.lower.order_complex();
    let chains_model = d.model.order_complex();
    let top_simplices = *chains_lower.last().expect("nonempty complex");
    let matches = chains_lower == chains_model;
    Ok(BarycentricReport { chains_lower, chains_model, top_simplices, matches })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::{make_mstar, make_ustar};

    #[test]
    fn three_mark_complex() {
        let trees = enumerate_planar_trees(3).unwrap();
        assert_eq!(trees.len(), 5);
        let census = cell_census(3).unwrap();
        assert_eq!(
            census.by_dimension,
            BTreeMap::from([(0, 2), (1, 3)])
        );
        let p = build_pnr_poset(3).unwrap();
        assert_eq!(p.len(), 5);
        let mins = p.minimal_elements();
        let maxs = p.maximal_elements();
        assert_eq!((mins.len(), maxs.len()), (2, 3));
        // theta graph: every minimal element below every maximal one
        for &a in &mins {
            for &b in &maxs {
                assert!(p.leq(a, b));
            }
        }
    }

    #[test]
    fn four_mark_census() {
        let census = cell_census(4).unwrap();
        assert_eq!(
            census.by_dimension,
            BTreeMap::from([(0, 12), (1, 30), (2, 20)])
        );
        assert_eq!(census.by_factor_type["W3"], 8);
        assert_eq!(census.by_factor_type["W2*W2"], 12);
        assert_eq!(census.total(), 62);
    }

    #[test]
    fn streaming_matches_materialized() {
        let mut count = 0usize;
        for_each_planar_tree(5, |_| count += 1).unwrap();
        assert_eq!(count, enumerate_planar_trees(5).unwrap().len());
    }

    #[test]
    fn range_guards() {
        assert!(matches!(
            for_each_planar_tree(8, |_| {}),
            Err(ComplexError::NOutOfRange { .. })
        ));
        assert!(enumerate_planar_trees(2).is_err());
        assert!(build_pnr_poset(7).is_err());
    }

    #[test]
    fn lower_set_of_stars() {
        let u5 = lower_set(&make_ustar(5));
        assert_eq!(u5.len(), 11); // pentagon face poset
        assert_eq!(u5.minimal_elements().len(), 5);
        let m3 = lower_set(&make_mstar(3));
        assert_eq!(m3.len(), 13); // hexagon face poset
        assert_eq!(m3.maximal_elements().len(), 1);
    }

    #[test]
    fn decompositions_of_stars() {
        let d = decompose_lower_set(&make_mstar(3)).unwrap();
        assert_eq!(d.factors, vec![CellFactor::Cyclohedron(3)]);
        assert!(d.witness.is_some());
        let d = decompose_lower_set(&make_ustar(5)).unwrap();
        assert_eq!(d.factors, vec![CellFactor::Associahedron(4)]);
        assert!(d.witness.is_some());
        // a 0-cell's factors are all points
        let d = decompose_lower_set(&make_ustar(3)).unwrap();
        assert_eq!(d.factors, vec![CellFactor::Associahedron(2)]);
        assert_eq!(d.lower.len(), 1);
        assert_eq!(d.model.len(), 1);
        assert!(d.witness.is_some());
    }

    #[test]
    fn star_census_small() {
        assert_eq!(
            star_census(&make_ustar(3)).unwrap(),
            BTreeMap::from([(1, 3)])
        );
        // a maximal tree has nothing above it
        let top = make_mstar(2);
        assert!(star_census(&top).unwrap().is_empty());
    }

    #[test]
    fn barycentric_of_hexagon() {
        let r = verify_barycentric(&make_mstar(3)).unwrap();
        assert_eq!(r.chains_lower, vec![13, 24, 12]);
        assert!(r.matches);
        assert_eq!(r.top_simplices, 12);
        let r = verify_barycentric(&make_ustar(3)).unwrap();
        assert_eq!(r.chains_lower, vec![1]);
        assert_eq!(r.top_simplices, 1);
        assert!(r.matches);
    }
}
