//! Reduced trees, their finite equivalence classes, and the reduced order.
//!
//! A planar tree is *reduced* when no edge joins two unmarked vertices.
//! Contracting all unmarked-unmarked edges sends every tree to the unique
//! reduced tree in its upper set; trees sharing a reduction form a finite
//! class, and the classes inherit a partial order in which cover moves are
//! contractions, slides, or splits.  Lower class sets of marked stars are
//! boolean, and upper class sets decompose into duals of noncrossing
//! hypertree posets.

use alloc::collections::btree_map::Entry;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;

use crate::hypertree::{hypertree_to_tree, ncht_poset, tree_to_hypertree, NoncrossingHypertree};
use crate::poset::{boolean_lattice, boolean_star, FinitePoset};
use crate::tree::{make_mstar, PlanarTree, Subforest};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReducedError {
    /// Mark count outside the supported range for the operation.
    NOutOfRange { n: u32, lo: u32, hi: u32 },
    /// The tree still has unmarked-unmarked edges.
    NotReduced,
    /// No contraction carries the first tree to the second.
    NotComparable,
    /// `um_meet` requires the first tree below the third by an unmarked
    /// subforest.
    NotBelowByUnmarked,
    /// `um_meet` requires the second tree below the third by a subforest
    /// without unmarked-unmarked edges.
    NotBelowByMarked,
    /// The class pair is not a cover in the reduced order.
    NotACover,
    /// The class does not lie above the unmarked star's class, so it has
    /// no hypertree image.
    NotAboveUnmarkedStar,
}

impl core::fmt::Display for ReducedError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            ReducedError::NOutOfRange { n, lo, hi } => {
                write!(f, "mark count {n} outside supported range {lo}..={hi}")
            }
            ReducedError::NotReduced => write!(f, "tree has unmarked-unmarked edges"),
            ReducedError::NotComparable => write!(f, "trees are not comparable"),
            ReducedError::NotBelowByUnmarked => {
                write!(f, "first tree is not below the host by an unmarked subforest")
            }
            ReducedError::NotBelowByMarked => {
                write!(f, "second tree is not below the host by a marked subforest")
            }
            ReducedError::NotACover => write!(f, "classes do not form a cover"),
            ReducedError::NotAboveUnmarkedStar => {
                write!(f, "class is not above the unmarked star's class")
            }
        }
    }
}

impl core::error::Error for ReducedError {}

const CLASS_MIN_N: u32 = 3;
const CLASS_MAX_N: u32 = 6;

/// Edges of `t` with both endpoints unmarked.
pub fn unmarked_edges(t: &PlanarTree) -> Vec<(usize, usize)> {
    t.edges()
        .into_iter()
        .filter(|&(a, b)| !t.is_marked(a) && !t.is_marked(b))
        .collect()
}

/// Edges of `t` with exactly one marked endpoint.
pub fn singly_marked_edges(t: &PlanarTree) -> Vec<(usize, usize)> {
    t.edges()
        .into_iter()
        .filter(|&(a, b)| t.is_marked(a) != t.is_marked(b))
        .collect()
}

/// Edges of `t` with both endpoints marked.
pub fn marked_marked_edges(t: &PlanarTree) -> Vec<(usize, usize)> {
    t.edges()
        .into_iter()
        .filter(|&(a, b)| t.is_marked(a) && t.is_marked(b))
        .collect()
}

pub fn is_reduced(t: &PlanarTree) -> bool {
    unmarked_edges(t).is_empty()
}

/// A planar tree with no unmarked-unmarked edges.
#[derive(Clone, Debug)]
pub struct ReducedTree {
    tree: PlanarTree,
}

impl ReducedTree {
    pub fn new(t: &PlanarTree) -> Result<Self, ReducedError> {
        if !is_reduced(t) {
            return Err(ReducedError::NotReduced);
        }
        Ok(ReducedTree { tree: t.clone() })
    }

    pub fn tree(&self) -> &PlanarTree {
        &self.tree
    }

    pub fn canonical_code(&self) -> String {
        self.tree.canonical_code()
    }
}

/// The unique reduced tree above `t`: contract every unmarked-unmarked
/// edge.  Idempotent.
pub fn reduce(t: &PlanarTree) -> ReducedTree {
    let uu = unmarked_edges(t);
    let f = Subforest::new(t, &uu).expect("unmarked edges form an admissible subforest");
    ReducedTree { tree: t.contract(&f) }
}

/// Whether `t1 <= t2` with a contraction subforest free of
/// unmarked-unmarked edges (every contracted component keeps its mark
/// visible along the way).
pub fn leq_m(t1: &PlanarTree, t2: &PlanarTree) -> bool {
    match t1.witness_subforest(t2) {
        Some(f) => f
            .edges()
            .iter()
            .all(|&(a, b)| t1.is_marked(a) || t1.is_marked(b)),
        None => false,
    }
}

/// Whether `t1 <= t2` with a contraction subforest whose edges all join
/// unmarked vertices.
pub fn leq_u(t1: &PlanarTree, t2: &PlanarTree) -> bool {
    match t1.witness_subforest(t2) {
        Some(f) => f
            .edges()
            .iter()
            .all(|&(a, b)| !t1.is_marked(a) && !t1.is_marked(b)),
        None => false,
    }
}

/// The unique middle tree of the unmarked-then-marked factorization of
/// `t1 <= t2`: contract exactly the unmarked-unmarked edges of the
/// contraction subforest.  Satisfies `leq_u(t1, result)` and
/// `leq_m(result, t2)`.
pub fn um_factor(t1: &PlanarTree, t2: &PlanarTree) -> Result<PlanarTree, ReducedError> {
    let f = t1.witness_subforest(t2).ok_or(ReducedError::NotComparable)?;
    let uu: Vec<(usize, usize)> = f
        .edges()
        .iter()
        .copied()
        .filter(|&(a, b)| !t1.is_marked(a) && !t1.is_marked(b))
        .collect();
    let g = Subforest::new(t1, &uu).expect("unmarked edges are admissible");
    let mid = t1.contract(&g);
    debug_assert!(leq_u(t1, &mid) && leq_m(&mid, t2));
    Ok(mid)
}

/// The meet of an unmarked expansion `t_u` and a marked expansion `t_m`
/// of `t`: the unique tree performing both expansions at once, i.e. the
/// greatest lower bound of `{t_u, t_m}`.  Satisfies `leq_m(result, t_u)`
/// and `leq_u(result, t_m)`.
pub fn um_meet(
    t_u: &PlanarTree,
    t_m: &PlanarTree,
    t: &PlanarTree,
) -> Result<PlanarTree, ReducedError> {
    if !leq_u(t_u, t) {
        return Err(ReducedError::NotBelowByUnmarked);
    }
    if !leq_m(t_m, t) {
        return Err(ReducedError::NotBelowByMarked);
    }
    let below_m: BTreeSet<String> = t_m
        .lower_set_trees()
        .iter()
        .map(|s| s.canonical_code())
        .collect();
    // the meet is the unique common lower bound of minimal vertex count
    let mut best: Option<PlanarTree> = None;
    let mut tied = 0usize;
    for s in t_u.lower_set_trees() {
        if !below_m.contains(&s.canonical_code()) {
            continue;
        }
        match &best {
            Some(b) if s.vertex_count() > b.vertex_count() => {}
            Some(b) if s.vertex_count() == b.vertex_count() => tied += 1,
            _ => {
                best = Some(s);
                tied = 0;
            }
        }
    }
    let meet = best.expect("t itself is a common lower bound");
    assert_eq!(tied, 0, "simultaneous expansion is unique");
    debug_assert!(leq_m(&meet, t_u) && leq_u(&meet, t_m));
    debug_assert_eq!(
        meet.edge_count() + t.edge_count(),
        t_u.edge_count() + t_m.edge_count()
    );
    Ok(meet)
}

/// All unmarked expansions of a reduced tree, keyed by canonical code:
/// the closure of the representative under single unmarked-vertex splits.
fn expansion_members(rep: &PlanarTree) -> BTreeMap<String, PlanarTree> {
    let mut seen: BTreeMap<String, PlanarTree> = BTreeMap::new();
    seen.insert(rep.canonical_code(), rep.clone());
    let mut frontier = alloc::vec![rep.clone()];
    while let Some(t) = frontier.pop() {
        for s in t.unmarked_splits() {
            if let Entry::Vacant(slot) = seen.entry(s.canonical_code()) {
                slot.insert(s.clone());
                frontier.push(s);
            }
        }
    }
    seen
}

/// The equivalence class of all planar trees sharing a reduction.
#[derive(Clone, Debug)]
pub struct ReducedClass {
    representative: ReducedTree,
    members: BTreeMap<String, PlanarTree>,
}

impl ReducedClass {
    /// The class's maximum element.
    pub fn representative(&self) -> &ReducedTree {
        &self.representative
    }

    /// All members, keyed by canonical code.  The representative is one
    /// of them.
    pub fn members(&self) -> &BTreeMap<String, PlanarTree> {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn n(&self) -> u32 {
        self.representative.tree.n()
    }
}

fn class_from_rep(rep: ReducedTree) -> ReducedClass {
    let members = expansion_members(&rep.tree);
    ReducedClass { representative: rep, members }
}

/// The reduced class of `t` (`3 <= n <= 6`): representative `reduce(t)`
/// plus all of its unmarked expansions.
pub fn class_of(t: &PlanarTree) -> Result<ReducedClass, ReducedError> {
    if t.n() > CLASS_MAX_N {
        return Err(ReducedError::NOutOfRange { n: t.n(), lo: CLASS_MIN_N, hi: CLASS_MAX_N });
    }
    Ok(class_from_rep(reduce(t)))
}

/// Canonical codes of the representatives of all classes weakly above the
/// class with the given members: the class itself plus the reductions of
/// all contractions of all members.  One contraction step reaches every
/// class above, because members realize every unmarked expansion.
fn ups_of_members(rep_code: &str, members: &BTreeMap<String, PlanarTree>) -> BTreeSet<String> {
    let mut acc: BTreeSet<String> = BTreeSet::new();
    acc.insert(String::from(rep_code));
    for m in members.values() {
        for f in m.subforests() {
            if f.is_empty() {
                continue;
            }
            acc.insert(reduce(&m.contract(&f)).canonical_code());
        }
    }
    acc
}

fn ups_of_class(c: &ReducedClass) -> BTreeSet<String> {
    ups_of_members(&c.representative.canonical_code(), &c.members)
}

/// The reduced order: `c1 <= c2` when some member of `c1` contracts to
/// some member of `c2`.
pub fn red_leq(c1: &ReducedClass, c2: &ReducedClass) -> bool {
    if c1.n() != c2.n() {
        return false;
    }
    ups_of_class(c1).contains(&c2.representative.canonical_code())
}

/// The poset of all classes weakly above `c` in the reduced order, keyed
/// by representative canonical code.  `c` itself is the minimum.
pub fn upper_class_set(c: &ReducedClass) -> FinitePoset {
    let mut reps: BTreeMap<String, PlanarTree> = BTreeMap::new();
    for m in c.members.values() {
        let r = reduce(m);
        reps.entry(r.canonical_code()).or_insert(r.tree);
        for f in m.subforests() {
            if f.is_empty() {
                continue;
            }
            let r = reduce(&m.contract(&f));
            reps.entry(r.canonical_code()).or_insert(r.tree);
        }
    }
    poset_from_reps(&reps)
}

fn poset_from_reps(reps: &BTreeMap<String, PlanarTree>) -> FinitePoset {
    let elements: Vec<String> = reps.keys().cloned().collect();
    let ups: Vec<BTreeSet<String>> = elements
        .iter()
        .map(|cd| ups_of_members(cd, &expansion_members(&reps[cd])))
        .collect();
    FinitePoset::from_leq(elements.clone(), |i, j| ups[i].contains(&elements[j]))
        .expect("reduced order is a partial order")
}

/// The poset of all classes weakly below `c`, keyed by representative
/// canonical code.  Candidates come from the tree-order lower set of the
/// representative: if some member of a class contracts into `c`, the
/// member already lies below `c`'s representative.
pub fn lower_class_set_of(c: &ReducedClass) -> FinitePoset {
    let rep_code = c.representative.canonical_code();
    let mut reps: BTreeMap<String, PlanarTree> = BTreeMap::new();
    for t in c.representative.tree.lower_set_trees() {
        let r = reduce(&t);
        reps.entry(r.canonical_code()).or_insert(r.tree);
    }
    let kept: BTreeMap<String, PlanarTree> = reps
        .into_iter()
        .filter(|(cd, rep)| {
            *cd == rep_code
                || ups_of_members(cd, &expansion_members(rep)).contains(&rep_code)
        })
        .collect();
    poset_from_reps(&kept)
}

/// A class-set poset together with its structural model and the
/// isomorphism witness (`lower` index -> `model` index).
#[derive(Clone, Debug)]
pub struct ClassSetReport {
    pub poset: FinitePoset,
    pub model: FinitePoset,
    pub witness: Option<Vec<usize>>,
}

impl ClassSetReport {
    pub fn ok(&self) -> bool {
        self.witness.is_some()
    }
}

/// The lower class set of the marked star with center valence `k`
/// (`2 <= k <= 6`), modeled on the poset of nonempty subsets of `1..=k`:
/// each class records the set of center regions that remain split off.
pub fn lower_class_set(k: u32) -> Result<ClassSetReport, ReducedError> {
    if !(2..=6).contains(&k) {
        return Err(ReducedError::NOutOfRange { n: k, lo: 2, hi: 6 });
    }
    let rep = ReducedTree::new(&make_mstar(k)).expect("stars are reduced");
    let poset = lower_class_set_of(&class_from_rep(rep));
    let model = boolean_star(k);
    let witness = poset.is_isomorphic(&model);
    Ok(ClassSetReport { poset, model, witness })
}

/// Product models for the lower and upper class sets of a reduced tree
/// (`n <= 6`): the lower set against a product of boolean stars (one per
/// marked interior vertex), the upper set against a product of duals of
/// noncrossing-hypertree posets (one per unmarked vertex).
pub fn verify_reduced_products(rep: &ReducedTree) -> Result<ReducedProductReport, ReducedError> {
    let t = &rep.tree;
    if t.n() > CLASS_MAX_N {
        return Err(ReducedError::NOutOfRange { n: t.n(), lo: CLASS_MIN_N, hi: CLASS_MAX_N });
    }
    let c = class_from_rep(rep.clone());
    let lower = lower_class_set_of(&c);
    let lower_model = (0..t.vertex_count())
        .filter(|&v| t.is_marked(v) && t.valence(v) >= 2)
        .map(|v| boolean_star(t.valence(v) as u32))
        .reduce(|a, b| a.product(&b))
        .unwrap_or_else(|| boolean_lattice(0));
    let lower_witness = lower.is_isomorphic(&lower_model);
    let upper = upper_class_set(&c);
    let upper_model = (0..t.vertex_count())
        .filter(|&v| !t.is_marked(v))
        .map(|v| {
            ncht_poset(t.valence(v) as u32)
                .expect("unmarked valence within range")
                .dual()
        })
        .reduce(|a, b| a.product(&b))
        .unwrap_or_else(|| boolean_lattice(0));
    let upper_witness = upper.is_isomorphic(&upper_model);
    Ok(ReducedProductReport {
        lower: ClassSetReport { poset: lower, model: lower_model, witness: lower_witness },
        upper: ClassSetReport { poset: upper, model: upper_model, witness: upper_witness },
    })
}

#[derive(Clone, Debug)]
pub struct ReducedProductReport {
    pub lower: ClassSetReport,
    pub upper: ClassSetReport,
}

impl ReducedProductReport {
    pub fn ok(&self) -> bool {
        self.lower.ok() && self.upper.ok()
    }
}

/// The three kinds of cover moves in the reduced order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum CoverMove {
    /// The representatives themselves are comparable: a singly-marked
    /// edge of the lower representative is contracted.
    Contraction,
    /// The contracted edge's unmarked end has one unmarked neighbor: the
    /// mark slides across.
    Slide,
    /// The contracted edge's unmarked end has several unmarked neighbors:
    /// the mark's vertex splits them apart.
    Split,
}

impl core::fmt::Display for CoverMove {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            CoverMove::Contraction => write!(f, "contraction"),
            CoverMove::Slide => write!(f, "slide"),
            CoverMove::Split => write!(f, "split"),
        }
    }
}

/// Classify the cover `c1 < c2` in the reduced order.
///
/// When the representatives are comparable the move is a contraction.
/// Otherwise the witnessing member pair with the fewest unmarked-unmarked
/// edges (ties broken by canonical code) contracts exactly one
/// singly-marked edge; the move is a slide or a split depending on how
/// many unmarked neighbors its unmarked end has.
pub fn classify_cover_move(
    c1: &ReducedClass,
    c2: &ReducedClass,
) -> Result<CoverMove, ReducedError> {
    let code1 = c1.representative.canonical_code();
    let code2 = c2.representative.canonical_code();
    if code1 == code2 || !red_leq(c1, c2) {
        return Err(ReducedError::NotACover);
    }
    if c1.representative.tree.leq(&c2.representative.tree) {
        return Ok(CoverMove::Contraction);
    }
    let mut best: Option<(usize, &String, &String, &PlanarTree, &PlanarTree)> = None;
    for (ca, a) in &c1.members {
        for (cb, b) in &c2.members {
            if !a.leq(b) {
                continue;
            }
            let key = unmarked_edges(a).len() + unmarked_edges(b).len();
            let better = match &best {
                None => true,
                Some((k, x, y, _, _)) => (key, ca, cb) < (*k, *x, *y),
            };
            if better {
                best = Some((key, ca, cb, a, b));
            }
        }
    }
    let (_, _, _, a, b) = best.ok_or(ReducedError::NotACover)?;
    let f = a.witness_subforest(b).expect("members are comparable");
    let sm: Vec<(usize, usize)> = f
        .edges()
        .iter()
        .copied()
        .filter(|&(x, y)| a.is_marked(x) || a.is_marked(y))
        .collect();
    let [(x, y)] = sm[..] else {
        return Err(ReducedError::NotACover);
    };
    let u = if a.is_marked(x) { y } else { x };
    let unmarked_neighbors = a.rotation(u).iter().filter(|&&w| !a.is_marked(w)).count();
    Ok(if unmarked_neighbors == 1 {
        CoverMove::Slide
    } else {
        CoverMove::Split
    })
}

/// The hyperedges spanned by a class above the unmarked star: one
/// hyperedge per unmarked vertex of the representative (its neighbor
/// marks) and one pair per marked-marked edge.
pub fn class_to_hypertree(c: &ReducedClass) -> Result<NoncrossingHypertree, ReducedError> {
    let rep = &c.representative.tree;
    let h = tree_to_hypertree(rep).map_err(|_| ReducedError::NotAboveUnmarkedStar)?;
    if hypertree_to_tree(&h).canonical_code() != rep.canonical_code() {
        return Err(ReducedError::NotAboveUnmarkedStar);
    }
    Ok(h)
}

/// The class realizing a noncrossing hypertree; inverse of
/// [`class_to_hypertree`].
pub fn hypertree_to_class(h: &NoncrossingHypertree) -> Result<ReducedClass, ReducedError> {
    class_of(&hypertree_to_tree(h))
}

/// The poset of all reduced classes on `n` marks (`3..=5`), keyed by
/// representative canonical code.
pub fn reduced_poset(n: u32) -> Result<FinitePoset, ReducedError> {
    if !(3..=5).contains(&n) {
        return Err(ReducedError::NOutOfRange { n, lo: 3, hi: 5 });
    }
    let trees =
        crate::complex::enumerate_planar_trees(n).expect("range checked above");
    let mut reps: BTreeMap<String, PlanarTree> = BTreeMap::new();
    for t in &trees {
        let r = reduce(t);
        reps.entry(r.canonical_code()).or_insert(r.tree);
    }
    Ok(poset_from_reps(&reps))
}
