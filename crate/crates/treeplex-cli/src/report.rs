//! The check registry behind `treeplex verify`.
//!
//! Every check recomputes a structural fact and compares it with its
//! expected value; the expected strings are frozen from independent
//! oracles (degree-sequence counting, brute-force enumeration, classical
//! polytope data).  Checks are gated by the `--n` workload bound and may
//! run on several threads, but the report is assembled in registry order,
//! so its bytes never depend on scheduling.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use crate::formats::{CheckResult, Report};
use treeplex_core::reduced::{marked_marked_edges, singly_marked_edges};
use treeplex_core::{
    boolean_star, build_pnr_poset, cell_census, class_of, class_to_hypertree,
    classify_cover_move, decompose_lower_set, dual_tree, enumerate_ncht,
    enumerate_partial_triangulations, enumerate_planar_trees, enumerate_symmetric_triangulations,
    from_dual_tree, leq_m, leq_u, lower_class_set, lower_set, make_mstar, make_ustar, ncht_poset,
    reduce, reduced_poset, star_census, sym_quotient, sym_tri_poset, tri_poset, um_factor,
    um_meet, upper_class_set, verify_barycentric, verify_reduced_products, CoverMove,
    FinitePoset, PlanarTree, ReducedClass,
};

/// The three thematic check groups.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Planar,
    Polytopes,
    Reduced,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Planar => "planar",
            Suite::Polytopes => "polytopes",
            Suite::Reduced => "reduced",
        }
    }
}

/// A registered check: a name, its group, the smallest `--n` bound at
/// which it runs, and the computation itself.
pub struct CheckDef {
    pub name: &'static str,
    pub suite: Suite,
    pub min_n: u32,
    run: fn() -> (String, String, bool),
}

fn outcome(expected: impl ToString, computed: impl ToString) -> (String, String, bool) {
    let e = expected.to_string();
    let c = computed.to_string();
    let ok = e == c;
    (e, c, ok)
}

// --- planar suite -----------------------------------------------------

fn check_pnr3_count() -> (String, String, bool) {
    outcome(5, enumerate_planar_trees(3).unwrap().len())
}

fn check_pnr3_census() -> (String, String, bool) {
    let census = cell_census(3).unwrap();
    outcome("{0: 2, 1: 3}", format!("{:?}", census.by_dimension))
}

fn check_pnr3_vertex_stars() -> (String, String, bool) {
    // Both trivalent 3-trees sit below exactly the 3 one-dimensional ones.
    let poset = build_pnr_poset(3).unwrap();
    let ups: Vec<usize> = poset
        .minimal_elements()
        .into_iter()
        .map(|i| poset.upper_set_indices(i).len() - 1)
        .collect();
    outcome("[3, 3]", format!("{ups:?}"))
}

fn check_pnr4_census() -> (String, String, bool) {
    let census = cell_census(4).unwrap();
    outcome("{0: 12, 1: 30, 2: 20}", format!("{:?}", census.by_dimension))
}

fn check_pnr4_dim2_factors() -> (String, String, bool) {
    let mut factors: BTreeMap<String, usize> = BTreeMap::new();
    for t in enumerate_planar_trees(4).unwrap() {
        if t.cell_dimension() == 2 {
            *factors
                .entry(treeplex_core::factor_key(&t.cell_factors()))
                .or_insert(0) += 1;
        }
    }
    outcome("{\"W2*W2\": 12, \"W3\": 8}", format!("{factors:?}"))
}

fn check_pnr5_count() -> (String, String, bool) {
    outcome(1254, enumerate_planar_trees(5).unwrap().len())
}

fn check_pnr6_count() -> (String, String, bool) {
    outcome(35304, enumerate_planar_trees(6).unwrap().len())
}

fn check_boolean_intervals() -> (String, String, bool) {
    let ts = enumerate_planar_trees(4).unwrap();
    let poset = build_pnr_poset(4).unwrap();
    let mut boolean = 0;
    let mut pairs = 0;
    for (i, a) in ts.iter().enumerate() {
        for (j, b) in ts.iter().enumerate() {
            if i == j || !a.leq(b) {
                continue;
            }
            pairs += 1;
            let f = a.witness_subforest(b).unwrap();
            let pa = poset.index_of(&a.canonical_code()).unwrap();
            let pb = poset.index_of(&b.canonical_code()).unwrap();
            let interval = poset.interval(pa, pb).unwrap();
            if interval
                .is_isomorphic(&treeplex_core::boolean_lattice(f.len() as u32))
                .is_some()
            {
                boolean += 1;
            }
        }
    }
    outcome("252/252 boolean", format!("{boolean}/{pairs} boolean"))
}

fn check_star_census_trivalent() -> (String, String, bool) {
    let mut good = 0;
    let mut total = 0;
    for t in enumerate_planar_trees(4).unwrap() {
        if t.cell_dimension() == 0 {
            total += 1;
            let sc = star_census(&t).unwrap();
            if format!("{sc:?}") == "{1: 5, 2: 8}" {
                good += 1;
            }
        }
    }
    outcome("12/12 stars {1: 5, 2: 8}", format!("{good}/{total} stars {{1: 5, 2: 8}}"))
}

fn decompose_all(n: u32) -> (String, String, bool) {
    let ts = enumerate_planar_trees(n).unwrap();
    let total = ts.len();
    let good = ts
        .iter()
        .filter(|t| decompose_lower_set(t).unwrap().witness.is_some())
        .count();
    outcome(format!("{total}/{total} witnesses"), format!("{good}/{total} witnesses"))
}

fn check_decompose_n4() -> (String, String, bool) {
    decompose_all(4)
}

fn check_decompose_n5() -> (String, String, bool) {
    decompose_all(5)
}

fn euler_all(n: u32) -> (String, String, bool) {
    let ts = enumerate_planar_trees(n).unwrap();
    let total = ts.len();
    let good = ts
        .iter()
        .filter(|t| lower_set(t).euler_characteristic() == 1)
        .count();
    outcome(format!("{total}/{total} contractible"), format!("{good}/{total} contractible"))
}

fn check_euler_n4() -> (String, String, bool) {
    euler_all(4)
}

fn check_euler_n5() -> (String, String, bool) {
    euler_all(5)
}

/// Three-dimensional example cell: factors `K2 * W2 * W3`.
fn prism_tree() -> PlanarTree {
    PlanarTree::new(
        6,
        vec![Some(1), Some(2), Some(3), Some(4), Some(5), Some(6), None],
        vec![
            vec![2, 3, 6],
            vec![6, 4],
            vec![0],
            vec![0],
            vec![1],
            vec![6],
            vec![0, 1, 5],
        ],
    )
    .unwrap()
}

fn check_barycentric_prism() -> (String, String, bool) {
    let report = verify_barycentric(&prism_tree()).unwrap();
    outcome(
        "72 top simplices, chains match",
        format!(
            "{} top simplices, chains {}",
            report.top_simplices,
            if report.matches { "match" } else { "differ" }
        ),
    )
}

// --- polytopes suite ---------------------------------------------------

fn check_tri_counts() -> (String, String, bool) {
    let counts: Vec<usize> = (3..=9)
        .map(|m| enumerate_partial_triangulations(m).unwrap().len())
        .collect();
    outcome("[1, 3, 11, 45, 197, 903, 4279]", format!("{counts:?}"))
}

fn check_tri_minima() -> (String, String, bool) {
    let minima: Vec<usize> = (3..=9)
        .map(|m| tri_poset(m).unwrap().minimal_elements().len())
        .collect();
    outcome("[1, 2, 5, 14, 42, 132, 429]", format!("{minima:?}"))
}

fn check_hexagon_graded() -> (String, String, bool) {
    let mut graded: BTreeMap<usize, usize> = BTreeMap::new();
    for pt in enumerate_partial_triangulations(6).unwrap() {
        *graded.entry(pt.diagonals().len()).or_insert(0) += 1;
    }
    outcome("{0: 1, 1: 9, 2: 21, 3: 14}", format!("{graded:?}"))
}

fn check_k5_vertices() -> (String, String, bool) {
    outcome(14, tri_poset(6).unwrap().minimal_elements().len())
}

/// Sizes of the facets' face lattices, counted with multiplicity.
fn facet_census(poset: &FinitePoset) -> BTreeMap<usize, usize> {
    let top = poset.maximal_elements()[0];
    let mut sizes: BTreeMap<usize, usize> = BTreeMap::new();
    for &(lo, hi) in poset.covers() {
        if hi == top {
            *sizes.entry(poset.lower_set_indices(lo).len()).or_insert(0) += 1;
        }
    }
    sizes
}

fn check_k5_facets() -> (String, String, bool) {
    // 6 pentagonal facets (11 faces each) and 3 square ones (9 faces).
    outcome("{9: 3, 11: 6}", format!("{:?}", facet_census(&tri_poset(6).unwrap())))
}

fn check_assoc_ustar_duality() -> (String, String, bool) {
    let pts = enumerate_partial_triangulations(5).unwrap();
    let lower = lower_set(&make_ustar(5));
    let idx: Vec<Option<usize>> = pts
        .iter()
        .map(|pt| lower.index_of(&dual_tree(pt).canonical_code()))
        .collect();
    let distinct: BTreeSet<usize> = idx.iter().filter_map(|&i| i).collect();
    let bijective = distinct.len() == pts.len() && pts.len() == lower.len();
    let mut order_ok = true;
    for (i, a) in pts.iter().enumerate() {
        for (j, b) in pts.iter().enumerate() {
            if let (Some(x), Some(y)) = (idx[i], idx[j]) {
                if a.leq(b) != lower.leq(x, y) {
                    order_ok = false;
                }
            }
        }
    }
    let abstract_iso = tri_poset(5)
        .unwrap()
        .is_isomorphic(&lower)
        .is_some();
    outcome(
        "dual map is an order isomorphism on 11 faces",
        if bijective && order_ok && abstract_iso {
            format!("dual map is an order isomorphism on {} faces", pts.len())
        } else {
            format!(
                "bijective={bijective} order={order_ok} abstract={abstract_iso}"
            )
        },
    )
}

fn check_w3_hexagon() -> (String, String, bool) {
    // The face lattice of a hexagon: 6 corners, 6 sides, the hexagon.
    let mut elements: Vec<String> = Vec::new();
    let mut covers = Vec::new();
    for i in 0..6usize {
        elements.push(format!("corner{i}"));
    }
    for i in 0..6usize {
        elements.push(format!("side{i}"));
        covers.push((i, 6 + i));
        covers.push(((i + 1) % 6, 6 + i));
    }
    elements.push("hexagon".to_string());
    for i in 0..6usize {
        covers.push((6 + i, 12));
    }
    let hexagon = FinitePoset::new(elements, covers).unwrap();
    let w3 = sym_tri_poset(3).unwrap();
    outcome(
        "13 elements, isomorphic to the hexagon face lattice",
        format!(
            "{} elements, {} to the hexagon face lattice",
            w3.len(),
            if w3.is_isomorphic(&hexagon).is_some() {
                "isomorphic"
            } else {
                "not isomorphic"
            }
        ),
    )
}

fn check_w4_census() -> (String, String, bool) {
    let w4 = sym_tri_poset(4).unwrap();
    outcome(
        "63 elements, 20 minima, facets {9: 4, 11: 4, 13: 4}",
        format!(
            "{} elements, {} minima, facets {:?}",
            w4.len(),
            w4.minimal_elements().len(),
            facet_census(&w4)
        ),
    )
}

fn check_sym_quotient_mstar() -> (String, String, bool) {
    let mut good = Vec::new();
    for n in 2..=4u32 {
        let pts = enumerate_symmetric_triangulations(n).unwrap();
        let lower = lower_set(&make_mstar(n));
        let idx: Vec<Option<usize>> = pts
            .iter()
            .map(|pt| lower.index_of(&sym_quotient(pt).unwrap().canonical_code()))
            .collect();
        let distinct: BTreeSet<usize> = idx.iter().filter_map(|&i| i).collect();
        let mut ok = distinct.len() == pts.len() && pts.len() == lower.len();
        for (i, a) in pts.iter().enumerate() {
            for (j, b) in pts.iter().enumerate() {
                match (idx[i], idx[j]) {
                    (Some(x), Some(y)) => {
                        if a.leq(b) != lower.leq(x, y) {
                            ok = false;
                        }
                    }
                    _ => ok = false,
                }
            }
        }
        ok = ok
            && sym_tri_poset(n)
                .unwrap()
                .is_isomorphic(&lower)
                .is_some();
        if ok {
            good.push(n);
        }
    }
    outcome("iso for n = [2, 3, 4]", format!("iso for n = {good:?}"))
}

fn check_dual_tree_roundtrip() -> (String, String, bool) {
    let mut trips = 0;
    let mut good = 0;
    for ngon in 3..=6u32 {
        for pt in enumerate_partial_triangulations(ngon).unwrap() {
            trips += 1;
            if from_dual_tree(&dual_tree(&pt)).unwrap().key() == pt.key() {
                good += 1;
            }
        }
    }
    outcome("60/60 round trips", format!("{good}/{trips} round trips"))
}

// --- reduced suite -----------------------------------------------------

fn check_reduced_counts() -> (String, String, bool) {
    let counts: Vec<usize> = (3..=4)
        .map(|n| reduced_poset(n).unwrap().len())
        .collect();
    outcome("[5, 50]", format!("{counts:?}"))
}

fn check_reduced_count_n5() -> (String, String, bool) {
    outcome(774, reduced_poset(5).unwrap().len())
}

fn check_lower_mstar_bool() -> (String, String, bool) {
    let mut sizes = Vec::new();
    let mut all_ok = true;
    for k in 2..=4u32 {
        let report = lower_class_set(k).unwrap();
        all_ok &= report.ok() && report.poset.len() == boolean_star(k).len();
        sizes.push(report.poset.len());
    }
    outcome(
        "[3, 7, 15] classes, boolean",
        format!("{sizes:?} classes, {}", if all_ok { "boolean" } else { "not boolean" }),
    )
}

fn check_lower_mstar_bool_k5() -> (String, String, bool) {
    let report = lower_class_set(5).unwrap();
    outcome(
        "31 classes, boolean",
        format!(
            "{} classes, {}",
            report.poset.len(),
            if report.ok() { "boolean" } else { "not boolean" }
        ),
    )
}

fn check_ncht_counts() -> (String, String, bool) {
    let counts: Vec<usize> = (3..=4).map(|n| enumerate_ncht(n).unwrap().len()).collect();
    outcome("[4, 21]", format!("{counts:?}"))
}

fn check_ncht_counts_large() -> (String, String, bool) {
    let counts: Vec<usize> = (5..=6).map(|n| enumerate_ncht(n).unwrap().len()).collect();
    outcome("[126, 818]", format!("{counts:?}"))
}

fn upper_ustar_matches_dual_ncht(n: u32) -> (usize, bool) {
    let upper = upper_class_set(&class_of(&make_ustar(n)).unwrap());
    let dual = ncht_poset(n).unwrap().dual();
    (upper.len(), upper.is_isomorphic(&dual).is_some())
}

fn check_upper_ustar_ncht() -> (String, String, bool) {
    let (c3, ok3) = upper_ustar_matches_dual_ncht(3);
    let (c4, ok4) = upper_ustar_matches_dual_ncht(4);
    outcome(
        "4 and 21 classes, dual to the hypertree posets",
        if ok3 && ok4 {
            format!("{c3} and {c4} classes, dual to the hypertree posets")
        } else {
            format!("iso n=3: {ok3}, n=4: {ok4}")
        },
    )
}

fn check_upper_ustar_ncht_n5() -> (String, String, bool) {
    let (c5, ok5) = upper_ustar_matches_dual_ncht(5);
    outcome(
        "126 classes, dual to the hypertree poset",
        if ok5 {
            format!("{c5} classes, dual to the hypertree poset")
        } else {
            format!("iso n=5: {ok5}")
        },
    )
}

fn check_um_factorization() -> (String, String, bool) {
    let ts = enumerate_planar_trees(4).unwrap();
    let mut unique = 0;
    let mut pairs = 0;
    for a in &ts {
        for b in &ts {
            if a.canonical_code() == b.canonical_code() || !a.leq(b) {
                continue;
            }
            pairs += 1;
            let mid = um_factor(a, b).unwrap();
            let count = ts
                .iter()
                .filter(|t| a.leq(t) && t.leq(b) && leq_u(a, t) && leq_m(t, b))
                .count();
            if count == 1 && leq_u(a, &mid) && leq_m(&mid, b) {
                unique += 1;
            }
        }
    }
    outcome("252/252 unique factorizations", format!("{unique}/{pairs} unique factorizations"))
}

fn check_um_meet() -> (String, String, bool) {
    let ts = enumerate_planar_trees(4).unwrap();
    let leq: Vec<Vec<bool>> = ts
        .iter()
        .map(|a| ts.iter().map(|b| a.leq(b)).collect())
        .collect();
    let mut meets = 0;
    let mut good = 0;
    for (ti, t) in ts.iter().enumerate() {
        let down: Vec<usize> = (0..ts.len()).filter(|&s| leq[s][ti]).collect();
        let tus: Vec<usize> = down.iter().copied().filter(|&s| leq_u(&ts[s], t)).collect();
        let tms: Vec<usize> = down.iter().copied().filter(|&s| leq_m(&ts[s], t)).collect();
        for &u in &tus {
            for &m in &tms {
                meets += 1;
                let meet = um_meet(&ts[u], &ts[m], t).unwrap();
                let lb: Vec<usize> = down
                    .iter()
                    .copied()
                    .filter(|&s| leq[s][u] && leq[s][m])
                    .collect();
                let glb: Vec<usize> = lb
                    .iter()
                    .copied()
                    .filter(|&s| lb.iter().all(|&o| leq[o][s]))
                    .collect();
                if glb.len() == 1 && meet.canonical_code() == ts[glb[0]].canonical_code() {
                    good += 1;
                }
            }
        }
    }
    outcome("266/266 greatest lower bounds", format!("{good}/{meets} greatest lower bounds"))
}

fn reduced_classes_n4() -> BTreeMap<String, ReducedClass> {
    let mut reps: BTreeMap<String, PlanarTree> = BTreeMap::new();
    for t in enumerate_planar_trees(4).unwrap() {
        let r = reduce(&t);
        reps.entry(r.canonical_code()).or_insert_with(|| r.tree().clone());
    }
    reps.into_iter()
        .map(|(c, t)| {
            let class = class_of(&t).unwrap();
            (c, class)
        })
        .collect()
}

fn check_cover_moves() -> (String, String, bool) {
    let classes = reduced_classes_n4();
    let poset = reduced_poset(4).unwrap();
    let mut kinds: BTreeMap<CoverMove, usize> = BTreeMap::new();
    for &(lo, hi) in poset.covers() {
        let c1 = &classes[poset.element(lo)];
        let c2 = &classes[poset.element(hi)];
        *kinds.entry(classify_cover_move(c1, c2).unwrap()).or_insert(0) += 1;
    }
    outcome(
        "120 covers: 72 contractions, 48 slides, 0 splits",
        format!(
            "{} covers: {} contractions, {} slides, {} splits",
            poset.covers().len(),
            kinds.get(&CoverMove::Contraction).copied().unwrap_or(0),
            kinds.get(&CoverMove::Slide).copied().unwrap_or(0),
            kinds.get(&CoverMove::Split).copied().unwrap_or(0),
        ),
    )
}

fn reduced_products_all(n: u32) -> (String, String, bool) {
    let mut reps: BTreeMap<String, PlanarTree> = BTreeMap::new();
    for t in enumerate_planar_trees(n).unwrap() {
        let r = reduce(&t);
        reps.entry(r.canonical_code()).or_insert_with(|| r.tree().clone());
    }
    let total = reps.len();
    let good = reps
        .values()
        .filter(|t| verify_reduced_products(&reduce(t)).unwrap().ok())
        .count();
    outcome(format!("{total}/{total} product models"), format!("{good}/{total} product models"))
}

fn check_reduced_products_n4() -> (String, String, bool) {
    reduced_products_all(4)
}

fn check_reduced_products_n5() -> (String, String, bool) {
    reduced_products_all(5)
}

fn check_mu_monotone() -> (String, String, bool) {
    let mu =
        |t: &PlanarTree| singly_marked_edges(t).len() + 2 * marked_marked_edges(t).len();
    let ts = enumerate_planar_trees(4).unwrap();
    let mut pairs = 0;
    let mut monotone = 0;
    for a in &ts {
        for b in &ts {
            if a.canonical_code() != b.canonical_code() && leq_m(a, b) {
                pairs += 1;
                if mu(a) < mu(b) {
                    monotone += 1;
                }
            }
        }
    }
    outcome(
        format!("{pairs}/{pairs} strictly increasing"),
        format!("{monotone}/{pairs} strictly increasing"),
    )
}

fn check_hypertree_roundtrip() -> (String, String, bool) {
    let hs = enumerate_ncht(4).unwrap();
    let total = hs.len();
    let good = hs
        .iter()
        .filter(|h| {
            let c = treeplex_core::hypertree_to_class(h).unwrap();
            class_to_hypertree(&c).map(|back| back.key() == h.key()).unwrap_or(false)
        })
        .count();
    outcome("21/21 round trips", format!("{good}/{total} round trips"))
}

/// Every check, in report order.
pub fn registry() -> &'static [CheckDef] {
    use Suite::*;
    const CHECKS: &[CheckDef] = &[
        CheckDef { name: "pnr3-count", suite: Planar, min_n: 3, run: check_pnr3_count },
        CheckDef { name: "pnr3-census", suite: Planar, min_n: 3, run: check_pnr3_census },
        CheckDef {
            name: "pnr3-vertex-stars",
            suite: Planar,
            min_n: 3,
            run: check_pnr3_vertex_stars,
        },
        CheckDef { name: "pnr4-census", suite: Planar, min_n: 4, run: check_pnr4_census },
        CheckDef {
            name: "pnr4-dim2-factors",
            suite: Planar,
            min_n: 4,
            run: check_pnr4_dim2_factors,
        },
        CheckDef { name: "pnr5-count", suite: Planar, min_n: 5, run: check_pnr5_count },
        CheckDef { name: "pnr6-count", suite: Planar, min_n: 6, run: check_pnr6_count },
        CheckDef {
            name: "boolean-intervals-pnr4",
            suite: Planar,
            min_n: 4,
            run: check_boolean_intervals,
        },
        CheckDef {
            name: "star-census-trivalent-pnr4",
            suite: Planar,
            min_n: 4,
            run: check_star_census_trivalent,
        },
        CheckDef {
            name: "decompose-lower-sets-pnr4",
            suite: Planar,
            min_n: 4,
            run: check_decompose_n4,
        },
        CheckDef {
            name: "decompose-lower-sets-pnr5",
            suite: Planar,
            min_n: 5,
            run: check_decompose_n5,
        },
        CheckDef { name: "euler-lower-sets-pnr4", suite: Planar, min_n: 4, run: check_euler_n4 },
        CheckDef { name: "euler-lower-sets-pnr5", suite: Planar, min_n: 5, run: check_euler_n5 },
        CheckDef {
            name: "barycentric-prism",
            suite: Planar,
            min_n: 4,
            run: check_barycentric_prism,
        },
        CheckDef { name: "tri-counts", suite: Polytopes, min_n: 4, run: check_tri_counts },
        CheckDef { name: "tri-minima-catalan", suite: Polytopes, min_n: 4, run: check_tri_minima },
        CheckDef {
            name: "hexagon-graded",
            suite: Polytopes,
            min_n: 4,
            run: check_hexagon_graded,
        },
        CheckDef { name: "K5-vertices", suite: Polytopes, min_n: 4, run: check_k5_vertices },
        CheckDef { name: "K5-facets", suite: Polytopes, min_n: 4, run: check_k5_facets },
        CheckDef {
            name: "assoc-ustar-duality",
            suite: Polytopes,
            min_n: 5,
            run: check_assoc_ustar_duality,
        },
        CheckDef { name: "W3-hexagon", suite: Polytopes, min_n: 4, run: check_w3_hexagon },
        CheckDef { name: "W4-census", suite: Polytopes, min_n: 4, run: check_w4_census },
        CheckDef {
            name: "sym-quotient-mstar",
            suite: Polytopes,
            min_n: 4,
            run: check_sym_quotient_mstar,
        },
        CheckDef {
            name: "dual-tree-roundtrip",
            suite: Polytopes,
            min_n: 4,
            run: check_dual_tree_roundtrip,
        },
        CheckDef { name: "reduced-counts", suite: Reduced, min_n: 4, run: check_reduced_counts },
        CheckDef {
            name: "reduced-count-n5",
            suite: Reduced,
            min_n: 5,
            run: check_reduced_count_n5,
        },
        CheckDef {
            name: "lower-mstar-bool",
            suite: Reduced,
            min_n: 4,
            run: check_lower_mstar_bool,
        },
        CheckDef {
            name: "lower-mstar-bool-k5",
            suite: Reduced,
            min_n: 5,
            run: check_lower_mstar_bool_k5,
        },
        CheckDef { name: "ncht-counts", suite: Reduced, min_n: 4, run: check_ncht_counts },
        CheckDef {
            name: "ncht-counts-large",
            suite: Reduced,
            min_n: 6,
            run: check_ncht_counts_large,
        },
        CheckDef {
            name: "upper-ustar-ncht",
            suite: Reduced,
            min_n: 4,
            run: check_upper_ustar_ncht,
        },
        CheckDef {
            name: "upper-ustar-ncht-n5",
            suite: Reduced,
            min_n: 5,
            run: check_upper_ustar_ncht_n5,
        },
        CheckDef {
            name: "um-factorization",
            suite: Reduced,
            min_n: 4,
            run: check_um_factorization,
        },
        CheckDef { name: "um-meet", suite: Reduced, min_n: 4, run: check_um_meet },
        CheckDef { name: "cover-moves", suite: Reduced, min_n: 4, run: check_cover_moves },
        CheckDef {
            name: "reduced-products-n4",
            suite: Reduced,
            min_n: 4,
            run: check_reduced_products_n4,
        },
        CheckDef {
            name: "reduced-products-n5",
            suite: Reduced,
            min_n: 5,
            run: check_reduced_products_n5,
        },
        CheckDef { name: "mu-monotone", suite: Reduced, min_n: 4, run: check_mu_monotone },
        CheckDef {
            name: "hypertree-roundtrip",
            suite: Reduced,
            min_n: 4,
            run: check_hypertree_roundtrip,
        },
    ];
    CHECKS
}

/// Run the selected checks on `jobs` threads and assemble the report in
/// registry order.
pub fn run_checks(suite: Option<Suite>, n_max: u32, jobs: usize) -> Report {
    let selected: Vec<&CheckDef> = registry()
        .iter()
        .filter(|c| suite.is_none_or(|s| c.suite == s))
        .collect();
    let jobs = jobs.max(1);
    let slots: Mutex<Vec<Option<CheckResult>>> = Mutex::new(vec![None; selected.len()]);
    let next = AtomicUsize::new(0);
    std::thread::scope(|scope| {
        for _ in 0..jobs.min(selected.len().max(1)) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= selected.len() {
                    break;
                }
                let def = selected[i];
                let result = if def.min_n > n_max {
                    CheckResult {
                        name: def.name.to_string(),
                        expected: "-".to_string(),
                        computed: format!("requires --n {}", def.min_n),
                        verdict: "skip".to_string(),
                    }
                } else {
                    let (expected, computed, ok) = (def.run)();
                    CheckResult {
                        name: def.name.to_string(),
                        expected,
                        computed,
                        verdict: if ok { "pass" } else { "fail" }.to_string(),
                    }
                };
                slots.lock().unwrap()[i] = Some(result);
            });
        }
    });
    let checks: Vec<CheckResult> = slots
        .into_inner()
        .unwrap()
        .into_iter()
        .map(|c| c.expect("every slot filled"))
        .collect();
    let suite_name = suite.map_or("all", Suite::name).to_string();
    Report::new(suite_name, n_max, checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_is_well_formed() {
        let names: BTreeSet<&str> = registry().iter().map(|c| c.name).collect();
        assert_eq!(names.len(), registry().len(), "names are unique");
        assert!(registry().iter().all(|c| (3..=6).contains(&c.min_n)));
    }

    #[test]
    fn single_checks_pass() {
        for (f, name) in [
            (check_pnr3_count as fn() -> (String, String, bool), "pnr3-count"),
            (check_pnr3_census, "pnr3-census"),
            (check_tri_counts, "tri-counts"),
            (check_lower_mstar_bool, "lower-mstar-bool"),
        ] {
            let (expected, computed, ok) = f();
            assert!(ok, "{name}: expected {expected}, computed {computed}");
        }
    }

    #[test]
    fn gating_skips_expensive_checks() {
        let report = run_checks(Some(Suite::Planar), 3, 1);
        let skipped: Vec<&str> = report
            .checks
            .iter()
            .filter(|c| c.verdict == "skip")
            .map(|c| c.name.as_str())
            .collect();
        assert!(skipped.contains(&"pnr6-count"));
        assert!(report.passed(), "skips do not fail the report");
        let ran: Vec<&str> = report
            .checks
            .iter()
            .filter(|c| c.verdict == "pass")
            .map(|c| c.name.as_str())
            .collect();
        assert!(ran.contains(&"pnr3-count"));
    }
}
