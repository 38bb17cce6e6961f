//! Structural invariants checked exhaustively on small mark counts.
//!
//! These tests sweep every planar tree (and every comparable pair of
//! trees) at `n = 3` and `n = 4`, where the full order is small enough to
//! recompute from scratch, plus a few hand-built witnesses at `n = 5`.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::OnceLock;

use treeplex_core::poset::FinitePoset;
use treeplex_core::reduced::{marked_marked_edges, singly_marked_edges};
use treeplex_core::{
    boolean_lattice, cell_census, class_of, classify_cover_move, enumerate_ncht,
    enumerate_partial_triangulations, enumerate_planar_trees, enumerate_symmetric_triangulations,
    from_dual_tree, hypertree_to_class, hypertree_to_tree, is_reduced, leq_m, leq_u, lower_set,
    make_mstar, make_ustar, ncht_poset, red_leq, reduce, reduced_poset, sym_quotient,
    tree_to_hypertree, um_factor, um_meet, CoverMove, PlanarTree, ReducedClass, Subforest,
    dual_tree,
};

fn pnr4() -> &'static [PlanarTree] {
    static CELL: OnceLock<Vec<PlanarTree>> = OnceLock::new();
    CELL.get_or_init(|| enumerate_planar_trees(4).unwrap())
}

/// Full order relation on the `n = 4` trees, indexed like [`pnr4`].
fn leq4() -> &'static [Vec<bool>] {
    static CELL: OnceLock<Vec<Vec<bool>>> = OnceLock::new();
    CELL.get_or_init(|| {
        let ts = pnr4();
        ts.iter()
            .map(|a| ts.iter().map(|b| a.leq(b)).collect())
            .collect()
    })
}

#[test]
fn contraction_accounting() {
    for n in 3..=4u32 {
        for t in enumerate_planar_trees(n).unwrap() {
            let mut seen = BTreeSet::new();
            for f in t.subforests() {
                let c = t.contract(&f);
                assert_eq!(c.vertex_count(), t.vertex_count() - f.len());
                assert!(t.leq(&c));
                // Distinct subforests contract to distinct trees...
                assert!(seen.insert(c.canonical_code()));
                // ...so the witness recovered from the result is the
                // subforest we started from.
                let w = t.witness_subforest(&c).unwrap();
                assert_eq!(w.edges(), f.edges());
            }
            // The empty subforest is the identity.
            let empty = Subforest::new(&t, &[]).unwrap();
            assert_eq!(t.contract(&empty).canonical_code(), t.canonical_code());
        }
    }
}

#[test]
fn order_laws() {
    let ts = pnr4();
    let leq = leq4();
    for i in 0..ts.len() {
        assert!(leq[i][i]);
        for j in 0..ts.len() {
            if i != j && leq[i][j] {
                assert!(!leq[j][i], "antisymmetry");
                assert!(
                    ts[i].vertex_count() > ts[j].vertex_count(),
                    "contraction loses vertices"
                );
            }
            for k in 0..ts.len() {
                if leq[i][j] && leq[j][k] {
                    assert!(leq[i][k], "transitivity");
                }
            }
        }
    }
}

#[test]
fn poset_construction_agrees() {
    for n in 3..=4u32 {
        let ts = enumerate_planar_trees(n).unwrap();
        let direct = treeplex_core::build_pnr_poset(n).unwrap();
        let elements: Vec<String> = ts.iter().map(|t| t.canonical_code()).collect();
        let from_leq =
            FinitePoset::from_leq(elements, |i, j| ts[i].leq(&ts[j])).unwrap();
        assert_eq!(direct.elements(), from_leq.elements());
        let a: BTreeSet<(usize, usize)> = direct.covers().iter().copied().collect();
        let b: BTreeSet<(usize, usize)> = from_leq.covers().iter().copied().collect();
        assert_eq!(a, b, "n={n}");
    }
}

#[test]
fn intervals_are_boolean() {
    let ts = pnr4();
    let leq = leq4();
    let poset = treeplex_core::build_pnr_poset(4).unwrap();
    let index: BTreeMap<&str, usize> = poset
        .elements()
        .iter()
        .enumerate()
        .map(|(i, e)| (e.as_str(), i))
        .collect();
    let mut strict_pairs = 0;
    for (i, a) in ts.iter().enumerate() {
        for (j, b) in ts.iter().enumerate() {
            if i == j || !leq[i][j] {
                continue;
            }
            strict_pairs += 1;
            let f = a.witness_subforest(b).unwrap();
            let pa = index[a.canonical_code().as_str()];
            let pb = index[b.canonical_code().as_str()];
            let interval = poset.interval(pa, pb).unwrap();
            let cube = boolean_lattice(f.len() as u32);
            assert_eq!(interval.len(), cube.len());
            assert!(
                interval.is_isomorphic(&cube).is_some(),
                "interval {} .. {}",
                a.canonical_code(),
                b.canonical_code()
            );
        }
    }
    assert_eq!(strict_pairs, 252);
}

#[test]
fn factorization_is_unique() {
    let ts = pnr4();
    let leq = leq4();
    for (i, a) in ts.iter().enumerate() {
        for (j, b) in ts.iter().enumerate() {
            if i == j || !leq[i][j] {
                continue;
            }
            let mids: Vec<&PlanarTree> = (0..ts.len())
                .filter(|&k| leq[i][k] && leq[k][j])
                .filter(|&k| leq_u(a, &ts[k]) && leq_m(&ts[k], b))
                .map(|k| &ts[k])
                .collect();
            assert_eq!(mids.len(), 1, "{} .. {}", a.canonical_code(), b.canonical_code());
            let f = um_factor(a, b).unwrap();
            assert_eq!(f.canonical_code(), mids[0].canonical_code());
        }
    }
}

#[test]
fn meet_is_greatest_lower_bound() {
    let ts = pnr4();
    let leq = leq4();
    let mut checked = 0;
    for (ti, t) in ts.iter().enumerate() {
        let down: Vec<usize> = (0..ts.len()).filter(|&s| leq[s][ti]).collect();
        let tus: Vec<usize> = down.iter().copied().filter(|&s| leq_u(&ts[s], t)).collect();
        let tms: Vec<usize> = down.iter().copied().filter(|&s| leq_m(&ts[s], t)).collect();
        for &u in &tus {
            for &m in &tms {
                let meet = um_meet(&ts[u], &ts[m], t).unwrap();
                // Independent scan for the greatest lower bound.
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
                assert_eq!(glb.len(), 1);
                assert_eq!(meet.canonical_code(), ts[glb[0]].canonical_code());
                assert!(leq_m(&meet, &ts[u]) && leq_u(&meet, &ts[m]));
                assert_eq!(
                    meet.edge_count() + t.edge_count(),
                    ts[u].edge_count() + ts[m].edge_count()
                );
                checked += 1;
            }
        }
    }
    assert_eq!(checked, 266);
}

#[test]
fn marked_edge_statistic_is_monotone() {
    // mu = #singly-marked + 2 * #marked-marked strictly increases upward
    // whenever the lower tree sits below by marked contractions only.
    let mu = |t: &PlanarTree| {
        singly_marked_edges(t).len() + 2 * marked_marked_edges(t).len()
    };
    let ts = pnr4();
    for a in ts {
        for b in ts {
            if a.canonical_code() != b.canonical_code() && leq_m(a, b) {
                assert!(mu(a) < mu(b));
            }
        }
    }
    // The singly-marked count alone is not monotone: contracting the edge
    // at mark 5 here turns 5 singly-marked edges into 6.
    let cx = PlanarTree::new(
        5,
        vec![Some(5), None, None, None, Some(1), Some(2), Some(3), Some(4)],
        vec![
            vec![1],
            vec![0, 2, 3],
            vec![1, 4, 5],
            vec![1, 6, 7],
            vec![2],
            vec![2],
            vec![3],
            vec![3],
        ],
    )
    .unwrap();
    let f = Subforest::new(&cx, &[(0, 1)]).unwrap();
    let cxc = cx.contract(&f);
    assert!(leq_m(&cx, &cxc));
    assert_eq!(singly_marked_edges(&cx).len(), 5);
    assert_eq!(singly_marked_edges(&cxc).len(), 6);
    assert!(mu(&cx) < mu(&cxc));
}

#[test]
fn dimension_extremes() {
    for n in 3..=5u32 {
        let census = cell_census(n).unwrap();
        let max_dim = *census.by_dimension.keys().max().unwrap();
        assert_eq!(max_dim, n as usize - 2);
        let poset = if n <= 4 {
            Some(treeplex_core::build_pnr_poset(n).unwrap())
        } else {
            None
        };
        let mut top = 0;
        let mut bottom = 0;
        for t in enumerate_planar_trees(n).unwrap() {
            if t.cell_dimension() == max_dim {
                top += 1;
                // Top-dimensional cells have no unmarked vertices, so all
                // their factors are cyclohedra.
                assert_eq!(t.vertex_count(), n as usize);
            }
            if t.cell_dimension() == 0 {
                bottom += 1;
            }
        }
        assert_eq!(top, census.by_dimension[&max_dim]);
        assert_eq!(bottom, census.by_dimension[&0]);
        if let Some(p) = poset {
            assert_eq!(p.maximal_elements().len(), top);
            assert_eq!(p.minimal_elements().len(), bottom);
        }
    }
}

#[test]
fn lower_sets_match_global_filter() {
    let ts = pnr4();
    let leq = leq4();
    for (j, t) in ts.iter().enumerate() {
        let global: BTreeSet<String> = (0..ts.len())
            .filter(|&i| leq[i][j])
            .map(|i| ts[i].canonical_code())
            .collect();
        let local: BTreeSet<String> = lower_set(t).elements().iter().cloned().collect();
        assert_eq!(local, global, "{}", t.canonical_code());
        assert_eq!(lower_set(t).euler_characteristic(), 1);
    }
}

#[test]
fn reduction_is_monotone() {
    let ts = pnr4();
    let leq = leq4();
    let mut classes: BTreeMap<String, ReducedClass> = BTreeMap::new();
    for t in ts {
        let r = reduce(t);
        assert!(is_reduced(r.tree()));
        // Idempotent.
        assert_eq!(
            reduce(r.tree()).canonical_code(),
            r.canonical_code()
        );
        classes
            .entry(r.canonical_code())
            .or_insert_with(|| class_of(t).unwrap());
    }
    assert_eq!(classes.len(), 50);
    for (i, a) in ts.iter().enumerate() {
        for (j, b) in ts.iter().enumerate() {
            if leq[i][j] {
                let ca = &classes[&reduce(a).canonical_code()];
                let cb = &classes[&reduce(b).canonical_code()];
                assert!(red_leq(ca, cb));
            }
        }
    }
}

#[test]
fn cover_move_census() {
    let ts = pnr4();
    let mut reps: BTreeMap<String, PlanarTree> = BTreeMap::new();
    for t in ts {
        let r = reduce(t);
        reps.entry(r.canonical_code()).or_insert_with(|| r.tree().clone());
    }
    let classes: BTreeMap<&String, ReducedClass> =
        reps.iter().map(|(c, t)| (c, class_of(t).unwrap())).collect();
    let poset = reduced_poset(4).unwrap();
    assert_eq!(poset.covers().len(), 120);
    let mut kinds: BTreeMap<CoverMove, usize> = BTreeMap::new();
    for &(lo, hi) in poset.covers() {
        let c1 = &classes[&poset.element(lo).to_string()];
        let c2 = &classes[&poset.element(hi).to_string()];
        let kind = classify_cover_move(c1, c2).unwrap();
        *kinds.entry(kind).or_insert(0) += 1;
    }
    assert_eq!(
        kinds,
        BTreeMap::from([(CoverMove::Contraction, 72), (CoverMove::Slide, 48)])
    );
}

#[test]
fn cover_move_examples() {
    // Slide: the mark 2 moves off the unmarked hub.
    let hub = class_of(&make_ustar(4)).unwrap();
    let slid = class_of(
        &PlanarTree::new(
            4,
            vec![Some(1), Some(2), None, Some(3), Some(4)],
            vec![vec![1], vec![0, 2], vec![1, 3, 4], vec![2], vec![2]],
        )
        .unwrap(),
    )
    .unwrap();
    assert_eq!(classify_cover_move(&hub, &slid).unwrap(), CoverMove::Slide);

    // Contraction: the remaining singly-marked edge collapses.
    let path = class_of(
        &PlanarTree::new(
            4,
            vec![Some(1), Some(2), Some(3), Some(4)],
            vec![vec![1], vec![0, 2], vec![1, 3], vec![2]],
        )
        .unwrap(),
    )
    .unwrap();
    assert_eq!(
        classify_cover_move(&slid, &path).unwrap(),
        CoverMove::Contraction
    );

    // Split: mark 1 separates the two unmarked hubs; this needs n = 5.
    let five_hub = class_of(&make_ustar(5)).unwrap();
    let split = class_of(
        &PlanarTree::new(
            5,
            vec![Some(1), None, None, Some(2), Some(3), Some(4), Some(5)],
            vec![
                vec![1, 2],
                vec![0, 3, 4],
                vec![0, 5, 6],
                vec![1],
                vec![1],
                vec![2],
                vec![2],
            ],
        )
        .unwrap(),
    )
    .unwrap();
    assert_eq!(
        classify_cover_move(&five_hub, &split).unwrap(),
        CoverMove::Split
    );
}

#[test]
fn sym_quotient_is_an_order_embedding() {
    for n in 2..=3u32 {
        let pts = enumerate_symmetric_triangulations(n).unwrap();
        let quotients: Vec<PlanarTree> =
            pts.iter().map(|pt| sym_quotient(pt).unwrap()).collect();
        let image: BTreeSet<String> =
            quotients.iter().map(|t| t.canonical_code()).collect();
        let target: BTreeSet<String> = make_mstar(n)
            .lower_set_trees()
            .iter()
            .map(|t| t.canonical_code())
            .collect();
        assert_eq!(image, target, "n={n}");
        for (a, qa) in pts.iter().zip(&quotients) {
            for (b, qb) in pts.iter().zip(&quotients) {
                assert_eq!(a.leq(b), qa.leq(qb), "n={n}");
            }
        }
    }
}

#[test]
fn dual_tree_round_trips() {
    for ngon in 3..=7u32 {
        let mut codes = BTreeSet::new();
        for pt in enumerate_partial_triangulations(ngon).unwrap() {
            let t = dual_tree(&pt);
            assert_eq!(t.n(), ngon);
            assert!(codes.insert(t.canonical_code()));
            let back = from_dual_tree(&t).unwrap();
            assert_eq!(back.key(), pt.key(), "ngon={ngon}");
        }
    }
}

#[test]
fn hypertree_round_trips() {
    for h in enumerate_ncht(5).unwrap() {
        let t = hypertree_to_tree(&h);
        assert!(is_reduced(&t));
        assert_eq!(tree_to_hypertree(&t).unwrap().key(), h.key());
        assert_eq!(
            hypertree_to_class(&h)
                .unwrap()
                .representative()
                .canonical_code(),
            t.canonical_code()
        );
    }
}

#[test]
fn hypertree_map_reverses_the_reduced_order() {
    let ts = pnr4();
    let mut reps: BTreeMap<String, PlanarTree> = BTreeMap::new();
    for t in ts {
        let r = reduce(t);
        reps.entry(r.canonical_code()).or_insert_with(|| r.tree().clone());
    }
    let poset = reduced_poset(4).unwrap();
    let hub_code = reduce(&make_ustar(4)).canonical_code();
    let hub_idx = poset.index_of(&hub_code).unwrap();
    let upper = poset.upper_set_indices(hub_idx);
    assert_eq!(upper.len(), enumerate_ncht(4).unwrap().len());
    let hypertrees: BTreeMap<usize, treeplex_core::NoncrossingHypertree> = upper
        .iter()
        .map(|&i| {
            let c = class_of(&reps[poset.element(i)]).unwrap();
            (i, treeplex_core::class_to_hypertree(&c).unwrap())
        })
        .collect();
    // Distinct classes give distinct hypertrees, and comparisons flip.
    let keys: BTreeSet<String> = hypertrees.values().map(|h| h.key()).collect();
    assert_eq!(keys.len(), upper.len());
    for &i in &upper {
        for &j in &upper {
            assert_eq!(
                poset.leq(i, j),
                hypertrees[&j].leq(&hypertrees[&i]),
                "{} vs {}",
                poset.element(i),
                poset.element(j)
            );
        }
    }
    // The whole family of hypertrees on 4 vertices is hit.
    assert_eq!(keys.len(), ncht_poset(4).unwrap().len());
}
