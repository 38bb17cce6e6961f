//! Randomized invariants over uniformly sampled planar trees.

use std::sync::OnceLock;

use proptest::prelude::*;

use treeplex_core::{
    class_of, enumerate_planar_trees, is_reduced, reduce, PlanarTree,
};

fn pool(n: u32) -> &'static [PlanarTree] {
    static CELLS: OnceLock<Vec<Vec<PlanarTree>>> = OnceLock::new();
    let all = CELLS
        .get_or_init(|| (3..=6).map(|n| enumerate_planar_trees(n).unwrap()).collect());
    &all[(n - 3) as usize]
}

fn arb_tree() -> impl Strategy<Value = PlanarTree> {
    (3u32..=6, any::<prop::sample::Index>())
        .prop_map(|(n, idx)| pool(n)[idx.index(pool(n).len())].clone())
}

/// Renumber the vertices of `t` by a permutation drawn from `seed`.
fn permuted(t: &PlanarTree, seed: u64) -> PlanarTree {
    let v = t.vertex_count();
    let mut perm: Vec<usize> = (0..v).collect();
    let mut state = seed | 1;
    for i in (1..v).rev() {
        state = state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        let j = (state >> 33) as usize % (i + 1);
        perm.swap(i, j);
    }
    let mut labels = vec![None; v];
    let mut rotations = vec![Vec::new(); v];
    for x in 0..v {
        labels[perm[x]] = t.label(x);
        rotations[perm[x]] = t.rotation(x).iter().map(|&w| perm[w]).collect();
    }
    PlanarTree::new(t.n(), labels, rotations).unwrap()
}

proptest! {
    #[test]
    fn canonical_code_ignores_vertex_ids(t in arb_tree(), seed in any::<u64>()) {
        let s = permuted(&t, seed);
        prop_assert_eq!(s.canonical_code(), t.canonical_code());
    }

    #[test]
    fn contraction_recovers_its_witness(
        t in arb_tree(),
        pick in any::<prop::sample::Index>(),
    ) {
        let subforests = t.subforests();
        let f = &subforests[pick.index(subforests.len())];
        let c = t.contract(f);
        prop_assert_eq!(c.vertex_count(), t.vertex_count() - f.len());
        prop_assert!(t.leq(&c));
        let w = t.witness_subforest(&c).unwrap();
        prop_assert_eq!(w.edges(), f.edges());
    }

    #[test]
    fn reduction_is_idempotent(t in arb_tree()) {
        let r = reduce(&t);
        prop_assert!(is_reduced(r.tree()));
        prop_assert_eq!(reduce(r.tree()).canonical_code(), r.canonical_code());
        let class = class_of(&t).unwrap();
        prop_assert!(class.members().contains_key(&t.canonical_code()));
    }
}
