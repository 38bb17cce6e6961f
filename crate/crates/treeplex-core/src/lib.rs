//! Planar marked trees, their contraction posets, polytope face lattices,
//! and reduced-tree structures.
//!
//! The crate models the combinatorics of planar `n`-trees: finite trees
//! with marks `1..=n`, a counterclockwise rotation at every vertex, and
//! all low-valence vertices marked.  Contracting admissible subforests
//! orders these trees into a poset whose intervals are boolean lattices
//! and whose lower sets are face lattices of products of associahedra and
//! cyclohedra; the associated polyhedral complex, its cell censuses, and
//! its barycentric (flag) counts are all computable here.  A second layer
//! contracts unmarked-unmarked edges to *reduced* trees, whose classes
//! carry their own order with boolean lower sets and noncrossing-hypertree
//! upper sets.
//!
//! The crate is `no_std` (it needs only `alloc`), so everything here is
//! pure combinatorics; serialization and command-line plumbing live in
//! the companion `treeplex` binary crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

mod bits;
pub mod complex;
pub mod hypertree;
pub mod poset;
pub mod reduced;
pub mod tree;
pub mod triangulation;

pub use complex::{
    build_pnr_poset, cell_census, decompose_lower_set, enumerate_planar_trees,
    for_each_planar_tree, lower_set, star_census, verify_barycentric, BarycentricReport,
    CellCensus, ComplexError, Decomposition,
};
pub use hypertree::{
    enumerate_ncht, hyperedges_compatible, hypertree_to_tree, ncht_poset, tree_to_hypertree,
    HypertreeError, NoncrossingHypertree,
};
pub use poset::{boolean_lattice, boolean_star, FinitePoset, PosetError};
pub use reduced::{
    class_of, class_to_hypertree, classify_cover_move, hypertree_to_class, is_reduced, leq_m,
    leq_u, lower_class_set, lower_class_set_of, red_leq, reduce, reduced_poset, um_factor,
    um_meet, upper_class_set, verify_reduced_products, ClassSetReport, CoverMove, ReducedClass,
    ReducedError, ReducedProductReport, ReducedTree,
};
pub use tree::{
    factor_key, make_mstar, make_ustar, CellFactor, PlanarTree, Subforest, SubforestError,
    TreeError,
};
pub use triangulation::{
    all_diagonals, associahedron, cyclohedron, diagonals_cross, dual_tree,
    enumerate_partial_triangulations, enumerate_symmetric_triangulations, from_dual_tree,
    sym_quotient, sym_tri_poset, tri_poset, PartialTriangulation, TriangulationError,
};
