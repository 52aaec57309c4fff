//! Toll convexity on finite simple graphs.
//!
//! The crate computes toll intervals and toll convex hulls, decomposes a graph
//! by its clique separators into atoms (maximal prime subgraphs), and finds a
//! minimum toll hull set in polynomial time together with a hull
//! characteristic family. Brute-force reference implementations live in
//! [`oracles`] and are used to cross-check everything at small sizes.

pub mod atoms;
pub mod convexity;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod oracles;
pub mod solver;

pub use atoms::{atoms, block_of, extremal_atoms, is_prime, Atom, AtomDecomposition};
pub use convexity::{
    extreme_vertices, fast_concavity_test, interval_of_set, is_t_concave, is_t_convex,
    is_toll_extreme, toll_hull, toll_interval, Block, TollIntervals,
};

pub use enumerate::{completeness_report, enumerate_min_hull_sets, selection_menu, CompletenessReport, MinHullSets, SelectionMenu};
pub use error::{Error, Result};
pub use graph::{Graph, VertexId, VertexSet};
pub use solver::{
    characteristic_family, classify_type, extreme_vertices_via_family, solve, CharacteristicBlock,
    Choice, ChoiceContext, ConcaveType, HullResult,
};
