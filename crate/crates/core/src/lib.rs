//! Exact computations on clutters, the combinatorial side of squarefree
//! monomial ideals.
//!
//! A [`Clutter`] stands for the ideal generated by the monomials of its
//! edges. The crate computes
//!
//! * the domination parameters `ε`, `i`, big height and edge cover number
//!   ([`domination`]),
//! * multigraded Betti numbers through Hochster's formula, hence projective
//!   dimension and regularity, over `Q` or a prime field ([`invariants`],
//!   backed by [`homology`] and exact [`linalg`]),
//! * the upper bounds these invariants are compared against ([`bounds`]),
//! * connected-graph clutters `C_k(G)` and their closed forms for paths and
//!   cycles ([`families`]).
//!
//! [`corpus`] and [`verify`] drive exhaustive and randomized cross-checks.

pub mod bounds;
pub mod clutter;
pub mod corpus;
mod cover;
pub mod domination;
pub mod error;
pub mod families;
pub mod graph;
pub mod homology;
pub mod invariants;
pub mod linalg;
pub mod verify;
pub mod vertex_set;

pub use bounds::{
    alpha_reg_bound, bounds_report, comparison_predicate, edgewise_bound, faltings_bound, taylor_reg_bound,
    verify_exact_sequence, BoundsReport, ExactSequenceCheck,
};
pub use clutter::{make_clutter, minimal_transversals, minimalize, Clutter};
pub use domination::{
    big_height, domination_report, edge_cover_number, epsilon, independent_domination, is_edgewise_dominant,
    DominationReport,
};
pub use error::{Error, Result};
pub use families::{
    closed_forms, connected_graph_clutter, family_clutter, is_simplicial_clutter, is_simplicial_graph,
    path_clutter_undirected, realizability_search, standard_graph, ClosedForms, FamilyKind, FamilySpec,
};
pub use graph::{make_graph, Graph};
pub use homology::{homology_dims, induced_complex, FaceTable, FieldSpec, HomologyProfile};
pub use invariants::{
    betti_table, homology_vanishing_report, pd_quotient, pd_via_terai, reg_ideal, BettiTable, Hochster, VanishingReport,
};
pub use vertex_set::{VertexId, VertexSet, MAX_VERTICES};
