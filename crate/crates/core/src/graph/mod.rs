//! Finite simple graphs, their edge ideals, and admissible covers.

mod chordal;
mod cover;
#[allow(clippy::module_inception)]
mod graph;

pub use chordal::{is_chordal, is_perfect_elimination_order, mcs_elimination_order};
pub use cover::{
    admissible_covers, find_admissible_cover, maximal_criterion, minimal_covered_sets,
    radical_fitting_formula, AdmissibleCover, MaximalCriterion,
};
pub use graph::{isomorphism_classes, Graph, MAX_EDGES, MAX_VERTICES};
