//! Fitting ideals of monomial ideals and the checks built on them.

mod ideal;
mod presentation;
mod report;
pub mod verify;

pub use ideal::{
    fitting_ideal, fitting_ideal_of_generators, fitting_ideals, fitting_of_presentation,
    graded_minor_ideal, monomial_minor_ideal, PresentationKind,
};
pub use presentation::{taylor_presentation, GradedColumn, GradedPresentation, Presentation};
pub use report::{describe_ideal, reproduce_command, FittingReport};
pub use verify::{
    classify_squarefree, structure_check, verify_containment, verify_hilbert_burch,
    verify_hilbert_burch_converse, verify_radical, verify_squarefree_equivalence,
    SquarefreeClassification,
};
