//! Numerical semigroups, relative ideals, and Fitting ideals in `K[[t^S]]`.

mod numerical;
mod relative;
mod search;
mod series;

pub use numerical::{
    semigroups_up_to_genus, NumericalSemigroup, SemigroupInvariants, MAX_MULTIPLICITY,
};
pub use relative::{canonical_ideal, RelativeIdeal};
pub use search::{analyse_canonical, conjecture_search, SearchEntry, SearchReport};
pub use series::{
    fitting1_equals_ideal, fitting1_series, presentation_semigroup, relation_matrix, FittingSeries,
    MinorRoute, PairRelation, Series, TruncatedIdeal,
};
