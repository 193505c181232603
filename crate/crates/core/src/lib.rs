//! Binary relations, their rough approximations, and the matroids that pass
//! between them.
//!
//! A relation `R` on a finite universe gives each element a successor
//! neighborhood `RS(x) = {y : x R y}`. Those neighborhoods drive two
//! constructions:
//!
//! * the approximation operators `L_R(X) = {u : RS(u) ⊆ X}` and
//!   `H_R(X) = {u : RS(u) ∩ X ≠ ∅}`
//! * the matroid `M(R)` whose independent sets are the sets of elements with
//!   pairwise distinct neighborhoods
//!
//! Going back, a matroid `M` induces `R(M)`: `x R(M) y` iff `x = y` or
//! `{x, y}` is a circuit.
//!
//! ```
//! use relmat::{BinaryRelation, Universe, build_relation_matroid, induce_relation};
//!
//! let u = Universe::with_labels(["1", "2", "3"])?;
//! let r = BinaryRelation::from_label_pairs(
//!     &u,
//!     [("1", "1"), ("1", "2"), ("2", "1"), ("2", "3"), ("3", "1"), ("3", "3")],
//! )?;
//! let m = build_relation_matroid(&r);
//! let back = induce_relation(&m)?.into_relation();
//! assert_eq!(back.format_pairs(), "{(1, 1), (2, 2), (2, 3), (3, 2), (3, 3)}");
//! # Ok::<(), relmat::Error>(())
//! ```
//!
//! Sets are [`Subset`] bit vectors over element indices `0..n`; a
//! [`Universe`] maps indices to labels. Anything that enumerates subsets is
//! capped at [`EXHAUSTIVE_LIMIT`] elements.

pub mod approx;
pub mod cli;
mod error;
pub mod induced;
pub mod io;
pub mod matroid;
pub mod relation;
pub mod relation_matroid;
pub mod report;
pub mod subset;
pub mod universe;
pub mod verify;

pub use approx::{
    check_h_properties, check_pawlak_properties, lower_approx, upper_approx, ApproximationPair,
    PAWLAK_PROPERTIES,
};
pub use error::{Error, Result};
pub use induced::{
    check_round_trip_laws, check_upper_subset_closure, compare_upper_and_closure_singleton,
    induce_relation, round_trip_relation, same_neighborhood_relation, InducedRelation, RoundTrip,
    SingletonComparison,
};
pub use io::LoadError;
pub use matroid::{
    check_closure_axioms, check_closure_operator, check_matroid_axioms, circuits, closure,
    closure_via_circuits, dependent_sets, independent_sets, is_closed, loops, rank,
    ExplicitMatroid, FnOracle, MatroidOracle,
};
pub use relation::BinaryRelation;
pub use relation_matroid::{
    build_relation_matroid, compare_closure_and_upper, same_matroid, ClosureUpperComparison,
    NeighborhoodKind, RelationMatroid,
};
pub use report::{PropertyOutcome, PropertyReport, Witness, WitnessValue};
pub use subset::{power_set, SetFamily, Subset, EXHAUSTIVE_LIMIT};
pub use universe::Universe;
pub use verify::TheoremCase;

// The guide's code blocks run as doctests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/relations.md")]
    mod relations {}
    #[doc = include_str!("../../../book/src/approximations.md")]
    mod approximations {}
    #[doc = include_str!("../../../book/src/matroids.md")]
    mod matroids {}
    #[doc = include_str!("../../../book/src/relation-matroids.md")]
    mod relation_matroids {}
    #[doc = include_str!("../../../book/src/induced-relations.md")]
    mod induced_relations {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
    #[doc = include_str!("../../../README.md")]
    mod readme {}
}
