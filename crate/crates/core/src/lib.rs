//! Invariant tuples of circle actions on Alexandrov 3-spaces, with canonical
//! forms, censuses and an integral homology engine.
//!
//! - [`invariants`]: the invariant tuple, its grammar and legality rules.
//! - [`equivalence`]: canonical forms and the move-closure oracle.
//! - [`census`]: counting and enumerating inequivalent actions.
//! - [`decomposition`]: `X ≅ M # r·Susp(ℝP²)` and the asphericity obstruction.
//! - [`homology`]: exact simplicial homology via Smith normal form.

pub mod census;
pub mod decomposition;
pub mod equivalence;
pub mod homology;
pub mod invariants;

pub use census::{
    compare_counts, count_actions_enumerated, count_actions_paper, enumerate_census, valid_tuples, ComplexityBound,
    CountReport,
};
pub use decomposition::{asphericity_obstructed, decompose, name_lookup, Decomposition, SpaceName};
pub use equivalence::{
    apply_beta_reflection, apply_orientation_reversal, are_equivalent, canonical_form, closure_oracle_equivalent,
    CanonicalTuple, MoveSet, MoveTrace,
};
pub use invariants::{
    parse_tuple, serialize_tuple, singular_point_count, validate, BaseSurface, Epsilon, InvariantTuple, SeifertPair,
    ValidationReport,
};
