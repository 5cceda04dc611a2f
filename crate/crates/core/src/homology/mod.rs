//! Exact integer homology of simplicial complexes.
//!
//! Boundary matrices are reduced to Smith normal form over arbitrary-precision
//! integers. The explicit models (ℝP², its suspension, connected sums of
//! those, S³, S²×S¹) witness the homological facts used in the classification:
//! `H_2(Susp ℝP²) = ℤ/2`, nonvanishing `H_2` of every connected sum of
//! suspensions, and the `2r` cone points over ℝP².

mod complex;
mod matrix;
mod models;
mod snf;

use thiserror::Error;

pub use complex::{
    chain_complex, connected_sum, homology, homology_groups, reduced_homology, singular_vertex_count, suspend,
    vertex_kind, AbelianGroupDecomp, ChainComplex, SimplicialComplex, VertexKind,
};
pub use matrix::IntegerMatrix;
pub use models::{circle, product, realize_suspension_sum, rp2_minimal, s2_times_s1, s3, simplex_boundary, Model};
pub use snf::{invariant_factors, smith_normal_form, SnfResult};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomologyError {
    #[error("complex has no facets")]
    Empty,
    #[error("facets have different dimensions")]
    NotPure,
    #[error("facet {0:?} repeats a vertex")]
    RepeatedVertex(Vec<usize>),
    #[error("{0:?} is not a facet")]
    NotAFacet(Vec<usize>),
    #[error("expected a 3-dimensional complex, got dimension {0}")]
    NotThreeDimensional(usize),
    #[error("vertex {vertex} has a link that is neither a 2-sphere nor ℝP² (homology {homology:?})")]
    MalformedLink { vertex: usize, homology: Vec<String> },
    #[error("no facet avoids the singular vertices")]
    NoRegularFacet,
    #[error("a connected sum needs at least one summand")]
    ZeroSummands,
    #[error("unknown model '{0}' (expected rp2, sus_rp2, sus_rp2^k, s3 or s2xs1)")]
    UnknownModel(String),
}
