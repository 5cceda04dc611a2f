//! The invariant tuple `(b; (ε, g, f, t); {(α_i, β_i)}; (r_1, …, r_s))` that
//! classifies an effective circle action on a closed Alexandrov 3-space.
//!
//! Multisets are always stored sorted ascending (pairs lexicographically by
//! `(α, β)`), so structural equality is multiset equality.

mod parse;
mod validate;

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use parse::{parse_tuple, ParseError};
pub use validate::{validate, Rule, ValidationReport, Violation};

/// Orientability symbol of the orbit space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Epsilon {
    #[serde(rename = "o")]
    Orientable,
    #[serde(rename = "n")]
    Nonorientable,
}

impl Epsilon {
    pub fn symbol(self) -> char {
        match self {
            Epsilon::Orientable => 'o',
            Epsilon::Nonorientable => 'n',
        }
    }
}

/// Topological type of the orbit space with its boundary circles filled in.
/// For nonorientable surfaces the genus counts cross-caps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BaseSurface {
    pub epsilon: Epsilon,
    pub genus: u32,
}

impl BaseSurface {
    pub fn orientable(genus: u32) -> Self {
        BaseSurface {
            epsilon: Epsilon::Orientable,
            genus,
        }
    }

    pub fn nonorientable(genus: u32) -> Self {
        BaseSurface {
            epsilon: Epsilon::Nonorientable,
            genus,
        }
    }

    pub fn is_orientable(&self) -> bool {
        self.epsilon == Epsilon::Orientable
    }
}

/// Seifert invariant `(α, β)` of one exceptional orbit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SeifertPair {
    pub alpha: i64,
    pub beta: i64,
}

impl SeifertPair {
    pub const fn new(alpha: i64, beta: i64) -> Self {
        SeifertPair { alpha, beta }
    }

    /// The pair `(α, α − β)`.
    pub fn reflected(self) -> Self {
        SeifertPair {
            alpha: self.alpha,
            beta: self.alpha - self.beta,
        }
    }
}

impl fmt::Display for SeifertPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.alpha, self.beta)
    }
}

/// The complete classification datum of an action.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct InvariantTuple {
    b: i64,
    surface: BaseSurface,
    f: u32,
    t: u32,
    exceptional: Vec<SeifertPair>,
    singular: Vec<i64>,
}

impl InvariantTuple {
    pub fn new(
        b: i64,
        surface: BaseSurface,
        f: u32,
        t: u32,
        exceptional: impl IntoIterator<Item = SeifertPair>,
        singular: impl IntoIterator<Item = i64>,
    ) -> Self {
        let mut exceptional: Vec<_> = exceptional.into_iter().collect();
        let mut singular: Vec<_> = singular.into_iter().collect();
        exceptional.sort_unstable();
        singular.sort_unstable();
        InvariantTuple {
            b,
            surface,
            f,
            t,
            exceptional,
            singular,
        }
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    pub fn surface(&self) -> BaseSurface {
        self.surface
    }

    pub fn epsilon(&self) -> Epsilon {
        self.surface.epsilon
    }

    pub fn genus(&self) -> u32 {
        self.surface.genus
    }

    /// Boundary circles made only of regular fixed points.
    pub fn f(&self) -> u32 {
        self.f
    }

    /// Boundary circles made only of special exceptional orbits.
    pub fn t(&self) -> u32 {
        self.t
    }

    /// Exceptional orbits, sorted lexicographically.
    pub fn exceptional(&self) -> &[SeifertPair] {
        &self.exceptional
    }

    /// Number of exceptional orbits.
    pub fn n(&self) -> usize {
        self.exceptional.len()
    }

    /// Singular-point counts per mixed boundary circle, sorted ascending.
    pub fn singular(&self) -> &[i64] {
        &self.singular
    }

    /// Number of boundary circles carrying topologically singular points.
    pub fn s(&self) -> usize {
        self.singular.len()
    }

    /// True when the orbit space has at least one boundary circle.
    pub fn has_boundary(&self) -> bool {
        self.f > 0 || self.t > 0 || !self.singular.is_empty()
    }

    /// Total number `2r` of topologically singular points.
    pub fn singular_point_count(&self) -> i64 {
        self.singular.iter().sum()
    }

    pub fn with_b(mut self, b: i64) -> Self {
        self.b = b;
        self
    }

    pub fn with_surface(mut self, surface: BaseSurface) -> Self {
        self.surface = surface;
        self
    }

    pub fn with_boundary(mut self, f: u32, t: u32) -> Self {
        self.f = f;
        self.t = t;
        self
    }

    pub fn with_exceptional(mut self, pairs: impl IntoIterator<Item = SeifertPair>) -> Self {
        self.exceptional = pairs.into_iter().collect();
        self.exceptional.sort_unstable();
        self
    }

    pub fn with_singular(mut self, singular: impl IntoIterator<Item = i64>) -> Self {
        self.singular = singular.into_iter().collect();
        self.singular.sort_unstable();
        self
    }

    pub fn to_json(&self) -> TupleJson {
        TupleJson::from(self)
    }
}

/// Returns `2r`, the number of topologically singular points.
pub fn singular_point_count(t: &InvariantTuple) -> i64 {
    t.singular_point_count()
}

/// Serialize in the tuple grammar.
pub fn serialize_tuple(t: &InvariantTuple) -> String {
    t.to_string()
}

// Total order used for canonical representatives and catalog ordering:
// (ε, g, f, t, s, singular, n, pairs, b).
impl Ord for InvariantTuple {
    fn cmp(&self, other: &Self) -> Ordering {
        self.surface
            .epsilon
            .cmp(&other.surface.epsilon)
            .then(self.surface.genus.cmp(&other.surface.genus))
            .then(self.f.cmp(&other.f))
            .then(self.t.cmp(&other.t))
            .then(self.singular.len().cmp(&other.singular.len()))
            .then_with(|| self.singular.cmp(&other.singular))
            .then(self.exceptional.len().cmp(&other.exceptional.len()))
            .then_with(|| self.exceptional.cmp(&other.exceptional))
            .then(self.b.cmp(&other.b))
    }
}

impl PartialOrd for InvariantTuple {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for InvariantTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({};({},{},{},{});[",
            self.b,
            self.surface.epsilon.symbol(),
            self.surface.genus,
            self.f,
            self.t
        )?;
        for (i, pair) in self.exceptional.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{pair}")?;
        }
        f.write_str("];[")?;
        for (i, r) in self.singular.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{r}")?;
        }
        f.write_str("])")
    }
}

impl FromStr for InvariantTuple {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_tuple(s)
    }
}

/// JSON object form of a tuple.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TupleJson {
    pub b: i64,
    pub eps: Epsilon,
    pub g: u32,
    pub f: u32,
    pub t: u32,
    pub pairs: Vec<[i64; 2]>,
    pub singular: Vec<i64>,
}

impl From<&InvariantTuple> for TupleJson {
    fn from(t: &InvariantTuple) -> Self {
        TupleJson {
            b: t.b,
            eps: t.surface.epsilon,
            g: t.surface.genus,
            f: t.f,
            t: t.t,
            pairs: t.exceptional.iter().map(|p| [p.alpha, p.beta]).collect(),
            singular: t.singular.clone(),
        }
    }
}

impl From<TupleJson> for InvariantTuple {
    fn from(j: TupleJson) -> Self {
        InvariantTuple::new(
            j.b,
            BaseSurface {
                epsilon: j.eps,
                genus: j.g,
            },
            j.f,
            j.t,
            j.pairs.into_iter().map(|[a, b]| SeifertPair::new(a, b)),
            j.singular,
        )
    }
}

impl Serialize for InvariantTuple {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        TupleJson::from(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for InvariantTuple {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        TupleJson::deserialize(deserializer).map(InvariantTuple::from)
    }
}
