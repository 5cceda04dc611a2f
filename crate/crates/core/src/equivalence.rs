//! Weak-equivariant equivalence of invariant tuples.
//!
//! Two tuples are equivalent when one can be carried to the other by the move
//! system: multiset permutation (implicit in sorted storage), orientation
//! reversal of an orientable orbit space, and the reflection `β ↦ α − β` of a
//! single exceptional pair. Reflection is enabled when the orbit space has
//! boundary (`f + t + s > 0`) or is nonorientable.
//!
//! [`canonical_form`] computes the minimum of a move class directly;
//! [`closure_oracle_equivalent`] walks the moves breadth-first and exists to
//! check the former.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::invariants::{Epsilon, InvariantTuple, SeifertPair};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MoveError {
    #[error("orientation reversal needs an orientable orbit space")]
    Nonorientable,
    #[error("orientation reversal is disabled in oriented mode")]
    Oriented,
    #[error("β-reflection not enabled: needs f + t + s > 0 or a nonorientable orbit space")]
    ReflectionNotEnabled,
    #[error("pair index {index} out of range for {n} exceptional pairs")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("b overflows under orientation reversal")]
    Overflow,
}

/// A single move of the equivalence system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Move {
    OrientationReversal,
    /// Reflect the pair at this index of the sorted pair list.
    BetaReflection(usize),
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::OrientationReversal => f.write_str("orientation_reversal"),
            Move::BetaReflection(i) => write!(f, "beta_reflection[{i}]"),
        }
    }
}

/// Which moves generate the equivalence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MoveSet {
    /// Allow orientation reversal on orientable orbit spaces. Off in oriented mode.
    pub orientation_reversal: bool,
    /// Allow β-reflection on closed nonorientable orbit spaces (`ε = n`, `f = t = s = 0`).
    pub reflect_closed_nonorientable: bool,
}

impl Default for MoveSet {
    fn default() -> Self {
        MoveSet {
            orientation_reversal: true,
            reflect_closed_nonorientable: true,
        }
    }
}

impl MoveSet {
    /// Oriented classification: orbit-space isomorphisms must preserve orientation.
    pub fn oriented() -> Self {
        MoveSet {
            orientation_reversal: false,
            ..MoveSet::default()
        }
    }

    pub fn reflection_enabled(&self, t: &InvariantTuple) -> bool {
        t.has_boundary() || (t.epsilon() == Epsilon::Nonorientable && self.reflect_closed_nonorientable)
    }

    pub fn reversal_enabled(&self, t: &InvariantTuple) -> bool {
        self.orientation_reversal && t.epsilon() == Epsilon::Orientable
    }

    /// Every move applicable to `t`.
    pub fn moves(&self, t: &InvariantTuple) -> Vec<Move> {
        let mut out = Vec::new();
        if self.reversal_enabled(t) {
            out.push(Move::OrientationReversal);
        }
        if self.reflection_enabled(t) {
            out.extend((0..t.n()).map(Move::BetaReflection));
        }
        out
    }

    pub fn apply(&self, t: &InvariantTuple, mv: Move) -> Result<InvariantTuple, MoveError> {
        match mv {
            Move::OrientationReversal => {
                if !self.orientation_reversal {
                    return Err(MoveError::Oriented);
                }
                apply_orientation_reversal(t)
            }
            Move::BetaReflection(index) => {
                if !self.reflection_enabled(t) {
                    return Err(MoveError::ReflectionNotEnabled);
                }
                reflect_pair(t, index)
            }
        }
    }

    /// Minimum of the move class of `t` under the tuple order.
    pub fn canonical_form(&self, t: &InvariantTuple) -> CanonicalTuple {
        if self.reflection_enabled(t) {
            // Pairs reflect independently; the pointwise minimum of each pair
            // gives the smallest sorted pair list.
            let pairs = t
                .exceptional()
                .iter()
                .map(|p| if p.alpha - p.beta < p.beta { p.reflected() } else { *p });
            return CanonicalTuple(t.clone().with_exceptional(pairs));
        }
        if self.reversal_enabled(t) {
            if let Ok(rev) = apply_orientation_reversal(t) {
                return CanonicalTuple(rev.min(t.clone()));
            }
        }
        CanonicalTuple(t.clone())
    }

    pub fn are_equivalent(&self, a: &InvariantTuple, b: &InvariantTuple) -> bool {
        self.canonical_form(a) == self.canonical_form(b)
    }

    /// All tuples reachable from `t` by at most `depth` moves.
    pub fn closure(&self, t: &InvariantTuple, depth: usize) -> BTreeSet<InvariantTuple> {
        let mut seen = BTreeSet::from([t.clone()]);
        let mut frontier = vec![t.clone()];
        for _ in 0..depth {
            let mut next = Vec::new();
            for cur in &frontier {
                for mv in self.moves(cur) {
                    if let Ok(out) = self.apply(cur, mv) {
                        if seen.insert(out.clone()) {
                            next.push(out);
                        }
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            frontier = next;
        }
        seen
    }

    pub fn closure_oracle_equivalent(&self, a: &InvariantTuple, b: &InvariantTuple, depth: usize) -> bool {
        self.closure(a, depth).contains(b)
    }

    /// The moves that carry `t` to its canonical form.
    pub fn trace_to_canonical(&self, t: &InvariantTuple) -> MoveTrace {
        let mut steps = Vec::new();
        let mut cur = t.clone();
        if self.reflection_enabled(&cur) {
            while let Some(i) = cur.exceptional().iter().position(|p| p.alpha - p.beta < p.beta) {
                let next = reflect_pair(&cur, i).expect("index from position");
                steps.push(MoveStep {
                    mv: Move::BetaReflection(i),
                    before: cur,
                    after: next.clone(),
                });
                cur = next;
            }
        } else if self.reversal_enabled(&cur) {
            if let Ok(rev) = apply_orientation_reversal(&cur) {
                if rev < cur {
                    steps.push(MoveStep {
                        mv: Move::OrientationReversal,
                        before: cur,
                        after: rev,
                    });
                }
            }
        }
        MoveTrace { steps }
    }
}

/// A tuple that is the minimum of its move class.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalTuple(InvariantTuple);

impl CanonicalTuple {
    pub fn inner(&self) -> &InvariantTuple {
        &self.0
    }

    pub fn into_inner(self) -> InvariantTuple {
        self.0
    }
}

impl fmt::Display for CanonicalTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl Serialize for CanonicalTuple {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MoveStep {
    pub mv: Move,
    pub before: InvariantTuple,
    pub after: InvariantTuple,
}

impl Serialize for MoveStep {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("MoveStep", 3)?;
        st.serialize_field("move", &self.mv.to_string())?;
        st.serialize_field("before", &self.before.to_string())?;
        st.serialize_field("after", &self.after.to_string())?;
        st.end()
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct MoveTrace {
    pub steps: Vec<MoveStep>,
}

/// `(b; (o,g,f,t); {(α, β)}; rs) ↦ (−b − n; (o,g,f,t); {(α, α − β)}; rs)`.
///
/// With boundary present `b` is pinned to zero, so only the pairs change.
pub fn apply_orientation_reversal(t: &InvariantTuple) -> Result<InvariantTuple, MoveError> {
    if t.epsilon() != Epsilon::Orientable {
        return Err(MoveError::Nonorientable);
    }
    let b = if t.has_boundary() {
        t.b()
    } else {
        let n = i64::try_from(t.n()).map_err(|_| MoveError::Overflow)?;
        t.b()
            .checked_neg()
            .and_then(|nb| nb.checked_sub(n))
            .ok_or(MoveError::Overflow)?
    };
    let pairs: Vec<SeifertPair> = t.exceptional().iter().map(|p| p.reflected()).collect();
    Ok(t.clone().with_b(b).with_exceptional(pairs))
}

/// Reflect one pair under the default gate.
pub fn apply_beta_reflection(t: &InvariantTuple, index: usize) -> Result<InvariantTuple, MoveError> {
    MoveSet::default().apply(t, Move::BetaReflection(index))
}

fn reflect_pair(t: &InvariantTuple, index: usize) -> Result<InvariantTuple, MoveError> {
    let n = t.n();
    if index >= n {
        return Err(MoveError::IndexOutOfRange { index, n });
    }
    let mut pairs = t.exceptional().to_vec();
    pairs[index] = pairs[index].reflected();
    Ok(t.clone().with_exceptional(pairs))
}

pub fn canonical_form(t: &InvariantTuple) -> CanonicalTuple {
    MoveSet::default().canonical_form(t)
}

pub fn are_equivalent(a: &InvariantTuple, b: &InvariantTuple) -> bool {
    MoveSet::default().are_equivalent(a, b)
}

pub fn closure_oracle_equivalent(a: &InvariantTuple, b: &InvariantTuple, depth: usize) -> bool {
    MoveSet::default().closure_oracle_equivalent(a, b, depth)
}
