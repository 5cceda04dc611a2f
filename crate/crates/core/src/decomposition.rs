//! Splitting `X ≅ M # r·Susp(ℝP²)`.
//!
//! The manifold part `M` carries the tuple `(b; (ε, g, f + s, t); pairs)`:
//! every mixed boundary circle becomes a fixed circle once its suspension
//! summands are split off.

use serde::Serialize;

use crate::equivalence::canonical_form;
use crate::invariants::InvariantTuple;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    #[serde(rename = "manifold")]
    pub manifold_tuple: InvariantTuple,
    #[serde(rename = "r")]
    pub suspension_count: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum NameSource {
    PaperExample,
    CuratedTable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpaceName {
    pub name: String,
    pub source: NameSource,
}

pub fn decompose(t: &InvariantTuple) -> Decomposition {
    if t.s() == 0 {
        return Decomposition {
            manifold_tuple: t.clone(),
            suspension_count: 0,
        };
    }
    let s = u32::try_from(t.s()).expect("fewer than 2^32 boundary circles");
    let manifold_tuple = t.clone().with_boundary(t.f() + s, t.t()).with_singular([]);
    let r = t.singular_point_count() / 2;
    Decomposition {
        manifold_tuple,
        suspension_count: r as u64,
    }
}

/// True when `X` has topologically singular points, which rules out
/// asphericity. `false` means only that this criterion says nothing.
pub fn asphericity_obstructed(t: &InvariantTuple) -> bool {
    !t.singular().is_empty()
}

struct CuratedEntry {
    tuple: &'static str,
    name: &'static str,
    source: NameSource,
}

// Each entry is cross-checked against an explicit triangulation in the
// homology tests (S³ as ∂Δ⁴, S²×S¹ as a product triangulation).
const CURATED: &[CuratedEntry] = &[
    CuratedEntry {
        tuple: "(0;(o,0,0,0);[];[])",
        name: "S^2 × S^1",
        source: NameSource::CuratedTable,
    },
    CuratedEntry {
        tuple: "(1;(o,0,0,0);[];[])",
        name: "S^3",
        source: NameSource::CuratedTable,
    },
    CuratedEntry {
        tuple: "(0;(o,0,1,0);[];[])",
        name: "S^3",
        source: NameSource::CuratedTable,
    },
    CuratedEntry {
        tuple: "(0;(o,0,2,0);[];[])",
        name: "S^2 × S^1",
        source: NameSource::PaperExample,
    },
];

/// The curated manifold tuples with their names, for cross-checking.
pub fn curated_entries() -> Vec<(InvariantTuple, &'static str)> {
    CURATED
        .iter()
        .map(|e| (e.tuple.parse().expect("static table"), e.name))
        .collect()
}

/// Looks up the manifold part in the curated table; the label is
/// `"<M> # r·Susp(RP^2)"`, or just `"<M>"` when `r = 0`.
pub fn name_lookup(d: &Decomposition) -> Option<SpaceName> {
    let key = canonical_form(&d.manifold_tuple);
    let entry = CURATED
        .iter()
        .find(|e| canonical_form(&e.tuple.parse().expect("static table")) == key)?;
    let name = match d.suspension_count {
        0 => entry.name.to_string(),
        r => format!("{} # {r}·Susp(RP^2)", entry.name),
    };
    Some(SpaceName {
        name,
        source: entry.source,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equivalence::are_equivalent;

    fn tuple(s: &str) -> InvariantTuple {
        s.parse().unwrap()
    }

    #[test]
    fn two_mixed_circles() {
        let d = decompose(&tuple("(0;(o,0,0,0);[];[2,2])"));
        assert_eq!(d.manifold_tuple, tuple("(0;(o,0,2,0);[];[])"));
        assert_eq!(d.suspension_count, 2);
    }

    #[test]
    fn manifold_is_fixed() {
        let t = tuple("(1;(o,0,0,0);[(3,1)];[])");
        let d = decompose(&t);
        assert_eq!(d.manifold_tuple, t);
        assert_eq!(d.suspension_count, 0);
        assert_eq!(decompose(&d.manifold_tuple), d);
    }

    #[test]
    fn one_circle_with_four_points() {
        let d = decompose(&tuple("(0;(o,0,0,0);[];[4])"));
        assert_eq!(d.manifold_tuple, tuple("(0;(o,0,1,0);[];[])"));
        assert_eq!(d.suspension_count, 2);
    }

    #[test]
    fn keeps_pairs_and_other_boundary() {
        let d = decompose(&tuple("(0;(n,2,1,3);[(3,1),(5,2)];[2,4,6])"));
        assert_eq!(d.manifold_tuple, tuple("(0;(n,2,4,3);[(3,1),(5,2)];[])"));
        assert_eq!(d.suspension_count, 6);
    }

    #[test]
    fn asphericity() {
        assert!(asphericity_obstructed(&tuple("(0;(o,0,0,0);[];[2])")));
        assert!(!asphericity_obstructed(&tuple("(0;(o,1,0,0);[];[])")));
        assert!(asphericity_obstructed(&tuple("(0;(o,0,0,0);[];[2,2,4])")));
    }

    #[test]
    fn names() {
        let d = decompose(&tuple("(0;(o,0,0,0);[];[2,2])"));
        let n = name_lookup(&d).unwrap();
        assert_eq!(n.name, "S^2 × S^1 # 2·Susp(RP^2)");
        assert_eq!(n.source, NameSource::PaperExample);

        assert_eq!(name_lookup(&decompose(&tuple("(0;(o,3,0,0);[(3,1)];[])"))), None);

        let n = name_lookup(&decompose(&tuple("(0;(o,0,1,0);[];[])"))).unwrap();
        assert_eq!(n.name, "S^3");
        // Matched up to equivalence.
        let n = name_lookup(&decompose(&tuple("(-1;(o,0,0,0);[];[])"))).unwrap();
        assert_eq!(n.name, "S^3");
    }

    #[test]
    fn curated_entries_are_distinct_classes() {
        let entries = curated_entries();
        for (i, (a, _)) in entries.iter().enumerate() {
            for (b, _) in &entries[i + 1..] {
                assert!(!are_equivalent(a, b));
            }
        }
    }

    #[test]
    fn json_shape() {
        let d = decompose(&tuple("(0;(o,0,0,0);[];[2,2])"));
        assert_eq!(
            serde_json::to_string(&d).unwrap(),
            r#"{"manifold":{"b":0,"eps":"o","g":0,"f":2,"t":0,"pairs":[],"singular":[]},"r":2}"#
        );
    }
}
