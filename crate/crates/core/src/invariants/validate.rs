use num_integer::Integer;
use serde::Serialize;

use super::{Epsilon, InvariantTuple};

/// Identifies which legality rule a violation breaks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Rule {
    #[serde(rename = "pair.alpha")]
    PairAlpha,
    #[serde(rename = "pair.beta_range")]
    PairBetaRange,
    #[serde(rename = "pair.coprime")]
    PairCoprime,
    #[serde(rename = "singular.even")]
    SingularEven,
    #[serde(rename = "singular.positive")]
    SingularPositive,
    #[serde(rename = "surface.genus")]
    NonorientableGenus,
    #[serde(rename = "b.boundary")]
    BoundaryObstruction,
}

impl Rule {
    pub fn id(self) -> &'static str {
        match self {
            Rule::PairAlpha => "pair.alpha",
            Rule::PairBetaRange => "pair.beta_range",
            Rule::PairCoprime => "pair.coprime",
            Rule::SingularEven => "singular.even",
            Rule::SingularPositive => "singular.positive",
            Rule::NonorientableGenus => "surface.genus",
            Rule::BoundaryObstruction => "b.boundary",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub rule: Rule,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub ok: bool,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn has(&self, rule: Rule) -> bool {
        self.violations.iter().any(|v| v.rule == rule)
    }
}

/// Checks every legality rule and reports all violations found.
pub fn validate(t: &InvariantTuple) -> ValidationReport {
    let mut violations = Vec::new();
    let mut push = |rule: Rule, message: String| violations.push(Violation { rule, message });

    if t.epsilon() == Epsilon::Nonorientable && t.genus() < 1 {
        push(
            Rule::NonorientableGenus,
            "nonorientable orbit space needs genus ≥ 1 (cross-caps)".into(),
        );
    }

    for pair in t.exceptional() {
        if pair.alpha < 2 {
            push(Rule::PairAlpha, format!("α ≥ 2 required, got {pair}"));
        }
        if !(0 < pair.beta && pair.beta < pair.alpha) {
            push(Rule::PairBetaRange, format!("0 < β < α required, got {pair}"));
        }
        if pair.alpha.gcd(&pair.beta) != 1 {
            push(Rule::PairCoprime, format!("gcd(α,β)=1 required, got {pair}"));
        }
    }

    for &r in t.singular() {
        if r % 2 != 0 {
            push(Rule::SingularEven, format!("r_i must be even, got {r}"));
        }
        if r < 2 {
            push(Rule::SingularPositive, format!("r_i must be positive, got {r}"));
        }
    }

    if t.has_boundary() && t.b() != 0 {
        push(
            Rule::BoundaryObstruction,
            format!("b=0 required when boundary present, got b={}", t.b()),
        );
    }

    ValidationReport {
        ok: violations.is_empty(),
        violations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::{BaseSurface, SeifertPair};
    use proptest::prelude::*;

    fn report(s: &str) -> ValidationReport {
        validate(&s.parse().unwrap())
    }

    #[test]
    fn odd_singular_entry() {
        let r = report("(0;(o,0,0,0);[];[3])");
        assert!(!r.ok);
        assert!(r.has(Rule::SingularEven));
        assert!(r.violations[0].message.contains("r_i must be even"));
    }

    #[test]
    fn non_coprime_pair() {
        let r = report("(0;(o,0,0,0);[(4,2)];[])");
        assert!(r.has(Rule::PairCoprime));
        assert!(!r.has(Rule::PairBetaRange));
    }

    #[test]
    fn b_with_boundary() {
        let r = report("(1;(o,0,1,0);[];[])");
        assert_eq!(r.violations.len(), 1);
        assert!(r.has(Rule::BoundaryObstruction));
        assert!(r.violations[0].message.contains("b=0 required when boundary present"));
    }

    #[test]
    fn reports_every_violation() {
        let r = report("(2;(n,0,0,0);[(1,0),(6,9)];[0,3])");
        for rule in [
            Rule::NonorientableGenus,
            Rule::PairAlpha,
            Rule::PairBetaRange,
            Rule::PairCoprime,
            Rule::SingularEven,
            Rule::SingularPositive,
            Rule::BoundaryObstruction,
        ] {
            assert!(r.has(rule), "missing {rule:?}");
        }
    }

    #[test]
    fn manifolds_are_legal() {
        assert!(report("(0;(o,0,0,0);[];[])").ok);
        assert!(report("(-7;(o,3,0,0);[(3,1),(7,4)];[])").ok);
        assert!(report("(5;(n,2,0,0);[(2,1)];[])").ok);
        assert!(report("(0;(n,1,1,2);[(2,1),(5,2)];[4,2])").ok);
    }

    fn arb_valid() -> impl Strategy<Value = InvariantTuple> {
        (
            -9i64..9,
            any::<bool>(),
            0u32..3,
            0u32..2,
            0u32..2,
            prop::collection::vec((2i64..12, 1i64..12), 0..3),
            prop::collection::vec(1i64..4, 0..3),
        )
            .prop_map(|(b, o, g, f, t, raw, rs)| {
                let pairs: Vec<_> = raw
                    .into_iter()
                    .map(|(a, b)| (a, 1 + (b - 1) % (a - 1)))
                    .filter(|&(a, b)| a.gcd(&b) == 1)
                    .map(|(a, b)| SeifertPair::new(a, b))
                    .collect();
                let surface = if o {
                    BaseSurface::orientable(g)
                } else {
                    BaseSurface::nonorientable(g + 1)
                };
                let singular: Vec<i64> = rs.into_iter().map(|r| 2 * r).collect();
                let b = if f + t > 0 || !singular.is_empty() { 0 } else { b };
                InvariantTuple::new(b, surface, f, t, pairs, singular)
            })
    }

    proptest! {
        #[test]
        fn generated_tuples_are_valid(t in arb_valid()) {
            prop_assert!(validate(&t).ok);
            prop_assert_eq!(t.singular_point_count() % 2, 0);
        }

        #[test]
        fn single_mutation_is_caught(t in arb_valid(), which in 0usize..5, k in 1i64..5) {
            let (mutated, rule) = match which {
                0 => (t.clone().with_singular(t.singular().iter().copied().chain([2 * k + 1])), Rule::SingularEven),
                1 => (t.clone().with_exceptional(t.exceptional().iter().copied().chain([SeifertPair::new(2 * k + 2, 2)])), Rule::PairCoprime),
                2 => (t.clone().with_exceptional(t.exceptional().iter().copied().chain([SeifertPair::new(k + 1, k + 1)])), Rule::PairBetaRange),
                3 => (t.clone().with_boundary(t.f() + 1, t.t()).with_b(k), Rule::BoundaryObstruction),
                _ => (t.clone().with_surface(BaseSurface::nonorientable(0)), Rule::NonorientableGenus),
            };
            let r = validate(&mutated);
            prop_assert!(!r.ok);
            prop_assert!(r.has(rule));
        }
    }
}
