//! Counting and enumerating inequivalent actions.

use std::collections::BTreeSet;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::equivalence::{CanonicalTuple, MoveSet};
use crate::invariants::{BaseSurface, InvariantTuple, SeifertPair};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CensusError {
    #[error("need r ≥ s ≥ 1, got r={r}, s={s}")]
    Domain { r: u64, s: u64 },
    #[error("count overflows 128 bits")]
    Overflow,
    #[error("max_alpha must be ≥ 2 when max_pairs > 0")]
    InvalidBound,
}

/// Upper bounds on every component of a tuple. `max_r` bounds the total
/// number of singular points by `2 * max_r`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexityBound {
    pub max_genus: u32,
    pub max_f: u32,
    pub max_t: u32,
    pub max_s: u32,
    pub max_alpha: i64,
    pub max_pairs: u32,
    pub max_b_abs: i64,
    pub max_r: u32,
}

impl ComplexityBound {
    pub fn check(&self) -> Result<(), CensusError> {
        if self.max_pairs > 0 && self.max_alpha < 2 {
            return Err(CensusError::InvalidBound);
        }
        if self.max_b_abs < 0 || self.max_alpha < 0 {
            return Err(CensusError::InvalidBound);
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CountReport {
    #[serde(skip)]
    pub r: u64,
    #[serde(skip)]
    pub s: u64,
    pub paper_count: u128,
    pub enumerated_count: u128,
    pub agree: bool,
}

fn check_domain(r: u64, s: u64) -> Result<(), CensusError> {
    if s < 1 || s > r {
        return Err(CensusError::Domain { r, s });
    }
    Ok(())
}

/// `binomial(r, s)`: the count of inequivalent actions per action on the
/// manifold part, as stated for mixed boundary arrangements.
pub fn count_actions_paper(r: u64, s: u64) -> Result<u128, CensusError> {
    check_domain(r, s)?;
    let k = s.min(r - s) as u128;
    let r = r as u128;
    let mut c: u128 = 1;
    for i in 0..k {
        // c * (r - i) is divisible by i + 1 at every step.
        c = c.checked_mul(r - i).ok_or(CensusError::Overflow)? / (i + 1);
    }
    Ok(c)
}

/// Number of unordered `s`-tuples of even positive integers summing to `2r`,
/// counted by listing them.
pub fn count_actions_enumerated(r: u64, s: u64) -> Result<u128, CensusError> {
    check_domain(r, s)?;
    let mut count = 0u128;
    for_each_even_multiset(2 * r, s, &mut |_| count += 1);
    Ok(count)
}

pub fn compare_counts(r: u64, s: u64) -> Result<CountReport, CensusError> {
    let paper_count = count_actions_paper(r, s)?;
    let enumerated_count = count_actions_enumerated(r, s)?;
    Ok(CountReport {
        r,
        s,
        paper_count,
        enumerated_count,
        agree: paper_count == enumerated_count,
    })
}

/// Calls `visit` with every nondecreasing list of `len` even integers ≥ 2
/// summing to `total`.
pub fn for_each_even_multiset(total: u64, len: u64, visit: &mut impl FnMut(&[u64])) {
    fn go(remaining: u64, left: u64, min: u64, buf: &mut Vec<u64>, visit: &mut impl FnMut(&[u64])) {
        if left == 0 {
            if remaining == 0 {
                visit(buf);
            }
            return;
        }
        let mut part = min;
        while part * left <= remaining {
            buf.push(part);
            go(remaining - part, left - 1, part, buf, visit);
            buf.pop();
            part += 2;
        }
    }
    go(total, len, 2, &mut Vec::new(), visit);
}

/// Every valid tuple within `bound`, in tuple order. No deduplication.
pub fn valid_tuples(bound: &ComplexityBound) -> Result<Vec<InvariantTuple>, CensusError> {
    bound.check()?;
    let mut out = Vec::new();
    generate(bound, false, &mut |t| out.push(t));
    out.sort();
    Ok(out)
}

/// One canonical representative per equivalence class meeting `bound`,
/// in ascending tuple order.
///
/// Representatives are canonical forms, so under orientation reversal a
/// representative's `b` may fall outside `max_b_abs` when its class still
/// meets the bound.
pub fn enumerate_census(
    bound: &ComplexityBound,
    moves: &MoveSet,
) -> Result<impl Iterator<Item = CanonicalTuple>, CensusError> {
    bound.check()?;
    let mut classes = BTreeSet::new();
    generate(bound, true, &mut |t| {
        classes.insert(moves.canonical_form(&t));
    });
    Ok(classes.into_iter())
}

fn surfaces(max_genus: u32) -> Vec<BaseSurface> {
    let mut out: Vec<_> = (0..=max_genus).map(BaseSurface::orientable).collect();
    out.extend((1..=max_genus).map(BaseSurface::nonorientable));
    out
}

fn pair_candidates(max_alpha: i64, reduced: bool) -> Vec<SeifertPair> {
    let mut out = Vec::new();
    for alpha in 2..=max_alpha {
        for beta in 1..alpha {
            if alpha.gcd(&beta) == 1 && (!reduced || beta <= alpha - beta) {
                out.push(SeifertPair::new(alpha, beta));
            }
        }
    }
    out
}

fn multisets<T: Clone>(items: &[T], max_len: usize) -> Vec<Vec<T>> {
    fn go<T: Clone>(items: &[T], start: usize, left: usize, buf: &mut Vec<T>, out: &mut Vec<Vec<T>>) {
        out.push(buf.clone());
        if left == 0 {
            return;
        }
        for i in start..items.len() {
            buf.push(items[i].clone());
            go(items, i, left - 1, buf, out);
            buf.pop();
        }
    }
    let mut out = Vec::new();
    go(items, 0, max_len, &mut Vec::new(), &mut out);
    out
}

fn singular_lists(max_s: u32, max_r: u32) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for total in 0..=u64::from(max_r) {
        for len in 0..=u64::from(max_s) {
            if len == 0 {
                if total == 0 {
                    out.push(Vec::new());
                }
                continue;
            }
            for_each_even_multiset(2 * total, len, &mut |rs| {
                out.push(rs.iter().map(|&r| r as i64).collect())
            });
        }
    }
    out
}

// With `reduced`, pairs in cells where β-reflection is enabled by boundary
// are restricted to β ≤ α − β, which already picks one member per class.
fn generate(bound: &ComplexityBound, reduced: bool, emit: &mut impl FnMut(InvariantTuple)) {
    let full_pairs = multisets(&pair_candidates(bound.max_alpha, false), bound.max_pairs as usize);
    let reduced_pairs = multisets(&pair_candidates(bound.max_alpha, true), bound.max_pairs as usize);
    let singulars = singular_lists(bound.max_s, bound.max_r);
    for surface in surfaces(bound.max_genus) {
        for f in 0..=bound.max_f {
            for t in 0..=bound.max_t {
                for rs in &singulars {
                    let boundary = f > 0 || t > 0 || !rs.is_empty();
                    let pair_lists = if reduced && boundary {
                        &reduced_pairs
                    } else {
                        &full_pairs
                    };
                    let bs = if boundary {
                        0..=0
                    } else {
                        -bound.max_b_abs..=bound.max_b_abs
                    };
                    for pairs in pair_lists {
                        for b in bs.clone() {
                            emit(InvariantTuple::new(b, surface, f, t, pairs.clone(), rs.clone()));
                        }
                    }
                }
            }
        }
    }
}
