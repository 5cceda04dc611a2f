//! Smith normal form over the integers.
//!
//! Elimination with the smallest nonzero entry as pivot. Row operations are
//! mirrored into `U` and column operations into `V`, so `U·A·V = S` holds by
//! construction.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::IntegerMatrix;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnfResult {
    pub u: IntegerMatrix,
    pub s: IntegerMatrix,
    pub v: IntegerMatrix,
}

impl SnfResult {
    /// Nonzero diagonal entries of `S`, in divisibility order.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        diagonal(&self.s)
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

pub fn smith_normal_form(a: &IntegerMatrix) -> SnfResult {
    let mut s = a.clone();
    let mut u = IntegerMatrix::identity(a.rows());
    let mut v = IntegerMatrix::identity(a.cols());
    reduce(&mut s, Some(&mut u), Some(&mut v));
    SnfResult { u, s, v }
}

/// Invariant factors of `a` without tracking the transforms.
pub fn invariant_factors(a: &IntegerMatrix) -> Vec<BigInt> {
    let mut s = a.clone();
    reduce(&mut s, None, None);
    diagonal(&s)
}

fn diagonal(s: &IntegerMatrix) -> Vec<BigInt> {
    (0..s.rows().min(s.cols()))
        .map(|i| s.get(i, i).clone())
        .take_while(|d| !d.is_zero())
        .collect()
}

fn min_abs_in_block(a: &IntegerMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for r in t..a.rows() {
        for c in t..a.cols() {
            let x = a.get(r, c);
            if x.is_zero() {
                continue;
            }
            if best.is_none_or(|(br, bc)| x.magnitude() < a.get(br, bc).magnitude()) {
                best = Some((r, c));
                if x.magnitude().is_one() {
                    return best;
                }
            }
        }
    }
    best
}

// Smallest nonzero entry in row t or column t, from (t, t) on.
fn min_abs_in_cross(a: &IntegerMatrix, t: usize) -> (usize, usize) {
    let mut best = (t, t);
    let mut best_abs = a.get(t, t).magnitude();
    let mut consider = |r: usize, c: usize, best: &mut (usize, usize)| {
        let x = a.get(r, c);
        if !x.is_zero() && (best_abs.is_zero() || x.magnitude() < best_abs) {
            best_abs = x.magnitude();
            *best = (r, c);
        }
    };
    for r in t..a.rows() {
        consider(r, t, &mut best);
    }
    for c in t..a.cols() {
        consider(t, c, &mut best);
    }
    best
}

fn move_to_pivot(
    a: &mut IntegerMatrix,
    u: &mut Option<&mut IntegerMatrix>,
    v: &mut Option<&mut IntegerMatrix>,
    t: usize,
    (r, c): (usize, usize),
) {
    if r != t {
        a.swap_rows(t, r);
        if let Some(u) = u.as_deref_mut() {
            u.swap_rows(t, r);
        }
    }
    if c != t {
        a.swap_cols(t, c);
        if let Some(v) = v.as_deref_mut() {
            v.swap_cols(t, c);
        }
    }
}

fn reduce(a: &mut IntegerMatrix, mut u: Option<&mut IntegerMatrix>, mut v: Option<&mut IntegerMatrix>) {
    let (rows, cols) = (a.rows(), a.cols());
    for t in 0..rows.min(cols) {
        let Some(pos) = min_abs_in_block(a, t) else {
            return;
        };
        move_to_pivot(a, &mut u, &mut v, t, pos);

        loop {
            let mut dirty = false;
            for r in t + 1..rows {
                if a.get(r, t).is_zero() {
                    continue;
                }
                let q = -(a.get(r, t) / a.get(t, t));
                if !q.is_zero() {
                    a.add_row_multiple(r, t, &q, t);
                    if let Some(u) = u.as_deref_mut() {
                        u.add_row_multiple(r, t, &q, 0);
                    }
                }
                dirty |= !a.get(r, t).is_zero();
            }
            for c in t + 1..cols {
                if a.get(t, c).is_zero() {
                    continue;
                }
                let q = -(a.get(t, c) / a.get(t, t));
                if !q.is_zero() {
                    a.add_col_multiple(c, t, &q, t);
                    if let Some(v) = v.as_deref_mut() {
                        v.add_col_multiple(c, t, &q, 0);
                    }
                }
                dirty |= !a.get(t, c).is_zero();
            }
            if dirty {
                let pos = min_abs_in_cross(a, t);
                move_to_pivot(a, &mut u, &mut v, t, pos);
                continue;
            }

            // Row and column are clear; the pivot must divide the rest.
            let pivot = a.get(t, t).clone();
            let offender = if pivot.magnitude().is_one() {
                None
            } else {
                (t + 1..rows).find(|&r| (t + 1..cols).any(|c| !a.get(r, c).is_multiple_of(&pivot)))
            };
            match offender {
                Some(r) => {
                    let one = BigInt::from(1);
                    a.add_row_multiple(t, r, &one, t);
                    if let Some(u) = u.as_deref_mut() {
                        u.add_row_multiple(t, r, &one, 0);
                    }
                }
                None => break,
            }
        }

        if a.get(t, t).is_negative() {
            a.negate_row(t);
            if let Some(u) = u.as_deref_mut() {
                u.negate_row(t);
            }
        }
    }
}
