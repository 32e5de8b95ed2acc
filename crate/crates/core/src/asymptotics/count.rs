//! Lattice-point counts of quotients of monomial ideals.

use std::fmt;


use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;

/// Largest box (in lattice points) `count_quotient` will enumerate.
const MAX_BOX_POINTS: u128 = 200_000_000;

/// A length, or the marker for a quotient of infinite length.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LengthValue {
    Finite(u64),
    Infinite,
}

impl LengthValue {
    pub fn finite(self) -> Option<u64> {
        match self {
            LengthValue::Finite(v) => Some(v),
            LengthValue::Infinite => None,
        }
    }
}

impl fmt::Display for LengthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LengthValue::Finite(v) => write!(f, "{v}"),
            LengthValue::Infinite => write!(f, "INF"),
        }
    }
}

/// `#{a : X^a ∈ S, X^a ∉ I}` for `I ⊆ S`.
///
/// Both memberships are unchanged by raising a coordinate that already sits at
/// the largest exponent `B_i` appearing among the generators, so the count is
/// infinite exactly when some point of `S \ I` in the box `∏ [0, B_i]` touches
/// the face `a_i = B_i`.
pub fn count_quotient(larger: &MonomialIdeal, smaller: &MonomialIdeal) -> Result<LengthValue> {
    larger.ring().same(smaller.ring())?;
    if !smaller.is_subset(larger)? {
        return Err(Error::pre("the smaller ideal is not contained in the larger one"));
    }
    if larger.is_zero() {
        return Ok(LengthValue::Finite(0));
    }
    let bound: Vec<u32> = larger
        .exponent_bound()
        .iter()
        .zip(smaller.exponent_bound())
        .map(|(a, b)| (*a).max(b))
        .collect();
    let points: u128 = bound.iter().map(|&b| b as u128 + 1).product();
    if points > MAX_BOX_POINTS {
        return Err(Error::Resource(format!("counting box has {points} lattice points")));
    }
    let d = bound.len();
    let mut a = vec![0u32; d];
    let mut count = 0u64;
    loop {
        if larger.contains_exps(&a) && !smaller.contains_exps(&a) {
            if a.iter().zip(&bound).any(|(x, b)| x == b) {
                return Ok(LengthValue::Infinite);
            }
            count += 1;
        }
        // odometer
        let mut i = 0;
        loop {
            if i == d {
                return Ok(LengthValue::Finite(count));
            }
            if a[i] < bound[i] {
                a[i] += 1;
                break;
            }
            a[i] = 0;
            i += 1;
        }
    }
}
