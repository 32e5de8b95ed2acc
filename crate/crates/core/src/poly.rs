//! Sparse polynomials with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::ring::{Exponent, RingCtx};

#[derive(Clone, PartialEq, Eq)]
pub struct SparsePoly {
    ring: RingCtx,
    terms: BTreeMap<Exponent, BigRational>,
}

impl SparsePoly {
    pub fn zero(ring: &RingCtx) -> Self {
        SparsePoly { ring: ring.clone(), terms: BTreeMap::new() }
    }

    pub fn one(ring: &RingCtx) -> Self {
        Self::monomial(ring, ring.one(), BigRational::one()).expect("unit monomial fits the ring")
    }

    pub fn monomial(ring: &RingCtx, e: Exponent, c: BigRational) -> Result<Self> {
        ring.check(&e)?;
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Ok(SparsePoly { ring: ring.clone(), terms })
    }

    pub fn from_terms(ring: &RingCtx, terms: impl IntoIterator<Item = (Exponent, BigRational)>) -> Result<Self> {
        let mut p = Self::zero(ring);
        for (e, c) in terms {
            ring.check(&e)?;
            p.add_term(e, c);
        }
        Ok(p)
    }

    /// Integer-coefficient shorthand used heavily in tests.
    pub fn from_int_terms(ring: &RingCtx, terms: &[(i64, &[u32])]) -> Result<Self> {
        Self::from_terms(
            ring,
            terms
                .iter()
                .map(|(c, e)| (Exponent::new(e.to_vec()), BigRational::from_integer(BigInt::from(*c)))),
        )
    }

    fn add_term(&mut self, e: Exponent, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn ring(&self) -> &RingCtx {
        &self.ring
    }

    pub fn terms(&self) -> &BTreeMap<Exponent, BigRational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms.keys().next().is_some_and(Exponent::is_one)
    }

    pub fn as_monomial(&self) -> Option<&Exponent> {
        if self.terms.len() == 1 {
            self.terms.keys().next()
        } else {
            None
        }
    }

    pub fn mul(&self, other: &SparsePoly) -> Result<SparsePoly> {
        self.ring.same(&other.ring)?;
        let mut out = Self::zero(&self.ring);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term(ea.checked_mul(eb)?, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Result<SparsePoly> {
        let mut acc = Self::one(&self.ring);
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// `J_f`: the monomial ideal generated by the support of `f`.
    pub fn support_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::from_canonical(&self.ring, self.terms.keys().cloned().collect())
    }

    pub(crate) fn require_nonzero(&self) -> Result<()> {
        if self.is_zero() {
            Err(Error::domain("the zero polynomial is not allowed here"))
        } else {
            Ok(())
        }
    }
}

fn fmt_coeff(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for SparsePoly {
    /// Renders in the `poly` grammar, highest exponent (lexicographically) first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let body = if e.is_one() {
                fmt_coeff(&abs)
            } else if abs.is_one() {
                self.ring.fmt_monomial(e)
            } else {
                format!("{}*{}", fmt_coeff(&abs), self.ring.fmt_monomial(e))
            };
            write!(f, "{body}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SparsePoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancellation_drops_terms() {
        let r = RingCtx::new(["X", "Y"]).unwrap();
        let f = SparsePoly::from_int_terms(&r, &[(1, &[1, 0]), (1, &[0, 1])]).unwrap();
        let g = SparsePoly::from_int_terms(&r, &[(1, &[1, 0]), (-1, &[0, 1])]).unwrap();
        let p = f.mul(&g).unwrap();
        assert_eq!(p.terms().len(), 2);
        assert_eq!(p.to_string(), "X^2 - Y^2");
    }

    #[test]
    fn binomial_support_is_full_row() {
        let r = RingCtx::new(["X", "Y"]).unwrap();
        let f = SparsePoly::from_int_terms(&r, &[(1, &[1, 0]), (-1, &[0, 1])]).unwrap();
        assert_eq!(f.pow(5).unwrap().terms().len(), 6);
        assert_eq!(f.pow(0).unwrap(), SparsePoly::one(&r));
    }

    #[test]
    fn rendering() {
        let r = RingCtx::new(["X", "Y"]).unwrap();
        let f = SparsePoly::from_terms(
            &r,
            [
                (Exponent::from([2, 0]), BigRational::new(3.into(), 2.into())),
                (Exponent::from([0, 0]), BigRational::from_integer((-1).into())),
            ],
        )
        .unwrap();
        assert_eq!(f.to_string(), "3/2*X^2 - 1");
    }
}
