//! Polynomial ring contexts and exponent vectors.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// The ambient ring `Q[X_1, ..., X_d]`, identified by its ordered variable names.
#[derive(Clone)]
pub struct RingCtx {
    names: Arc<[String]>,
}

impl RingCtx {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::domain("a ring needs at least one variable"));
        }
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(Error::domain(format!("duplicate variable name `{n}`")));
            }
        }
        Ok(RingCtx { names: names.into() })
    }

    /// Ring with variables `X1..Xd`.
    pub fn with_vars(d: usize) -> Result<Self> {
        Self::new((1..=d).map(|i| format!("X{i}")))
    }

    pub fn num_vars(&self) -> usize {
        self.names.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.names
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn one(&self) -> Exponent {
        Exponent::zero(self.num_vars())
    }

    pub fn var(&self, i: usize) -> Exponent {
        let mut e = vec![0; self.num_vars()];
        e[i] = 1;
        Exponent(e)
    }

    pub(crate) fn check(&self, e: &Exponent) -> Result<()> {
        if e.len() != self.num_vars() {
            return Err(Error::Dimension { expected: self.num_vars(), found: e.len() });
        }
        Ok(())
    }

    pub(crate) fn same(&self, other: &RingCtx) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    /// Renders a monomial in the input grammar (`X^2*Y`, or `1`).
    pub fn fmt_monomial(&self, e: &Exponent) -> String {
        let mut parts = Vec::new();
        for (name, &k) in self.names.iter().zip(e.iter()) {
            match k {
                0 => {}
                1 => parts.push(name.clone()),
                k => parts.push(format!("{name}^{k}")),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

impl PartialEq for RingCtx {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.names, &other.names) || self.names == other.names
    }
}

impl Eq for RingCtx {}

impl fmt::Debug for RingCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RingCtx({})", self.names.join(" "))
    }
}

/// Exponent vector of a monomial `X^a`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Exponent(pub Vec<u32>);

impl Exponent {
    pub fn new(coords: Vec<u32>) -> Self {
        Exponent(coords)
    }

    pub fn zero(d: usize) -> Self {
        Exponent(vec![0; d])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, u32> {
        self.0.iter()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&a| a as u64).sum()
    }

    /// Componentwise `self <= other`, i.e. `X^self` divides `X^other`.
    pub fn divides(&self, other: &[u32]) -> bool {
        self.0.iter().zip(other).all(|(a, b)| a <= b)
    }

    pub fn checked_mul(&self, other: &Exponent) -> Result<Exponent> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(Exponent)
    }

    pub fn checked_scale(&self, k: u32) -> Result<Exponent> {
        self.0
            .iter()
            .map(|a| a.checked_mul(k).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(Exponent)
    }

    pub fn lcm(&self, other: &Exponent) -> Exponent {
        Exponent(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    /// `X^{max(self - other, 0)}`: the generator of `(X^self) : (X^other)`.
    pub fn saturating_quotient(&self, other: &Exponent) -> Exponent {
        Exponent(self.0.iter().zip(&other.0).map(|(a, b)| a.saturating_sub(*b)).collect())
    }

    /// Indices of variables with positive exponent.
    pub fn support(&self) -> Vec<usize> {
        self.0.iter().enumerate().filter(|(_, &a)| a > 0).map(|(i, _)| i).collect()
    }

    pub fn squarefree_support(&self) -> Exponent {
        Exponent(self.0.iter().map(|&a| u32::from(a > 0)).collect())
    }
}

impl std::ops::Index<usize> for Exponent {
    type Output = u32;

    fn index(&self, i: usize) -> &u32 {
        &self.0[i]
    }
}

impl fmt::Debug for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl From<Vec<u32>> for Exponent {
    fn from(v: Vec<u32>) -> Self {
        Exponent(v)
    }
}

impl<const N: usize> From<[u32; N]> for Exponent {
    fn from(v: [u32; N]) -> Self {
        Exponent(v.to_vec())
    }
}
