//! Multi-indices `n = (n_1, ..., n_r)` and the grids built from them.

use std::cmp::Ordering;
use std::fmt;


/// Exponent vector of a multi-power `I_1^{n_1} ... I_r^{n_r}`.
///
/// Ordered graded-lexicographically: first by norm, then lexicographically.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiIndex(Vec<u32>);

impl MultiIndex {
    pub fn new(entries: Vec<u32>) -> Self {
        MultiIndex(entries)
    }

    pub fn zero(r: usize) -> Self {
        MultiIndex(vec![0; r])
    }

    /// `t * (1, ..., 1)`.
    pub fn diagonal(r: usize, t: u32) -> Self {
        MultiIndex(vec![t; r])
    }

    pub fn unit(r: usize, i: usize) -> Self {
        let mut v = vec![0; r];
        v[i] = 1;
        MultiIndex(v)
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn norm(&self) -> u64 {
        self.0.iter().map(|&n| n as u64).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&n| n == 0)
    }

    pub fn add(&self, other: &MultiIndex) -> MultiIndex {
        MultiIndex(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self - other` when `other <= self` componentwise.
    pub fn checked_sub(&self, other: &MultiIndex) -> Option<MultiIndex> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(MultiIndex)
    }

    pub fn scale(&self, t: u32) -> MultiIndex {
        MultiIndex(self.0.iter().map(|a| a * t).collect())
    }

    pub fn permuted(&self, perm: &[usize]) -> MultiIndex {
        MultiIndex(perm.iter().map(|&p| self.0[p]).collect())
    }

    /// All multi-indices of arity `r` with norm exactly `k`, lexicographically descending.
    pub fn with_norm(r: usize, k: u32) -> Vec<MultiIndex> {
        fn rec(r: usize, k: u32, prefix: &mut Vec<u32>, out: &mut Vec<MultiIndex>) {
            if prefix.len() + 1 == r {
                prefix.push(k);
                out.push(MultiIndex(prefix.clone()));
                prefix.pop();
                return;
            }
            for first in (0..=k).rev() {
                prefix.push(first);
                rec(r, k - first, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if r == 0 {
            if k == 0 {
                out.push(MultiIndex(Vec::new()));
            }
            return out;
        }
        rec(r, k, &mut Vec::with_capacity(r), &mut out);
        out.sort();
        out
    }

    /// All multi-indices with `lo <= |n| <= hi`, in graded order.
    pub fn graded(r: usize, lo: u32, hi: u32) -> Vec<MultiIndex> {
        (lo..=hi).flat_map(|k| Self::with_norm(r, k)).collect()
    }

    /// The box `[lo_1, hi_1] x ... x [lo_r, hi_r]`, in graded order.
    pub fn grid(ranges: &[(u32, u32)]) -> Vec<MultiIndex> {
        let mut out = vec![Vec::new()];
        for &(lo, hi) in ranges {
            out = out
                .into_iter()
                .flat_map(|p| {
                    (lo..=hi).map(move |v| {
                        let mut q = p.clone();
                        q.push(v);
                        q
                    })
                })
                .collect();
        }
        let mut out: Vec<MultiIndex> = out.into_iter().map(MultiIndex).collect();
        out.sort();
        out
    }
}

impl Ord for MultiIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.norm().cmp(&other.norm()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for MultiIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl From<Vec<u32>> for MultiIndex {
    fn from(v: Vec<u32>) -> Self {
        MultiIndex(v)
    }
}

impl<const N: usize> From<[u32; N]> for MultiIndex {
    fn from(v: [u32; N]) -> Self {
        MultiIndex(v.to_vec())
    }
}
