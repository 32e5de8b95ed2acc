//! Monomial ideals in canonical form and their arithmetic.
//!
//! A monomial ideal is stored as its minimal generating set (the staircase
//! corners), sorted lexicographically, so structural equality is ideal
//! equality. All exponent arithmetic is checked.

use std::fmt;

use crate::error::{Error, Result};
use crate::multi::MultiIndex;
use crate::ring::{Exponent, RingCtx};

#[derive(Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    ring: RingCtx,
    gens: Vec<Exponent>,
}

/// Reduces a generator list to a sorted antichain under divisibility.
fn minimal_antichain(mut gens: Vec<Exponent>) -> Vec<Exponent> {
    gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    gens.dedup();
    let mut kept: Vec<Exponent> = Vec::with_capacity(gens.len());
    for g in gens {
        // Anything dividing g has degree <= deg g and is already kept.
        if !kept.iter().any(|k| k.divides(g.as_slice())) {
            kept.push(g);
        }
    }
    kept.sort();
    kept
}

/// Canonicalizes a generator set into a [`MonomialIdeal`].
pub fn minimalize(gens: impl IntoIterator<Item = Exponent>, ring: &RingCtx) -> Result<MonomialIdeal> {
    let gens: Vec<Exponent> = gens.into_iter().collect();
    for g in &gens {
        ring.check(g)?;
    }
    Ok(MonomialIdeal { ring: ring.clone(), gens: minimal_antichain(gens) })
}

impl MonomialIdeal {
    pub fn new(ring: &RingCtx, gens: impl IntoIterator<Item = Exponent>) -> Result<Self> {
        minimalize(gens, ring)
    }

    /// Convenience constructor from raw exponent rows.
    pub fn from_rows(ring: &RingCtx, rows: &[&[u32]]) -> Result<Self> {
        minimalize(rows.iter().map(|r| Exponent::new(r.to_vec())), ring)
    }

    pub fn zero(ring: &RingCtx) -> Self {
        MonomialIdeal { ring: ring.clone(), gens: Vec::new() }
    }

    pub fn unit(ring: &RingCtx) -> Self {
        MonomialIdeal { ring: ring.clone(), gens: vec![ring.one()] }
    }

    pub fn principal(ring: &RingCtx, m: Exponent) -> Result<Self> {
        ring.check(&m)?;
        Ok(MonomialIdeal { ring: ring.clone(), gens: vec![m] })
    }

    /// The homogeneous maximal ideal `(X_1, ..., X_d)`.
    pub fn maximal(ring: &RingCtx) -> Self {
        let gens = (0..ring.num_vars()).map(|i| ring.var(i)).collect();
        MonomialIdeal { ring: ring.clone(), gens: minimal_antichain(gens) }
    }

    pub(crate) fn from_canonical(ring: &RingCtx, gens: Vec<Exponent>) -> Self {
        MonomialIdeal { ring: ring.clone(), gens: minimal_antichain(gens) }
    }

    pub fn ring(&self) -> &RingCtx {
        &self.ring
    }

    pub fn gens(&self) -> &[Exponent] {
        &self.gens
    }

    pub fn num_gens(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(|g| g.iter().all(|&a| a <= 1))
    }

    /// Membership of `X^m`.
    pub fn contains(&self, m: &Exponent) -> Result<bool> {
        self.ring.check(m)?;
        Ok(self.contains_exps(m.as_slice()))
    }

    pub(crate) fn contains_exps(&self, m: &[u32]) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// `self ⊆ other`.
    pub fn is_subset(&self, other: &MonomialIdeal) -> Result<bool> {
        self.ring.same(&other.ring)?;
        Ok(self.gens.iter().all(|g| other.contains_exps(g.as_slice())))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.ring.same(&other.ring)?;
        let gens = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(Self::from_canonical(&self.ring, gens))
    }

    pub fn mul(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.ring.same(&other.ring)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.checked_mul(b)?);
            }
        }
        Ok(Self::from_canonical(&self.ring, gens))
    }

    pub fn pow(&self, k: u32) -> Result<MonomialIdeal> {
        if self.gens.len() == 1 {
            let g = self.gens[0].checked_scale(k)?;
            return Ok(MonomialIdeal { ring: self.ring.clone(), gens: vec![g] });
        }
        let mut acc = Self::unit(&self.ring);
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// `I ∩ J`, generated by pairwise lcms.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.ring.same(&other.ring)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.lcm(b));
            }
        }
        Ok(Self::from_canonical(&self.ring, gens))
    }

    /// `I : (X^b)`.
    pub fn colon_monomial(&self, b: &Exponent) -> Result<MonomialIdeal> {
        self.ring.check(b)?;
        let gens = self.gens.iter().map(|a| a.saturating_quotient(b)).collect();
        Ok(Self::from_canonical(&self.ring, gens))
    }

    /// `I : J` for a nonzero monomial ideal `J`.
    pub fn colon(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.ring.same(&other.ring)?;
        if other.is_zero() {
            return Err(Error::domain("colon by the zero ideal"));
        }
        let mut parts = other.gens.iter().map(|h| self.colon_monomial(h));
        let mut acc = parts.next().expect("nonzero ideal has a generator")?;
        for p in parts {
            if acc.is_zero() {
                break;
            }
            acc = acc.intersect(&p?)?;
        }
        Ok(acc)
    }

    /// `I : J^∞` for a monomial ideal `J`, by iterating the colon chain to its fixed point.
    pub fn saturate(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        let mut cur = self.clone();
        loop {
            let next = cur.colon(other)?;
            if next == cur {
                return Ok(cur);
            }
            cur = next;
        }
    }

    pub fn radical(&self) -> MonomialIdeal {
        let gens = self.gens.iter().map(Exponent::squarefree_support).collect();
        Self::from_canonical(&self.ring, gens)
    }

    /// `π_F(I)R`: sets every variable with index in `vars` (0-based) to 1.
    pub fn project(&self, vars: &[usize]) -> Result<MonomialIdeal> {
        let d = self.ring.num_vars();
        if let Some(&bad) = vars.iter().find(|&&i| i >= d) {
            return Err(Error::domain(format!("variable index {} out of range 1..{d}", bad + 1)));
        }
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut g = g.clone();
                for &i in vars {
                    g.0[i] = 0;
                }
                g
            })
            .collect();
        Ok(Self::from_canonical(&self.ring, gens))
    }

    /// Decomposes `I` as an irredundant intersection of ideals generated by
    /// pure powers of variables. The unit ideal yields the empty list.
    pub fn irreducible_decomposition(&self) -> Result<Vec<MonomialIdeal>> {
        if self.is_zero() {
            return Err(Error::domain("the zero ideal has no irreducible decomposition"));
        }
        if self.is_unit() {
            return Ok(Vec::new());
        }
        let comps = irreducible_components(&self.gens, self.ring.num_vars());
        let mut out: Vec<MonomialIdeal> = comps
            .into_iter()
            .map(|c| {
                let gens = c
                    .iter()
                    .enumerate()
                    .filter_map(|(i, p)| {
                        p.map(|k| {
                            let mut e = vec![0; c.len()];
                            e[i] = k;
                            Exponent(e)
                        })
                    })
                    .collect();
                Self::from_canonical(&self.ring, gens)
            })
            .collect();
        out.sort_by(|a, b| a.gens.cmp(&b.gens));
        Ok(out)
    }

    /// Largest total degree of a minimal generator.
    pub fn max_generator_degree(&self) -> Option<u64> {
        self.gens.iter().map(Exponent::degree).max()
    }

    /// Componentwise maximum of the generators.
    pub fn exponent_bound(&self) -> Vec<u32> {
        let mut b = vec![0; self.ring.num_vars()];
        for g in &self.gens {
            for (bi, &gi) in b.iter_mut().zip(g.iter()) {
                *bi = (*bi).max(gi);
            }
        }
        b
    }

    /// Applies a permutation of variables: variable `i` becomes variable `perm[i]`.
    pub fn permute_vars(&self, perm: &[usize]) -> Result<MonomialIdeal> {
        if perm.len() != self.ring.num_vars() {
            return Err(Error::Dimension { expected: self.ring.num_vars(), found: perm.len() });
        }
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut e = vec![0; perm.len()];
                for (i, &p) in perm.iter().enumerate() {
                    e[p] = g[i];
                }
                Exponent(e)
            })
            .collect();
        Ok(Self::from_canonical(&self.ring, gens))
    }

    /// Re-homes the generators into another ring with the same number of variables.
    pub fn with_ring(&self, ring: &RingCtx) -> Result<MonomialIdeal> {
        if ring.num_vars() != self.ring.num_vars() {
            return Err(Error::Dimension { expected: ring.num_vars(), found: self.ring.num_vars() });
        }
        Ok(MonomialIdeal { ring: ring.clone(), gens: self.gens.clone() })
    }
}

/// Irreducible component: `Some(k)` at position `i` means `X_i^k` is a generator.
type PurePowers = Vec<Option<u32>>;

fn pure_contains(q: &PurePowers, g: &[u32]) -> bool {
    q.iter().zip(g).any(|(p, &a)| matches!(p, Some(k) if *k <= a))
}

/// `p ⊆ q` for pure-power ideals.
fn pure_subset(p: &PurePowers, q: &PurePowers) -> bool {
    p.iter().enumerate().all(|(i, pi)| match pi {
        None => true,
        Some(k) => matches!(q[i], Some(l) if l <= *k),
    })
}

/// Incremental splitting: `(Q + (X^g)) = ∩_{g_i > 0} (Q + (X_i^{g_i}))` for irreducible `Q`.
fn irreducible_components(gens: &[Exponent], d: usize) -> Vec<PurePowers> {
    // Start from the zero ideal, itself irreducible (no pure powers).
    let mut comps: Vec<PurePowers> = vec![vec![None; d]];
    for g in gens {
        let mut next: Vec<PurePowers> = Vec::new();
        for q in comps {
            if pure_contains(&q, g.as_slice()) {
                next.push(q);
                continue;
            }
            for i in g.support() {
                let mut q2 = q.clone();
                q2[i] = Some(match q2[i] {
                    Some(k) => k.min(g[i]),
                    None => g[i],
                });
                next.push(q2);
            }
        }
        next.sort();
        next.dedup();
        // Keep inclusion-minimal components only.
        let mut kept: Vec<PurePowers> = Vec::with_capacity(next.len());
        for (i, q) in next.iter().enumerate() {
            let redundant = next
                .iter()
                .enumerate()
                .any(|(j, p)| j != i && pure_subset(p, q));
            if !redundant {
                kept.push(q.clone());
            }
        }
        comps = kept;
    }
    comps
}

/// `I_1^{n_1} ... I_r^{n_r}`; the zero multi-index yields the unit ideal.
pub fn multi_power(family: &[MonomialIdeal], n: &MultiIndex) -> Result<MonomialIdeal> {
    if family.is_empty() {
        return Err(Error::domain("empty ideal family"));
    }
    if family.len() != n.arity() {
        return Err(Error::Dimension { expected: family.len(), found: n.arity() });
    }
    let ring = family[0].ring();
    let mut acc = MonomialIdeal::unit(ring);
    for (ideal, &k) in family.iter().zip(n.entries()) {
        ring.same(ideal.ring())?;
        if k > 0 {
            acc = acc.mul(&ideal.pow(k)?)?;
        }
    }
    Ok(acc)
}

/// Intersection of a nonempty list of ideals.
pub fn intersect_all<'a>(
    ring: &RingCtx,
    ideals: impl IntoIterator<Item = &'a MonomialIdeal>,
) -> Result<MonomialIdeal> {
    let mut acc = MonomialIdeal::unit(ring);
    for i in ideals {
        acc = acc.intersect(i)?;
    }
    Ok(acc)
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.gens.iter().map(|g| self.ring.fmt_monomial(g)).collect();
        write!(f, "{}", parts.join(", "))
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xyz() -> RingCtx {
        RingCtx::new(["X", "Y", "Z"]).unwrap()
    }

    fn triangle(r: &RingCtx) -> MonomialIdeal {
        MonomialIdeal::from_rows(r, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]).unwrap()
    }

    #[test]
    fn minimalize_examples() {
        let x = RingCtx::new(["X"]).unwrap();
        let i = MonomialIdeal::from_rows(&x, &[&[1], &[2]]).unwrap();
        assert_eq!(i.gens(), &[Exponent::from([1])]);
        assert!(MonomialIdeal::new(&x, Vec::new()).unwrap().is_zero());

        let r = xyz();
        let i = MonomialIdeal::from_rows(&r, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1], &[1, 1, 1]]).unwrap();
        assert_eq!(i, triangle(&r));
        assert_eq!(i.num_gens(), 3);
    }

    #[test]
    fn minimalize_rejects_bad_length() {
        let r = xyz();
        let err = MonomialIdeal::from_rows(&r, &[&[1, 1]]).unwrap_err();
        assert_eq!(err, Error::Dimension { expected: 3, found: 2 });
    }

    #[test]
    fn membership_examples() {
        let r = xyz();
        let i = triangle(&r);
        let xyz_m = Exponent::from([1, 1, 1]);
        assert!(i.contains(&xyz_m).unwrap());
        assert!(!i.pow(2).unwrap().contains(&xyz_m).unwrap());
        assert!(!MonomialIdeal::zero(&r).contains(&xyz_m).unwrap());
        assert!(i.contains(&Exponent::from([1, 1])).is_err());
    }

    #[test]
    fn multi_power_examples() {
        let r = xyz();
        let sq = multi_power(&[triangle(&r)], &MultiIndex::from([2])).unwrap();
        let expected = MonomialIdeal::from_rows(
            &r,
            &[&[2, 2, 0], &[0, 2, 2], &[2, 0, 2], &[2, 1, 1], &[1, 2, 1], &[1, 1, 2]],
        )
        .unwrap();
        assert_eq!(sq, expected);
        assert!(multi_power(&[triangle(&r)], &MultiIndex::from([0])).unwrap().is_unit());

        let xy = RingCtx::new(["X", "Y"]).unwrap();
        let a = MonomialIdeal::from_rows(&xy, &[&[1, 0]]).unwrap();
        let b = MonomialIdeal::from_rows(&xy, &[&[0, 1]]).unwrap();
        let p = multi_power(&[a.clone(), b], &MultiIndex::from([2, 3])).unwrap();
        assert_eq!(p.gens(), &[Exponent::from([2, 3])]);
        assert!(multi_power(&[a], &MultiIndex::from([1, 1])).is_err());
    }

    #[test]
    fn power_overflow_is_an_error() {
        let x = RingCtx::new(["X", "Y"]).unwrap();
        let i = MonomialIdeal::from_rows(&x, &[&[u32::MAX / 2 + 1, 0], &[0, 1]]).unwrap();
        assert_eq!(i.pow(2), Err(Error::Overflow));
    }

    #[test]
    fn intersect_examples() {
        let xy = RingCtx::new(["X", "Y"]).unwrap();
        let x = MonomialIdeal::from_rows(&xy, &[&[1, 0]]).unwrap();
        let y = MonomialIdeal::from_rows(&xy, &[&[0, 1]]).unwrap();
        assert_eq!(x.intersect(&x).unwrap(), x);
        assert_eq!(x.intersect(&y).unwrap().gens(), &[Exponent::from([1, 1])]);
        let a = MonomialIdeal::from_rows(&xy, &[&[1, 0], &[0, 2]]).unwrap();
        let b = MonomialIdeal::from_rows(&xy, &[&[2, 0], &[0, 1]]).unwrap();
        let c = MonomialIdeal::from_rows(&xy, &[&[2, 0], &[1, 1], &[0, 2]]).unwrap();
        assert_eq!(a.intersect(&b).unwrap(), c);
    }

    #[test]
    fn colon_examples() {
        let xy = RingCtx::new(["X", "Y"]).unwrap();
        let i = MonomialIdeal::from_rows(&xy, &[&[2, 1]]).unwrap();
        let y = MonomialIdeal::from_rows(&xy, &[&[0, 1]]).unwrap();
        assert_eq!(i.colon(&y).unwrap().gens(), &[Exponent::from([2, 0])]);
        assert_eq!(i.colon(&MonomialIdeal::unit(&xy)).unwrap(), i);
        assert!(i.colon(&MonomialIdeal::zero(&xy)).is_err());

        let r = xyz();
        let x = MonomialIdeal::from_rows(&r, &[&[1, 0, 0]]).unwrap();
        let yz = MonomialIdeal::from_rows(&r, &[&[0, 1, 0], &[0, 0, 1]]).unwrap();
        assert_eq!(triangle(&r).colon(&x).unwrap(), yz);
    }

    #[test]
    fn radical_examples() {
        let r = xyz();
        let i = MonomialIdeal::from_rows(&r, &[&[2, 1, 0]]).unwrap();
        assert_eq!(i.radical().gens(), &[Exponent::from([1, 1, 0])]);
        assert_eq!(triangle(&r).radical(), triangle(&r));
        let i = MonomialIdeal::from_rows(&r, &[&[3, 0, 0], &[2, 5, 0], &[0, 0, 2]]).unwrap();
        let xz = MonomialIdeal::from_rows(&r, &[&[1, 0, 0], &[0, 0, 1]]).unwrap();
        assert_eq!(i.radical(), xz);
    }

    #[test]
    fn decomposition_examples() {
        let r = xyz();
        let comps = triangle(&r).irreducible_decomposition().unwrap();
        let expected: Vec<MonomialIdeal> = [[0usize, 1], [0, 2], [1, 2]]
            .iter()
            .map(|vs| MonomialIdeal::new(&r, vs.iter().map(|&i| r.var(i))).unwrap())
            .collect();
        assert_eq!(comps.len(), 3);
        for e in &expected {
            assert!(comps.contains(e), "missing {e:?}");
        }
        assert_eq!(intersect_all(&r, &comps).unwrap(), triangle(&r));

        let xy = RingCtx::new(["X", "Y"]).unwrap();
        let i = MonomialIdeal::from_rows(&xy, &[&[2, 0], &[0, 1]]).unwrap();
        assert_eq!(i.irreducible_decomposition().unwrap(), vec![i.clone()]);

        let i = MonomialIdeal::from_rows(&xy, &[&[2, 1]]).unwrap();
        let comps = i.irreducible_decomposition().unwrap();
        assert_eq!(comps.len(), 2);
        assert!(comps.contains(&MonomialIdeal::from_rows(&xy, &[&[2, 0]]).unwrap()));
        assert!(comps.contains(&MonomialIdeal::from_rows(&xy, &[&[0, 1]]).unwrap()));

        assert!(MonomialIdeal::zero(&xy).irreducible_decomposition().is_err());
        assert!(MonomialIdeal::unit(&xy).irreducible_decomposition().unwrap().is_empty());
    }

    #[test]
    fn project_examples() {
        let r = xyz();
        let i = MonomialIdeal::from_rows(&r, &[&[2, 1, 0], &[0, 0, 3]]).unwrap();
        assert_eq!(i.project(&[]).unwrap(), i);
        let expected = MonomialIdeal::from_rows(&r, &[&[0, 1, 0], &[0, 0, 3]]).unwrap();
        assert_eq!(i.project(&[0]).unwrap(), expected);
        assert!(triangle(&r).project(&[0, 1, 2]).unwrap().is_unit());
        assert!(i.project(&[3]).is_err());
    }

    #[test]
    fn display_uses_input_grammar() {
        let r = xyz();
        assert_eq!(triangle(&r).to_string(), "Y*Z, X*Z, X*Y");
        assert_eq!(MonomialIdeal::zero(&r).to_string(), "0");
        assert_eq!(MonomialIdeal::unit(&r).to_string(), "1");
    }
}
