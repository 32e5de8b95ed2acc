//! Saturation of monomial ideals by arbitrary polynomial ideals, and the
//! symbolic multi-Rees machinery built on it.
//!
//! Two independent routes compute `I^n : J^∞`:
//!
//! * the *certified* route saturates by each generator `f` of `J` through the
//!   colon chain `I : J_{f^k}`, stopping only when the current value is closed
//!   under colon by `J_f` (which proves it is the full saturation), then
//!   intersects over the generators;
//! * the *planned* route precomputes, once per family, the supports `F` of the
//!   minimal generators of the squarefree ideals attached to the generators of
//!   `J`, after which every `n` is a finite intersection of products of powers
//!   of projected ideals `π_F(I_k)`.
//!
//! The plan is validated against the certified route on small probe indices
//! before it is handed out.

use std::collections::{BTreeMap, HashMap};

use num_rational::BigRational;
use num_traits::One;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::ideal::{intersect_all, multi_power, MonomialIdeal};
use crate::multi::MultiIndex;
use crate::poly::SparsePoly;
use crate::ring::RingCtx;

/// Upper bound on colon-chain iterations before giving up.
const MAX_CHAIN_STEPS: usize = 4096;

/// `(I_1, ..., I_r; J)` with `J` given by polynomial generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealFamily {
    ring: RingCtx,
    ideals: Vec<MonomialIdeal>,
    j_gens: Vec<SparsePoly>,
}

impl IdealFamily {
    pub fn new(ideals: Vec<MonomialIdeal>, j_gens: Vec<SparsePoly>) -> Result<Self> {
        let ring = ideals
            .first()
            .ok_or_else(|| Error::domain("a family needs at least one ideal"))?
            .ring()
            .clone();
        for i in &ideals {
            ring.same(i.ring())?;
        }
        for f in &j_gens {
            ring.same(f.ring())?;
            f.require_nonzero()?;
        }
        Ok(IdealFamily { ring, ideals, j_gens })
    }

    /// Family saturated by the maximal ideal `(X_1, ..., X_d)`.
    pub fn with_maximal(ideals: Vec<MonomialIdeal>) -> Result<Self> {
        let ring = ideals
            .first()
            .ok_or_else(|| Error::domain("a family needs at least one ideal"))?
            .ring()
            .clone();
        let m = maximal_generators(&ring);
        Self::new(ideals, m)
    }

    /// Family saturated by a monomial ideal.
    pub fn with_monomial_j(ideals: Vec<MonomialIdeal>, j: &MonomialIdeal) -> Result<Self> {
        let gens = j
            .gens()
            .iter()
            .map(|g| SparsePoly::monomial(j.ring(), g.clone(), BigRational::one()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(ideals, gens)
    }

    pub fn ring(&self) -> &RingCtx {
        &self.ring
    }

    pub fn ideals(&self) -> &[MonomialIdeal] {
        &self.ideals
    }

    pub fn arity(&self) -> usize {
        self.ideals.len()
    }

    pub fn j_gens(&self) -> &[SparsePoly] {
        &self.j_gens
    }

    /// Whether `J` is exactly the maximal ideal given by its variables.
    pub fn j_is_maximal(&self) -> bool {
        let d = self.ring.num_vars();
        let mut seen = vec![false; d];
        for f in &self.j_gens {
            match f.as_monomial() {
                Some(e) if e.degree() == 1 => seen[e.support()[0]] = true,
                _ => return false,
            }
        }
        seen.iter().all(|&s| s)
    }

    /// `J` as a monomial ideal, when every generator is a monomial.
    pub fn j_monomial(&self) -> Option<MonomialIdeal> {
        let gens: Option<Vec<_>> = self.j_gens.iter().map(|f| f.as_monomial().cloned()).collect();
        gens.map(|g| MonomialIdeal::from_canonical(&self.ring, g))
    }

    /// `Σ_i J_{f_i}`: the monomial ideal generated by all supports of the generators of `J`.
    pub fn j_support_ideal(&self) -> MonomialIdeal {
        let gens = self.j_gens.iter().flat_map(|f| f.terms().keys().cloned()).collect();
        MonomialIdeal::from_canonical(&self.ring, gens)
    }

    pub fn multi_power(&self, n: &MultiIndex) -> Result<MonomialIdeal> {
        multi_power(&self.ideals, n)
    }

    /// The product `I_1 ⋯ I_r`.
    pub fn product(&self) -> Result<MonomialIdeal> {
        self.multi_power(&MultiIndex::diagonal(self.arity(), 1))
    }

    /// Same family with the ideals reordered by `perm`.
    pub fn permuted(&self, perm: &[usize]) -> IdealFamily {
        IdealFamily {
            ring: self.ring.clone(),
            ideals: perm.iter().map(|&p| self.ideals[p].clone()).collect(),
            j_gens: self.j_gens.clone(),
        }
    }

    fn require_j(&self) -> Result<()> {
        if self.j_gens.is_empty() {
            Err(Error::pre("the family has no saturating ideal J"))
        } else {
            Ok(())
        }
    }
}

/// The variables `X_1, ..., X_d` as polynomials.
pub fn maximal_generators(ring: &RingCtx) -> Vec<SparsePoly> {
    (0..ring.num_vars())
        .map(|i| SparsePoly::monomial(ring, ring.var(i), BigRational::one()).expect("variable fits the ring"))
        .collect()
}

/// Monomial part of `I : (f)`: monomials `m` with `m·f ∈ I`, i.e. `I : J_f`.
pub fn colon_by_poly(ideal: &MonomialIdeal, f: &SparsePoly) -> Result<MonomialIdeal> {
    f.require_nonzero()?;
    ideal.ring().same(f.ring())?;
    ideal.colon(&f.support_ideal())
}

/// `I : (f)^∞` for a monomial ideal `I`.
///
/// Walks `M_k = I : J_{f^k}` and stops once `M_k = M_{k-1}` and `M_k : J_f = M_k`.
/// Since `J_{f^k} ⊆ J_f^k`, every `M_k` contains `I : J_f^k`, so closure under
/// `J_f` forces `M_k ⊇ I : J_f^∞`; the reverse inclusion holds because the
/// vertex monomials of the Newton polytope of `f` survive in every power over
/// the rationals.
pub fn saturate_by_poly(ideal: &MonomialIdeal, f: &SparsePoly) -> Result<MonomialIdeal> {
    f.require_nonzero()?;
    ideal.ring().same(f.ring())?;
    let jf = f.support_ideal();
    if jf.is_unit() || ideal.is_zero() || ideal.is_unit() {
        return Ok(ideal.clone());
    }
    if let Some(e) = f.as_monomial() {
        // J_{f^k} = (X^{ke}); the colon chain by a fixed principal ideal.
        return ideal.saturate(&MonomialIdeal::principal(ideal.ring(), e.clone())?);
    }
    let mut power = f.clone();
    let mut prev = ideal.colon(&jf)?;
    for _ in 1..MAX_CHAIN_STEPS {
        power = power.mul(f)?;
        let cur = ideal.colon(&power.support_ideal())?;
        if cur == prev && cur.colon(&jf)? == cur {
            return Ok(cur);
        }
        prev = cur;
    }
    Err(Error::Stabilization { what: format!("saturation by {f}"), steps: MAX_CHAIN_STEPS })
}

/// `I : J^∞` for `J = (f_1, ..., f_t)`, as `∩_i I : (f_i)^∞`.
pub fn saturate_ideal(ideal: &MonomialIdeal, j_gens: &[SparsePoly]) -> Result<MonomialIdeal> {
    if j_gens.is_empty() {
        return Err(Error::pre("cannot saturate by an unspecified J"));
    }
    let parts = j_gens.iter().map(|f| saturate_by_poly(ideal, f)).collect::<Result<Vec<_>>>()?;
    intersect_all(ideal.ring(), &parts)
}

/// Squarefree monomial ideal attached to `f`, with the window that certified it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssociatedSquarefree {
    pub ideal: MonomialIdeal,
    /// `n` with `√J_{f^n} = √J_{f^{2n}}`.
    pub witness: u32,
}

/// Stable value of `√J_f ⊇ √J_{f^2} ⊇ ...`, detected by the doubling test
/// starting at `start`.
pub fn associated_squarefree_from(f: &SparsePoly, start: u32) -> Result<AssociatedSquarefree> {
    f.require_nonzero()?;
    let mut n = start.max(1);
    let mut pow_n = f.pow(n)?;
    for _ in 0..16 {
        let pow_2n = pow_n.mul(&pow_n)?;
        let a = pow_n.support_ideal().radical();
        let b = pow_2n.support_ideal().radical();
        if a == b {
            return Ok(AssociatedSquarefree { ideal: a, witness: n });
        }
        n = n.checked_mul(2).ok_or(Error::Overflow)?;
        pow_n = pow_2n;
    }
    Err(Error::Stabilization { what: format!("radical chain of {f}"), steps: 16 })
}

pub fn associated_squarefree(f: &SparsePoly) -> Result<AssociatedSquarefree> {
    associated_squarefree_from(f, 1)
}

/// Precomputed projection data for one family.
#[derive(Clone, Debug)]
pub struct SaturationPlan {
    ring: RingCtx,
    source: Vec<MonomialIdeal>,
    /// Sorted variable subsets `F` (0-based) with the projected ideals `π_F(I_k)R`.
    projections: Vec<(Vec<usize>, Vec<MonomialIdeal>)>,
    /// Probe indices the plan was checked on.
    certified_on: Vec<MultiIndex>,
    window: u32,
}

impl SaturationPlan {
    /// The subsets `F`, 0-based.
    pub fn projection_sets(&self) -> Vec<Vec<usize>> {
        self.projections.iter().map(|(f, _)| f.clone()).collect()
    }

    pub fn certified_on(&self) -> &[MultiIndex] {
        &self.certified_on
    }

    /// Doubling window of the squarefree-ideal detection that produced the plan.
    pub fn window(&self) -> u32 {
        self.window
    }

    pub fn ring(&self) -> &RingCtx {
        &self.ring
    }
}

#[derive(Clone, Copy, Debug)]
pub struct PlanOptions {
    /// Validate on every `n` with `|n| <= probe_norm`.
    pub probe_norm: u32,
    pub max_escalations: u32,
}

impl Default for PlanOptions {
    fn default() -> Self {
        PlanOptions { probe_norm: 3, max_escalations: 3 }
    }
}

pub fn build_plan(family: &IdealFamily) -> Result<SaturationPlan> {
    build_plan_with(family, PlanOptions::default())
}

pub fn build_plan_with(family: &IdealFamily, opts: PlanOptions) -> Result<SaturationPlan> {
    family.require_j()?;
    let mut window = 1u32;
    let mut probe_norm = opts.probe_norm;
    let mut last_bad = None;
    for _ in 0..=opts.max_escalations {
        let sets = projection_sets(family, window)?;
        let projections = sets
            .into_iter()
            .map(|f| {
                let projected = family.ideals.iter().map(|i| i.project(&f)).collect::<Result<Vec<_>>>()?;
                Ok((f, projected))
            })
            .collect::<Result<Vec<_>>>()?;
        let probes = MultiIndex::graded(family.arity(), 0, probe_norm);
        let mut plan = SaturationPlan {
            ring: family.ring.clone(),
            source: family.ideals.clone(),
            projections,
            certified_on: Vec::new(),
            window,
        };
        let mismatch = probes
            .par_iter()
            .map(|n| -> Result<Option<MultiIndex>> {
                let planned = saturate_planned(&plan, family, n)?;
                let certified = saturate_certified(family, n)?;
                Ok((planned != certified).then(|| n.clone()))
            })
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .min();
        match mismatch {
            None => {
                plan.certified_on = probes;
                return Ok(plan);
            }
            Some(n) => {
                last_bad = Some(n);
                window = window.saturating_mul(2);
                probe_norm = probe_norm.saturating_mul(2);
            }
        }
    }
    Err(Error::PlanValidation { n: last_bad.map(|n| n.entries().to_vec()).unwrap_or_default() })
}

/// Supports of the minimal generators of every `𝒥_{f_i}`, deduplicated and sorted.
fn projection_sets(family: &IdealFamily, window: u32) -> Result<Vec<Vec<usize>>> {
    let mut sets = Vec::new();
    if let Some(j) = family.j_monomial() {
        // Monomial J: I : (X^c)^∞ = π_{supp c}(I) directly.
        for g in j.gens() {
            sets.push(g.support());
        }
    } else {
        for f in &family.j_gens {
            let q = associated_squarefree_from(f, window)?;
            for g in q.ideal.gens() {
                sets.push(g.support());
            }
        }
    }
    sets.sort();
    sets.dedup();
    Ok(sets)
}

/// `I^n : J^∞` via the precomputed projections.
pub fn saturate_planned(plan: &SaturationPlan, family: &IdealFamily, n: &MultiIndex) -> Result<MonomialIdeal> {
    plan.ring.same(&family.ring)?;
    if plan.source != family.ideals {
        return Err(Error::pre("the plan was built for a different family"));
    }
    if n.arity() != family.arity() {
        return Err(Error::Dimension { expected: family.arity(), found: n.arity() });
    }
    let parts = plan
        .projections
        .iter()
        .map(|(_, projected)| multi_power(projected, n))
        .collect::<Result<Vec<_>>>()?;
    intersect_all(&plan.ring, &parts)
}

/// `I^n : J^∞` via certified colon chains, one generator of `J` at a time.
pub fn saturate_certified(family: &IdealFamily, n: &MultiIndex) -> Result<MonomialIdeal> {
    family.require_j()?;
    let power = family.multi_power(n)?;
    saturate_ideal(&power, &family.j_gens)
}

/// `I : J^∞` for monomial `J`: the intersection of the irreducible components
/// of `I` whose radical does not contain `J`.
pub fn saturate_via_decomposition(ideal: &MonomialIdeal, j: &MonomialIdeal) -> Result<MonomialIdeal> {
    ideal.ring().same(j.ring())?;
    if j.is_zero() {
        return Err(Error::domain("saturation by the zero ideal"));
    }
    if ideal.is_zero() || ideal.is_unit() {
        return Ok(ideal.clone());
    }
    let kept: Vec<MonomialIdeal> = ideal
        .irreducible_decomposition()?
        .into_iter()
        .filter(|q| {
            let vars: Vec<usize> = q.gens().iter().flat_map(|g| g.support()).collect();
            !j.gens().iter().all(|g| vars.iter().any(|&v| g[v] > 0))
        })
        .collect();
    intersect_all(ideal.ring(), &kept)
}

/// `(∏ (I_i : J^∞)^{a_i}) : J^∞ == (∏ I_i^{a_i}) : J^∞`.
pub fn double_saturation_check(family: &IdealFamily, a: &MultiIndex) -> Result<bool> {
    family.require_j()?;
    let saturated = family
        .ideals
        .iter()
        .map(|i| saturate_ideal(i, &family.j_gens))
        .collect::<Result<Vec<_>>>()?;
    let lhs = saturate_ideal(&multi_power(&saturated, a)?, &family.j_gens)?;
    let rhs = saturate_certified(family, a)?;
    Ok(lhs == rhs)
}

/// Stabilization indices `k(n)` of `I^n : J^k` and the empirical slope.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaReport {
    pub k: BTreeMap<MultiIndex, u32>,
    /// `max ⌈k(n) / |n|⌉` over the grid.
    pub alpha_emp: u32,
}

impl AlphaReport {
    /// Points of the table violating `k(n) <= alpha * |n|`.
    pub fn violations(&self, alpha: u32) -> Vec<MultiIndex> {
        self.k
            .iter()
            .filter(|(n, &k)| k as u64 > alpha as u64 * n.norm())
            .map(|(n, _)| n.clone())
            .collect()
    }
}

/// Least `k` with `I : J^k = I : J^{k+1}` for a monomial `J`.
pub fn stabilization_index(ideal: &MonomialIdeal, j: &MonomialIdeal) -> Result<u32> {
    let mut cur = ideal.clone();
    for k in 0..MAX_CHAIN_STEPS as u32 {
        let next = cur.colon(j)?;
        if next == cur {
            debug_assert_eq!(next.colon(j).ok().as_ref(), Some(&next));
            return Ok(k);
        }
        cur = next;
    }
    Err(Error::Stabilization { what: "colon chain".into(), steps: MAX_CHAIN_STEPS })
}

/// `k(n)` for every `1 <= |n| <= norm_bound`, where the colon by `J` is taken
/// through the monomial ideal generated by the supports of `J`'s generators.
pub fn alpha_stabilization(family: &IdealFamily, norm_bound: u32) -> Result<AlphaReport> {
    family.require_j()?;
    let j = family.j_support_ideal();
    let grid = MultiIndex::graded(family.arity(), 1, norm_bound);
    let k = grid
        .par_iter()
        .map(|n| Ok((n.clone(), stabilization_index(&family.multi_power(n)?, &j)?)))
        .collect::<Result<Vec<_>>>()?;
    let alpha_emp = k
        .iter()
        .map(|(n, k)| (*k as u64).div_ceil(n.norm()) as u32)
        .max()
        .unwrap_or(0);
    Ok(AlphaReport { k: k.into_iter().collect(), alpha_emp })
}

/// Per-degree count of minimal generators of `S_n = I^n : J^∞` not produced by
/// products `S_a · S_b` with `a + b = n`, `a, b ≠ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenerationReport {
    pub counts: Vec<(MultiIndex, usize)>,
}

impl GenerationReport {
    /// Standard-graded up to the computed degree: no new generators past degree one.
    pub fn is_standard(&self) -> bool {
        self.counts.iter().all(|(n, c)| n.norm() < 2 || *c == 0)
    }

    pub fn new_in_norm(&self, k: u64) -> usize {
        self.counts.iter().filter(|(n, _)| n.norm() == k).map(|(_, c)| c).sum()
    }
}

pub fn rees_generation_degrees(family: &IdealFamily, up_to: u32) -> Result<GenerationReport> {
    if up_to == 0 {
        return Err(Error::pre("generation degree bound must be at least 1"));
    }
    family.require_j()?;
    let grid = MultiIndex::graded(family.arity(), 1, up_to);
    let pieces: HashMap<MultiIndex, MonomialIdeal> = grid
        .par_iter()
        .map(|n| Ok((n.clone(), saturate_certified(family, n)?)))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .collect();
    let counts = grid
        .par_iter()
        .map(|n| {
            let mut sub = MonomialIdeal::zero(&family.ring);
            for a in grid.iter().filter(|a| a.norm() < n.norm()) {
                match n.checked_sub(a) {
                    // Each unordered pair {a, b} once.
                    Some(b) if !b.is_zero() && *a <= b => {
                        sub = sub.sum(&pieces[a].mul(&pieces[&b])?)?;
                    }
                    _ => {}
                }
            }
            let s = &pieces[n];
            let fresh = s.gens().iter().filter(|g| !sub.contains_exps(g.as_slice())).count();
            Ok((n.clone(), fresh))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(GenerationReport { counts })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Exponent;

    fn xy() -> RingCtx {
        RingCtx::new(["X", "Y"]).unwrap()
    }

    fn xyz() -> RingCtx {
        RingCtx::new(["X", "Y", "Z"]).unwrap()
    }

    fn triangle(r: &RingCtx) -> MonomialIdeal {
        MonomialIdeal::from_rows(r, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]).unwrap()
    }

    #[test]
    fn colon_by_binomial() {
        let r = xy();
        let i = MonomialIdeal::from_rows(&r, &[&[2, 0], &[0, 2]]).unwrap();
        let f = SparsePoly::from_int_terms(&r, &[(1, &[1, 0]), (1, &[0, 1])]).unwrap();
        let expected = MonomialIdeal::from_rows(&r, &[&[2, 0], &[1, 1], &[0, 2]]).unwrap();
        assert_eq!(colon_by_poly(&i, &f).unwrap(), expected);
        assert!(colon_by_poly(&MonomialIdeal::unit(&r), &f).unwrap().is_unit());
        assert!(colon_by_poly(&i, &SparsePoly::zero(&r)).is_err());
    }

    #[test]
    fn saturate_by_poly_examples() {
        let r = xy();
        let i = MonomialIdeal::from_rows(&r, &[&[2, 0], &[1, 1]]).unwrap();
        let y = SparsePoly::from_int_terms(&r, &[(1, &[0, 1])]).unwrap();
        assert_eq!(saturate_by_poly(&i, &y).unwrap(), MonomialIdeal::from_rows(&r, &[&[1, 0]]).unwrap());
        let c = SparsePoly::from_int_terms(&r, &[(7, &[0, 0])]).unwrap();
        assert_eq!(saturate_by_poly(&i, &c).unwrap(), i);

        let r = xyz();
        let sq = triangle(&r).pow(2).unwrap();
        let x = SparsePoly::from_int_terms(&r, &[(1, &[1, 0, 0])]).unwrap();
        assert_eq!(saturate_by_poly(&sq, &x).unwrap(), sq.project(&[0]).unwrap());
    }

    #[test]
    fn associated_squarefree_examples() {
        let r = xy();
        let f = SparsePoly::from_int_terms(&r, &[(1, &[2, 1])]).unwrap();
        assert_eq!(associated_squarefree(&f).unwrap().ideal.gens(), &[Exponent::from([1, 1])]);
        let m = MonomialIdeal::maximal(&r);
        for sign in [1, -1] {
            let f = SparsePoly::from_int_terms(&r, &[(1, &[1, 0]), (sign, &[0, 1])]).unwrap();
            assert_eq!(associated_squarefree(&f).unwrap().ideal, m);
        }
        assert!(associated_squarefree(&SparsePoly::zero(&r)).is_err());
    }

    #[test]
    fn plan_projection_sets() {
        let r = xyz();
        let fam = IdealFamily::with_maximal(vec![triangle(&r)]).unwrap();
        let plan = build_plan(&fam).unwrap();
        assert_eq!(plan.projection_sets(), vec![vec![0], vec![1], vec![2]]);

        let r2 = xy();
        let i = MonomialIdeal::from_rows(&r2, &[&[2, 0], &[1, 1]]).unwrap();
        let f = SparsePoly::from_int_terms(&r2, &[(1, &[1, 0]), (1, &[0, 1])]).unwrap();
        let fam = IdealFamily::new(vec![i], vec![f]).unwrap();
        assert_eq!(build_plan(&fam).unwrap().projection_sets(), vec![vec![0], vec![1]]);

        let xyz_m = SparsePoly::from_int_terms(&r, &[(1, &[1, 1, 1])]).unwrap();
        let fam = IdealFamily::new(vec![triangle(&r)], vec![xyz_m]).unwrap();
        assert_eq!(build_plan(&fam).unwrap().projection_sets(), vec![vec![0, 1, 2]]);
    }

    #[test]
    fn triangle_saturations() {
        let r = xyz();
        let fam = IdealFamily::with_maximal(vec![triangle(&r)]).unwrap();
        let plan = build_plan(&fam).unwrap();
        let s1 = saturate_certified(&fam, &MultiIndex::from([1])).unwrap();
        assert_eq!(s1, triangle(&r));
        let s2 = saturate_certified(&fam, &MultiIndex::from([2])).unwrap();
        let expected =
            MonomialIdeal::from_rows(&r, &[&[1, 1, 1], &[2, 2, 0], &[0, 2, 2], &[2, 0, 2]]).unwrap();
        assert_eq!(s2, expected);
        for n in 0..4 {
            let n = MultiIndex::from([n]);
            assert_eq!(saturate_planned(&plan, &fam, &n).unwrap(), saturate_certified(&fam, &n).unwrap());
        }
        assert!(saturate_planned(&plan, &fam, &MultiIndex::from([0])).unwrap().is_unit());
    }

    #[test]
    fn planned_two_variable_example() {
        let r = xy();
        let i = MonomialIdeal::from_rows(&r, &[&[2, 0], &[1, 1]]).unwrap();
        let fam = IdealFamily::with_maximal(vec![i]).unwrap();
        let plan = build_plan(&fam).unwrap();
        let s = saturate_planned(&plan, &fam, &MultiIndex::from([3])).unwrap();
        assert_eq!(s.gens(), &[Exponent::from([3, 0])]);
    }

    #[test]
    fn zero_ideal_saturates_to_zero() {
        let r = xy();
        let fam = IdealFamily::with_maximal(vec![MonomialIdeal::zero(&r)]).unwrap();
        assert!(saturate_certified(&fam, &MultiIndex::from([2])).unwrap().is_zero());
        assert!(saturate_certified(&fam, &MultiIndex::from([0])).unwrap().is_unit());
    }

    #[test]
    fn plan_rejects_foreign_family() {
        let r = xyz();
        let fam = IdealFamily::with_maximal(vec![triangle(&r)]).unwrap();
        let other = IdealFamily::with_maximal(vec![MonomialIdeal::maximal(&r)]).unwrap();
        let plan = build_plan(&fam).unwrap();
        assert!(saturate_planned(&plan, &other, &MultiIndex::from([1])).is_err());
        let no_j = IdealFamily::new(vec![triangle(&r)], vec![]).unwrap();
        assert!(build_plan(&no_j).is_err());
    }

    #[test]
    fn double_saturation_examples() {
        let r = xyz();
        let fam = IdealFamily::with_maximal(vec![triangle(&r)]).unwrap();
        assert!(double_saturation_check(&fam, &MultiIndex::from([0])).unwrap());
        assert!(double_saturation_check(&fam, &MultiIndex::from([2])).unwrap());
    }

    #[test]
    fn alpha_examples() {
        let x = RingCtx::new(["X"]).unwrap();
        let i = MonomialIdeal::from_rows(&x, &[&[2]]).unwrap();
        let j = MonomialIdeal::from_rows(&x, &[&[1]]).unwrap();
        let fam = IdealFamily::with_monomial_j(vec![i], &j).unwrap();
        let rep = alpha_stabilization(&fam, 5).unwrap();
        for (n, k) in &rep.k {
            assert_eq!(*k as u64, 2 * n.norm());
        }
        assert_eq!(rep.alpha_emp, 2);

        // Already saturated: k = 0.
        let r = xy();
        let i = MonomialIdeal::from_rows(&r, &[&[1, 0]]).unwrap();
        let j = MonomialIdeal::from_rows(&r, &[&[0, 1]]).unwrap();
        let fam = IdealFamily::with_monomial_j(vec![i], &j).unwrap();
        assert!(alpha_stabilization(&fam, 3).unwrap().k.values().all(|&k| k == 0));

        let i = MonomialIdeal::from_rows(&r, &[&[2, 0], &[1, 1]]).unwrap();
        let fam = IdealFamily::with_maximal(vec![i]).unwrap();
        assert_eq!(alpha_stabilization(&fam, 1).unwrap().k[&MultiIndex::from([1])], 1);
    }

    #[test]
    fn triangle_is_not_standard_graded() {
        let r = xyz();
        let fam = IdealFamily::with_maximal(vec![triangle(&r)]).unwrap();
        let rep = rees_generation_degrees(&fam, 3).unwrap();
        assert_eq!(rep.new_in_norm(1), 3);
        assert_eq!(rep.new_in_norm(2), 1);
        assert!(!rep.is_standard());
    }

    #[test]
    fn two_variable_families_are_standard() {
        let r = xy();
        let a = MonomialIdeal::from_rows(&r, &[&[2, 0], &[1, 1], &[0, 3]]).unwrap();
        let b = MonomialIdeal::from_rows(&r, &[&[1, 2], &[3, 0]]).unwrap();
        let fam = IdealFamily::with_maximal(vec![a, b]).unwrap();
        assert!(rees_generation_degrees(&fam, 3).unwrap().is_standard());
    }
}
