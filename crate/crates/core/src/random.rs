//! Seeded random instances for property checks.

use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::ideal::MonomialIdeal;
use crate::poly::SparsePoly;
use crate::ring::{Exponent, RingCtx};
use crate::saturation::{maximal_generators, IdealFamily};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JKind {
    Maximal,
    Monomial,
    Polynomial,
}

pub fn random_exponent<R: Rng>(rng: &mut R, d: usize, max_exp: u32) -> Exponent {
    loop {
        let e: Vec<u32> = (0..d).map(|_| rng.gen_range(0..=max_exp)).collect();
        if e.iter().any(|&x| x > 0) {
            return Exponent(e);
        }
    }
}

/// Nonzero proper ideal with at most `max_gens` generators.
pub fn random_ideal<R: Rng>(rng: &mut R, ring: &RingCtx, max_gens: usize, max_exp: u32) -> MonomialIdeal {
    let k = rng.gen_range(1..=max_gens.max(1));
    let gens = (0..k).map(|_| random_exponent(rng, ring.num_vars(), max_exp.max(1)));
    MonomialIdeal::new(ring, gens).expect("exponents fit the ring")
}

/// Nonconstant polynomial with small integer coefficients and a constant-free support.
pub fn random_poly<R: Rng>(rng: &mut R, ring: &RingCtx, max_terms: usize, max_exp: u32) -> SparsePoly {
    loop {
        let k = rng.gen_range(1..=max_terms.max(1));
        let terms = (0..k).map(|_| {
            let c = *[-2i64, -1, 1, 2, 3].choose(rng).expect("nonempty");
            (random_exponent(rng, ring.num_vars(), max_exp.max(1)), BigRational::from_integer(c.into()))
        });
        let p = SparsePoly::from_terms(ring, terms.collect::<Vec<_>>()).expect("exponents fit the ring");
        if !p.is_zero() {
            return p;
        }
    }
}

pub fn random_j<R: Rng>(rng: &mut R, ring: &RingCtx, kind: JKind) -> Vec<SparsePoly> {
    match kind {
        JKind::Maximal => maximal_generators(ring),
        JKind::Monomial => random_ideal(rng, ring, 2, 2)
            .gens()
            .iter()
            .map(|g| SparsePoly::monomial(ring, g.clone(), BigRational::from_integer(1.into())).expect("fits"))
            .collect(),
        JKind::Polynomial => vec![random_poly(rng, ring, 3, 2)],
    }
}

pub fn random_kind<R: Rng>(rng: &mut R) -> JKind {
    *[JKind::Maximal, JKind::Monomial, JKind::Polynomial].choose(rng).expect("nonempty")
}

pub fn random_family<R: Rng>(
    rng: &mut R,
    ring: &RingCtx,
    arity: usize,
    max_gens: usize,
    max_exp: u32,
    kind: JKind,
) -> IdealFamily {
    let ideals = (0..arity).map(|_| random_ideal(rng, ring, max_gens, max_exp)).collect();
    IdealFamily::new(ideals, random_j(rng, ring, kind)).expect("same ring")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn seeded_instances_are_reproducible() {
        let ring = RingCtx::with_vars(3).unwrap();
        let a = random_family(&mut ChaCha8Rng::seed_from_u64(7), &ring, 2, 3, 3, JKind::Polynomial);
        let b = random_family(&mut ChaCha8Rng::seed_from_u64(7), &ring, 2, 3, 3, JKind::Polynomial);
        assert_eq!(a, b);
        assert!(a.ideals().iter().all(|i| !i.is_zero() && !i.is_unit()));
    }
}
