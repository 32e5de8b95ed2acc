use std::collections::BTreeSet;

use num_rational::BigRational;
use proptest::prelude::*;

use monorees::asymptotics::{
    closed_form_2d, count_quotient, fit_polynomial, length_table, LengthTable, LengthValue, TableMode,
};
use monorees::dsl::parse_workspace;
use monorees::regularity::{koszul_betti, regularity, taylor_betti};
use monorees::saturation::{saturate_certified, saturate_via_decomposition};
use monorees::{Exponent, IdealFamily, MonomialIdeal, MultiIndex, RingCtx};

fn ring(d: usize) -> RingCtx {
    RingCtx::with_vars(d).unwrap()
}

fn exponents(d: usize, max_exp: u32, max_gens: usize) -> impl Strategy<Value = Vec<Vec<u32>>> {
    prop::collection::vec(prop::collection::vec(0..=max_exp, d), 1..=max_gens)
        .prop_filter("proper ideal", |g| g.iter().all(|e| e.iter().any(|&x| x > 0)))
}

fn build(d: usize, gens: &[Vec<u32>]) -> MonomialIdeal {
    MonomialIdeal::new(&ring(d), gens.iter().cloned().map(Exponent)).unwrap()
}

fn member(gens: &[Vec<u32>], a: &[u32]) -> bool {
    gens.iter().any(|g| g.iter().zip(a).all(|(x, y)| x <= y))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    // Quotient length against plain enumeration of a box that holds every standard monomial.
    #[test]
    fn count_matches_enumeration(big in exponents(2, 3, 3), extra in exponents(2, 3, 2)) {
        let larger = build(2, &big);
        let smaller = larger.mul(&build(2, &extra)).unwrap();
        let sg: Vec<Vec<u32>> = smaller.gens().iter().map(|g| g.as_slice().to_vec()).collect();
        let bound = sg.iter().flatten().copied().max().unwrap() + 1;
        let mut brute = 0u64;
        let mut unbounded = false;
        for x in 0..=2 * bound {
            for y in 0..=2 * bound {
                let a = [x, y];
                if member(&big, &a) && !member(&sg, &a) {
                    brute += 1;
                    unbounded |= x == 2 * bound || y == 2 * bound;
                }
            }
        }
        match count_quotient(&larger, &smaller).unwrap() {
            LengthValue::Finite(n) => { prop_assert!(!unbounded); prop_assert_eq!(n, brute) }
            LengthValue::Infinite => prop_assert!(unbounded),
        }
    }

    #[test]
    fn torsion_table_is_permutation_invariant(a in exponents(2, 2, 3), b in exponents(2, 2, 3)) {
        let fam = IdealFamily::with_maximal(vec![build(2, &a), build(2, &b)]).unwrap();
        let grid = MultiIndex::grid(&[(1, 3), (1, 3)]);
        let t = length_table(&fam, &grid, &TableMode::Torsion).unwrap();
        let swapped = length_table(&fam.permuted(&[1, 0]), &grid, &TableMode::Torsion).unwrap();
        prop_assert_eq!(t.permuted(&[1, 0]), swapped);
    }

    #[test]
    fn closed_form_matches_certified(a in exponents(2, 4, 4), n in 1u32..5) {
        let fam = IdealFamily::with_maximal(vec![build(2, &a)]).unwrap();
        let n = MultiIndex::from([n]);
        prop_assert_eq!(closed_form_2d(&fam, &n).unwrap(), saturate_certified(&fam, &n).unwrap());
    }

    #[test]
    fn decomposition_saturation_matches_certified(a in exponents(3, 2, 3), j in exponents(3, 1, 2), n in 1u32..3) {
        let j = build(3, &j);
        let fam = IdealFamily::with_monomial_j(vec![build(3, &a)], &j).unwrap();
        let n = MultiIndex::from([n]);
        let power = fam.multi_power(&n).unwrap();
        prop_assert_eq!(saturate_via_decomposition(&power, &j).unwrap(), saturate_certified(&fam, &n).unwrap());
    }

    // Sampled polynomials are recovered exactly and reproduce every sample.
    #[test]
    fn fit_reproduces_polynomial_tables(c in prop::collection::vec(0i64..5, 3)) {
        let value = |x: i64, y: i64| (c[0] + c[1] * x * y + c[2] * x * x) as u64;
        let grid = MultiIndex::grid(&[(1, 6), (1, 6)]);
        let table = LengthTable::from_values(
            2,
            grid.iter().map(|n| (n.clone(), LengthValue::Finite(value(n.entries()[0] as i64, n.entries()[1] as i64)))),
        ).unwrap();
        let p = fit_polynomial(&table, 2).unwrap().expect("polynomial data fits");
        for (n, v) in table.iter() {
            prop_assert_eq!(p.eval_index(n), BigRational::from_integer(v.finite().unwrap().into()));
        }
    }

    // Euler characteristic of each multidegree strand of the Taylor complex.
    #[test]
    fn betti_numbers_agree_and_alternate(a in exponents(3, 2, 4)) {
        let i = build(3, &a);
        let koszul = koszul_betti(&i).unwrap();
        let taylor = taylor_betti(&i).unwrap();
        prop_assert_eq!(&koszul, &taylor);
        let gens = i.gens();
        let mut strands = BTreeSet::new();
        for mask in 0..1usize << gens.len() {
            let l = (0..gens.len()).filter(|j| mask & (1 << j) != 0).fold(Exponent::zero(3), |acc, j| acc.lcm(&gens[j]));
            strands.insert(l);
        }
        for b in strands {
            let faces: i64 = (0..1usize << gens.len())
                .filter(|&mask| (0..gens.len()).filter(|j| mask & (1 << j) != 0).fold(Exponent::zero(3), |acc, j| acc.lcm(&gens[j])) == b)
                .map(|mask| if mask.count_ones() % 2 == 0 { 1 } else { -1 })
                .sum();
            let betti: i64 = (0..=gens.len()).map(|k| {
                let s = if k % 2 == 0 { 1 } else { -1 };
                s * koszul.get(k, &b) as i64
            }).sum();
            prop_assert_eq!(faces, betti);
        }
    }

    #[test]
    fn regularity_is_symmetric_and_shift_stable(a in exponents(3, 2, 4)) {
        let i = build(3, &a);
        let r = regularity(&i).unwrap();
        let perm = i.permute_vars(&[2, 0, 1]).unwrap();
        prop_assert_eq!(regularity(&perm).unwrap(), r);
        // multiplying by a new variable raises regularity by exactly one
        let shifted = MonomialIdeal::new(
            &ring(4),
            i.gens().iter().map(|g| Exponent([g.as_slice(), &[1]].concat())),
        ).unwrap();
        prop_assert_eq!(regularity(&shifted).unwrap(), r + 1);
    }

    #[test]
    fn workspace_text_round_trips(a in exponents(3, 3, 3), b in exponents(3, 2, 2)) {
        let r = ring(3);
        let names = r.var_names().to_vec();
        let show = |gens: &[Vec<u32>]| build(3, gens).gens().iter().map(|g| r.fmt_monomial(g)).collect::<Vec<_>>().join(", ");
        let text = format!(
            "ring {}\nideal A = {}\nideal B = {}\nfamily F = [A, B] sat m\n",
            names.join(" "), show(&a), show(&b)
        );
        let ws = parse_workspace(&text).unwrap();
        let again = parse_workspace(&ws.to_string()).unwrap();
        prop_assert_eq!(again.to_string(), ws.to_string());
        prop_assert_eq!(again.ideal("A").unwrap(), &build(3, &a));
        prop_assert_eq!(again.family("F").unwrap().arity(), 2);
    }
}
