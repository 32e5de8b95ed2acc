//! Named property suites over seeded random instances.
//!
//! Each suite cross-checks independent computations of the same object and
//! reports the instances where they disagree.

use std::fmt;

use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::asymptotics::{
    closed_form_2d, count_quotient, fit_eventually, fit_polynomial, length_table, LengthValue, TableMode,
};
use crate::dsl::parse_workspace;
use crate::error::Result;
use crate::geometry::{closure_inclusion_check, InclusionOutcome};
use crate::ideal::MonomialIdeal;
use crate::multi::MultiIndex;
use crate::random::{random_family, random_ideal, random_kind, random_poly, JKind};
use crate::regularity::{koszul_betti, regularity, taylor_betti};
use crate::ring::{Exponent, RingCtx};
use crate::saturation::{
    alpha_stabilization, build_plan, double_saturation_check, saturate_certified, saturate_planned,
    saturate_via_decomposition, IdealFamily,
};

pub const SUITES: &[&str] = &[
    "count-quotient",
    "torsion-permutation",
    "path-equivalence",
    "double-saturation",
    "alpha-linearity",
    "closure-inclusion",
    "closed-form-2d",
    "fit-validation",
    "regularity",
    "workspace-roundtrip",
];

#[derive(Clone, Debug)]
pub struct SuiteOutcome {
    pub name: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for SuiteOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{:<20} {:>4} cases  {status}", self.name, self.cases)?;
        for msg in self.failures.iter().take(3) {
            write!(f, "\n    {msg}")?;
        }
        Ok(())
    }
}

fn ring(d: usize) -> RingCtx {
    RingCtx::with_vars(d).expect("d >= 1")
}

fn describe(family: &IdealFamily) -> String {
    let ideals: Vec<String> = family.ideals().iter().map(|i| format!("({i})")).collect();
    let j: Vec<String> = family.j_gens().iter().map(|p| p.to_string()).collect();
    format!("[{}] sat ({})", ideals.join(", "), j.join(", "))
}

/// Runs one case, turning errors into failure messages.
fn case(failures: &mut Vec<String>, what: impl FnOnce() -> Result<Option<String>>) {
    match what() {
        Ok(None) => {}
        Ok(Some(msg)) => failures.push(msg),
        Err(e) => failures.push(format!("error: {e}")),
    }
}

fn brute_count(larger: &MonomialIdeal, smaller: &MonomialIdeal, side: u32) -> u64 {
    let d = larger.ring().num_vars();
    MultiIndex::grid(&vec![(0, side); d])
        .into_iter()
        .filter(|p| {
            let e = Exponent(p.entries().to_vec());
            larger.contains(&e).unwrap() && !smaller.contains(&e).unwrap()
        })
        .count() as u64
}

fn count_quotient_suite(rng: &mut ChaCha8Rng, cases: usize, out: &mut Vec<String>) {
    for _ in 0..cases {
        let r = ring(rng.gen_range(1..=3));
        let s = random_ideal(rng, &r, 3, 3);
        let i = s.mul(&random_ideal(rng, &r, 2, 2)).expect("small").sum(&random_ideal(rng, &r, 2, 4)).expect("small");
        let i = i.intersect(&s).expect("small");
        case(out, || {
            let side = s.exponent_bound().into_iter().chain(i.exponent_bound()).max().unwrap_or(0);
            let small_box = brute_count(&s, &i, side);
            let big_box = brute_count(&s, &i, 2 * side + 2);
            Ok(match count_quotient(&s, &i)? {
                LengthValue::Finite(c) if c != big_box => Some(format!("#(({s}) \\ ({i})) = {c}, brute force {big_box}")),
                LengthValue::Infinite if big_box == small_box => {
                    Some(format!("#(({s}) \\ ({i})) reported infinite, brute force stable at {big_box}"))
                }
                _ => None,
            })
        });
    }
}

fn torsion_permutation_suite(rng: &mut ChaCha8Rng, cases: usize, out: &mut Vec<String>) {
    for _ in 0..cases {
        let r = ring(rng.gen_range(2..=3));
        let arity = rng.gen_range(2..=3);
        let fam = random_family(rng, &r, arity, 3, 2, JKind::Maximal);
        let mut perm: Vec<usize> = (0..arity).collect();
        perm.shuffle(rng);
        case(out, || {
            let grid = MultiIndex::grid(&vec![(1, 2); arity]);
            let t = length_table(&fam, &grid, &TableMode::Torsion)?;
            let permuted_grid: Vec<MultiIndex> = grid.iter().map(|n| n.permuted(&perm)).collect();
            let tp = length_table(&fam.permuted(&perm), &permuted_grid, &TableMode::Torsion)?;
            for n in &grid {
                if t.get(n) != tp.get(&n.permuted(&perm)) {
                    return Ok(Some(format!("{}: value at {n} changes under permutation {perm:?}", describe(&fam))));
                }
            }
            Ok(None)
        });
    }
}

fn path_equivalence_suite(rng: &mut ChaCha8Rng, cases: usize, out: &mut Vec<String>) {
    for _ in 0..cases {
        let r = ring(rng.gen_range(2..=3));
        let arity = rng.gen_range(1..=2);
        let kind = random_kind(rng);
        let fam = random_family(rng, &r, arity, 3, 2, kind);
        let n = MultiIndex::new((0..arity).map(|_| rng.gen_range(1..=2)).collect());
        case(out, || {
            let plan = build_plan(&fam)?;
            let planned = saturate_planned(&plan, &fam, &n)?;
            let certified = saturate_certified(&fam, &n)?;
            if planned != certified {
                return Ok(Some(format!("{} at {n}: planned ({planned}) != certified ({certified})", describe(&fam))));
            }
            if let Some(j) = fam.j_monomial() {
                let via = saturate_via_decomposition(&fam.multi_power(&n)?, &j)?;
                if via != certified {
                    return Ok(Some(format!("{} at {n}: decomposition ({via}) != certified ({certified})", describe(&fam))));
                }
            }
            Ok(None)
        });
    }
}

fn double_saturation_suite(rng: &mut ChaCha8Rng, cases: usize, out: &mut Vec<String>) {
    for _ in 0..cases {
        let r = ring(rng.gen_range(2..=3));
        let arity = rng.gen_range(1..=3);
        let kind = random_kind(rng);
        let fam = random_family(rng, &r, arity, 3, 2, kind);
        let a = MultiIndex::new((0..arity).map(|_| rng.gen_range(0..=2)).collect());
        case(out, || {
            Ok((!double_saturation_check(&fam, &a)?).then(|| format!("{} at {a}", describe(&fam))))
        });
    }
}

fn alpha_linearity_suite(rng: &mut ChaCha8Rng, cases: usize, out: &mut Vec<String>) {
    for _ in 0..cases {
        let r = ring(rng.gen_range(2..=3));
        let arity = rng.gen_range(1..=2);
        let kind = random_kind(rng);
        let fam = random_family(rng, &r, arity, 3, 2, kind);
        case(out, || {
            let fitted = alpha_stabilization(&fam, 3)?;
            let wide = alpha_stabilization(&fam, 5)?;
            let bad = wide.violations(fitted.alpha_emp.max(1));
            Ok((!bad.is_empty()).then(|| {
                format!("{}: alpha {} from |n| <= 3 fails at {}", describe(&fam), fitted.alpha_emp, bad[0])
            }))
        });
    }
}

fn closure_inclusion_suite(rng: &mut ChaCha8Rng, cases: usize, out: &mut Vec<String>) {
    for _ in 0..cases {
        let r = ring(rng.gen_range(2..=3));
        let arity = rng.gen_range(1..=2);
        let kind = random_kind(rng);
        let fam = random_family(rng, &r, arity, 3, 2, kind);
        let n = MultiIndex::new((0..arity).map(|_| rng.gen_range(1..=2)).collect());
        case(out, || {
            Ok(match closure_inclusion_check(&fam, &n)? {
                InclusionOutcome::Violated(e) => {
                    Some(format!("{} at {n}: {} is outside the closure", describe(&fam), r.fmt_monomial(&e)))
                }
                _ => None,
            })
        });
    }
}

fn closed_form_suite(rng: &mut ChaCha8Rng, cases: usize, out: &mut Vec<String>) {
    let r = ring(2);
    for _ in 0..cases {
        let arity = rng.gen_range(1..=3);
        let fam = random_family(rng, &r, arity, 5, 6, JKind::Maximal);
        let n = MultiIndex::new((0..arity).map(|_| rng.gen_range(1..=3)).collect());
        case(out, || {
            let closed = closed_form_2d(&fam, &n)?;
            let certified = saturate_certified(&fam, &n)?;
            Ok((closed != certified).then(|| format!("{} at {n}: ({closed}) != ({certified})", describe(&fam))))
        });
    }
}

fn fit_validation_suite(rng: &mut ChaCha8Rng, cases: usize, out: &mut Vec<String>) {
    let r = ring(2);
    for _ in 0..cases {
        let fam = random_family(rng, &r, 1, 3, 3, JKind::Maximal);
        case(out, || {
            let grid = MultiIndex::grid(&[(1, 7)]);
            let table = length_table(&fam, &grid, &TableMode::Torsion)?;
            let Some((start, fit)) = fit_eventually(&table, 2)? else {
                return Ok(Some(format!("{}: no fit of degree <= 2", describe(&fam))));
            };
            for (n, v) in table.iter() {
                if n.entries()[0] < start {
                    continue;
                }
                let want = v.finite().map(|x| BigRational::from_integer(x.into()));
                if Some(fit.eval_index(n)) != want {
                    return Ok(Some(format!("{}: fit {fit} misses the table at {n}", describe(&fam))));
                }
            }
            Ok(None)
        });
        // a finite-colength pair: I = J * (a power of the maximal ideal)
        let j = random_ideal(rng, &r, 3, 2);
        let k = rng.gen_range(1..=2);
        case(out, || {
            let i = j.mul(&MonomialIdeal::maximal(&r).pow(k)?)?;
            let small = IdealFamily::new(vec![i], vec![])?;
            let big = IdealFamily::new(vec![j.clone()], vec![])?;
            let grid = MultiIndex::grid(&[(1, 7)]);
            let table = length_table(&small, &grid, &TableMode::Quotient(big))?;
            if table.iter().any(|(_, v)| *v == LengthValue::Infinite) {
                return Ok(None);
            }
            Ok(fit_polynomial(&table, 2)?.is_none().then(|| format!("quotient table of ({j}) by m^{k}: no fit")))
        });
    }
}

fn regularity_suite(rng: &mut ChaCha8Rng, cases: usize, out: &mut Vec<String>) {
    for _ in 0..cases {
        let d = rng.gen_range(2..=3);
        let r = ring(d);
        let i = random_ideal(rng, &r, 5, 3);
        case(out, || {
            let t = taylor_betti(&i)?;
            let k = koszul_betti(&i)?;
            if t != k {
                return Ok(Some(format!("({i}): Taylor and Koszul Betti tables differ")));
            }
            let reg = regularity(&i)?;
            let mut perm: Vec<usize> = (0..d).collect();
            perm.reverse();
            if regularity(&i.permute_vars(&perm)?)? != reg {
                return Ok(Some(format!("({i}): regularity changes under variable reversal")));
            }
            let bigger = ring(d + 1);
            let shifted = MonomialIdeal::new(
                &bigger,
                i.gens().iter().map(|g| Exponent(g.iter().copied().chain([1]).collect())),
            )?;
            if regularity(&shifted)? != reg + 1 {
                return Ok(Some(format!("({i}): multiplying by a new variable does not shift reg by 1")));
            }
            Ok(None)
        });
    }
}

fn workspace_roundtrip_suite(rng: &mut ChaCha8Rng, cases: usize, out: &mut Vec<String>) {
    for _ in 0..cases {
        let d = rng.gen_range(1..=4);
        let r = ring(d);
        let mut text = format!("ring {}\n", r.var_names().join(" "));
        let ideals = rng.gen_range(1..=3);
        for k in 0..ideals {
            text.push_str(&format!("ideal I{k} = {}\n", random_ideal(rng, &r, 4, 3)));
        }
        text.push_str(&format!("poly f = {}\n", random_poly(rng, &r, 4, 3)));
        text.push_str(&format!("family F = [I0, I{}] sat m\nfamily G = [I0] sat f I0\n", ideals - 1));
        case(out, || {
            let ws = parse_workspace(&text)?;
            let printed = ws.to_string();
            let again = parse_workspace(&printed)?;
            Ok((again != ws || again.to_string() != printed).then(|| format!("round trip differs for:\n{text}")))
        });
    }
}

/// Runs the named suite with `cases` random instances from `seed`.
pub fn run_suite(name: &str, cases: usize, seed: u64) -> Option<SuiteOutcome> {
    let name: &'static str = SUITES.iter().find(|s| **s == name)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    let f = match name {
        "count-quotient" => count_quotient_suite,
        "torsion-permutation" => torsion_permutation_suite,
        "path-equivalence" => path_equivalence_suite,
        "double-saturation" => double_saturation_suite,
        "alpha-linearity" => alpha_linearity_suite,
        "closure-inclusion" => closure_inclusion_suite,
        "closed-form-2d" => closed_form_suite,
        "fit-validation" => fit_validation_suite,
        "regularity" => regularity_suite,
        "workspace-roundtrip" => workspace_roundtrip_suite,
        _ => unreachable!(),
    };
    f(&mut rng, cases, &mut failures);
    Some(SuiteOutcome { name, cases, failures })
}

pub fn run_all(cases: usize, seed: u64) -> Vec<SuiteOutcome> {
    SUITES.iter().map(|s| run_suite(s, cases, seed).expect("known suite")).collect()
}
