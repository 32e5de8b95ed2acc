//! Degree bounds for fitted torsion lengths, the diagonal epsilon estimator,
//! and the closed form of saturated powers in two variables.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::count::LengthValue;
use super::fit::NumericalPolynomial;
use super::table::{length_table, TableMode};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::multi::MultiIndex;
use crate::ring::Exponent;
use crate::saturation::IdealFamily;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    NotApplicable,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckStatus::Pass => "PASS",
            CheckStatus::Fail => "FAIL",
            CheckStatus::NotApplicable => "N/A",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundCheck {
    pub label: &'static str,
    pub statement: String,
    pub status: CheckStatus,
    pub witness: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundsReport {
    pub degree: u32,
    pub spread: u32,
    pub d: u32,
    pub checks: Vec<BoundCheck>,
}

impl BoundsReport {
    pub fn status(&self, label: &str) -> Option<CheckStatus> {
        self.checks.iter().find(|c| c.label == label).map(|c| c.status)
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }
}

impl fmt::Display for BoundsReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "degree {} spread {} d {}", self.degree, self.spread, self.d)?;
        for c in &self.checks {
            writeln!(f, "({}) {}: {} [{}]", c.label, c.statement, c.status, c.witness)?;
        }
        Ok(())
    }
}

fn pass_if(ok: bool) -> CheckStatus {
    if ok {
        CheckStatus::Pass
    } else {
        CheckStatus::Fail
    }
}

/// (a) `deg F <= d`; (b) `deg F <= spread - 1` when `spread <= d - 1`;
/// (c) `deg F = d` when `spread = d`. The last one is an observed trend on a
/// finite grid, not a proof.
pub fn check_bounds(fit: &NumericalPolynomial, spread: u32, d: u32) -> BoundsReport {
    let deg = fit.degree();
    let witness = format!("F = {fit}");
    let mut checks = vec![BoundCheck {
        label: "a",
        statement: format!("deg F = {deg} <= d = {d}"),
        status: pass_if(deg <= d),
        witness: witness.clone(),
    }];
    if spread < d {
        checks.push(BoundCheck {
            label: "b",
            statement: format!("spread {spread} <= d - 1, so deg F = {deg} <= {}", spread.saturating_sub(1)),
            status: pass_if(spread >= 1 && deg < spread),
            witness: witness.clone(),
        });
    } else {
        checks.push(BoundCheck {
            label: "b",
            statement: format!("spread {spread} is not below d = {d}"),
            status: CheckStatus::NotApplicable,
            witness: String::new(),
        });
    }
    if spread == d {
        checks.push(BoundCheck {
            label: "c",
            statement: format!("spread = d = {d}, so deg F = {deg} equals d (trend)"),
            status: pass_if(deg == d),
            witness,
        });
    } else {
        checks.push(BoundCheck {
            label: "c",
            statement: format!("spread {spread} differs from d = {d}"),
            status: CheckStatus::NotApplicable,
            witness: String::new(),
        });
    }
    BoundsReport { degree: deg, spread, d, checks }
}

/// `d! * L(t, ..., t) / t^d` for `t = 1..=t_max`, `L` the torsion length.
pub fn epsilon_estimate(family: &IdealFamily, t_max: u32) -> Result<Vec<BigRational>> {
    if !family.j_is_maximal() {
        return Err(Error::pre("the epsilon estimator needs J to be the maximal ideal"));
    }
    let r = family.arity();
    let d = family.ring().num_vars() as u32;
    let grid: Vec<MultiIndex> = (1..=t_max).map(|t| MultiIndex::diagonal(r, t)).collect();
    let table = length_table(family, &grid, &TableMode::Torsion)?;
    let d_fact: BigInt = (1..=d as u64).map(BigInt::from).product();
    grid.iter()
        .enumerate()
        .map(|(i, n)| match table.get(n) {
            Some(LengthValue::Finite(v)) => {
                let t = BigInt::from(i as u64 + 1);
                Ok(BigRational::new(&d_fact * BigInt::from(v), t.pow(d)))
            }
            _ => Err(Error::domain(format!("torsion length is infinite at {n}"))),
        })
        .collect()
}

/// `I^n : m^∞` in two variables: the principal ideal
/// `X^{Σ a_j n_j} Y^{Σ b_j n_j}` with `a_j`, `b_j` the smallest `X`- and
/// `Y`-exponents among the generators of `I_j`.
pub fn closed_form_2d(family: &IdealFamily, n: &MultiIndex) -> Result<MonomialIdeal> {
    let ring = family.ring();
    if ring.num_vars() != 2 {
        return Err(Error::pre(format!("closed form needs 2 variables, found {}", ring.num_vars())));
    }
    if !family.j_is_maximal() {
        return Err(Error::pre("closed form needs J to be the maximal ideal"));
    }
    if n.arity() != family.arity() {
        return Err(Error::Dimension { expected: family.arity(), found: n.arity() });
    }
    let mut exp = [0u32; 2];
    for (ideal, &k) in family.ideals().iter().zip(n.entries()) {
        if ideal.is_zero() {
            return Err(Error::domain("closed form is undefined for the zero ideal"));
        }
        for (v, slot) in exp.iter_mut().enumerate() {
            let least = ideal.gens().iter().map(|g| g[v]).min().expect("nonzero ideal");
            *slot = least.checked_mul(k).and_then(|x| x.checked_add(*slot)).ok_or(Error::Overflow)?;
        }
    }
    MonomialIdeal::principal(ring, Exponent::from(exp))
}
