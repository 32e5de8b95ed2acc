//! Exact polynomial and quasi-polynomial fits with hold-out validation.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::count::LengthValue;
use super::table::LengthTable;
use crate::error::{Error, Result};
use crate::multi::MultiIndex;

/// A polynomial in `n_1, ..., n_r` with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumericalPolynomial {
    arity: usize,
    coeffs: BTreeMap<Vec<u32>, BigRational>,
}

impl NumericalPolynomial {
    pub fn zero(arity: usize) -> Self {
        NumericalPolynomial { arity, coeffs: BTreeMap::new() }
    }

    pub fn from_coeffs(arity: usize, coeffs: impl IntoIterator<Item = (Vec<u32>, BigRational)>) -> Result<Self> {
        let mut p = Self::zero(arity);
        for (e, c) in coeffs {
            if e.len() != arity {
                return Err(Error::Dimension { expected: arity, found: e.len() });
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, e: Vec<u32>, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(e.clone()).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn coeffs(&self) -> &BTreeMap<Vec<u32>, BigRational> {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Total degree; the zero polynomial counts as degree 0.
    pub fn degree(&self) -> u32 {
        self.coeffs.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    pub fn is_constant(&self) -> bool {
        self.degree() == 0
    }

    /// Coefficient of `t^deg` in `F(t, ..., t)`.
    pub fn diagonal_leading_coefficient(&self) -> BigRational {
        let deg = self.degree();
        self.coeffs
            .iter()
            .filter(|(e, _)| e.iter().sum::<u32>() == deg)
            .map(|(_, c)| c.clone())
            .sum()
    }

    pub fn eval(&self, n: &[i64]) -> BigRational {
        assert_eq!(n.len(), self.arity, "evaluation point arity");
        let mut acc = BigRational::zero();
        for (e, c) in &self.coeffs {
            let mut term = c.clone();
            for (&x, &k) in n.iter().zip(e) {
                term *= BigRational::from_integer(BigInt::from(x).pow(k));
            }
            acc += term;
        }
        acc
    }

    pub fn eval_index(&self, n: &MultiIndex) -> BigRational {
        let pt: Vec<i64> = n.entries().iter().map(|&x| x as i64).collect();
        self.eval(&pt)
    }

    fn default_names(&self) -> Vec<String> {
        if self.arity == 1 {
            vec!["n".into()]
        } else {
            (1..=self.arity).map(|i| format!("n{i}")).collect()
        }
    }

    /// Terms by decreasing total degree, each `coef*var^k*...`.
    pub fn fmt_with(&self, names: &[String]) -> String {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        let mut terms: Vec<(&Vec<u32>, &BigRational)> = self.coeffs.iter().collect();
        terms.sort_by(|(a, _), (b, _)| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        let mut out = String::new();
        for (i, (e, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let abs = c.abs();
            let mono: Vec<String> = e
                .iter()
                .zip(names)
                .filter(|(k, _)| **k > 0)
                .map(|(k, v)| if *k == 1 { v.clone() } else { format!("{v}^{k}") })
                .collect();
            if mono.is_empty() {
                out.push_str(&abs.to_string());
            } else {
                if !abs.is_one() {
                    out.push_str(&abs.to_string());
                    out.push('*');
                }
                out.push_str(&mono.join("*"));
            }
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .coeffs
            .iter()
            .map(|(e, c)| serde_json::json!({ "exponents": e, "coefficient": c.to_string() }))
            .collect();
        serde_json::json!({
            "arity": self.arity,
            "degree": self.degree(),
            "polynomial": self.to_string(),
            "terms": terms,
        })
    }
}

impl fmt::Display for NumericalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_with(&self.default_names()))
    }
}

/// Coefficients (constant first) of the interpolating polynomial through `(xs[k], ys[k])`.
pub fn interpolate(xs: &[i64], ys: &[BigRational]) -> Vec<BigRational> {
    assert_eq!(xs.len(), ys.len());
    let m = xs.len();
    let mut out = vec![BigRational::zero(); m.max(1)];
    for j in 0..m {
        if ys[j].is_zero() {
            continue;
        }
        // basis = prod_{k != j} (x - x_k) / (x_j - x_k)
        let mut basis = vec![BigRational::one()];
        let mut denom = BigRational::one();
        for k in (0..m).filter(|&k| k != j) {
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (i, b) in basis.iter().enumerate() {
                next[i + 1] += b;
                next[i] -= b * BigRational::from_integer(xs[k].into());
            }
            basis = next;
            denom *= BigRational::from_integer((xs[j] - xs[k]).into());
        }
        let scale = &ys[j] / denom;
        for (o, b) in out.iter_mut().zip(&basis) {
            *o += b * &scale;
        }
    }
    out
}

fn eval_univariate(coeffs: &[BigRational], x: i64) -> BigRational {
    let x = BigRational::from_integer(x.into());
    coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * &x + c)
}

#[derive(Clone, Debug, Default)]
pub struct FitOptions {
    /// First grid coordinate used for fitting; defaults to the smallest in the table.
    pub start: Option<u32>,
    /// Points per axis beyond the fitting block that must be present for validation;
    /// defaults to `max_degree + 1`.
    pub holdout: Option<u32>,
}

pub fn fit_polynomial(table: &LengthTable, max_degree: u32) -> Result<Option<NumericalPolynomial>> {
    fit_polynomial_with(table, max_degree, &FitOptions::default())
}

/// Interpolates on the block `[s, s + D]^r` and validates on every other table
/// point with all coordinates `>= s`.
pub fn fit_polynomial_with(
    table: &LengthTable,
    max_degree: u32,
    opts: &FitOptions,
) -> Result<Option<NumericalPolynomial>> {
    let r = table.arity();
    let start = match opts.start {
        Some(s) => s,
        None => table
            .domain()
            .flat_map(|n| n.entries().iter().copied())
            .min()
            .ok_or_else(|| Error::pre("empty table"))?,
    };
    let holdout = opts.holdout.unwrap_or(max_degree + 1);
    let last_needed = start as u64 + max_degree as u64 + holdout as u64;
    for i in 0..r {
        let mut probe = vec![start; r];
        probe[i] = u32::try_from(last_needed).map_err(|_| Error::Overflow)?;
        if table.get(&MultiIndex::new(probe)).is_none() {
            return Err(Error::pre(format!(
                "grid too small: need every n_i in {start}..={last_needed} ({} points per axis) for degree {max_degree}",
                last_needed - start as u64 + 1
            )));
        }
    }

    let block = MultiIndex::grid(&vec![(start, start + max_degree); r]);
    let mut block_values = BTreeMap::new();
    for n in &block {
        match table.get(n) {
            Some(LengthValue::Finite(v)) => {
                block_values.insert(n.clone(), BigRational::from_integer(v.into()));
            }
            Some(LengthValue::Infinite) => {
                return Err(Error::pre(format!("table is infinite at {n} inside the fitting block")))
            }
            None => return Err(Error::pre(format!("table is missing {n} inside the fitting block"))),
        }
    }

    let xs: Vec<i64> = (0..=max_degree).map(|k| (start + k) as i64).collect();
    let bases: Vec<Vec<BigRational>> = (0..=max_degree as usize)
        .map(|j| {
            let mut e = vec![BigRational::zero(); xs.len()];
            e[j] = BigRational::one();
            interpolate(&xs, &e)
        })
        .collect();
    let mut poly = NumericalPolynomial::zero(r);
    for (n, v) in &block_values {
        if v.is_zero() {
            continue;
        }
        // tensor product of the univariate basis polynomials
        let mut acc: Vec<(Vec<u32>, BigRational)> = vec![(Vec::new(), v.clone())];
        for &x in n.entries() {
            let basis = &bases[(x - start) as usize];
            let mut next = Vec::with_capacity(acc.len() * basis.len());
            for (e, c) in &acc {
                for (k, b) in basis.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                    let mut e2 = e.clone();
                    e2.push(k as u32);
                    next.push((e2, c * b));
                }
            }
            acc = next;
        }
        for (e, c) in acc {
            poly.add_term(e, c);
        }
    }
    if poly.degree() > max_degree {
        return Ok(None);
    }
    for (n, v) in table.iter() {
        if n.entries().iter().any(|&x| x < start) || block_values.contains_key(n) {
            continue;
        }
        match v {
            LengthValue::Finite(v) if poly.eval_index(n) == BigRational::from_integer((*v).into()) => {}
            _ => return Ok(None),
        }
    }
    Ok(Some(poly))
}

/// Smallest start offset from which the table is fitted by a polynomial of
/// degree at most `max_degree`, together with that polynomial.
pub fn fit_eventually(table: &LengthTable, max_degree: u32) -> Result<Option<(u32, NumericalPolynomial)>> {
    let first = table
        .domain()
        .flat_map(|n| n.entries().iter().copied())
        .min()
        .ok_or_else(|| Error::pre("empty table"))?;
    let mut start = first;
    loop {
        let opts = FitOptions { start: Some(start), holdout: None };
        match fit_polynomial_with(table, max_degree, &opts) {
            Ok(Some(p)) => return Ok(Some((start, p))),
            Ok(None) => start += 1,
            Err(e) if start == first => return Err(e),
            Err(_) => return Ok(None),
        }
    }
}

/// One polynomial per residue class of `t` modulo the period.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiPolynomial {
    period: u32,
    constituents: Vec<Vec<BigRational>>,
    held_out: usize,
}

impl QuasiPolynomial {
    pub fn period(&self) -> u32 {
        self.period
    }

    /// Coefficients (constant first) of the constituent for `t ≡ residue`.
    pub fn constituent(&self, residue: u32) -> &[BigRational] {
        &self.constituents[(residue % self.period) as usize]
    }

    pub fn constituent_polynomial(&self, residue: u32) -> NumericalPolynomial {
        let coeffs = self.constituent(residue).iter().enumerate().map(|(k, c)| (vec![k as u32], c.clone()));
        NumericalPolynomial::from_coeffs(1, coeffs).expect("univariate")
    }

    pub fn degree(&self) -> u32 {
        (0..self.period).map(|c| self.constituent_polynomial(c).degree()).max().unwrap_or(0)
    }

    /// Number of samples checked against the fit without being used to build it.
    pub fn held_out(&self) -> usize {
        self.held_out
    }

    pub fn eval(&self, t: u32) -> BigRational {
        eval_univariate(self.constituent(t), t as i64)
    }
}

impl fmt::Display for QuasiPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = ["t".to_string()];
        write!(f, "period {}", self.period)?;
        for c in 0..self.period {
            write!(f, "; t = {c} mod {}: {}", self.period, self.constituent_polynomial(c).fmt_with(&names))?;
        }
        Ok(())
    }
}

/// Fits `samples` (pairs `(t, value)`, `t >= start`) by a quasi-polynomial of
/// the smallest period `p <= max_period` whose residue-class constituents have
/// degree at most `max_degree`. Each class is interpolated on its first
/// `max_degree + 1` samples and checked on the rest.
pub fn fit_quasipolynomial_ray(
    samples: &[(u32, u64)],
    max_period: u32,
    max_degree: u32,
    start: u32,
) -> Result<Option<QuasiPolynomial>> {
    if max_period == 0 {
        return Err(Error::pre("max_period must be at least 1"));
    }
    let mut pts: Vec<(u32, u64)> = samples.iter().copied().filter(|(t, _)| *t >= start).collect();
    pts.sort();
    pts.dedup_by_key(|(t, _)| *t);
    let need = (max_degree as usize + 2) * max_period as usize;
    if pts.len() < need {
        return Err(Error::pre(format!(
            "insufficient samples: {} at t >= {start}, need {need}",
            pts.len()
        )));
    }
    'period: for p in 1..=max_period {
        let mut constituents = Vec::with_capacity(p as usize);
        let mut held_out = 0;
        for c in 0..p {
            let class: Vec<&(u32, u64)> = pts.iter().filter(|(t, _)| t % p == c).collect();
            let k = max_degree as usize + 1;
            if class.len() <= k {
                continue 'period;
            }
            let xs: Vec<i64> = class[..k].iter().map(|(t, _)| *t as i64).collect();
            let ys: Vec<BigRational> = class[..k].iter().map(|(_, v)| BigRational::from_integer((*v).into())).collect();
            let coeffs = interpolate(&xs, &ys);
            for (t, v) in &class[k..] {
                if eval_univariate(&coeffs, *t as i64) != BigRational::from_integer((*v).into()) {
                    continue 'period;
                }
            }
            held_out += class.len() - k;
            constituents.push(coeffs);
        }
        return Ok(Some(QuasiPolynomial { period: p, constituents, held_out }));
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn triangular_numbers() {
        let t = LengthTable::from_sequence(1, &[1, 3, 6, 10, 15, 21]);
        let p = fit_polynomial(&t, 2).unwrap().unwrap();
        assert_eq!(p.degree(), 2);
        assert_eq!(p.to_string(), "1/2*n^2 + 1/2*n");
        // higher allowed degree still finds the same polynomial if the grid allows it
        assert!(fit_polynomial(&t, 3).is_err());
        // degree too low
        assert_eq!(fit_polynomial(&t, 1).unwrap(), None);
    }

    #[test]
    fn constants_and_exponentials() {
        let t = LengthTable::from_sequence(1, &[4; 5]);
        let p = fit_polynomial(&t, 1).unwrap().unwrap();
        assert_eq!(p.degree(), 0);
        assert_eq!(p.to_string(), "4");
        let pow2: Vec<u64> = (1..=12).map(|n| 1 << n).collect();
        let t = LengthTable::from_sequence(1, &pow2);
        for d in 0..5 {
            assert_eq!(fit_polynomial(&t, d).unwrap(), None);
        }
    }

    #[test]
    fn two_variable_fit_respects_total_degree() {
        // n1*n2 has total degree 2 but degree 1 per axis
        let vals = MultiIndex::grid(&[(1, 6), (1, 6)]).into_iter().map(|n| {
            let v = n.entries()[0] as u64 * n.entries()[1] as u64;
            (n, LengthValue::Finite(v))
        });
        let t = LengthTable::from_values(2, vals).unwrap();
        assert_eq!(fit_polynomial(&t, 1).unwrap(), None);
        let p = fit_polynomial(&t, 2).unwrap().unwrap();
        assert_eq!(p.to_string(), "n1*n2");
    }

    #[test]
    fn eventual_fit_skips_initial_noise() {
        let t = LengthTable::from_sequence(1, &[7, 2, 2, 2, 2]);
        assert_eq!(fit_polynomial(&t, 0).unwrap(), None);
        let (s, p) = fit_eventually(&t, 0).unwrap().unwrap();
        assert_eq!(s, 2);
        assert_eq!(p.to_string(), "2");
    }

    #[test]
    fn interpolation_matches_known_polynomial() {
        let xs = [0, 1, 2, 3];
        let ys: Vec<BigRational> = xs.iter().map(|&x| q(x * x * x - 2 * x + 5, 1)).collect();
        assert_eq!(interpolate(&xs, &ys), vec![q(5, 1), q(-2, 1), q(0, 1), q(1, 1)]);
    }

    #[test]
    fn quarter_squares_have_period_two() {
        let samples: Vec<(u32, u64)> = (1..=16).map(|t| (t, (t as u64 * t as u64) / 4)).collect();
        let fit = fit_quasipolynomial_ray(&samples, 2, 2, 1).unwrap().unwrap();
        assert_eq!(fit.period(), 2);
        assert_eq!(fit.held_out(), 10);
        assert_eq!(fit.constituent(0), &[q(0, 1), q(0, 1), q(1, 4)]);
        assert_eq!(fit.constituent(1), &[q(-1, 4), q(0, 1), q(1, 4)]);
        assert_eq!(fit.to_string(), "period 2; t = 0 mod 2: 1/4*t^2; t = 1 mod 2: 1/4*t^2 - 1/4");
    }

    #[test]
    fn quasi_fit_of_polynomial_has_period_one() {
        let samples: Vec<(u32, u64)> = (1..=12).map(|t| (t, (t * (t + 1) / 2) as u64)).collect();
        let fit = fit_quasipolynomial_ray(&samples, 3, 2, 1).unwrap().unwrap();
        assert_eq!(fit.period(), 1);
        assert_eq!(fit.constituent_polynomial(0).to_string(), "1/2*n^2 + 1/2*n");
        assert!(fit_quasipolynomial_ray(&samples, 3, 2, 5).is_err());
    }

    #[test]
    fn json_shape() {
        let p = NumericalPolynomial::from_coeffs(1, [(vec![2], q(1, 2)), (vec![0], q(-3, 1))]).unwrap();
        let j = p.to_json();
        assert_eq!(j["degree"], 2);
        assert_eq!(j["terms"][1]["coefficient"], "1/2");
        assert_eq!(p.to_string(), "1/2*n^2 - 3");
        assert_eq!(p.eval(&[2]), q(-1, 1));
    }
}
