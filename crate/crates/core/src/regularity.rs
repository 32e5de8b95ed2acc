//! Multigraded Betti numbers and Castelnuovo–Mumford regularity of monomial ideals.
//!
//! Two exact routes over the rationals. `taylor_betti` splits the Taylor
//! complex into lcm strands; `koszul_betti` reads `β_{k,b}(R/I)` off the
//! reduced homology of the upper Koszul complex
//! `K^b = {F ⊆ supp(b) squarefree : X^{b-F} ∈ I}` in degree `k - 2`, which
//! touches at most `2^d` faces per multidegree and so handles many generators.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::io::Write;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::geometry::integral_closure;
use crate::ideal::MonomialIdeal;
use crate::multi::MultiIndex;
use crate::ring::Exponent;
use crate::saturation::IdealFamily;

/// Generator budget for the Taylor route (`2^s` subsets).
pub const TAYLOR_MAX_GENS: usize = 14;

/// Lattice points the Koszul route may visit.
const KOSZUL_MAX_CANDIDATES: usize = 5_000_000;

/// Nonzero `β_{k,a}(R/I)`, keyed by homological index then multidegree.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, Exponent), u64>,
}

impl BettiTable {
    fn insert(&mut self, k: usize, a: Exponent, beta: u64) {
        if beta > 0 {
            *self.entries.entry((k, a)).or_insert(0) += beta;
        }
    }

    pub fn get(&self, k: usize, a: &Exponent) -> u64 {
        self.entries.get(&(k, a.clone())).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Exponent, u64)> {
        self.entries.iter().map(|((k, a), b)| (*k, a, *b))
    }

    /// `Σ_a β_{k,a}`.
    pub fn total(&self, k: usize) -> u64 {
        self.entries.iter().filter(|((i, _), _)| *i == k).map(|(_, b)| b).sum()
    }

    pub fn projective_dimension(&self) -> usize {
        self.entries.keys().map(|(k, _)| *k).max().unwrap_or(0)
    }

    /// `reg(R/I) = max |a| - k`.
    pub fn quotient_regularity(&self) -> i64 {
        self.entries.keys().map(|(k, a)| a.degree() as i64 - *k as i64).max().unwrap_or(0)
    }

    /// Rows `i,multidegree,beta` with colon-separated exponents.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["i", "multidegree", "beta"]).map_err(|e| Error::Table(e.to_string()))?;
        for ((k, a), b) in &self.entries {
            let md: Vec<String> = a.iter().map(u32::to_string).collect();
            w.write_record([k.to_string(), md.join(":"), b.to_string()])
                .map_err(|e| Error::Table(e.to_string()))?;
        }
        w.flush().map_err(|e| Error::Table(e.to_string()))
    }

    pub fn to_csv_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("csv output is ascii")
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for ((k, a), b) in &self.entries {
            writeln!(f, "beta_{k},{a:?} = {b}")?;
        }
        Ok(())
    }
}

/// Rank over the rationals by fraction-free (Bareiss) elimination.
pub fn rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let ncols = m.first().map_or(0, Vec::len);
    let mut prev = BigInt::from(1);
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..m.len() {
            for j in c + 1..ncols {
                let v = (&m[r][c] * &m[i][j] - &m[i][c] * &m[r][j]) / &prev;
                m[i][j] = v;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].abs();
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

fn require_nonzero(ideal: &MonomialIdeal) -> Result<()> {
    if ideal.is_zero() {
        Err(Error::domain("the zero ideal has no finite free resolution of this kind"))
    } else {
        Ok(())
    }
}

fn lcm_of(gens: &[Exponent], mask: u32) -> Exponent {
    let d = gens.first().map_or(0, Exponent::len);
    let mut out = vec![0u32; d];
    for (j, g) in gens.iter().enumerate() {
        if mask & (1 << j) != 0 {
            for (o, &x) in out.iter_mut().zip(g.iter()) {
                *o = (*o).max(x);
            }
        }
    }
    Exponent(out)
}

/// Betti numbers of `R/I` from the lcm strands of the Taylor complex.
pub fn taylor_betti(ideal: &MonomialIdeal) -> Result<BettiTable> {
    require_nonzero(ideal)?;
    let gens = ideal.gens();
    let s = gens.len();
    if s > TAYLOR_MAX_GENS {
        return Err(Error::Resource(format!(
            "Taylor complex of {s} generators exceeds the budget of {TAYLOR_MAX_GENS}"
        )));
    }
    let lcms: Vec<Exponent> = (0u32..(1 << s)).map(|mask| lcm_of(gens, mask)).collect();
    let mut strands: HashMap<Exponent, Vec<u32>> = HashMap::new();
    for (mask, a) in lcms.iter().enumerate() {
        strands.entry(a.clone()).or_default().push(mask as u32);
    }
    let mut parts: Vec<(Exponent, Vec<u32>)> = strands.into_iter().collect();
    parts.sort();
    let results: Vec<Vec<(usize, Exponent, u64)>> = parts
        .par_iter()
        .map(|(a, masks)| {
            let mut by_size: BTreeMap<usize, Vec<u32>> = BTreeMap::new();
            for &m in masks {
                by_size.entry(m.count_ones() as usize).or_default().push(m);
            }
            let top = *by_size.keys().next_back().unwrap_or(&0);
            // ranks[k] = rank of ∂_k : C_k -> C_{k-1}
            let mut ranks = vec![0usize; top + 2];
            for (&k, cols) in &by_size {
                if k == 0 {
                    continue;
                }
                let Some(rows) = by_size.get(&(k - 1)) else { continue };
                let row_of: HashMap<u32, usize> = rows.iter().enumerate().map(|(i, &m)| (m, i)).collect();
                let mut mat = vec![vec![0i64; cols.len()]; rows.len()];
                for (c, &m) in cols.iter().enumerate() {
                    let mut pos = 0;
                    for j in 0..s {
                        if m & (1 << j) == 0 {
                            continue;
                        }
                        let face = m & !(1 << j);
                        if lcms[face as usize] == *a {
                            mat[row_of[&face]][c] = if pos % 2 == 0 { 1 } else { -1 };
                        }
                        pos += 1;
                    }
                }
                ranks[k] = rank(&mat);
            }
            by_size
                .iter()
                .map(|(&k, faces)| (k, a.clone(), (faces.len() - ranks[k] - ranks[k + 1]) as u64))
                .collect()
        })
        .collect();
    let mut table = BettiTable::default();
    for (k, a, b) in results.into_iter().flatten() {
        table.insert(k, a, b);
    }
    Ok(table)
}

/// Reduced homology ranks `dim H̃_j`, `j = -1..`, of the upper Koszul complex at `b`.
fn koszul_homology(ideal: &MonomialIdeal, b: &[u32]) -> Vec<u64> {
    let support: Vec<usize> = (0..b.len()).filter(|&i| b[i] > 0).collect();
    let n = support.len();
    let mut faces: Vec<Vec<u32>> = vec![Vec::new(); n + 1]; // by cardinality
    let mut shifted = b.to_vec();
    for mask in 0u32..(1 << n) {
        for (bit, &v) in support.iter().enumerate() {
            shifted[v] = b[v] - ((mask >> bit) & 1);
        }
        if ideal.contains_exps(&shifted) {
            faces[mask.count_ones() as usize].push(mask);
        }
    }
    // rank of ∂ from cardinality k to k - 1
    let mut ranks = vec![0usize; n + 2];
    for k in 1..=n {
        if faces[k].is_empty() || faces[k - 1].is_empty() {
            continue;
        }
        let row_of: HashMap<u32, usize> = faces[k - 1].iter().enumerate().map(|(i, &m)| (m, i)).collect();
        let mut mat = vec![vec![0i64; faces[k].len()]; faces[k - 1].len()];
        for (c, &m) in faces[k].iter().enumerate() {
            let mut pos = 0;
            for bit in 0..n {
                if m & (1 << bit) == 0 {
                    continue;
                }
                // faces of a simplicial complex are closed under removal
                let r = row_of[&(m & !(1 << bit))];
                mat[r][c] = if pos % 2 == 0 { 1 } else { -1 };
                pos += 1;
            }
        }
        ranks[k] = rank(&mat);
    }
    (0..=n).map(|k| (faces[k].len() - ranks[k] - ranks[k + 1]) as u64).collect()
}

/// Betti numbers of `R/I` from upper Koszul complexes at every lcm-lattice candidate.
pub fn koszul_betti(ideal: &MonomialIdeal) -> Result<BettiTable> {
    require_nonzero(ideal)?;
    if ideal.is_unit() {
        return Ok(BettiTable::default());
    }
    let mut table = BettiTable::default();
    let d = ideal.ring().num_vars();
    table.insert(0, Exponent::zero(d), 1);
    // every coordinate of an lcm is 0 or a generator coordinate
    let axes: Vec<Vec<u32>> = (0..d)
        .map(|i| {
            let mut v: Vec<u32> = ideal.gens().iter().map(|g| g[i]).collect();
            v.push(0);
            v.sort_unstable();
            v.dedup();
            v
        })
        .collect();
    let count: usize = axes.iter().map(Vec::len).try_fold(1usize, |acc, l| acc.checked_mul(l)).unwrap_or(usize::MAX);
    if count > KOSZUL_MAX_CANDIDATES {
        return Err(Error::Resource(format!("{count} candidate multidegrees")));
    }
    let ranges: Vec<(u32, u32)> = axes.iter().map(|a| (0, a.len() as u32 - 1)).collect();
    let candidates: Vec<Vec<u32>> = MultiIndex::grid(&ranges)
        .into_iter()
        .map(|idx| idx.entries().iter().enumerate().map(|(i, &k)| axes[i][k as usize]).collect())
        .filter(|b: &Vec<u32>| ideal.contains_exps(b))
        .collect();
    let results: Vec<(Vec<u32>, Vec<u64>)> =
        candidates.into_par_iter().map(|b| {
            let h = koszul_homology(ideal, &b);
            (b, h)
        }).collect();
    for (b, h) in results {
        // H̃_j sits at cardinality j + 1 and gives β_{j+2}
        for (card, &beta) in h.iter().enumerate() {
            table.insert(card + 1, Exponent(b.clone()), beta);
        }
    }
    Ok(table)
}

/// Betti numbers of `R/I`; the unit ideal gives the empty table.
pub fn betti_table(ideal: &MonomialIdeal) -> Result<BettiTable> {
    koszul_betti(ideal)
}

/// `reg(I) = reg(R/I) + 1`; the unit ideal has regularity 0.
pub fn regularity(ideal: &MonomialIdeal) -> Result<u64> {
    require_nonzero(ideal)?;
    if ideal.is_unit() {
        return Ok(0);
    }
    Ok(betti_table(ideal)?.quotient_regularity() as u64 + 1)
}

/// Largest degree of a minimal generator; 0 for the unit ideal.
pub fn d_of(ideal: &MonomialIdeal) -> Result<u64> {
    ideal.max_generator_degree().ok_or_else(|| Error::domain("the zero ideal has no generators"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PowerVariant {
    /// `I^n`.
    Plain,
    /// `I^n : m^∞`.
    Saturated,
    /// Integral closure of `I^n`.
    Closure,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DefectRow {
    pub n: MultiIndex,
    pub reg: u64,
    /// `Σ n_i d(I_i)`.
    pub linear: u64,
    pub defect: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearBoundReport {
    pub variant: PowerVariant,
    pub rows: Vec<DefectRow>,
    /// `max defect - 1`, so that `reg <= Σ n_i d(I_i) + e_emp + 1` on the grid.
    pub e_emp: i64,
    /// Defect constant on the grid points of the two largest norms.
    pub stabilized: bool,
}

impl LinearBoundReport {
    pub fn pass(&self) -> bool {
        self.stabilized && self.rows.iter().all(|r| r.defect <= self.e_emp + 1)
    }
}

impl fmt::Display for LinearBoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n,reg,linear,defect")?;
        for r in &self.rows {
            writeln!(f, "{},{},{},{}", r.n, r.reg, r.linear, r.defect)?;
        }
        writeln!(f, "e_emp = {}", self.e_emp)?;
        writeln!(f, "stabilized = {}", self.stabilized)?;
        write!(f, "{}", if self.pass() { "PASS" } else { "FAIL" })
    }
}

/// `reg(I^n) - Σ n_i d(I_i)` over `grid`, optionally after saturating by the
/// maximal ideal or taking integral closures.
pub fn linear_bound_check(family: &IdealFamily, grid: &[MultiIndex], variant: PowerVariant) -> Result<LinearBoundReport> {
    if grid.is_empty() {
        return Err(Error::pre("empty grid"));
    }
    let ring = family.ring();
    if variant == PowerVariant::Saturated && ring.num_vars() < 2 {
        return Err(Error::pre("the saturated variant needs at least 2 variables"));
    }
    let ds = family.ideals().iter().map(d_of).collect::<Result<Vec<_>>>()?;
    let m = MonomialIdeal::maximal(ring);
    let mut rows = grid
        .par_iter()
        .map(|n| {
            if n.arity() != family.arity() {
                return Err(Error::Dimension { expected: family.arity(), found: n.arity() });
            }
            let power = family.multi_power(n)?;
            let target = match variant {
                PowerVariant::Plain => power,
                PowerVariant::Saturated => power.saturate(&m)?,
                PowerVariant::Closure => integral_closure(&power)?,
            };
            let reg = regularity(&target)?;
            let linear: u64 = n.entries().iter().zip(&ds).map(|(&k, &d)| k as u64 * d).sum();
            Ok(DefectRow { n: n.clone(), reg, linear, defect: reg as i64 - linear as i64 })
        })
        .collect::<Result<Vec<_>>>()?;
    rows.sort_by(|a, b| a.n.cmp(&b.n));
    let e_emp = rows.iter().map(|r| r.defect).max().expect("nonempty grid") - 1;
    let top = rows.iter().map(|r| r.n.norm()).max().expect("nonempty grid");
    let mut slab = rows.iter().filter(|r| r.n.norm() + 1 >= top).map(|r| r.defect);
    let first = slab.next().expect("nonempty slab");
    let stabilized = slab.all(|x| x == first);
    Ok(LinearBoundReport { variant, rows, e_emp, stabilized })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingCtx;

    fn e(v: &[u32]) -> Exponent {
        Exponent(v.to_vec())
    }

    #[test]
    fn small_betti_tables() {
        let r = RingCtx::new(["X", "Y", "Z"]).unwrap();
        let tri = MonomialIdeal::from_rows(&r, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]).unwrap();
        for t in [taylor_betti(&tri).unwrap(), koszul_betti(&tri).unwrap()] {
            assert_eq!(t.get(0, &e(&[0, 0, 0])), 1);
            assert_eq!(t.total(1), 3);
            assert_eq!(t.get(2, &e(&[1, 1, 1])), 2);
            assert_eq!(t.total(2), 2);
            assert_eq!(t.total(3), 0);
        }
        assert_eq!(regularity(&tri).unwrap(), 2);

        let r2 = RingCtx::new(["X", "Y"]).unwrap();
        let m = MonomialIdeal::maximal(&r2);
        let t = taylor_betti(&m).unwrap();
        assert_eq!(t.get(1, &e(&[1, 0])), 1);
        assert_eq!(t.get(1, &e(&[0, 1])), 1);
        assert_eq!(t.get(2, &e(&[1, 1])), 1);
        assert_eq!(t, koszul_betti(&m).unwrap());
        assert_eq!(regularity(&m).unwrap(), 1);
    }

    #[test]
    fn principal_and_special_ideals() {
        let r = RingCtx::new(["X", "Y"]).unwrap();
        for deg in 1..6 {
            let p = MonomialIdeal::from_rows(&r, &[&[deg, 0]]).unwrap();
            assert_eq!(regularity(&p).unwrap(), deg as u64);
            let t = taylor_betti(&p).unwrap();
            assert_eq!(t.iter().count(), 2);
        }
        assert_eq!(regularity(&MonomialIdeal::unit(&r)).unwrap(), 0);
        assert!(regularity(&MonomialIdeal::zero(&r)).is_err());
        assert_eq!(d_of(&MonomialIdeal::from_rows(&r, &[&[2, 0], &[1, 3]]).unwrap()).unwrap(), 4);
        assert_eq!(d_of(&MonomialIdeal::unit(&r)).unwrap(), 0);
        assert!(d_of(&MonomialIdeal::zero(&r)).is_err());
    }

    #[test]
    fn taylor_budget() {
        let r = RingCtx::new(["X", "Y"]).unwrap();
        let m15 = MonomialIdeal::maximal(&r).pow(14).unwrap();
        assert!(matches!(taylor_betti(&m15), Err(Error::Resource(_))));
        assert_eq!(regularity(&m15).unwrap(), 14);
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&[vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(rank(&[vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]), 3);
        assert_eq!(rank(&[vec![1, -1, 0], vec![0, 1, -1], vec![-1, 0, 1]]), 2);
        assert_eq!(rank(&[]), 0);
    }

    #[test]
    fn csv_form() {
        let r = RingCtx::new(["X", "Y"]).unwrap();
        let t = betti_table(&MonomialIdeal::maximal(&r)).unwrap();
        assert_eq!(t.to_csv_string(), "i,multidegree,beta\n0,0:0,1\n1,0:1,1\n1,1:0,1\n2,1:1,1\n");
    }

    #[test]
    fn triangle_defects() {
        let r = RingCtx::new(["X", "Y", "Z"]).unwrap();
        let tri = MonomialIdeal::from_rows(&r, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]).unwrap();
        let fam = IdealFamily::with_maximal(vec![tri]).unwrap();
        let grid = MultiIndex::grid(&[(1, 3)]);
        let rep = linear_bound_check(&fam, &grid, PowerVariant::Plain).unwrap();
        assert!(rep.rows.iter().all(|row| row.defect >= 0));
        assert!(rep.pass());
        let vars = IdealFamily::with_maximal(vec![
            MonomialIdeal::from_rows(&r, &[&[1, 0, 0]]).unwrap(),
            MonomialIdeal::from_rows(&r, &[&[0, 1, 0]]).unwrap(),
        ])
        .unwrap();
        let rep = linear_bound_check(&vars, &MultiIndex::grid(&[(1, 3), (1, 3)]), PowerVariant::Plain).unwrap();
        assert!(rep.rows.iter().all(|row| row.defect == 0));
        assert_eq!(rep.e_emp, -1);
    }
}
