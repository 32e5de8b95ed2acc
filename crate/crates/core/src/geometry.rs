//! Newton polyhedra of monomial ideals: integral closure, analytic spread and
//! the closure inclusion for symbolic multi-powers.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::lp::{int, Feasibility, Rel};
use crate::multi::MultiIndex;
use crate::ring::{Exponent, RingCtx};
use crate::saturation::{saturate_certified, IdealFamily};

/// `conv(generator exponents) + R^d_{>=0}` of a nonzero monomial ideal.
#[derive(Clone, Debug)]
pub struct NewtonPolyhedron {
    ring: RingCtx,
    vertices: Vec<Exponent>,
    source: MonomialIdeal,
}

/// Whether `point ∈ conv(pts) + R^d_{>=0}`.
fn dominates_hull(point: &[u32], pts: &[&Exponent]) -> bool {
    if pts.is_empty() {
        return false;
    }
    if pts.iter().any(|p| p.divides(point)) {
        return true;
    }
    // λ_j >= 0, Σ λ_j = 1, Σ λ_j p_j <= point coordinatewise.
    let k = pts.len();
    let mut lp = Feasibility::new(k);
    lp.add(vec![BigRational::one(); k], Rel::Eq, BigRational::one());
    for (i, &a) in point.iter().enumerate() {
        let row = pts.iter().map(|p| int(p[i] as i64)).collect();
        lp.add(row, Rel::Le, int(a as i64));
    }
    lp.is_feasible()
}

pub fn newton_polyhedron(ideal: &MonomialIdeal) -> Result<NewtonPolyhedron> {
    if ideal.is_zero() {
        return Err(Error::domain("the zero ideal has no Newton polyhedron"));
    }
    let gens = ideal.gens();
    let vertices = gens
        .iter()
        .enumerate()
        .filter(|(i, v)| {
            let others: Vec<&Exponent> = gens.iter().enumerate().filter(|(j, _)| j != i).map(|(_, g)| g).collect();
            !dominates_hull(v.as_slice(), &others)
        })
        .map(|(_, v)| v.clone())
        .collect();
    Ok(NewtonPolyhedron { ring: ideal.ring().clone(), vertices, source: ideal.clone() })
}

impl NewtonPolyhedron {
    pub fn vertices(&self) -> &[Exponent] {
        &self.vertices
    }

    pub fn source(&self) -> &MonomialIdeal {
        &self.source
    }

    pub fn contains(&self, a: &Exponent) -> Result<bool> {
        self.ring.check(a)?;
        Ok(self.contains_exps(a.as_slice()))
    }

    fn contains_exps(&self, a: &[u32]) -> bool {
        let refs: Vec<&Exponent> = self.vertices.iter().collect();
        dominates_hull(a, &refs)
    }

    /// Componentwise maximum of the vertices.
    pub fn vertex_box(&self) -> Vec<u32> {
        let mut b = vec![0; self.ring.num_vars()];
        for v in &self.vertices {
            for (bi, &vi) in b.iter_mut().zip(v.iter()) {
                *bi = (*bi).max(vi);
            }
        }
        b
    }
}

/// Monomials whose exponents lie in the Newton polyhedron.
pub fn integral_closure(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    let np = newton_polyhedron(ideal)?;
    let bound = np.vertex_box();
    let mut found: Vec<Exponent> = Vec::new();
    // Graded walk through the box; points above an accepted one are never minimal.
    let mut points = box_points(&bound);
    points.sort_by_key(|p| p.iter().map(|&a| a as u64).sum::<u64>());
    for p in points {
        if found.iter().any(|f| f.divides(&p)) {
            continue;
        }
        if ideal.contains_exps(&p) || np.contains_exps(&p) {
            found.push(Exponent::new(p));
        }
    }
    MonomialIdeal::new(ideal.ring(), found)
}

fn box_points(bound: &[u32]) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for &b in bound {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..=b).map(move |v| {
                    let mut q = p.clone();
                    q.push(v);
                    q
                })
            })
            .collect();
    }
    out
}

/// Rank of a rational matrix given by integer rows.
pub(crate) fn rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..ncols {
        let Some(p) = (rank..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][c].clone();
        for i in 0..m.len() {
            if i != rank && !m[i][c].is_zero() {
                let f = &m[i][c] / &pivot;
                for j in c..ncols {
                    let v = &m[rank][j] * &f;
                    m[i][j] -= v;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn affine_dim(pts: &[&Exponent]) -> usize {
    if pts.len() <= 1 {
        return 0;
    }
    let base = pts[0];
    let rows: Vec<Vec<i64>> = pts[1..]
        .iter()
        .map(|p| p.iter().zip(base.iter()).map(|(&a, &b)| a as i64 - b as i64).collect())
        .collect();
    rank(&rows)
}

/// Whether some `w > 0` attains its minimum over the polyhedron on every point of `subset`.
fn on_compact_face(subset: &[&Exponent], all: &[Exponent]) -> bool {
    let d = subset[0].len();
    // Variables: w_1..w_d >= 1 (by scaling), c = c_plus - c_minus.
    let nv = d + 2;
    let mut lp = Feasibility::new(nv);
    for i in 0..d {
        let mut row = vec![BigRational::zero(); nv];
        row[i] = BigRational::one();
        lp.add(row, Rel::Ge, BigRational::one());
    }
    let row_for = |v: &Exponent| {
        let mut row: Vec<BigRational> = v.iter().map(|&a| int(a as i64)).collect();
        row.push(-BigRational::one());
        row.push(BigRational::one());
        row
    };
    for v in all {
        let rel = if subset.contains(&v) { Rel::Eq } else { Rel::Ge };
        lp.add(row_for(v), rel, BigRational::zero());
    }
    lp.is_feasible()
}

fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Analytic spread of a nonzero proper monomial ideal: one more than the
/// largest dimension of a compact face of its Newton polyhedron.
pub fn analytic_spread(ideal: &MonomialIdeal) -> Result<u32> {
    if ideal.is_zero() || ideal.is_unit() {
        return Err(Error::domain("analytic spread needs a nonzero proper ideal"));
    }
    let np = newton_polyhedron(ideal)?;
    let verts = np.vertices();
    let d = ideal.ring().num_vars();
    let mut best = 0usize;
    for size in (2..=d.min(verts.len())).rev() {
        if size - 1 <= best {
            break;
        }
        for idx in subsets_of_size(verts.len(), size) {
            let subset: Vec<&Exponent> = idx.iter().map(|&i| &verts[i]).collect();
            let dim = affine_dim(&subset);
            if dim != size - 1 || dim <= best {
                continue;
            }
            if on_compact_face(&subset, verts) {
                best = dim;
                break;
            }
        }
    }
    Ok(best as u32 + 1)
}

/// `ℓ(I_1, ..., I_r) = ℓ(I_1 ⋯ I_r) + r - 1`.
pub fn multi_analytic_spread(family: &IdealFamily) -> Result<u32> {
    Ok(analytic_spread(&family.product()?)? + family.arity() as u32 - 1)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InclusionOutcome {
    /// Every generator of the saturation lies in the closure.
    Holds,
    /// A generator of the saturation outside the Newton polyhedron.
    Violated(Exponent),
    NotApplicable(String),
}

impl InclusionOutcome {
    pub fn holds(&self) -> Option<bool> {
        match self {
            InclusionOutcome::Holds => Some(true),
            InclusionOutcome::Violated(_) => Some(false),
            InclusionOutcome::NotApplicable(_) => None,
        }
    }
}

/// Checks the spread hypothesis at every monomial prime `P_F = (X_i : i ∈ F)`
/// containing `J`: the localized product must have spread at most `|F| - 1`.
/// Non-monomial primes reduce to the largest monomial prime inside them,
/// where the inequality is strict, so they never fail first.
pub fn spread_hypothesis(family: &IdealFamily) -> Result<std::result::Result<(), String>> {
    let product = family.product()?;
    if product.is_zero() {
        return Ok(Err("the product ideal is zero".into()));
    }
    let d = family.ring().num_vars();
    for mask in 1u32..(1 << d) {
        let inside: Vec<usize> = (0..d).filter(|i| mask & (1 << i) != 0).collect();
        let contains_j = family.j_gens().iter().all(|f| {
            f.terms().keys().all(|e| inside.iter().any(|&i| e[i] > 0))
        });
        if !contains_j {
            continue;
        }
        let outside: Vec<usize> = (0..d).filter(|i| mask & (1 << i) == 0).collect();
        let local = product.project(&outside)?;
        if local.is_unit() {
            continue;
        }
        let spread = analytic_spread(&local)?;
        if spread as usize > inside.len() - 1 {
            let names: Vec<&str> = inside.iter().map(|&i| family.ring().var_names()[i].as_str()).collect();
            return Ok(Err(format!(
                "analytic spread {spread} at the prime ({}) exceeds its height minus one",
                names.join(", ")
            )));
        }
    }
    Ok(Ok(()))
}

/// `I^n : J^∞ ⊆ closure(I^n)`, checked generator by generator.
pub fn closure_inclusion_check(family: &IdealFamily, n: &MultiIndex) -> Result<InclusionOutcome> {
    if family.j_gens().is_empty() {
        return Err(Error::pre("the family has no saturating ideal J"));
    }
    if let Err(reason) = spread_hypothesis(family)? {
        return Ok(InclusionOutcome::NotApplicable(reason));
    }
    let power = family.multi_power(n)?;
    let sat = saturate_certified(family, n)?;
    let np = newton_polyhedron(&power)?;
    for g in sat.gens() {
        if !np.contains_exps(g.as_slice()) {
            return Ok(InclusionOutcome::Violated(g.clone()));
        }
    }
    Ok(InclusionOutcome::Holds)
}
