//! Exact feasibility of small linear systems over the rationals.
//!
//! Phase-one simplex on a dense tableau with Bland's rule, so it terminates
//! without cycling. All variables are nonnegative; callers split free
//! variables themselves.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rel {
    Le,
    Eq,
    Ge,
}

#[derive(Clone, Debug)]
pub struct Feasibility {
    nvars: usize,
    rows: Vec<(Vec<BigRational>, Rel, BigRational)>,
}

impl Feasibility {
    pub fn new(nvars: usize) -> Self {
        Feasibility { nvars, rows: Vec::new() }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn add(&mut self, coeffs: Vec<BigRational>, rel: Rel, rhs: BigRational) {
        assert_eq!(coeffs.len(), self.nvars, "constraint width");
        self.rows.push((coeffs, rel, rhs));
    }

    /// Integer-coefficient convenience wrapper.
    pub fn add_int(&mut self, coeffs: &[i64], rel: Rel, rhs: i64) {
        self.add(coeffs.iter().map(|&c| int(c)).collect(), rel, int(rhs));
    }

    /// Whether some `x >= 0` satisfies every constraint.
    pub fn is_feasible(&self) -> bool {
        self.solve().is_some()
    }

    /// A feasible point, if one exists.
    pub fn solve(&self) -> Option<Vec<BigRational>> {
        let m = self.rows.len();
        if m == 0 {
            return Some(vec![BigRational::zero(); self.nvars]);
        }
        let slack_count = self.rows.iter().filter(|(_, r, _)| *r != Rel::Eq).count();
        let structural = self.nvars + slack_count;
        let width = structural + m + 1; // + artificials + rhs
        let rhs_col = width - 1;

        let mut t: Vec<Vec<BigRational>> = Vec::with_capacity(m + 1);
        let mut slack = self.nvars;
        for (i, (coeffs, rel, rhs)) in self.rows.iter().enumerate() {
            let mut row = vec![BigRational::zero(); width];
            row[..self.nvars].clone_from_slice(coeffs);
            match rel {
                Rel::Le => {
                    row[slack] = BigRational::one();
                    slack += 1;
                }
                Rel::Ge => {
                    row[slack] = -BigRational::one();
                    slack += 1;
                }
                Rel::Eq => {}
            }
            row[rhs_col] = rhs.clone();
            if rhs.is_negative() {
                for v in row.iter_mut() {
                    *v = -v.clone();
                }
            }
            row[structural + i] = BigRational::one();
            t.push(row);
        }
        // Reduced costs of the phase-one objective (sum of artificials).
        let mut cost = vec![BigRational::zero(); width];
        for j in 0..width {
            if j >= structural && j < structural + m {
                continue;
            }
            let s: BigRational = t.iter().map(|row| row[j].clone()).sum();
            cost[j] = -s;
        }
        let mut basis: Vec<usize> = (structural..structural + m).collect();

        loop {
            let Some(enter) = (0..rhs_col).find(|&j| cost[j].is_negative()) else {
                break;
            };
            let mut leave: Option<usize> = None;
            let mut best: Option<BigRational> = None;
            for i in 0..m {
                if t[i][enter].is_positive() {
                    let ratio = &t[i][rhs_col] / &t[i][enter];
                    let better = match &best {
                        None => true,
                        Some(b) => ratio < *b || (ratio == *b && basis[i] < basis[leave.unwrap()]),
                    };
                    if better {
                        best = Some(ratio);
                        leave = Some(i);
                    }
                }
            }
            // Phase one is bounded below by zero, so an entering column always has a pivot.
            let r = leave.expect("phase-one objective is bounded");
            pivot(&mut t, &mut cost, r, enter);
            basis[r] = enter;
        }
        if !cost[rhs_col].is_zero() {
            return None;
        }
        let mut x = vec![BigRational::zero(); self.nvars];
        for (i, &b) in basis.iter().enumerate() {
            if b < self.nvars {
                x[b] = t[i][rhs_col].clone();
            }
        }
        Some(x)
    }
}

fn pivot(t: &mut [Vec<BigRational>], cost: &mut [BigRational], r: usize, c: usize) {
    let p = t[r][c].clone();
    for v in t[r].iter_mut() {
        *v = &*v / &p;
    }
    let pivot_row = t[r].clone();
    for (i, row) in t.iter_mut().enumerate() {
        if i == r || row[c].is_zero() {
            continue;
        }
        let f = row[c].clone();
        for (v, pv) in row.iter_mut().zip(&pivot_row) {
            if !pv.is_zero() {
                *v = &*v - &f * pv;
            }
        }
    }
    if !cost[c].is_zero() {
        let f = cost[c].clone();
        for (v, pv) in cost.iter_mut().zip(&pivot_row) {
            if !pv.is_zero() {
                *v = &*v - &f * pv;
            }
        }
    }
}

pub fn int(v: i64) -> BigRational {
    BigRational::from_integer(v.into())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simple_systems() {
        // x + y = 1, x - y = 0
        let mut f = Feasibility::new(2);
        f.add_int(&[1, 1], Rel::Eq, 1);
        f.add_int(&[1, -1], Rel::Eq, 0);
        let x = f.solve().unwrap();
        assert_eq!(x, vec![BigRational::new(1.into(), 2.into()); 2]);

        // x + y <= 1, x + y >= 2
        let mut f = Feasibility::new(2);
        f.add_int(&[1, 1], Rel::Le, 1);
        f.add_int(&[1, 1], Rel::Ge, 2);
        assert!(!f.is_feasible());

        // -x = 3 has no nonnegative solution
        let mut f = Feasibility::new(1);
        f.add_int(&[-1], Rel::Eq, 3);
        assert!(!f.is_feasible());

        // -x <= -3
        let mut f = Feasibility::new(1);
        f.add_int(&[-1], Rel::Le, -3);
        assert!(f.solve().unwrap()[0] >= int(3));
    }

    #[test]
    fn degenerate_system_terminates() {
        let mut f = Feasibility::new(3);
        f.add_int(&[1, 1, 1], Rel::Eq, 0);
        f.add_int(&[1, -1, 0], Rel::Eq, 0);
        f.add_int(&[0, 1, -1], Rel::Eq, 0);
        f.add_int(&[2, 0, -2], Rel::Le, 0);
        assert_eq!(f.solve().unwrap(), vec![int(0); 3]);
    }
}
