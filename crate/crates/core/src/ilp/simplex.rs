//! Dense two-phase simplex over exact rationals.
//!
//! Problems have the form `min c·x` subject to a list of rows `a·x {=,≥,≤} b`
//! and `x ≥ 0`. Bland's rule is used for both the entering and the leaving
//! variable, so the method terminates without any anti-cycling tolerance.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Sense {
    Eq,
    Ge,
    Le,
}

#[derive(Debug, Clone)]
pub(crate) struct Row {
    pub coeffs: Vec<BigRational>,
    pub sense: Sense,
    pub rhs: BigRational,
}

impl Row {
    pub fn new(coeffs: Vec<BigRational>, sense: Sense, rhs: BigRational) -> Self {
        Self { coeffs, sense, rhs }
    }

    /// `x_var {sense} value` in an `n`-variable problem.
    pub fn bound(n: usize, var: usize, sense: Sense, value: BigRational) -> Self {
        let mut coeffs = vec![BigRational::zero(); n];
        coeffs[var] = BigRational::one();
        Self {
            coeffs,
            sense,
            rhs: value,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub(crate) enum LpOutcome {
    Optimal {
        x: Vec<BigRational>,
        value: BigRational,
    },
    Infeasible,
    Unbounded,
}

struct Tableau {
    /// `rows × (cols + 1)`; the last column is the right-hand side.
    t: Vec<Vec<BigRational>>,
    basis: Vec<usize>,
    cols: usize,
}

enum Phase {
    Optimal,
    Unbounded,
}

impl Tableau {
    fn rhs(&self, i: usize) -> &BigRational {
        &self.t[i][self.cols]
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.t[r][c].clone();
        for v in self.t[r].iter_mut() {
            *v = &*v / &p;
        }
        let pivot_row = self.t[r].clone();
        for (i, row) in self.t.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v -= &factor * pv;
                }
            }
        }
        self.basis[r] = c;
    }

    /// Runs simplex iterations for `cost` restricted to columns `< allowed`.
    fn optimize(&mut self, cost: &[BigRational], allowed: usize) -> Phase {
        loop {
            let entering = (0..allowed).find(|&j| {
                if self.basis.contains(&j) {
                    return false;
                }
                let mut reduced = cost[j].clone();
                for (i, &b) in self.basis.iter().enumerate() {
                    if !cost[b].is_zero() && !self.t[i][j].is_zero() {
                        reduced -= &cost[b] * &self.t[i][j];
                    }
                }
                reduced.is_negative()
            });
            let Some(c) = entering else {
                return Phase::Optimal;
            };

            let mut leaving: Option<(usize, BigRational)> = None;
            for i in 0..self.t.len() {
                let a = &self.t[i][c];
                if !a.is_positive() {
                    continue;
                }
                let ratio = self.rhs(i) / a;
                let better = match &leaving {
                    None => true,
                    Some((r, best)) => {
                        ratio < *best || (ratio == *best && self.basis[i] < self.basis[*r])
                    }
                };
                if better {
                    leaving = Some((i, ratio));
                }
            }
            match leaving {
                None => return Phase::Unbounded,
                Some((r, _)) => self.pivot(r, c),
            }
        }
    }

    fn value(&self, cost: &[BigRational]) -> BigRational {
        self.basis
            .iter()
            .enumerate()
            .map(|(i, &b)| &cost[b] * self.rhs(i))
            .fold(BigRational::zero(), |a, b| a + b)
    }
}

pub(crate) fn minimize(objective: &[BigRational], rows: &[Row]) -> LpOutcome {
    let n = objective.len();
    let m = rows.len();
    let slack_count = rows.iter().filter(|r| r.sense != Sense::Eq).count();
    let structural = n + slack_count;
    let cols = structural + m;

    let mut t = Vec::with_capacity(m);
    let mut slack = n;
    for (i, row) in rows.iter().enumerate() {
        debug_assert_eq!(row.coeffs.len(), n);
        let mut line = vec![BigRational::zero(); cols + 1];
        line[..n].clone_from_slice(&row.coeffs);
        match row.sense {
            Sense::Eq => {}
            Sense::Ge => {
                line[slack] = -BigRational::one();
                slack += 1;
            }
            Sense::Le => {
                line[slack] = BigRational::one();
                slack += 1;
            }
        }
        line[cols] = row.rhs.clone();
        if line[cols].is_negative() {
            for v in line.iter_mut() {
                *v = -&*v;
            }
        }
        line[structural + i] = BigRational::one();
        t.push(line);
    }
    let mut tab = Tableau {
        t,
        basis: (structural..cols).collect(),
        cols,
    };

    // Phase 1: drive the artificial variables to zero.
    let mut phase_one = vec![BigRational::zero(); cols];
    for c in &mut phase_one[structural..] {
        *c = BigRational::one();
    }
    tab.optimize(&phase_one, cols);
    if tab.value(&phase_one).is_positive() {
        return LpOutcome::Infeasible;
    }

    // Pivot remaining (zero-level) artificials out; drop redundant rows.
    let mut i = 0;
    while i < tab.t.len() {
        if tab.basis[i] >= structural {
            match (0..structural).find(|&j| !tab.t[i][j].is_zero()) {
                Some(j) => tab.pivot(i, j),
                None => {
                    tab.t.remove(i);
                    tab.basis.remove(i);
                    continue;
                }
            }
        }
        i += 1;
    }

    let mut cost = vec![BigRational::zero(); cols];
    cost[..n].clone_from_slice(objective);
    if let Phase::Unbounded = tab.optimize(&cost, structural) {
        return LpOutcome::Unbounded;
    }

    let mut x = vec![BigRational::zero(); n];
    for (i, &b) in tab.basis.iter().enumerate() {
        if b < n {
            x[b] = tab.rhs(i).clone();
        }
    }
    let value = tab.value(&cost);
    LpOutcome::Optimal { x, value }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn r(v: i64) -> BigRational {
        q(v, 1)
    }

    fn row(c: &[i64], sense: Sense, rhs: i64) -> Row {
        Row::new(c.iter().map(|&v| r(v)).collect(), sense, r(rhs))
    }

    #[test]
    fn textbook_minimum() {
        // min -x - y  s.t. x + 2y <= 4, 3x + y <= 6  → (8/5, 6/5), value -14/5
        let out = minimize(
            &[r(-1), r(-1)],
            &[row(&[1, 2], Sense::Le, 4), row(&[3, 1], Sense::Le, 6)],
        );
        assert_eq!(
            out,
            LpOutcome::Optimal {
                x: vec![q(8, 5), q(6, 5)],
                value: q(-14, 5)
            }
        );
    }

    #[test]
    fn equality_and_ge_rows() {
        // min x + y  s.t. x - y = 1, x + y >= 3
        let out = minimize(
            &[r(1), r(1)],
            &[row(&[1, -1], Sense::Eq, 1), row(&[1, 1], Sense::Ge, 3)],
        );
        assert_eq!(
            out,
            LpOutcome::Optimal {
                x: vec![r(2), r(1)],
                value: r(3)
            }
        );
    }

    #[test]
    fn negative_rhs_rows_are_normalized() {
        // -x >= -2 (x <= 2), min -x
        let out = minimize(&[r(-1)], &[row(&[-1], Sense::Ge, -2)]);
        assert_eq!(
            out,
            LpOutcome::Optimal {
                x: vec![r(2)],
                value: r(-2)
            }
        );
    }

    #[test]
    fn infeasible() {
        let out = minimize(&[r(1)], &[row(&[1], Sense::Ge, 1), row(&[1], Sense::Le, 0)]);
        assert_eq!(out, LpOutcome::Infeasible);
    }

    #[test]
    fn unbounded() {
        let out = minimize(&[r(-1), r(0)], &[row(&[1, -1], Sense::Eq, 0)]);
        assert_eq!(out, LpOutcome::Unbounded);
    }

    #[test]
    fn redundant_equalities() {
        let out = minimize(
            &[r(1), r(2)],
            &[row(&[1, 1], Sense::Eq, 2), row(&[2, 2], Sense::Eq, 4)],
        );
        assert_eq!(
            out,
            LpOutcome::Optimal {
                x: vec![r(2), r(0)],
                value: r(2)
            }
        );
    }

    #[test]
    fn degenerate_vertex_terminates() {
        // Several constraints tight at the origin.
        let out = minimize(
            &[r(-3), r(-2), r(4)],
            &[
                row(&[1, -1, 0], Sense::Le, 0),
                row(&[1, 1, -2], Sense::Le, 0),
                row(&[0, 1, -1], Sense::Le, 0),
                row(&[0, 0, 1], Sense::Le, 1),
            ],
        );
        match out {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, r(-1)),
            other => panic!("{other:?}"),
        }
    }
}
