//! Exhaustive box enumeration, used as an oracle for the simplex path.
//!
//! Rows are scaled to integers once; every point of `[0, B]⁴` is then checked
//! in plain machine arithmetic. Points are visited in increasing
//! `(C3, C2, C1, C0)` order and only a strictly better objective replaces the
//! incumbent, so the first optimum found is the lexicographic one. When all
//! objective weights are nonnegative, partial sums that already reach the
//! incumbent are cut off.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};
use thiserror::Error;

use super::{ConstraintSystem, LinearConstraint, PointCounts, Var};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("empty box: no feasible point with every coordinate in [0, {bound}]")]
    EmptyBox { bound: u64 },
    #[error("box bound must be at least 1")]
    ZeroBound,
    #[error("coefficients too large for exhaustive search")]
    Overflow,
}

struct IntRow {
    coeffs: [i128; 4],
    rhs: i128,
}

fn integer_row(coeffs: &[BigRational; 4], rhs: &BigRational) -> Result<IntRow, OracleError> {
    let lcm = coeffs
        .iter()
        .chain(std::iter::once(rhs))
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let scale = |v: &BigRational| -> Result<i128, OracleError> {
        (v * BigRational::from_integer(lcm.clone()))
            .to_integer()
            .to_i128()
            .ok_or(OracleError::Overflow)
    };
    Ok(IntRow {
        coeffs: [
            scale(&coeffs[0])?,
            scale(&coeffs[1])?,
            scale(&coeffs[2])?,
            scale(&coeffs[3])?,
        ],
        rhs: scale(rhs)?,
    })
}

fn rows(list: &[LinearConstraint]) -> Result<Vec<IntRow>, OracleError> {
    list.iter()
        .map(|c| integer_row(&c.coeffs, &c.rhs))
        .collect()
}

fn dot(coeffs: &[i128; 4], p: &[i128; 4]) -> Option<i128> {
    let mut acc = 0i128;
    for (a, x) in coeffs.iter().zip(p) {
        acc = acc.checked_add(a.checked_mul(*x)?)?;
    }
    Some(acc)
}

/// Scans `[0, bound]⁴` and returns the feasible point of least objective,
/// ties broken by the smallest `(C3, C2, C1, C0)`.
pub fn brute_force_min(cs: &ConstraintSystem, bound: u64) -> Result<PointCounts, OracleError> {
    if bound == 0 {
        return Err(OracleError::ZeroBound);
    }
    let b = i128::from(bound);
    let eqs = rows(&cs.equalities)?;
    let ges = rows(&cs.inequalities)?;
    let zero = BigRational::from_integer(0.into());
    let obj = integer_row(&cs.objective, &zero)?.coeffs;
    let prunable = obj.iter().all(|c| *c >= 0);
    let even = [Var::C0, Var::C1, Var::C2, Var::C3].map(|v| cs.parities.contains(&v));

    let feasible = |p: &[i128; 4]| -> Option<bool> {
        for (i, e) in even.iter().enumerate() {
            if *e && p[i] % 2 != 0 {
                return Some(false);
            }
        }
        for r in &eqs {
            if dot(&r.coeffs, p)? != r.rhs {
                return Some(false);
            }
        }
        for r in &ges {
            if dot(&r.coeffs, p)? < r.rhs {
                return Some(false);
            }
        }
        Some(true)
    };

    let mut best: Option<([i128; 4], i128)> = None;
    let cut = |partial: i128, best: &Option<([i128; 4], i128)>| {
        prunable && best.as_ref().is_some_and(|(_, v)| partial >= *v)
    };

    for c3 in 0..=b {
        let s3 = obj[3] * c3;
        if cut(s3, &best) {
            break;
        }
        for c2 in 0..=b {
            let s2 = s3 + obj[2] * c2;
            if cut(s2, &best) {
                break;
            }
            for c1 in 0..=b {
                let s1 = s2 + obj[1] * c1;
                if cut(s1, &best) {
                    break;
                }
                for c0 in 0..=b {
                    let value = s1 + obj[0] * c0;
                    if cut(value, &best) {
                        break;
                    }
                    let p = [c0, c1, c2, c3];
                    if !feasible(&p).ok_or(OracleError::Overflow)? {
                        continue;
                    }
                    if best.as_ref().is_none_or(|(_, v)| value < *v) {
                        best = Some((p, value));
                    }
                }
            }
        }
    }

    let (p, _) = best.ok_or(OracleError::EmptyBox { bound })?;
    debug_assert!(p.iter().all(|v| !v.is_negative()));
    Ok(PointCounts::new(
        p[0] as u64,
        p[1] as u64,
        p[2] as u64,
        p[3] as u64,
    ))
}
