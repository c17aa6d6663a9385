//! Depth-first branch-and-bound on top of the exact simplex.
//!
//! All variables are nonnegative integers. Branching picks the first
//! fractional coordinate of the relaxation and splits on its floor/ceiling.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;

use super::simplex::{minimize, LpOutcome, Row, Sense};
use super::SolveError;

pub(crate) const NODE_LIMIT: usize = 100_000;

#[derive(Debug, Clone)]
pub(crate) struct IntegerProgram {
    pub objective: Vec<BigRational>,
    pub rows: Vec<Row>,
}

#[derive(Debug, Clone, PartialEq)]
pub(crate) struct IntegerOptimum {
    pub x: Vec<BigInt>,
    pub value: BigRational,
}

fn floor(v: &BigRational) -> BigInt {
    v.numer().div_floor(v.denom())
}

pub(crate) fn solve(program: &IntegerProgram) -> Result<IntegerOptimum, SolveError> {
    let n = program.objective.len();
    let mut stack: Vec<Vec<Row>> = vec![Vec::new()];
    let mut best: Option<IntegerOptimum> = None;
    let mut nodes = 0usize;

    while let Some(extra) = stack.pop() {
        nodes += 1;
        if nodes > NODE_LIMIT {
            return Err(SolveError::NodeLimit(NODE_LIMIT));
        }
        let rows: Vec<Row> = program
            .rows
            .iter()
            .cloned()
            .chain(extra.iter().cloned())
            .collect();
        let (x, value) = match minimize(&program.objective, &rows) {
            LpOutcome::Infeasible => continue,
            // A bounded subproblem cannot have an unbounded child, so this is
            // only reachable at the root.
            LpOutcome::Unbounded => return Err(SolveError::Unbounded),
            LpOutcome::Optimal { x, value } => (x, value),
        };
        if best.as_ref().is_some_and(|b| value >= b.value) {
            continue;
        }
        match x.iter().position(|v| !v.is_integer()) {
            None => {
                best = Some(IntegerOptimum {
                    x: x.iter().map(|v| v.to_integer()).collect(),
                    value,
                });
            }
            Some(j) => {
                let lo = floor(&x[j]);
                let mut up = extra.clone();
                up.push(Row::bound(
                    n,
                    j,
                    Sense::Ge,
                    BigRational::from_integer(&lo + 1),
                ));
                let mut down = extra;
                down.push(Row::bound(n, j, Sense::Le, BigRational::from_integer(lo)));
                stack.push(up);
                stack.push(down);
            }
        }
    }
    best.ok_or(SolveError::Infeasible)
}
