//! Kauffman bracket by state enumeration, and the Jones polynomial.

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::algebra::{LaurentPoly, Variable};
use crate::diagram::{Diagram, PlanarDiagram, Smoothing};

use super::InvariantError;

/// `-A^2 - A^-2`, the value of a circle.
pub fn loop_value() -> LaurentPoly {
    LaurentPoly::from_terms(Variable::A, &[(2, -1), (-2, -1)])
}

fn check_budget(n: usize, budget: usize) -> Result<(), InvariantError> {
    if n > budget {
        Err(InvariantError::BudgetExceeded { crossings: n, budget })
    } else {
        Ok(())
    }
}

/// Circle count of one state; bit `c` of `state` selects a B-splitting at
/// crossing `c`.
fn circles(xs: &[[usize; 4]], state: u64, parent: &mut [usize]) -> usize {
    for (i, p) in parent.iter_mut().enumerate() {
        *p = i;
    }
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut classes = parent.len();
    for (c, x) in xs.iter().enumerate() {
        let mode = if state >> c & 1 == 1 { Smoothing::B } else { Smoothing::A };
        for (p, q) in mode.pairs() {
            let (a, b) = (find(parent, x[p]), find(parent, x[q]));
            if a != b {
                parent[a.max(b)] = a.min(b);
                classes -= 1;
            }
        }
    }
    classes
}

/// State sum over all `2^n` splittings.
pub fn bracket_planar(d: &PlanarDiagram, budget: usize) -> Result<LaurentPoly, InvariantError> {
    let n = d.crossing_count();
    check_budget(n, budget)?;
    let xs = d.crossings();
    let edges = d.edge_count();
    let max_loops = edges.max(1);
    // counts[#B][#circles]
    let counts = (0..1u64 << n)
        .into_par_iter()
        .fold(
            || (vec![vec![0u64; max_loops + 1]; n + 1], vec![0usize; edges]),
            |(mut acc, mut parent), state| {
                let loops = circles(xs, state, &mut parent);
                acc[state.count_ones() as usize][loops] += 1;
                (acc, parent)
            },
        )
        .map(|(acc, _)| acc)
        .reduce(
            || vec![vec![0u64; max_loops + 1]; n + 1],
            |mut a, b| {
                for (ra, rb) in a.iter_mut().zip(b) {
                    for (x, y) in ra.iter_mut().zip(rb) {
                        *x += y;
                    }
                }
                a
            },
        );
    let delta = loop_value();
    let mut powers = vec![LaurentPoly::one(Variable::A)];
    for k in 1..=max_loops + d.free_loops() {
        powers.push(&powers[k - 1] * &delta);
    }
    let mut total = LaurentPoly::zero(Variable::A);
    for (b, row) in counts.iter().enumerate() {
        for (loops, &k) in row.iter().enumerate() {
            if k == 0 {
                continue;
            }
            let circles = loops + d.free_loops();
            let term = LaurentPoly::monomial(Variable::A, BigInt::from(k), n as i64 - 2 * b as i64);
            total = &total + &(&term * &powers[circles - 1]);
        }
    }
    if n == 0 {
        total = powers[d.free_loops().max(1) - 1].clone();
    }
    Ok(total)
}

pub fn kauffman_bracket(d: &Diagram, budget: usize) -> Result<LaurentPoly, InvariantError> {
    bracket_planar(&d.planar(), budget)
}

/// `V(t) = (-t^{-3/4})^{-w} <D>` at `A = t^{-1/4}`.
pub fn jones_from_bracket(bracket: &LaurentPoly, writhe: i64) -> LaurentPoly {
    let in_t = bracket.substitute_power(Variable::T, -1, 4).expect("quarter grid maps exactly");
    let signed = if writhe % 2 == 0 { in_t } else { -in_t };
    signed.shift_quarter(3 * writhe)
}

pub fn jones(d: &Diagram, budget: usize) -> Result<LaurentPoly, InvariantError> {
    Ok(jones_from_bracket(&kauffman_bracket(d, budget)?, d.writhe()))
}
