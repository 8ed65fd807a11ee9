//! Smith normal form over the integers with unimodular transforms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntMatrix;

/// `left * M * right == diag(diagonal)` with `d_1 | d_2 | ...`, all `d_i >= 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    pub diagonal: Vec<BigInt>,
    pub left: IntMatrix,
    pub right: IntMatrix,
}

struct Work {
    m: IntMatrix,
    left: IntMatrix,
    right: IntMatrix,
}

impl Work {
    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.m.cols() {
            let t = self.m[(a, j)].clone();
            self.m[(a, j)] = std::mem::replace(&mut self.m[(b, j)], t);
        }
        for j in 0..self.left.cols() {
            let t = self.left[(a, j)].clone();
            self.left[(a, j)] = std::mem::replace(&mut self.left[(b, j)], t);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.m.rows() {
            let t = self.m[(i, a)].clone();
            self.m[(i, a)] = std::mem::replace(&mut self.m[(i, b)], t);
        }
        for i in 0..self.right.rows() {
            let t = self.right[(i, a)].clone();
            self.right[(i, a)] = std::mem::replace(&mut self.right[(i, b)], t);
        }
    }

    /// row_dst -= f * row_src
    fn sub_row(&mut self, dst: usize, src: usize, f: &BigInt) {
        for j in 0..self.m.cols() {
            let d = f * &self.m[(src, j)];
            self.m[(dst, j)] -= d;
        }
        for j in 0..self.left.cols() {
            let d = f * &self.left[(src, j)];
            self.left[(dst, j)] -= d;
        }
    }

    /// col_dst -= f * col_src
    fn sub_col(&mut self, dst: usize, src: usize, f: &BigInt) {
        for i in 0..self.m.rows() {
            let d = f * &self.m[(i, src)];
            self.m[(i, dst)] -= d;
        }
        for i in 0..self.right.rows() {
            let d = f * &self.right[(i, src)];
            self.right[(i, dst)] -= d;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.m.cols() {
            self.m[(r, j)] = -&self.m[(r, j)];
        }
        for j in 0..self.left.cols() {
            self.left[(r, j)] = -&self.left[(r, j)];
        }
    }
}

/// Reduces `m` by elementary operations, always pivoting on the smallest
/// nonzero absolute entry of the remaining block.
pub fn smith_normal_form(m: &IntMatrix) -> SnfResult {
    let (rows, cols) = (m.rows(), m.cols());
    let mut w = Work { m: m.clone(), left: IntMatrix::identity(rows), right: IntMatrix::identity(cols) };
    let n = rows.min(cols);
    for t in 0..n {
        loop {
            let pivot = (t..rows)
                .flat_map(|i| (t..cols).map(move |j| (i, j)))
                .filter(|&(i, j)| !w.m[(i, j)].is_zero())
                .min_by_key(|&(i, j)| w.m[(i, j)].abs());
            let Some((pi, pj)) = pivot else { break };
            w.swap_rows(t, pi);
            w.swap_cols(t, pj);
            let p = w.m[(t, t)].clone();
            let mut clean = true;
            for i in t + 1..rows {
                if w.m[(i, t)].is_zero() {
                    continue;
                }
                let q = w.m[(i, t)].div_floor(&p);
                w.sub_row(i, t, &q);
                clean &= w.m[(i, t)].is_zero();
            }
            for j in t + 1..cols {
                if w.m[(t, j)].is_zero() {
                    continue;
                }
                let q = w.m[(t, j)].div_floor(&p);
                w.sub_col(j, t, &q);
                clean &= w.m[(t, j)].is_zero();
            }
            if !clean {
                continue;
            }
            // Divisibility: fold any offending row into the pivot row and retry.
            let bad = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !w.m[(i, j)].is_multiple_of(&p));
            match bad {
                Some((i, _)) => {
                    let minus_one = BigInt::from(-1);
                    w.sub_row(t, i, &minus_one);
                }
                None => break,
            }
        }
        if w.m[(t, t)].is_negative() {
            w.negate_row(t);
        }
    }
    let diagonal = (0..n).map(|i| w.m[(i, i)].clone()).collect();
    SnfResult { diagonal, left: w.left, right: w.right }
}
