//! Dense integer and rational matrices.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::AlgebraError;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Fails with `DimensionMismatch` on ragged input.
    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Result<Self, AlgebraError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(AlgebraError::DimensionMismatch);
        }
        let data = rows.iter().flat_map(|row| row.iter().cloned().map(Into::into)).collect();
        Ok(IntMatrix { rows: r, cols: c, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.data[i * self.cols..(i + 1) * self.cols].to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix, AlgebraError> {
        if self.cols != other.rows {
            return Err(AlgebraError::DimensionMismatch);
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * &other[(k, j)];
                }
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> IntMatrix {
        IntMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| -x).collect() }
    }

    /// Deletes row and column `k` of a square matrix.
    pub fn minor(&self, k: usize) -> IntMatrix {
        let n = self.rows;
        let mut out = Self::zeros(n - 1, n - 1);
        for (oi, i) in (0..n).filter(|&i| i != k).enumerate() {
            for (oj, j) in (0..n).filter(|&j| j != k).enumerate() {
                out[(oi, oj)] = self[(i, j)].clone();
            }
        }
        out
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<BigInt, AlgebraError> {
        if !self.is_square() {
            return Err(AlgebraError::DimensionMismatch);
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a = self.to_rows();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(p) => {
                        a.swap(k, p);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                    a[i][j] = v;
                }
            }
            prev = a[k][k].clone();
        }
        Ok(sign * &a[n - 1][n - 1])
    }

    pub fn to_rational(&self) -> RationalMatrix {
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| BigRational::from_integer(x.clone())).collect(),
        }
    }

    /// Exact inverse over the rationals.
    pub fn rational_inverse(&self) -> Result<RationalMatrix, AlgebraError> {
        self.to_rational().inverse()
    }

    /// Signature (positive minus negative eigenvalue count) of a symmetric matrix,
    /// by congruence diagonalisation over the rationals.
    pub fn signature(&self) -> Result<i64, AlgebraError> {
        if !self.is_symmetric() {
            return Err(AlgebraError::NotSymmetric);
        }
        let mut m = self.to_rational();
        let n = self.rows;
        let mut sig = 0i64;
        let mut k = 0;
        while k < n {
            if m[(k, k)].is_zero() {
                if let Some(p) = (k + 1..n).find(|&i| !m[(i, i)].is_zero()) {
                    m.swap_sym(k, p);
                } else if let Some(p) = (k + 1..n).find(|&i| !m[(k, i)].is_zero()) {
                    // Replace e_k by e_k + e_p: the new diagonal entry is 2 m_kp.
                    m.add_sym(k, p, &BigRational::one());
                } else {
                    k += 1;
                    continue;
                }
            }
            let pivot = m[(k, k)].clone();
            sig += if pivot.is_positive() { 1 } else { -1 };
            for i in k + 1..n {
                let f = &m[(i, k)] / &pivot;
                if f.is_zero() {
                    continue;
                }
                m.add_sym(i, k, &-f);
            }
            k += 1;
        }
        Ok(sig)
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self[(i, j)].to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn identity(n: usize) -> Self {
        let mut data = vec![BigRational::zero(); n * n];
        for i in 0..n {
            data[i * n + i] = BigRational::one();
        }
        RationalMatrix { rows: n, cols: n, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn mul(&self, other: &RationalMatrix) -> Result<RationalMatrix, AlgebraError> {
        if self.cols != other.rows {
            return Err(AlgebraError::DimensionMismatch);
        }
        let mut data = vec![BigRational::zero(); self.rows * other.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    data[i * other.cols + j] += a * &other[(k, j)];
                }
            }
        }
        Ok(RationalMatrix { rows: self.rows, cols: other.cols, data })
    }

    /// Gauss-Jordan inverse.
    pub fn inverse(&self) -> Result<RationalMatrix, AlgebraError> {
        if self.rows != self.cols {
            return Err(AlgebraError::DimensionMismatch);
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = RationalMatrix::identity(n);
        for col in 0..n {
            let p = (col..n).find(|&r| !a[(r, col)].is_zero()).ok_or(AlgebraError::Singular)?;
            a.swap_rows(col, p);
            inv.swap_rows(col, p);
            let piv = a[(col, col)].clone();
            for j in 0..n {
                a[(col, j)] = &a[(col, j)] / &piv;
                inv[(col, j)] = &inv[(col, j)] / &piv;
            }
            for r in 0..n {
                if r == col || a[(r, col)].is_zero() {
                    continue;
                }
                let f = a[(r, col)].clone();
                for j in 0..n {
                    let da = &f * &a[(col, j)];
                    a[(r, j)] -= da;
                    let di = &f * &inv[(col, j)];
                    inv[(r, j)] -= di;
                }
            }
        }
        Ok(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_sym(&mut self, a: usize, b: usize) {
        self.swap_rows(a, b);
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// Row op `r_i += f r_j` followed by the matching column op.
    fn add_sym(&mut self, i: usize, j: usize, f: &BigRational) {
        for c in 0..self.cols {
            let d = f * &self[(j, c)];
            self[(i, c)] += d;
        }
        for r in 0..self.rows {
            let d = f * &self[(r, j)];
            self[(r, i)] += d;
        }
    }
}

impl std::ops::Index<(usize, usize)> for RationalMatrix {
    type Output = BigRational;
    fn index(&self, (i, j): (usize, usize)) -> &BigRational {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RationalMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigRational {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self[(i, j)].to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn goeritz_10_105() -> IntMatrix {
        m(&[&[5, 0, -2, -2], &[0, 4, -2, -1], &[-2, -2, 5, 0], &[-2, -1, 0, 3]])
    }

    /// Cofactor expansion, independent of the elimination path.
    fn cofactor_det(a: &[Vec<i64>]) -> i64 {
        let n = a.len();
        if n == 0 {
            return 1;
        }
        (0..n)
            .map(|j| {
                let sub: Vec<Vec<i64>> =
                    a[1..].iter().map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &v)| v).collect()).collect();
                let s = if j % 2 == 0 { 1 } else { -1 };
                s * a[0][j] * cofactor_det(&sub)
            })
            .sum()
    }

    #[test]
    fn determinant_matches_cofactor_expansion() {
        let g = goeritz_10_105();
        let rows: Vec<Vec<i64>> = vec![vec![5, 0, -2, -2], vec![0, 4, -2, -1], vec![-2, -2, 5, 0], vec![-2, -1, 0, 3]];
        assert_eq!(cofactor_det(&rows), 91);
        assert_eq!(g.determinant().unwrap(), BigInt::from(91));
        assert_eq!(m(&[&[0, 1], &[1, 0]]).determinant().unwrap(), BigInt::from(-1));
        assert_eq!(IntMatrix::zeros(0, 0).determinant().unwrap(), BigInt::one());
    }

    #[test]
    fn rational_inverse_examples() {
        assert_eq!(IntMatrix::identity(3).rational_inverse().unwrap(), RationalMatrix::identity(3));
        let inv = m(&[&[3]]).rational_inverse().unwrap();
        assert_eq!(inv[(0, 0)], BigRational::new(1.into(), 3.into()));
        // Entry (4,4): cofactor of the leading 3x3 block over the determinant.
        let lead = vec![vec![5, 0, -2], vec![0, 4, -2], vec![-2, -2, 5]];
        assert_eq!(cofactor_det(&lead), 64);
        let inv = goeritz_10_105().rational_inverse().unwrap();
        assert_eq!(inv[(3, 3)], BigRational::new(64.into(), 91.into()));
        let prod = goeritz_10_105().to_rational().mul(&inv).unwrap();
        assert_eq!(prod, RationalMatrix::identity(4));
        assert!(matches!(m(&[&[1, 2], &[2, 4]]).rational_inverse(), Err(AlgebraError::Singular)));
    }

    #[test]
    fn signature_examples() {
        assert_eq!(goeritz_10_105().signature().unwrap(), 4);
        assert_eq!(m(&[&[0, 1], &[1, 0]]).signature().unwrap(), 0);
        assert_eq!(m(&[&[-3]]).signature().unwrap(), -1);
        assert_eq!(m(&[&[1, 2], &[2, 1]]).signature().unwrap(), 0);
        assert_eq!(m(&[&[0, 0], &[0, 0]]).signature().unwrap(), 0);
        assert!(m(&[&[0, 1], &[2, 0]]).signature().is_err());
    }
}
