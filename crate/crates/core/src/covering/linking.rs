//! First homology of the cover and its linking form.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::algebra::{smith_normal_form, IntMatrix, RationalMatrix};

use super::CoveringError;

/// Largest group order for which the self-linking spectrum is enumerated.
pub const SPECTRUM_CAP: u64 = 1_000_000;

/// A finite abelian group given by invariant factors `d_1 | d_2 | ...`,
/// all greater than one.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbelianGroup {
    pub factors: Vec<BigInt>,
}

impl AbelianGroup {
    pub fn order(&self) -> BigInt {
        self.factors.iter().product()
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn is_cyclic(&self) -> bool {
        self.factors.len() <= 1
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.factors.iter().map(|d| format!("Z/{d}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `coker(matrix)`, which must be finite.
pub fn homology(matrix: &IntMatrix) -> Result<AbelianGroup, CoveringError> {
    Ok(decompose(matrix)?.0)
}

/// Cyclic decomposition plus generators, as columns in the original basis.
fn decompose(matrix: &IntMatrix) -> Result<(AbelianGroup, Vec<Vec<BigInt>>), CoveringError> {
    if !matrix.is_square() {
        return Err(crate::algebra::AlgebraError::DimensionMismatch.into());
    }
    let snf = smith_normal_form(matrix);
    if snf.diagonal.len() < matrix.rows() || snf.diagonal.iter().any(Zero::is_zero) {
        return Err(CoveringError::Singular);
    }
    // left * M * right = D, so x -> left x identifies coker M with coker D.
    let back = snf.left.rational_inverse()?;
    let mut factors = Vec::new();
    let mut gens = Vec::new();
    for (i, d) in snf.diagonal.iter().enumerate() {
        if d.is_one() {
            continue;
        }
        factors.push(d.clone());
        gens.push((0..matrix.rows()).map(|r| back[(r, i)].to_integer()).collect());
    }
    Ok((AbelianGroup { factors }, gens))
}

/// `λ(x, y) = xᵀ U⁻¹ y mod 1` on `coker U`, written in a basis adapted to
/// the cyclic decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkingForm {
    pub group: AbelianGroup,
    /// Generators in the coordinates of the input matrix.
    pub generators: Vec<Vec<BigInt>>,
    /// Gram matrix, entries reduced into `[0, 1)`.
    pub gram: Vec<Vec<BigRational>>,
}

pub fn linking_form(matrix: &IntMatrix) -> Result<LinkingForm, CoveringError> {
    if !matrix.is_symmetric() {
        return Err(CoveringError::NotSymmetric);
    }
    let (group, generators) = decompose(matrix)?;
    let inverse = matrix.rational_inverse()?;
    let gram = generators
        .iter()
        .map(|x| generators.iter().map(|y| frac(&pair(&inverse, x, y))).collect())
        .collect();
    Ok(LinkingForm { group, generators, gram })
}

fn pair(inverse: &RationalMatrix, x: &[BigInt], y: &[BigInt]) -> BigRational {
    let mut total = BigRational::zero();
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        for (j, yj) in y.iter().enumerate() {
            if !yj.is_zero() {
                total += &inverse[(i, j)] * BigRational::from_integer(xi * yj);
            }
        }
    }
    total
}

fn frac(q: &BigRational) -> BigRational {
    q - BigRational::from_integer(q.floor().to_integer())
}

/// Self-linking `λ(x, x)` of one element, reduced into `[0, 1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SelfLinking {
    /// Mixed-radix index of the element, first coordinate fastest.
    pub index: u64,
    pub order: u64,
    pub numerator: u64,
    pub denominator: u64,
}

impl SelfLinking {
    pub fn value(&self) -> BigRational {
        BigRational::new(self.numerator.into(), self.denominator.into())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spectrum {
    pub group_order: u64,
    pub entries: Vec<SelfLinking>,
}

impl Spectrum {
    /// Elements generating the whole group (empty unless it is cyclic).
    pub fn generators(&self) -> impl Iterator<Item = &SelfLinking> {
        self.entries.iter().filter(move |e| e.order == self.group_order)
    }

    /// Whether some generator has self-linking `value` modulo one.
    pub fn has_generator_with(&self, value: &BigRational) -> bool {
        let target = frac(value);
        self.generators().any(|e| e.value() == target)
    }

    /// Whether some element at all has self-linking `value` modulo one.
    pub fn has_element_with(&self, value: &BigRational) -> bool {
        let target = frac(value);
        self.entries.iter().any(|e| e.value() == target)
    }

    /// The spectrum of the negated form, as for the mirror image.
    pub fn negated(&self) -> Spectrum {
        let entries = self
            .entries
            .iter()
            .map(|e| {
                let numerator = if e.numerator == 0 { 0 } else { e.denominator - e.numerator };
                SelfLinking { numerator, ..*e }
            })
            .collect();
        Spectrum { group_order: self.group_order, entries }
    }

    /// Sorted distinct self-linking values of generators.
    pub fn generator_values(&self) -> Vec<BigRational> {
        let mut values: Vec<BigRational> = self.generators().map(SelfLinking::value).collect();
        values.sort();
        values.dedup();
        values
    }
}

impl LinkingForm {
    pub fn coordinates(&self, index: u64) -> Vec<u64> {
        let mut rest = index;
        self.group
            .factors
            .iter()
            .map(|d| {
                let d = d.to_u64().expect("enumerated factors fit in u64");
                let c = rest % d;
                rest /= d;
                c
            })
            .collect()
    }

    /// `λ(x, x)` for every element of the group.
    pub fn self_linking_spectrum(&self, cap: u64) -> Result<Spectrum, CoveringError> {
        let order = self.group.order();
        let n = match order.to_u64() {
            Some(n) if n <= cap => n,
            _ => return Err(CoveringError::CapExceeded { order: order.to_string(), cap }),
        };
        let factors: Vec<u64> = self.group.factors.iter().map(|d| d.to_u64().unwrap()).collect();
        let exponent = factors.last().copied().unwrap_or(1);
        // Every entry has denominator dividing the exponent of the group.
        let scaled: Vec<Vec<u128>> = self
            .gram
            .iter()
            .map(|row| {
                row.iter()
                    .map(|q| (q * BigRational::from_integer(exponent.into())).to_integer().to_u128().unwrap())
                    .collect()
            })
            .collect();
        let m = exponent as u128;
        let entries = (0..n)
            .into_par_iter()
            .map(|index| {
                let c = self.coordinates(index);
                let mut num = 0u128;
                let mut order = 1u64;
                for i in 0..c.len() {
                    order = order.lcm(&(factors[i] / c[i].gcd(&factors[i])));
                    if c[i] == 0 {
                        continue;
                    }
                    num = (num + c[i] as u128 * c[i] as u128 % m * scaled[i][i]) % m;
                    for j in i + 1..c.len() {
                        num = (num + 2 * (c[i] as u128 * c[j] as u128 % m) * scaled[i][j]) % m;
                    }
                }
                let g = (num as u64).gcd(&exponent);
                let (numerator, denominator) = if num == 0 { (0, 1) } else { (num as u64 / g, exponent / g) };
                SelfLinking { index, order, numerator, denominator }
            })
            .collect();
        Ok(Spectrum { group_order: n, entries })
    }
}

/// Parses a whitespace- or comma-separated integer matrix, one row per line
/// or separated by `;` or `]`. Other brackets are ignored and `#` starts a
/// comment.
pub fn parse_matrix(text: &str) -> Result<IntMatrix, CoveringError> {
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for line in text.lines() {
        let line = line.split('#').next().unwrap_or("");
        for chunk in line.split([';', ']']) {
            let cleaned: String = chunk.chars().map(|c| if "[](),".contains(c) { ' ' } else { c }).collect();
            let row = cleaned
                .split_whitespace()
                .map(|tok| tok.parse::<BigInt>().map_err(|_| CoveringError::Parse(format!("bad entry {tok:?}"))))
                .collect::<Result<Vec<_>, _>>()?;
            if !row.is_empty() {
                rows.push(row);
            }
        }
    }
    let m = IntMatrix::from_rows(&rows).map_err(|_| CoveringError::Parse("rows have different lengths".into()))?;
    if !m.is_square() {
        return Err(CoveringError::Parse(format!("{}x{} matrix is not square", m.rows(), m.cols())));
    }
    Ok(m)
}
