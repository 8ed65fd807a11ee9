//! Goeritz matrices, the Gordon–Litherland correction and the signature.

use num_bigint::BigInt;

use crate::algebra::IntMatrix;
use crate::diagram::{checkerboard, Color, CrossingType, Diagram};

use super::CoveringError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoeritzData {
    /// Symmetric; one row per face of the row color, one face deleted.
    pub matrix: IntMatrix,
    /// Gordon–Litherland correction; absent for a bare input matrix.
    pub mu: Option<i64>,
    /// Face index of every row.
    pub face_index: Vec<usize>,
}

impl GoeritzData {
    /// Wraps a bare symmetric matrix (no diagram, hence no correction term).
    pub fn from_matrix(matrix: IntMatrix) -> Result<Self, CoveringError> {
        if !matrix.is_symmetric() {
            return Err(CoveringError::NotSymmetric);
        }
        let face_index = (0..matrix.rows()).collect();
        Ok(GoeritzData { matrix, mu: None, face_index })
    }

    /// `σ = μ - sig(U)`, normalized so that the positive trefoil has `σ = 2`.
    pub fn signature(&self) -> Option<i64> {
        let sig = self.matrix.signature().expect("Goeritz matrices are square");
        self.mu.map(|mu| mu - sig)
    }
}

/// Goeritz matrix on the black faces (the unbounded face is white), with
/// the last black face deleted.
pub fn goeritz(d: &Diagram) -> Result<GoeritzData, CoveringError> {
    goeritz_for(d, Color::Black)
}

/// Goeritz matrix on the faces of `rows`; the spanning surface is made of
/// the faces of the other color. At a crossing whose row-colored corners
/// are the B-corners the incidence sign is `+1`, otherwise `-1`; type II
/// crossings (the oriented smoothing joins two surface corners) contribute
/// their incidence sign to the correction term.
pub fn goeritz_for(d: &Diagram, rows: Color) -> Result<GoeritzData, CoveringError> {
    let fd = checkerboard(d)?;
    let row_faces: Vec<usize> = (0..fd.faces.len()).filter(|&f| fd.shading[f] == rows).collect();
    let deleted = if rows == Color::White { fd.unbounded } else { *row_faces.last().expect("a black face exists") };
    let face_index: Vec<usize> = row_faces.iter().copied().filter(|&f| f != deleted).collect();
    let mut position = vec![usize::MAX; fd.faces.len()];
    for (i, &f) in face_index.iter().enumerate() {
        position[f] = i;
    }
    let m = face_index.len();
    let mut full = vec![vec![0i64; fd.faces.len()]; fd.faces.len()];
    let types = fd.crossing_types_for(rows.other());
    let mut mu = 0i64;
    for (c, ty) in types.iter().enumerate().take(d.crossing_count()) {
        let first = if fd.corner_color(c, 0) == rows { 0 } else { 1 };
        let eta = if first == 0 { 1 } else { -1 };
        let (f, g) = (fd.corner_face[c][first], fd.corner_face[c][first + 2]);
        if f != g {
            full[f][g] -= eta;
            full[g][f] -= eta;
        }
        if *ty == CrossingType::II {
            mu += eta;
        }
    }
    let mut matrix = IntMatrix::zeros(m, m);
    for (i, &f) in face_index.iter().enumerate() {
        let mut diagonal = 0i64;
        for (g, &entry) in full[f].iter().enumerate() {
            if g == f {
                continue;
            }
            diagonal -= entry;
            if position[g] != usize::MAX {
                matrix[(i, position[g])] = BigInt::from(entry);
            }
        }
        matrix[(i, i)] = BigInt::from(diagonal);
    }
    Ok(GoeritzData { matrix, mu: Some(mu), face_index })
}

pub fn signature(d: &Diagram) -> Result<i64, CoveringError> {
    Ok(goeritz(d)?.signature().expect("diagram Goeritz data carries μ"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_pd;

    #[test]
    fn trefoil() {
        let d = parse_pd("X 1 5 2 4\nX 3 1 4 6\nX 5 3 6 2").unwrap();
        for color in [Color::Black, Color::White] {
            let g = goeritz_for(&d, color).unwrap();
            assert_eq!(g.matrix.determinant().unwrap().magnitude(), &3u32.into());
            assert_eq!(g.signature(), Some(2));
        }
        assert_eq!(signature(&d.mirror()).unwrap(), -2);
    }

    #[test]
    fn unknot() {
        let g = goeritz(&Diagram::unknot()).unwrap();
        assert_eq!(g.matrix.rows(), 0);
        assert_eq!(g.signature(), Some(0));
    }
}
