//! Faces and checkerboard shading of connected diagrams.

use std::collections::VecDeque;

use super::{Corner, Diagram, DiagramError, Sign};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Color {
    White,
    Black,
}

impl Color {
    pub fn other(self) -> Color {
        match self {
            Color::White => Color::Black,
            Color::Black => Color::White,
        }
    }
}

/// Gordon–Litherland crossing type with respect to the surface formed by
/// faces of one color: type II when the oriented smoothing joins the two
/// corners of that color.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CrossingType {
    I,
    II,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    /// Corners in boundary order.
    pub corners: Vec<Corner>,
    /// Edges in boundary order; edge `k` runs from corner `k` to corner `k+1`.
    pub edges: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceData {
    pub faces: Vec<Face>,
    pub shading: Vec<Color>,
    /// Types with respect to the white surface.
    pub crossing_types: Vec<CrossingType>,
    /// Face index of every corner.
    pub corner_face: Vec<[usize; 4]>,
    pub unbounded: usize,
}

impl FaceData {
    pub fn corner_color(&self, c: usize, i: usize) -> Color {
        self.shading[self.corner_face[c][i]]
    }

    /// Crossing types with respect to the surface of the given color.
    pub fn crossing_types_for(&self, surface: Color) -> Vec<CrossingType> {
        match surface {
            Color::White => self.crossing_types.clone(),
            Color::Black => self
                .crossing_types
                .iter()
                .map(|t| match t {
                    CrossingType::I => CrossingType::II,
                    CrossingType::II => CrossingType::I,
                })
                .collect(),
        }
    }
}

/// Faces, proper two-coloring with the unbounded face white, and crossing
/// types. The unbounded face is taken to be a face with the most corners.
pub fn checkerboard(d: &Diagram) -> Result<FaceData, DiagramError> {
    let n = d.crossing_count();
    if n == 0 {
        if d.free_loops() != 1 {
            return Err(DiagramError::Disconnected);
        }
        let empty = || Face { corners: Vec::new(), edges: Vec::new() };
        return Ok(FaceData {
            faces: vec![empty(), empty()],
            shading: vec![Color::White, Color::Black],
            crossing_types: Vec::new(),
            corner_face: Vec::new(),
            unbounded: 0,
        });
    }
    let planar = d.planar();
    if d.free_loops() > 0 || planar.pieces().len() > 1 {
        return Err(DiagramError::Disconnected);
    }
    let corner_lists = planar.faces();
    let mut corner_face = vec![[usize::MAX; 4]; n];
    for (f, corners) in corner_lists.iter().enumerate() {
        for &(c, i) in corners {
            corner_face[c][i] = f;
        }
    }
    let faces: Vec<Face> = corner_lists
        .into_iter()
        .map(|corners| {
            let edges = corners.iter().map(|&(c, i)| d.crossings()[c].edges[(i + 1) % 4]).collect();
            Face { corners, edges }
        })
        .collect();
    let unbounded = (0..faces.len()).max_by_key(|&f| (faces[f].corners.len(), std::cmp::Reverse(f))).unwrap();
    let mut shading: Vec<Option<Color>> = vec![None; faces.len()];
    shading[unbounded] = Some(Color::White);
    let mut queue = VecDeque::from([unbounded]);
    while let Some(f) = queue.pop_front() {
        let color = shading[f].unwrap();
        for &(c, i) in &faces[f].corners {
            for j in [(i + 1) % 4, (i + 3) % 4] {
                let g = corner_face[c][j];
                match shading[g] {
                    None => {
                        shading[g] = Some(color.other());
                        queue.push_back(g);
                    }
                    Some(existing) if existing == color => return Err(DiagramError::NonPlanar),
                    Some(_) => {}
                }
            }
        }
    }
    let shading: Vec<Color> = shading.into_iter().map(|c| c.expect("connected diagram")).collect();
    let crossing_types = d
        .crossings()
        .iter()
        .enumerate()
        .map(|(c, x)| {
            // The oriented smoothing joins corners 1 and 3 at a positive
            // crossing and corners 0 and 2 at a negative one.
            let joined = match x.sign {
                Sign::Positive => 1,
                Sign::Negative => 0,
            };
            if shading[corner_face[c][joined]] == Color::White {
                CrossingType::II
            } else {
                CrossingType::I
            }
        })
        .collect();
    Ok(FaceData { faces, shading, crossing_types, corner_face, unbounded })
}

#[cfg(test)]
mod tests {
    use super::super::parse_pd;
    use super::*;

    #[test]
    fn trefoil_faces() {
        let d = parse_pd("X 1 5 2 4\nX 3 1 4 6\nX 5 3 6 2").unwrap();
        let f = checkerboard(&d).unwrap();
        assert_eq!(f.faces.len(), 5);
        assert_eq!(d.crossing_count() as i64 - d.edge_count() as i64 + f.faces.len() as i64, 2);
        assert_eq!(f.shading[f.unbounded], Color::White);
        for c in 0..3 {
            for i in 0..4 {
                assert_ne!(f.corner_color(c, i), f.corner_color(c, (i + 1) % 4));
            }
        }
        let sizes: Vec<usize> = f.faces.iter().map(|face| face.edges.len()).collect();
        assert_eq!(sizes.iter().sum::<usize>(), 12);
    }

    #[test]
    fn unknot_and_split() {
        assert_eq!(checkerboard(&Diagram::unknot()).unwrap().faces.len(), 2);
        assert!(matches!(checkerboard(&Diagram::unlink(2)), Err(DiagramError::Disconnected)));
    }
}
