//! Dowker–Thistlethwaite codes: validation, planar realization and
//! extraction.

use std::fmt;

use super::{Crossing, Diagram, DiagramError, PlanarDiagram, Sign};

/// Even labels paired with the odd labels `1, 3, ..., 2n-1`. A negative
/// entry means the strand passes over at the even label.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DtCode {
    even_labels: Vec<i64>,
}

impl DtCode {
    pub fn new(even_labels: Vec<i64>) -> Result<Self, DiagramError> {
        let n = even_labels.len() as i64;
        let mut seen = vec![false; even_labels.len()];
        for &e in &even_labels {
            let a = e.abs();
            if a == 0 || a % 2 != 0 || a > 2 * n {
                return Err(DiagramError::InvalidDt(format!("label {e} is not an even number in 2..={}", 2 * n)));
            }
            let slot = (a / 2 - 1) as usize;
            if seen[slot] {
                return Err(DiagramError::InvalidDt(format!("label {a} repeated")));
            }
            seen[slot] = true;
        }
        Ok(DtCode { even_labels })
    }

    pub fn parse(text: &str) -> Result<Self, DiagramError> {
        let labels = text
            .split(|c: char| c.is_whitespace() || c == ',' || c == '[' || c == ']')
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<i64>().map_err(|_| DiagramError::Parse(format!("bad DT entry {t:?}"))))
            .collect::<Result<Vec<_>, _>>()?;
        DtCode::new(labels)
    }

    pub fn even_labels(&self) -> &[i64] {
        &self.even_labels
    }

    pub fn crossing_count(&self) -> usize {
        self.even_labels.len()
    }
}

impl fmt::Display for DtCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.even_labels.iter().map(|e| e.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Searches the rotation choices at every crossing for one whose face
/// count certifies a sphere embedding. Edges are numbered along the
/// traversal (edge `v` leaves visit `v`), and of the two mirror-image
/// embeddings the one with a positive first crossing is returned.
pub fn realize_dt(code: &DtCode) -> Result<Diagram, DiagramError> {
    let n = code.crossing_count();
    if n == 0 {
        return Ok(Diagram::unknot());
    }
    let m = 2 * n;
    let in_edge = |v: usize| (v + m - 1) % m;
    // (visit, incoming) roles per crossing, with the under visit.
    let specs: Vec<(usize, usize, usize)> = code
        .even_labels
        .iter()
        .enumerate()
        .map(|(i, &e)| {
            let (p, q) = (2 * i, e.unsigned_abs() as usize - 1);
            let under = if e > 0 { q } else { p };
            (p, q, under)
        })
        .collect();
    let build = |mask: u64| -> Vec<Crossing> {
        specs
            .iter()
            .enumerate()
            .map(|(i, &(p, q, under))| {
                let flip = i > 0 && (mask >> (i - 1)) & 1 == 1;
                let mut roles = if flip {
                    [(p, true), (q, false), (p, false), (q, true)]
                } else {
                    [(p, true), (q, true), (p, false), (q, false)]
                };
                let k = roles.iter().position(|&r| r == (under, true)).unwrap();
                roles.rotate_left(k);
                let edges = roles.map(|(v, inc)| if inc { in_edge(v) } else { v });
                let sign = if roles[3].1 { Sign::Positive } else { Sign::Negative };
                Crossing { edges, sign }
            })
            .collect()
    };
    for mask in 0..1u64 << (n - 1) {
        let crossings = build(mask);
        let planar = PlanarDiagram::from_compact(crossings.iter().map(|x| x.edges).collect(), 0);
        if planar.faces().len() != n + 2 {
            continue;
        }
        let d = Diagram::from_oriented(crossings, 0)?;
        return Ok(if d.crossings[0].sign == Sign::Negative { d.mirror() } else { d });
    }
    Err(DiagramError::NonPlanar)
}

impl Diagram {
    /// DT code read along the first component starting at its first edge.
    pub fn dt_code(&self) -> Result<DtCode, DiagramError> {
        if !self.is_knot() {
            return Err(DiagramError::NotAKnot);
        }
        let n = self.crossing_count();
        if n == 0 {
            return DtCode::new(Vec::new());
        }
        let mut odd = vec![None; n];
        let mut even = vec![None; n];
        for (j, &e) in self.components[0].iter().enumerate() {
            let (c, s) = self.tail(e);
            let label = j as i64 + 1;
            if label % 2 == 1 {
                odd[c] = Some(label);
            } else {
                even[c] = Some(if s == 2 { label } else { -label });
            }
        }
        let mut pairs = Vec::with_capacity(n);
        for c in 0..n {
            match (odd[c], even[c]) {
                (Some(o), Some(e)) => pairs.push((o, e)),
                _ => return Err(DiagramError::InvalidDt("crossing visited at labels of equal parity".into())),
            }
        }
        pairs.sort();
        DtCode::new(pairs.into_iter().map(|(_, e)| e).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(DtCode::parse("4 6 2").is_ok());
        assert!(DtCode::parse("4 6 3").is_err());
        assert!(DtCode::parse("4 4 2").is_err());
        assert!(DtCode::parse("4 8 2").is_err());
    }

    #[test]
    fn round_trip() {
        for text in ["4 6 2", "4 6 8 2", "2 4", "2", "4 12 16 20 18 2 8 6 10 14", "6 -10 -14 12 -16 -2 18 -4 -8"] {
            let code = DtCode::parse(text).unwrap();
            let d = realize_dt(&code).unwrap();
            assert_eq!(d.crossing_count(), code.crossing_count());
            assert!(d.planar().is_planar());
            assert_eq!(d.crossings()[0].sign, Sign::Positive);
            assert_eq!(d.dt_code().unwrap(), code);
        }
    }

    #[test]
    fn trefoil_is_alternating_positive() {
        let d = realize_dt(&DtCode::parse("4 6 2").unwrap()).unwrap();
        assert_eq!(d.writhe(), 3);
    }
}
