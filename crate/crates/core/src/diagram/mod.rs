//! Oriented knot and link diagrams: construction, skein moves, mirror
//! images, connected sums and checkerboard structure.

mod braid;
mod dt;
mod faces;
mod pd;
mod planar;

pub use braid::braid_closure;
pub use dt::{realize_dt, DtCode};
pub use faces::{checkerboard, Color, CrossingType, Face, FaceData};
pub use pd::parse_pd;
pub use planar::{Corner, PlanarDiagram, Smoothing};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("edge label {0} occurs only once")]
    DanglingEdge(usize),
    #[error("edge label {0} occurs more than twice")]
    RepeatedEdge(usize),
    #[error("edge orientations are inconsistent")]
    InconsistentOrientation,
    #[error("diagram is not planar")]
    NonPlanar,
    #[error("invalid DT code: {0}")]
    InvalidDt(String),
    #[error("crossing index {0} out of range")]
    BadIndex(usize),
    #[error("operation requires a knot (one component)")]
    NotAKnot,
    #[error("diagram is split or disconnected")]
    Disconnected,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

/// Edges listed counterclockwise starting at the incoming under-strand.
/// A crossing is positive when the over-strand runs from slot 3 to slot 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub edges: [usize; 4],
    pub sign: Sign,
}

impl Crossing {
    pub fn is_incoming(&self, slot: usize) -> bool {
        matches!((slot, self.sign), (0, _) | (3, Sign::Positive) | (1, Sign::Negative))
    }

    pub fn over_in(&self) -> usize {
        match self.sign {
            Sign::Positive => 3,
            Sign::Negative => 1,
        }
    }

    pub fn over_out(&self) -> usize {
        4 - self.over_in()
    }
}

/// Smoothing modes for [`Diagram::smooth_crossing`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SmoothMode {
    Oriented,
    A,
    B,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagram {
    crossings: Vec<Crossing>,
    components: Vec<Vec<usize>>,
    free_loops: usize,
    name: Option<String>,
}

impl Diagram {
    pub fn unknot() -> Self {
        Diagram { crossings: Vec::new(), components: Vec::new(), free_loops: 1, name: None }
    }

    pub fn unlink(k: usize) -> Self {
        Diagram { crossings: Vec::new(), components: Vec::new(), free_loops: k, name: None }
    }

    /// Orients every strand. `hint(c, s)` says whether slot `s` of crossing
    /// `c` should be incoming; strands without hints are oriented by `tie`,
    /// which sees the edge labels in walking order and answers whether to
    /// keep that direction. With `strict`, conflicting hints are an error;
    /// otherwise the majority wins.
    pub(crate) fn orient(
        planar: &PlanarDiagram,
        hint: impl Fn(usize, usize) -> Option<bool>,
        tie: impl Fn(&[usize]) -> bool,
        strict: bool,
    ) -> Result<Diagram, DiagramError> {
        let ends = planar.edge_ends();
        let xs = planar.crossings();
        let mut seen = vec![false; planar.edge_count()];
        let mut incoming = vec![[false; 4]; xs.len()];
        let mut components = Vec::new();
        for e in 0..planar.edge_count() {
            if seen[e] {
                continue;
            }
            let mut walk = planar.walk(&ends, ends[e][1]);
            let (mut agree, mut disagree) = (0, 0);
            for &(c, s) in &walk {
                for (slot, want) in [(s, true), ((s + 2) % 4, false)] {
                    match hint(c, slot) {
                        Some(h) if h == want => agree += 1,
                        Some(_) => disagree += 1,
                        None => {}
                    }
                }
            }
            if strict && agree > 0 && disagree > 0 {
                return Err(DiagramError::InconsistentOrientation);
            }
            let arrival_edges = |w: &[Corner]| w.iter().map(|&(c, s)| xs[c][s]).collect::<Vec<_>>();
            let keep = if agree == 0 && disagree == 0 { tie(&arrival_edges(&walk)) } else { agree >= disagree };
            if !keep {
                walk = walk.iter().rev().map(|&(c, s)| (c, (s + 2) % 4)).collect();
            }
            for &(c, s) in &walk {
                incoming[c][s] = true;
                seen[xs[c][s]] = true;
            }
            let mut cycle = arrival_edges(&walk);
            let m = (0..cycle.len()).min_by_key(|&i| cycle[i]).unwrap_or(0);
            cycle.rotate_left(m);
            components.push(cycle);
        }
        components.sort();
        let crossings = xs
            .iter()
            .zip(&incoming)
            .map(|(x, inc)| {
                let (mut edges, mut inc) = (*x, *inc);
                if !inc[0] {
                    edges.rotate_left(2);
                    inc.rotate_left(2);
                }
                let sign = if inc[3] { Sign::Positive } else { Sign::Negative };
                Crossing { edges, sign }
            })
            .collect();
        Ok(Diagram { crossings, components, free_loops: planar.free_loops(), name: None })
    }

    /// Rebuilds from crossings whose slot roles are already oriented.
    pub(crate) fn from_oriented(crossings: Vec<Crossing>, free_loops: usize) -> Result<Diagram, DiagramError> {
        let planar = PlanarDiagram::new(crossings.iter().map(|x| x.edges).collect(), free_loops)?;
        Diagram::orient(&planar, |c, s| Some(crossings[c].is_incoming(s)), |_| true, true)
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn edge_count(&self) -> usize {
        2 * self.crossings.len()
    }

    /// Edge cycles in orientation order; crossingless components are not
    /// listed (see [`Diagram::free_loops`]).
    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    pub fn component_count(&self) -> usize {
        self.components.len() + self.free_loops
    }

    pub fn is_knot(&self) -> bool {
        self.component_count() == 1
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|x| x.sign.value()).sum()
    }

    pub fn planar(&self) -> PlanarDiagram {
        PlanarDiagram::from_compact(self.crossings.iter().map(|x| x.edges).collect(), self.free_loops)
    }

    /// The (crossing, slot) where edge `e` ends.
    pub fn head(&self, e: usize) -> Corner {
        self.find_end(e, true)
    }

    /// The (crossing, slot) where edge `e` starts.
    pub fn tail(&self, e: usize) -> Corner {
        self.find_end(e, false)
    }

    fn find_end(&self, e: usize, incoming: bool) -> Corner {
        for (c, x) in self.crossings.iter().enumerate() {
            for s in 0..4 {
                if x.edges[s] == e && x.is_incoming(s) == incoming {
                    return (c, s);
                }
            }
        }
        panic!("edge {e} is not part of the diagram")
    }

    fn check_index(&self, i: usize) -> Result<(), DiagramError> {
        if i < self.crossings.len() {
            Ok(())
        } else {
            Err(DiagramError::BadIndex(i))
        }
    }

    pub fn switch_crossing(&self, i: usize) -> Result<Diagram, DiagramError> {
        self.check_index(i)?;
        let mut d = self.clone();
        let x = &mut d.crossings[i];
        match x.sign {
            Sign::Positive => x.edges.rotate_right(1),
            Sign::Negative => x.edges.rotate_left(1),
        }
        x.sign = x.sign.flip();
        Ok(d)
    }

    pub fn smooth_crossing(&self, i: usize, mode: SmoothMode) -> Result<Diagram, DiagramError> {
        self.check_index(i)?;
        let x = &self.crossings[i];
        let smoothing = match (mode, x.sign) {
            (SmoothMode::A, _) | (SmoothMode::Oriented, Sign::Positive) => Smoothing::A,
            (SmoothMode::B, _) | (SmoothMode::Oriented, Sign::Negative) => Smoothing::B,
        };
        let smoothed = self.planar().smooth(i, smoothing);
        let rest: Vec<&Crossing> = self.crossings.iter().enumerate().filter(|&(c, _)| c != i).map(|(_, x)| x).collect();
        let strict = mode == SmoothMode::Oriented;
        let d = Diagram::orient(&smoothed, |c, s| Some(rest[c].is_incoming(s)), |_| true, strict)?;
        Ok(Diagram { name: None, ..d })
    }

    /// Reflection in the projection plane.
    pub fn mirror(&self) -> Diagram {
        let crossings = self
            .crossings
            .iter()
            .map(|x| {
                let [a, b, c, d] = x.edges;
                Crossing { edges: [a, d, c, b], sign: x.sign.flip() }
            })
            .collect();
        let name = self.name.as_ref().map(|n| match n.strip_prefix('!') {
            Some(stripped) => stripped.to_string(),
            None => format!("!{n}"),
        });
        Diagram { crossings, components: self.components.clone(), free_loops: self.free_loops, name }
    }

    /// Inserts a curl of the given sign at the end of edge `e`. On a
    /// crossingless diagram one free loop receives the curl instead.
    pub fn add_kink(&self, e: usize, sign: Sign) -> Result<Diagram, DiagramError> {
        let n = self.crossings.len();
        let mut crossings = self.crossings.clone();
        let mut free_loops = self.free_loops;
        let (f, l) = (2 * n, 2 * n + 1);
        let into = if n == 0 {
            if free_loops == 0 {
                return Err(DiagramError::BadIndex(e));
            }
            free_loops -= 1;
            f
        } else {
            if e >= 2 * n {
                return Err(DiagramError::BadIndex(e));
            }
            let (hc, hs) = self.head(e);
            crossings[hc].edges[hs] = f;
            e
        };
        let edges = match sign {
            Sign::Positive => [into, f, l, l],
            Sign::Negative => [into, l, l, f],
        };
        crossings.push(Crossing { edges, sign });
        let d = Diagram::from_oriented(crossings, free_loops)?;
        Ok(Diagram { name: self.name.clone(), ..d })
    }

    pub fn connected_sum(&self, other: &Diagram) -> Result<Diagram, DiagramError> {
        if !self.is_knot() || !other.is_knot() {
            return Err(DiagramError::NotAKnot);
        }
        let name = match (self.name(), other.name()) {
            (Some(a), Some(b)) => Some(format!("{a}#{b}")),
            _ => None,
        };
        if self.crossings.is_empty() {
            return Ok(Diagram { name, ..other.clone() });
        }
        if other.crossings.is_empty() {
            return Ok(Diagram { name, ..self.clone() });
        }
        let offset = self.edge_count();
        let (h1c, h1s) = self.head(0);
        let (h2c, h2s) = other.head(0);
        let mut crossings = self.crossings.clone();
        crossings.extend(other.crossings.iter().map(|x| Crossing { edges: x.edges.map(|e| e + offset), sign: x.sign }));
        crossings[h1c].edges[h1s] = offset;
        crossings[self.crossings.len() + h2c].edges[h2s] = 0;
        let d = Diagram::from_oriented(crossings, 0)?;
        debug_assert!(d.planar().is_planar());
        Ok(Diagram { name, ..d })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trefoil() -> Diagram {
        parse_pd("X 1 5 2 4\nX 3 1 4 6\nX 5 3 6 2").unwrap()
    }

    #[test]
    fn trefoil_signs() {
        let d = trefoil();
        assert_eq!(d.writhe(), 3);
        assert_eq!(d.mirror().writhe(), -3);
        assert!(d.is_knot());
        assert_eq!(d.components(), &[vec![0, 1, 2, 3, 4, 5]]);
    }

    #[test]
    fn moves_preserve_structure() {
        let d = trefoil();
        for i in 0..3 {
            let s = d.switch_crossing(i).unwrap();
            assert_eq!(s.writhe(), 1);
            assert_eq!(s.switch_crossing(i).unwrap(), d);
            let o = d.smooth_crossing(i, SmoothMode::Oriented).unwrap();
            assert_eq!(o.component_count(), 2);
            assert_eq!(o.writhe(), 2);
        }
        assert!(matches!(d.switch_crossing(3), Err(DiagramError::BadIndex(3))));
    }

    #[test]
    fn kinks_and_sums() {
        let k = Diagram::unknot().add_kink(0, Sign::Negative).unwrap();
        assert_eq!((k.crossing_count(), k.writhe(), k.component_count()), (1, -1, 1));
        let t = trefoil();
        let tk = t.add_kink(2, Sign::Positive).unwrap();
        assert_eq!(tk.writhe(), 4);
        assert!(tk.planar().is_planar());
        let s = t.connected_sum(&t.mirror()).unwrap();
        assert_eq!((s.crossing_count(), s.writhe(), s.component_count()), (6, 0, 1));
        assert!(s.planar().is_planar());
        assert_eq!(t.connected_sum(&Diagram::unknot()).unwrap(), t);
    }
}
