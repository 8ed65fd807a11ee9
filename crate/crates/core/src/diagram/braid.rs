//! Closed braid diagrams.

use super::{Crossing, Diagram, DiagramError, Sign};

/// Closure of a braid word on `strands` strands; generator `i > 0` is
/// `σ_i` (positive crossing of strands `i` and `i + 1`), `-i` its inverse.
pub fn braid_closure(strands: usize, word: &[i32]) -> Result<Diagram, DiagramError> {
    let mut current: Vec<usize> = (0..strands).collect();
    let mut next = strands;
    let mut crossings = Vec::with_capacity(word.len());
    let mut touched = vec![false; strands];
    for &g in word {
        let i = g.unsigned_abs() as usize;
        if g == 0 || i >= strands {
            return Err(DiagramError::Parse(format!("generator {g} out of range for {strands} strands")));
        }
        let (sw, se) = (current[i - 1], current[i]);
        let (nw, ne) = (next, next + 1);
        next += 2;
        let (edges, sign) = if g > 0 { ([se, ne, nw, sw], Sign::Positive) } else { ([sw, se, ne, nw], Sign::Negative) };
        crossings.push(Crossing { edges, sign });
        current[i - 1] = nw;
        current[i] = ne;
        touched[i - 1] = true;
        touched[i] = true;
    }
    // Close up: the top edge at each position is the bottom edge there.
    let mut rename: Vec<usize> = (0..next).collect();
    for (p, &top) in current.iter().enumerate() {
        rename[top] = p;
    }
    for x in &mut crossings {
        x.edges = x.edges.map(|e| rename[e]);
    }
    let free_loops = touched.iter().filter(|&&t| !t).count();
    Diagram::from_oriented(crossings, free_loops)
}
