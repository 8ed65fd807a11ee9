//! The unoriented Q polynomial by skein recursion towards descending
//! diagrams, memoized on canonical diagram keys.

use std::collections::HashMap;

use crate::algebra::{LaurentPoly, Variable};
use crate::diagram::{Diagram, PlanarDiagram, Smoothing};

use super::InvariantError;

/// `2z^-1 - 1`, the ratio between `Q` of a split union and the product.
pub fn unlink_factor() -> LaurentPoly {
    LaurentPoly::from_terms(Variable::Z, &[(-1, 2), (0, -1)])
}

struct Engine {
    memo: HashMap<Vec<u32>, LaurentPoly>,
    mu: LaurentPoly,
    z: LaurentPoly,
}

impl Engine {
    fn mu_power(&self, k: usize) -> LaurentPoly {
        self.mu.pow(k as u32)
    }

    fn eval(&mut self, d: &PlanarDiagram) -> LaurentPoly {
        let d = d.simplify();
        let pieces = d.pieces();
        let parts = pieces.len() + d.free_loops();
        let mut out = self.mu_power(parts.saturating_sub(1));
        for p in &pieces {
            out = &out * &self.connected(p);
        }
        out
    }

    /// Walks the diagram from its canonical basepoint; every crossing first
    /// met from below is switched in turn, and each switch contributes the
    /// two smoothings through `Q(D) + Q(D') = z (Q(D_A) + Q(D_B))`. The
    /// fully switched diagram is descending, hence an unlink.
    fn connected(&mut self, d: &PlanarDiagram) -> LaurentPoly {
        let (key, start, reflect) = d.canonical_key();
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let ends = d.edge_ends();
        let walk = d.traverse(&ends, start, reflect);
        let mut seen = vec![false; d.crossing_count()];
        let mut ascending = Vec::new();
        for &(c, s) in &walk.passages {
            if !seen[c] {
                seen[c] = true;
                if s % 2 == 0 {
                    ascending.push(c);
                }
            }
        }
        let mut current = d.clone();
        let mut total = LaurentPoly::zero(Variable::Z);
        let mut negate = false;
        for &c in &ascending {
            let smoothings = &self.eval(&current.smooth(c, Smoothing::A)) + &self.eval(&current.smooth(c, Smoothing::B));
            let term = &self.z * &smoothings;
            total = if negate { &total - &term } else { &total + &term };
            current = current.switch(c);
            negate = !negate;
        }
        let unlink = self.mu_power(d.component_count() - 1);
        total = if negate { &total - &unlink } else { &total + &unlink };
        self.memo.insert(key, total.clone());
        total
    }
}

pub fn q_polynomial_planar(d: &PlanarDiagram, budget: usize) -> Result<LaurentPoly, InvariantError> {
    let n = d.crossing_count();
    if n > budget {
        return Err(InvariantError::BudgetExceeded { crossings: n, budget });
    }
    let mut engine = Engine {
        memo: HashMap::new(),
        mu: unlink_factor(),
        z: LaurentPoly::monomial(Variable::Z, 1, 1),
    };
    Ok(engine.eval(d))
}

pub fn q_polynomial(d: &Diagram, budget: usize) -> Result<LaurentPoly, InvariantError> {
    q_polynomial_planar(&d.planar(), budget)
}
