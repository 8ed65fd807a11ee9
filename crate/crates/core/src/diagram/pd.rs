//! Planar-diagram (PD) text input and output.

use super::{Diagram, DiagramError, PlanarDiagram};

/// Parses PD text. Each crossing is four edge labels listed
/// counterclockwise from the incoming under-strand; `X a b c d` lines,
/// `X[a,b,c,d]` groups and bracketed lists are all accepted. Empty input is
/// the crossingless unknot. Strands that never pass under are oriented so
/// that labels increase.
pub fn parse_pd(text: &str) -> Result<Diagram, DiagramError> {
    let mut labels = Vec::new();
    for line in text.lines() {
        let line = line.split('#').next().unwrap_or("");
        let cleaned: String = line.chars().map(|ch| if "[](),;{}".contains(ch) { ' ' } else { ch }).collect();
        for tok in cleaned.split_whitespace() {
            if tok.eq_ignore_ascii_case("x") || tok.eq_ignore_ascii_case("pd") {
                continue;
            }
            let tok = tok.strip_prefix(['X', 'x']).unwrap_or(tok);
            let v: usize = tok.parse().map_err(|_| DiagramError::Parse(format!("unexpected token {tok:?}")))?;
            labels.push(v);
        }
    }
    if labels.is_empty() {
        return Ok(Diagram::unknot());
    }
    if labels.len() % 4 != 0 {
        return Err(DiagramError::Parse(format!("{} labels do not form 4-tuples", labels.len())));
    }
    let crossings: Vec<[usize; 4]> = labels.chunks(4).map(|c| [c[0], c[1], c[2], c[3]]).collect();
    let planar = PlanarDiagram::new(crossings, 0)?;
    if !planar.is_planar() {
        return Err(DiagramError::NonPlanar);
    }
    let hint = |_: usize, s: usize| match s {
        0 => Some(true),
        2 => Some(false),
        _ => None,
    };
    let increasing = |walk: &[usize]| {
        let k = walk.len();
        let fwd = (0..k).filter(|&i| walk[(i + 1) % k] == walk[i] + 1).count();
        let bwd = (0..k).filter(|&i| walk[i] == walk[(i + 1) % k] + 1).count();
        fwd >= bwd
    };
    Diagram::orient(&planar, hint, increasing, true)
}

impl Diagram {
    /// PD text with 1-based labels, one `X a b c d` line per crossing.
    pub fn to_pd_text(&self) -> String {
        self.crossings
            .iter()
            .map(|x| {
                let [a, b, c, d] = x.edges.map(|e| e + 1);
                format!("X {a} {b} {c} {d}\n")
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formats() {
        let a = parse_pd("X 1 5 2 4\nX 3 1 4 6\nX 5 3 6 2\n").unwrap();
        let b = parse_pd("[[1,5,2,4],[3,1,4,6],[5,3,6,2]]").unwrap();
        let c = parse_pd("PD[X[1,5,2,4], X[3,1,4,6], X[5,3,6,2]]").unwrap();
        assert_eq!(a, b);
        assert_eq!(a, c);
        assert_eq!(parse_pd(&a.to_pd_text()).unwrap(), a);
        assert_eq!(parse_pd("").unwrap(), Diagram::unknot());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(parse_pd("X 1 2 3 1"), Err(DiagramError::DanglingEdge(_))));
        assert!(matches!(parse_pd("X 1 2 3"), Err(DiagramError::Parse(_))));
        assert!(matches!(parse_pd("X 1 y 2 4"), Err(DiagramError::Parse(_))));
        // Same crossings with one rotation flipped: genus one.
        assert!(parse_pd("X 1 5 2 4\nX 3 1 4 6\nX 5 2 6 3").is_err());
    }
}
