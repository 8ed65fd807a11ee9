//! Unoriented planar diagrams: the shared substrate for state sums, skein
//! recursion, face structure and canonical keys.

use std::collections::BTreeMap;

use super::DiagramError;

/// A corner of a crossing: the region between slot `i` and slot `i + 1`
/// (counterclockwise).
pub type Corner = (usize, usize);

/// Crossing-level smoothing modes of the Kauffman bracket.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Smoothing {
    /// Joins slots (0,1) and (2,3).
    A,
    /// Joins slots (0,3) and (1,2).
    B,
}

impl Smoothing {
    pub fn pairs(self) -> [(usize, usize); 2] {
        match self {
            Smoothing::A => [(0, 1), (2, 3)],
            Smoothing::B => [(0, 3), (1, 2)],
        }
    }
}

/// Each crossing lists four edge labels counterclockwise; the under-strand
/// occupies slots 0 and 2. Edge labels are compact (`0..edge_count`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PlanarDiagram {
    crossings: Vec<[usize; 4]>,
    free_loops: usize,
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

impl PlanarDiagram {
    /// Validates that every label occurs exactly twice and relabels edges
    /// compactly, preserving their relative order.
    pub fn new(crossings: Vec<[usize; 4]>, free_loops: usize) -> Result<Self, DiagramError> {
        let mut count: BTreeMap<usize, usize> = BTreeMap::new();
        for x in &crossings {
            for &e in x {
                *count.entry(e).or_default() += 1;
            }
        }
        for (&e, &k) in &count {
            match k {
                1 => return Err(DiagramError::DanglingEdge(e)),
                2 => {}
                _ => return Err(DiagramError::RepeatedEdge(e)),
            }
        }
        let relabel: BTreeMap<usize, usize> = count.keys().enumerate().map(|(i, &e)| (e, i)).collect();
        let crossings = crossings.iter().map(|x| x.map(|e| relabel[&e])).collect();
        Ok(PlanarDiagram { crossings, free_loops })
    }

    pub(crate) fn from_compact(crossings: Vec<[usize; 4]>, free_loops: usize) -> Self {
        PlanarDiagram { crossings, free_loops }
    }

    pub fn unknot() -> Self {
        PlanarDiagram { crossings: Vec::new(), free_loops: 1 }
    }

    pub fn crossings(&self) -> &[[usize; 4]] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn edge_count(&self) -> usize {
        2 * self.crossings.len()
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    /// The two (crossing, slot) occurrences of every edge.
    pub fn edge_ends(&self) -> Vec<[Corner; 2]> {
        let mut ends = vec![[(usize::MAX, 0); 2]; self.edge_count()];
        let mut seen = vec![0usize; self.edge_count()];
        for (c, x) in self.crossings.iter().enumerate() {
            for (s, &e) in x.iter().enumerate() {
                ends[e][seen[e]] = (c, s);
                seen[e] += 1;
            }
        }
        ends
    }

    pub(crate) fn other_end(ends: &[[Corner; 2]], e: usize, here: Corner) -> Corner {
        if ends[e][0] == here {
            ends[e][1]
        } else {
            ends[e][0]
        }
    }

    /// Arrivals `(crossing, slot)` along the strand that leaves through
    /// slot `(start.1 + 2) % 4` of `start.0`, ending when `start` recurs.
    pub(crate) fn walk(&self, ends: &[[Corner; 2]], start: Corner) -> Vec<Corner> {
        let mut out = vec![start];
        let mut here = start;
        loop {
            let leave = (here.0, (here.1 + 2) % 4);
            let e = self.crossings[leave.0][leave.1];
            here = Self::other_end(ends, e, leave);
            if here == start {
                return out;
            }
            out.push(here);
        }
    }

    /// Number of link components, including free loops.
    pub fn component_count(&self) -> usize {
        let ends = self.edge_ends();
        let mut seen = vec![false; self.edge_count()];
        let mut k = 0;
        for e in 0..self.edge_count() {
            if seen[e] {
                continue;
            }
            k += 1;
            for (c, s) in self.walk(&ends, ends[e][1]) {
                seen[self.crossings[c][s]] = true;
            }
        }
        k + self.free_loops
    }

    /// Crossing changed: the over-strand becomes the under-strand.
    pub fn switch(&self, i: usize) -> Self {
        let mut d = self.clone();
        d.crossings[i].rotate_left(1);
        d
    }

    pub fn mirror(&self) -> Self {
        let crossings = self.crossings.iter().map(|&[a, b, c, d]| [a, d, c, b]).collect();
        PlanarDiagram { crossings, free_loops: self.free_loops }
    }

    /// Removes crossings and identifies edges; edges in `dropped` vanish
    /// outright, every other identified class that no longer meets a
    /// crossing becomes a free loop.
    pub(crate) fn contract(&self, removed: &[usize], unions: &[(usize, usize)], dropped: &[usize]) -> Self {
        let mut uf = UnionFind::new(self.edge_count());
        for &(a, b) in unions {
            uf.union(a, b);
        }
        let kept: Vec<[usize; 4]> = self
            .crossings
            .iter()
            .enumerate()
            .filter(|(c, _)| !removed.contains(c))
            .map(|(_, x)| x.map(|e| uf.find(e)))
            .collect();
        let mut present = vec![false; self.edge_count()];
        for x in &kept {
            for &e in x {
                present[e] = true;
            }
        }
        let mut orphan = vec![false; self.edge_count()];
        for &c in removed {
            for &e in &self.crossings[c] {
                if !dropped.contains(&e) {
                    let r = uf.find(e);
                    if !present[r] {
                        orphan[r] = true;
                    }
                }
            }
        }
        let new_loops = orphan.iter().filter(|&&o| o).count();
        let mut relabel = vec![usize::MAX; self.edge_count()];
        let mut next = 0;
        for (e, &p) in present.iter().enumerate() {
            if p {
                relabel[e] = next;
                next += 1;
            }
        }
        let crossings = kept.into_iter().map(|x| x.map(|e| relabel[e])).collect();
        PlanarDiagram { crossings, free_loops: self.free_loops + new_loops }
    }

    pub fn smooth(&self, i: usize, mode: Smoothing) -> Self {
        let x = self.crossings[i];
        let [(p, q), (r, s)] = mode.pairs();
        self.contract(&[i], &[(x[p], x[q]), (x[r], x[s])], &[])
    }

    /// Corner orbits; each face is listed by its corners in boundary order.
    pub fn faces(&self) -> Vec<Vec<Corner>> {
        let ends = self.edge_ends();
        let n = self.crossings.len();
        let mut seen = vec![[false; 4]; n];
        let mut faces = Vec::new();
        for c in 0..n {
            for i in 0..4 {
                if seen[c][i] {
                    continue;
                }
                let mut face = Vec::new();
                let mut here = (c, i);
                while !seen[here.0][here.1] {
                    seen[here.0][here.1] = true;
                    face.push(here);
                    let leave = (here.0, (here.1 + 1) % 4);
                    let e = self.crossings[leave.0][leave.1];
                    here = Self::other_end(&ends, e, leave);
                }
                faces.push(face);
            }
        }
        faces
    }

    /// Connected pieces of the crossing graph, each compact and loop-free.
    pub fn pieces(&self) -> Vec<PlanarDiagram> {
        let n = self.crossings.len();
        let ends = self.edge_ends();
        let mut uf = UnionFind::new(n);
        for [(c1, _), (c2, _)] in &ends {
            uf.union(*c1, *c2);
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for c in 0..n {
            groups.entry(uf.find(c)).or_default().push(c);
        }
        groups
            .into_values()
            .map(|cs| {
                let xs: Vec<[usize; 4]> = cs.iter().map(|&c| self.crossings[c]).collect();
                PlanarDiagram::new(xs, 0).expect("piece of a valid diagram")
            })
            .collect()
    }

    /// True when the face count matches a sphere embedding of every piece.
    pub fn is_planar(&self) -> bool {
        let pieces = self.pieces().len();
        self.crossings.is_empty() || self.faces().len() == self.crossings.len() + pieces + 1
    }

    /// A crossing with an edge joining two adjacent slots, with that slot.
    pub(crate) fn find_kink(&self) -> Option<(usize, usize)> {
        self.crossings.iter().enumerate().find_map(|(c, x)| (0..4).find(|&s| x[s] == x[(s + 1) % 4]).map(|s| (c, s)))
    }

    /// Removes one curl; the loop edge disappears and the two remaining
    /// edges are joined.
    pub(crate) fn remove_kink(&self, c: usize, s: usize) -> Self {
        let x = self.crossings[c];
        let (l, p, q) = (x[s], x[(s + 2) % 4], x[(s + 3) % 4]);
        if p == q {
            // Figure-eight curl: both edges are loops at this crossing.
            let mut d = self.contract(&[c], &[], &[l, p]);
            d.free_loops += 1;
            d
        } else {
            self.contract(&[c], &[(p, q)], &[l])
        }
    }

    /// A bigon whose two crossings have the same strand on top.
    pub(crate) fn find_clasp_free_bigon(&self) -> Option<(usize, usize)> {
        let ends = self.edge_ends();
        for face in self.faces() {
            if let [(c1, i1), (c2, i2)] = face[..] {
                if c1 == c2 {
                    continue;
                }
                let e = self.crossings[c1][(i1 + 1) % 4];
                let at_c2 = Self::other_end(&ends, e, (c1, (i1 + 1) % 4));
                debug_assert_eq!(at_c2, (c2, i2));
                if (i1 + 1) % 2 == i2 % 2 {
                    return Some((c1, c2));
                }
            }
        }
        None
    }

    /// Second Reidemeister move on the bigon between `c1` and `c2`.
    pub(crate) fn remove_bigon(&self, c1: usize, c2: usize) -> Self {
        let x1 = self.crossings[c1];
        let x2 = self.crossings[c2];
        let mut unions = Vec::new();
        for s1 in 0..4 {
            if let Some(s2) = (0..4).find(|&s2| x2[s2] == x1[s1]) {
                unions.push((x1[(s1 + 2) % 4], x1[s1]));
                unions.push((x1[s1], x2[(s2 + 2) % 4]));
            }
        }
        self.contract(&[c1, c2], &unions, &[])
    }

    /// Applies curl and bigon removals until none remain.
    pub fn simplify(&self) -> Self {
        let mut d = self.clone();
        loop {
            if let Some((c, s)) = d.find_kink() {
                d = d.remove_kink(c, s);
                continue;
            }
            if let Some((c1, c2)) = d.find_clasp_free_bigon() {
                d = d.remove_bigon(c1, c2);
                continue;
            }
            return d;
        }
    }

    /// Full traversal from `start`, then from the first unvisited slot of
    /// the earliest discovered crossing, until every edge is covered.
    /// Returns passages in order together with the crossing discovery order.
    pub(crate) fn traverse(&self, ends: &[[Corner; 2]], start: Corner, reflect: bool) -> Traversal {
        let n = self.crossings.len();
        let mut order = Vec::with_capacity(n);
        let mut base = vec![usize::MAX; n];
        let mut edge_label = vec![usize::MAX; self.edge_count()];
        let mut next_label = 0;
        let mut passages = Vec::with_capacity(2 * n);
        let mut entry = Some(start);
        while let Some(first) = entry {
            for here in self.walk(ends, first) {
                if base[here.0] == usize::MAX {
                    base[here.0] = here.1;
                    order.push(here.0);
                }
                passages.push(here);
                let e = self.crossings[here.0][(here.1 + 2) % 4];
                if edge_label[e] == usize::MAX {
                    edge_label[e] = next_label;
                    next_label += 1;
                }
            }
            entry = None;
            'find: for &c in &order {
                for k in 0..4 {
                    let s = rel_to_slot(base[c], k, reflect);
                    if edge_label[self.crossings[c][s]] == usize::MAX {
                        entry = Some((c, (s + 2) % 4));
                        break 'find;
                    }
                }
            }
        }
        Traversal { order, base, edge_label, passages }
    }

    fn encode(&self, t: &Traversal, reflect: bool) -> Vec<u32> {
        let mut key = Vec::with_capacity(5 * t.order.len());
        for &c in &t.order {
            for k in 0..4 {
                key.push(t.edge_label[self.crossings[c][rel_to_slot(t.base[c], k, reflect)]] as u32);
            }
            key.push((t.base[c] % 2) as u32);
        }
        key
    }

    /// Lexicographically minimal encoding over all basepoints, directions
    /// and reflections, together with the start realizing it.
    pub fn canonical_key(&self) -> (Vec<u32>, Corner, bool) {
        let ends = self.edge_ends();
        let mut best: Option<(Vec<u32>, Corner, bool)> = None;
        for c in 0..self.crossings.len() {
            for s in 0..4 {
                for reflect in [false, true] {
                    let t = self.traverse(&ends, (c, s), reflect);
                    let key = self.encode(&t, reflect);
                    if best.as_ref().is_none_or(|b| key < b.0) {
                        best = Some((key, (c, s), reflect));
                    }
                }
            }
        }
        let (mut key, start, reflect) = best.unwrap_or((Vec::new(), (0, 0), false));
        key.push(self.free_loops as u32);
        (key, start, reflect)
    }
}

pub(crate) struct Traversal {
    pub order: Vec<usize>,
    pub base: Vec<usize>,
    pub edge_label: Vec<usize>,
    pub passages: Vec<Corner>,
}

fn rel_to_slot(base: usize, k: usize, reflect: bool) -> usize {
    if reflect {
        (base + 4 - k) % 4
    } else {
        (base + k) % 4
    }
}
