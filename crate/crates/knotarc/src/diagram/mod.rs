//! Knot diagrams as 4-valent plane graphs.
//!
//! A crossing `x` owns the darts `4x..4x+4`, listed counterclockwise. Slots 0
//! and 2 carry the under strand, slots 1 and 3 the over strand, which matches
//! the PD convention `X[a,b,c,d]` with `a` the incoming under edge.

mod build;
pub(crate) mod darts;
mod moves;
mod pd;
mod tangle;

pub use build::Tangle;
pub use moves::{r3_admissible, reidemeister2_insert, reidemeister3, simplify_r1r2};
pub use pd::parse_pd;
pub use tangle::{detect_tangle_structure, labelings, Labeling, TangleClassification, TangleKind, TangleWitness};

use serde::Serialize;

use crate::error::{Error, Result};

pub type Dart = usize;

#[inline]
pub fn crossing_of(d: Dart) -> usize {
    d >> 2
}

#[inline]
pub fn slot_of(d: Dart) -> usize {
    d & 3
}

#[inline]
pub fn is_over_slot(s: usize) -> bool {
    s & 1 == 1
}

/// Next dart counterclockwise around the same crossing.
#[inline]
pub fn rot(d: Dart) -> Dart {
    (d & !3) | ((d + 1) & 3)
}

#[inline]
pub fn rot_back(d: Dart) -> Dart {
    (d & !3) | ((d + 3) & 3)
}

/// The dart on the same strand at the other side of the crossing.
#[inline]
pub fn straight(d: Dart) -> Dart {
    (d & !3) | ((d + 2) & 3)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeKind {
    Alternating,
    Nonalternating,
}

/// A region of the diagram. `darts[i]` marks the corner at `crossing_of(darts[i])`
/// followed by the edge leaving through that dart; the face lies to the right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub darts: Vec<Dart>,
}

impl Face {
    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    /// `(edge, side)` pairs in boundary order; the side is the dart.
    pub fn edges(&self, d: &PlanarKnotDiagram) -> Vec<(usize, Dart)> {
        self.darts.iter().map(|&x| (d.edge_of(x), x)).collect()
    }

    /// Corner vertices in boundary order (repeats possible).
    pub fn vertices(&self) -> Vec<usize> {
        self.darts.iter().map(|&x| crossing_of(x)).collect()
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.darts.iter().any(|&x| crossing_of(x) == v)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanarKnotDiagram {
    partner: Vec<Dart>,
    edges: Vec<[Dart; 2]>,
    edge_of: Vec<usize>,
}

impl PlanarKnotDiagram {
    /// The crossingless unknot.
    pub fn unknot() -> Self {
        Self { partner: Vec::new(), edges: Vec::new(), edge_of: Vec::new() }
    }

    /// Build from a dart involution, checking every diagram invariant.
    pub fn from_partner(partner: Vec<Dart>) -> Result<Self> {
        let n = partner.len();
        if !n.is_multiple_of(4) {
            return Err(Error::InvalidDiagram("dart count not a multiple of 4".into()));
        }
        for (d, &p) in partner.iter().enumerate() {
            if p >= n || partner[p] != d || p == d {
                return Err(Error::InvalidDiagram(format!("dart {d} is not properly paired")));
            }
        }
        let dg = Self::from_partner_unchecked(partner);
        if dg.component_count() != 1 {
            return Err(Error::InvalidDiagram(format!("{} components, expected a knot", dg.component_count())));
        }
        let v = dg.crossing_count() as i64;
        let f = dg.faces().len() as i64;
        if v > 0 && v - 2 * v + f != 2 {
            return Err(Error::InvalidDiagram(format!("rotation system is not planar (V-E+F = {})", v - 2 * v + f)));
        }
        Ok(dg)
    }

    pub(crate) fn from_partner_unchecked(partner: Vec<Dart>) -> Self {
        let mut edges = Vec::with_capacity(partner.len() / 2);
        let mut edge_of = vec![usize::MAX; partner.len()];
        for d in 0..partner.len() {
            if edge_of[d] == usize::MAX {
                let p = partner[d];
                edge_of[d] = edges.len();
                edge_of[p] = edges.len();
                edges.push([d.min(p), d.max(p)]);
            }
        }
        Self { partner, edges, edge_of }
    }

    pub fn crossing_count(&self) -> usize {
        self.partner.len() / 4
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn partner(&self, d: Dart) -> Dart {
        self.partner[d]
    }

    pub fn partners(&self) -> &[Dart] {
        &self.partner
    }

    pub fn edge_of(&self, d: Dart) -> usize {
        self.edge_of[d]
    }

    pub fn edge(&self, e: usize) -> [Dart; 2] {
        self.edges[e]
    }

    pub fn edge_endpoints(&self, e: usize) -> (usize, usize) {
        let [a, b] = self.edges[e];
        (crossing_of(a), crossing_of(b))
    }

    /// Crossings of the edge other than `v`, or `v` itself for a loop.
    pub fn other_end(&self, e: usize, v: usize) -> usize {
        let (a, b) = self.edge_endpoints(e);
        if a == v {
            b
        } else {
            a
        }
    }

    /// Dart of edge `e` lying at crossing `v` (the first one for loops).
    pub fn dart_at(&self, e: usize, v: usize) -> Option<Dart> {
        self.edges[e].iter().copied().find(|&d| crossing_of(d) == v)
    }

    pub fn component_count(&self) -> usize {
        if self.partner.is_empty() {
            return 1;
        }
        let mut seen = vec![false; self.partner.len()];
        let mut count = 0;
        for start in 0..self.partner.len() {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut d = start;
            loop {
                seen[d] = true;
                let out = straight(d);
                seen[out] = true;
                d = self.partner[out];
                if d == start {
                    break;
                }
            }
        }
        count
    }

    /// Darts through which the knot enters each crossing, in traversal order
    /// starting with dart 0.
    pub fn traversal(&self) -> Vec<Dart> {
        let mut seq = Vec::with_capacity(self.partner.len() / 2);
        if self.partner.is_empty() {
            return seq;
        }
        let mut d = 0;
        loop {
            seq.push(d);
            d = self.partner[straight(d)];
            if d == 0 {
                break;
            }
        }
        seq
    }

    /// Crossing signs for the traversal orientation; for a knot the result
    /// does not depend on the orientation.
    pub fn crossing_signs(&self) -> Vec<i32> {
        let c = self.crossing_count();
        let mut under_in = vec![usize::MAX; c];
        let mut over_in = vec![usize::MAX; c];
        for d in self.traversal() {
            if is_over_slot(slot_of(d)) {
                over_in[crossing_of(d)] = slot_of(d);
            } else {
                under_in[crossing_of(d)] = slot_of(d);
            }
        }
        (0..c).map(|x| if over_in[x] == (under_in[x] + 3) % 4 { 1 } else { -1 }).collect()
    }

    pub fn writhe(&self) -> i32 {
        self.crossing_signs().iter().sum()
    }

    /// All faces, via the orbits of `d -> rot(partner(d))`.
    pub fn faces(&self) -> Vec<Face> {
        self.faces_with_index().0
    }

    /// Faces plus the face index of every dart.
    pub fn faces_with_index(&self) -> (Vec<Face>, Vec<usize>) {
        if self.partner.is_empty() {
            return (vec![Face { darts: vec![] }, Face { darts: vec![] }], vec![]);
        }
        let n = self.partner.len();
        let mut face_of = vec![usize::MAX; n];
        let mut faces = Vec::new();
        for start in 0..n {
            if face_of[start] != usize::MAX {
                continue;
            }
            let mut darts = Vec::new();
            let mut d = start;
            loop {
                face_of[d] = faces.len();
                darts.push(d);
                d = rot(self.partner[d]);
                if d == start {
                    break;
                }
            }
            faces.push(Face { darts });
        }
        (faces, face_of)
    }

    pub fn classify_edges(&self) -> Vec<EdgeKind> {
        self.edges
            .iter()
            .map(|&[a, b]| {
                if is_over_slot(slot_of(a)) == is_over_slot(slot_of(b)) {
                    EdgeKind::Nonalternating
                } else {
                    EdgeKind::Alternating
                }
            })
            .collect()
    }

    pub fn nonalternating_edges(&self) -> Vec<usize> {
        self.classify_edges()
            .iter()
            .enumerate()
            .filter(|(_, k)| **k == EdgeKind::Nonalternating)
            .map(|(e, _)| e)
            .collect()
    }

    pub fn is_alternating(&self) -> bool {
        self.classify_edges().iter().all(|k| *k == EdgeKind::Alternating)
    }

    /// Edges incident to crossing `v`, indexed by slot.
    pub fn edges_at(&self, v: usize) -> [usize; 4] {
        [0, 1, 2, 3].map(|s| self.edge_of[4 * v + s])
    }

    /// A copy with crossing `x` switched.
    pub fn switch_crossing(&self, x: usize) -> Self {
        Self::from_partner_unchecked(darts::switch(&self.partner, x))
    }

    pub fn mirror(&self) -> Self {
        let mut p = self.partner.clone();
        for x in 0..self.crossing_count() {
            p = darts::switch(&p, x);
        }
        Self::from_partner_unchecked(p)
    }

    /// Relabel crossings by `perm` (old index -> new index) and rotate each
    /// crossing by `rot2[x]` half-turns, which preserves the crossing type.
    pub fn relabel(&self, perm: &[usize], rot2: &[bool]) -> Self {
        let map = |d: Dart| -> Dart {
            let x = crossing_of(d);
            let s = if rot2[x] { (slot_of(d) + 2) & 3 } else { slot_of(d) };
            4 * perm[x] + s
        };
        let mut p = vec![0; self.partner.len()];
        for d in 0..self.partner.len() {
            p[map(d)] = map(self.partner[d]);
        }
        Self::from_partner_unchecked(p)
    }

    /// Orientation-preserving isomorphism-invariant code.
    pub fn canonical_code(&self) -> Vec<u32> {
        darts::canonical_code(&self.partner)
    }

    pub fn to_pd(&self) -> String {
        pd::write_pd(self)
    }

    /// Vertex sets of faces, deduplicated.
    pub fn face_vertex_set(face: &Face) -> Vec<usize> {
        let mut v = face.vertices();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// Prime and reduced: no face meets itself at a crossing and no two faces
    /// share two edges, so no circle crossing the diagram at most twice has
    /// crossings on both sides.
    pub fn is_prime_diagram(&self) -> bool {
        if self.crossing_count() < 2 {
            return true;
        }
        let (faces, face_of) = self.faces_with_index();
        for f in &faces {
            let mut v = f.vertices();
            v.sort_unstable();
            let n = v.len();
            v.dedup();
            if v.len() != n {
                return false;
            }
        }
        let e = self.edge_count();
        let sides: Vec<(usize, usize)> = (0..e)
            .map(|i| {
                let [a, b] = self.edges[i];
                (face_of[a], face_of[b])
            })
            .collect();
        for i in 0..e {
            let (f1, f2) = sides[i];
            if f1 == f2 {
                return false;
            }
            for &(g1, g2) in sides.iter().skip(i + 1) {
                if (g1 == f1 && g2 == f2) || (g1 == f2 && g2 == f1) {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn trefoil() -> PlanarKnotDiagram {
        parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]").unwrap()
    }

    #[test]
    fn trefoil_counts() {
        let d = trefoil();
        assert_eq!(d.crossing_count(), 3);
        assert_eq!(d.edge_count(), 6);
        assert_eq!(d.faces().len(), 5);
        assert!(d.is_alternating());
        assert_eq!(d.writhe().abs(), 3);
        assert!(d.is_prime_diagram());
    }

    #[test]
    fn curl_counts() {
        let d = parse_pd("X[1,2,2,1]").unwrap();
        assert_eq!(d.faces().len(), 3);
        // a loop joins adjacent slots, so it changes level
        assert_eq!(d.classify_edges(), vec![EdgeKind::Alternating; 2]);
    }

    #[test]
    fn face_sizes_trefoil() {
        let mut sizes: Vec<usize> = trefoil().faces().iter().map(|f| f.len()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![2, 2, 2, 3, 3]);
    }

    #[test]
    fn relabel_preserves_edge_classes() {
        let d = trefoil().switch_crossing(1);
        let r = d.relabel(&[2, 0, 1], &[true, false, true]);
        let mut a: Vec<_> = d.classify_edges();
        let mut b: Vec<_> = r.classify_edges();
        a.sort_by_key(|k| *k as u8);
        b.sort_by_key(|k| *k as u8);
        assert_eq!(a, b);
        assert_eq!(d.canonical_code(), r.canonical_code());
    }
}
