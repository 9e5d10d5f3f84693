//! Four-ended tangles, used to assemble knot diagrams from Conway notation.

use super::{crossing_of, slot_of, PlanarKnotDiagram};
use crate::error::{Error, Result};

const NW: usize = 0;
const NE: usize = 1;
const SE: usize = 2;
const SW: usize = 3;

/// A tangle with `n` crossings. `link` is an involution on the items
/// `0..4n` (darts) and `4n..4n+4` (the ends NW, NE, SE, SW).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tangle {
    n: usize,
    link: Vec<usize>,
}

impl Tangle {
    /// A single crossing. For `+1` the over strand runs SW to NE.
    pub fn crossing(sign: i32) -> Self {
        let ends = if sign > 0 { [NW, SW, SE, NE] } else { [NE, NW, SW, SE] };
        let mut link = vec![0; 8];
        for (s, &p) in ends.iter().enumerate() {
            link[s] = 4 + p;
            link[4 + p] = s;
        }
        Self { n: 1, link }
    }

    /// The tangle with two horizontal arcs.
    pub fn zero() -> Self {
        Self { n: 0, link: vec![NE, NW, SW, SE] }
    }

    /// `k` horizontal half twists; the sign of `k` picks the crossing type.
    pub fn integer(k: i32) -> Self {
        let mut t = Self::zero();
        for _ in 0..k.unsigned_abs() {
            t = t.sum(&Self::crossing(k.signum()));
        }
        t
    }

    /// Rational tangle `a1 a2 ... an` in Conway notation, whose fraction is
    /// `an + 1/(a(n-1) + ... + 1/a1)`.
    pub fn rational(seq: &[i32]) -> Self {
        let mut it = seq.iter();
        let mut t = match it.next() {
            Some(&a) => Self::integer(a),
            None => return Self::zero(),
        };
        for &a in it {
            t = t.invert().sum(&Self::integer(a));
        }
        t
    }

    pub fn crossing_count(&self) -> usize {
        self.n
    }

    /// Horizontal sum: `self` on the left.
    pub fn sum(&self, other: &Tangle) -> Tangle {
        glue(&[self, other], &[((0, NE), (1, NW)), ((0, SE), (1, SW))], [(0, NW), (1, NE), (1, SE), (0, SW)]).0
    }

    /// Vertical product: `self` on top.
    pub fn stack(&self, other: &Tangle) -> Tangle {
        glue(&[self, other], &[((0, SW), (1, NW)), ((0, SE), (1, NE))], [(0, NW), (0, NE), (1, SE), (1, SW)]).0
    }

    /// Quarter turn counterclockwise.
    pub fn rotate(&self) -> Tangle {
        // the end at NW moves to SW, and so on
        let to = [SW, NW, NE, SE];
        let n4 = 4 * self.n;
        let map = |i: usize| if i < n4 { i } else { n4 + to[i - n4] };
        let mut link = vec![0; self.link.len()];
        for i in 0..self.link.len() {
            link[map(i)] = map(self.link[i]);
        }
        Tangle { n: self.n, link }
    }

    /// Switch every crossing.
    pub fn mirror(&self) -> Tangle {
        let n4 = 4 * self.n;
        let map = |i: usize| if i < n4 { 4 * crossing_of(i) + ((slot_of(i) + 1) & 3) } else { i };
        let mut link = vec![0; self.link.len()];
        for i in 0..self.link.len() {
            link[map(i)] = map(self.link[i]);
        }
        Tangle { n: self.n, link }
    }

    /// The tangle with fraction `1/F`.
    pub fn invert(&self) -> Tangle {
        self.rotate().mirror()
    }

    /// Join NW to NE and SW to SE.
    pub fn numerator(&self) -> Result<PlanarKnotDiagram> {
        self.close([(NW, NE), (SW, SE)])
    }

    /// Join NW to SW and NE to SE.
    pub fn denominator(&self) -> Result<PlanarKnotDiagram> {
        self.close([(NW, SW), (NE, SE)])
    }

    fn close(&self, pairs: [(usize, usize); 2]) -> Result<PlanarKnotDiagram> {
        let glue_pairs: Vec<_> = pairs.iter().map(|&(a, b)| ((0, a), (0, b))).collect();
        let (t, loops) = glue_closed(self, &glue_pairs);
        if loops > 1 || (loops == 1 && t.n > 0) {
            return Err(Error::InvalidDiagram("closure is not a knot".into()));
        }
        if t.n == 0 {
            return Ok(PlanarKnotDiagram::unknot());
        }
        PlanarKnotDiagram::from_partner(t.link)
    }

    /// Montesinos closure of `t1,t2,...` : the numerator of the sum of the
    /// inverted tangles.
    pub fn montesinos(parts: &[Tangle]) -> Result<PlanarKnotDiagram> {
        let mut acc: Option<Tangle> = None;
        for p in parts {
            let q = p.invert();
            acc = Some(match acc {
                None => q,
                Some(a) => a.sum(&q),
            });
        }
        acc.unwrap_or_else(Tangle::zero).numerator()
    }
}

/// Two tangle ends to be joined, each as (part, end).
type EndPair = ((usize, usize), (usize, usize));

/// Glue tangles along pairs of ends. Returns the result with the ends in
/// `out` (as NW, NE, SE, SW) and the number of closed loops without crossings.
fn glue(parts: &[&Tangle], pairs: &[EndPair], out: [(usize, usize); 4]) -> (Tangle, usize) {
    let (link, n, loops) = glue_raw(parts, pairs, &out);
    (Tangle { n, link }, loops)
}

fn glue_closed(t: &Tangle, pairs: &[EndPair]) -> (Tangle, usize) {
    let (link, n, loops) = glue_raw(&[t], pairs, &[]);
    (Tangle { n, link }, loops)
}

fn glue_raw(parts: &[&Tangle], pairs: &[EndPair], out: &[(usize, usize)]) -> (Vec<usize>, usize, usize) {
    let mut base = Vec::with_capacity(parts.len());
    let mut n = 0;
    for p in parts {
        base.push(4 * n);
        n += p.n;
    }
    let total = 4 * n + out.len();
    // global ids: darts first, then every part's ends
    let end_id = |k: usize, p: usize| total + 4 * k + p;
    let to_global = |k: usize, i: usize| if i < 4 * parts[k].n { base[k] + i } else { end_id(k, i - 4 * parts[k].n) };
    let size = total + 4 * parts.len();
    let mut link = vec![usize::MAX; size];
    for (k, p) in parts.iter().enumerate() {
        for i in 0..p.link.len() {
            link[to_global(k, i)] = to_global(k, p.link[i]);
        }
    }
    // `jump` crosses a glued or exported end
    let mut jump = vec![usize::MAX; size];
    for &((k1, p1), (k2, p2)) in pairs {
        jump[end_id(k1, p1)] = end_id(k2, p2);
        jump[end_id(k2, p2)] = end_id(k1, p1);
    }
    for (j, &(k, p)) in out.iter().enumerate() {
        jump[end_id(k, p)] = 4 * n + j;
    }
    let walk = |mut v: usize, seen: &mut Vec<bool>| -> usize {
        while v >= total {
            seen[v] = true;
            let w = jump[v];
            if w < total {
                return w;
            }
            seen[w] = true;
            v = link[w];
        }
        v
    };
    let mut seen = vec![false; size];
    let mut out_link = vec![0; total];
    for i in 0..4 * n {
        out_link[i] = walk(link[i], &mut seen);
    }
    for (j, &(k, p)) in out.iter().enumerate() {
        seen[end_id(k, p)] = true;
        out_link[4 * n + j] = walk(link[end_id(k, p)], &mut seen);
    }
    let mut loops = 0;
    for s in total..size {
        if seen[s] || jump[s] == usize::MAX {
            continue;
        }
        loops += 1;
        let mut v = s;
        loop {
            seen[v] = true;
            let w = jump[v];
            seen[w] = true;
            v = link[w];
            if v == s {
                break;
            }
        }
    }
    (out_link, n, loops)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_bridge_crossing_counts() {
        let t = Tangle::rational(&[2, 1, 1]);
        assert_eq!(t.crossing_count(), 4);
        let d = t.numerator().unwrap();
        assert_eq!(d.crossing_count(), 4);
    }

    #[test]
    fn rotate_four_times_is_identity() {
        let t = Tangle::rational(&[3, 2]);
        assert_eq!(t.rotate().rotate().rotate().rotate(), t);
    }

    #[test]
    fn trivial_closures() {
        assert_eq!(Tangle::zero().denominator().unwrap().crossing_count(), 0);
        assert!(Tangle::zero().numerator().is_err());
    }
}
