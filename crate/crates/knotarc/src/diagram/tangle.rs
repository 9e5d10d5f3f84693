//! Location of the alternating tangle that makes a diagram nonalternating.
//!
//! A side is cut off by a bond of four edges, i.e. a simple closed curve
//! meeting the diagram in four points. An `n`-tangle is a chain of `n`
//! crossings with consecutive crossings joined by two edges. An
//! `(n,1)`-tangle is such a chain plus one crossing joined by single edges to
//! both ends of the chain, so that the extra crossing and the chain bound an
//! `(n+1)`-gon. A single crossing is the 1-tangle.

use serde::Serialize;

use super::{crossing_of, r3_admissible, slot_of, EdgeKind, PlanarKnotDiagram};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TangleKind {
    Alternating,
    /// `(n,1)`-nonalternating.
    ChainPlusOne {
        n: usize,
    },
    /// `n`-nonalternating; `n = 1` is almost alternating.
    Chain {
        n: usize,
    },
    Other,
}

impl TangleKind {
    pub fn is_almost_alternating(&self) -> bool {
        matches!(self, TangleKind::Chain { n: 1 })
    }
}

/// The located tangle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TangleWitness {
    /// Crossings of the tangle, chain order first, then the extra crossing.
    pub crossings: Vec<usize>,
    /// The four edges crossing the separating curve.
    pub boundary: Vec<usize>,
    pub nonalternating: Vec<usize>,
}

/// Faces, edges and vertices around a nonalternating triangle used by the
/// conditions for saving one more arc.
///
/// `f3` is the triangle and `x` one of its corners. `f` is the face opposite
/// `f3` at `x`, bounded there by `e1` and `e2`. `f1` lies across the side of
/// `f3` opposite `x`, `v0` is a corner of `f1` off the triangle and `f2` is
/// the face opposite `f1` at `v0`. `q` is another corner of the triangle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Labeling {
    pub f1: usize,
    pub f2: usize,
    pub f3: usize,
    pub f: usize,
    pub x: usize,
    pub v0: usize,
    pub q: usize,
    pub e1: usize,
    pub e2: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TangleClassification {
    #[serde(flatten)]
    pub kind: TangleKind,
    pub witness: Option<TangleWitness>,
    pub labelings: Vec<Labeling>,
}

/// Classify the nonalternating structure of `d`. Assumes a prime minimal
/// diagram; nothing here depends on that beyond the meaning of the answer.
pub fn detect_tangle_structure(d: &PlanarKnotDiagram) -> TangleClassification {
    let nonalt = d.nonalternating_edges();
    if nonalt.is_empty() {
        return TangleClassification { kind: TangleKind::Alternating, witness: None, labelings: Vec::new() };
    }
    let mut best: Option<(TangleKind, TangleWitness)> = None;
    let rank = |k: &TangleKind| match *k {
        TangleKind::Chain { n: 1 } => (0, 1),
        TangleKind::ChainPlusOne { n } => (1, n),
        TangleKind::Chain { n } => (2, n),
        _ => (3, 0),
    };
    for cut in bonds(d, 4) {
        if !nonalt.iter().all(|e| cut.edges.contains(e)) {
            continue;
        }
        for side in [&cut.a, &cut.b] {
            let Some((kind, order)) = match_pattern(d, side) else { continue };
            if best.as_ref().is_none_or(|(k, _)| rank(&kind) < rank(k)) {
                best = Some((
                    kind,
                    TangleWitness { crossings: order, boundary: cut.edges.clone(), nonalternating: nonalt.clone() },
                ));
            }
        }
    }
    let labelings = labelings(d);
    match best {
        Some((kind, w)) => TangleClassification { kind, witness: Some(w), labelings },
        None => TangleClassification { kind: TangleKind::Other, witness: None, labelings },
    }
}

struct Bond {
    edges: Vec<usize>,
    a: Vec<usize>,
    b: Vec<usize>,
}

/// Edge sets of size `k` whose removal leaves exactly two pieces with every
/// removed edge running between them.
fn bonds(d: &PlanarKnotDiagram, k: usize) -> Vec<Bond> {
    let m = d.edge_count();
    let c = d.crossing_count();
    let mut out = Vec::new();
    let mut pick = vec![0usize; k];
    fn rec(i: usize, start: usize, m: usize, pick: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if i == pick.len() {
            f(pick);
            return;
        }
        for e in start..m {
            pick[i] = e;
            rec(i + 1, e + 1, m, pick, f);
        }
    }
    rec(0, 0, m, &mut pick, &mut |edges: &[usize]| {
        let mut comp = vec![usize::MAX; c];
        let mut count = 0;
        for s in 0..c {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = count;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for e in d.edges_at(v) {
                    if edges.contains(&e) {
                        continue;
                    }
                    let w = d.other_end(e, v);
                    if comp[w] == usize::MAX {
                        comp[w] = count;
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        if count != 2 {
            return;
        }
        if edges.iter().any(|&e| {
            let (x, y) = d.edge_endpoints(e);
            comp[x] == comp[y]
        }) {
            return;
        }
        out.push(Bond {
            edges: edges.to_vec(),
            a: (0..c).filter(|&v| comp[v] == 0).collect(),
            b: (0..c).filter(|&v| comp[v] == 1).collect(),
        });
    });
    out
}

fn edges_between(d: &PlanarKnotDiagram, x: usize, y: usize) -> usize {
    d.edges_at(x).iter().filter(|&&e| d.other_end(e, x) == y).count()
}

/// Chain order of `side` if the crossings form a path of doubled edges.
fn chain_order(d: &PlanarKnotDiagram, side: &[usize]) -> Option<Vec<usize>> {
    if side.len() == 1 {
        return Some(side.to_vec());
    }
    let deg = |x: usize| side.iter().filter(|&&y| y != x && edges_between(d, x, y) == 2).count();
    let ends: Vec<usize> = side.iter().copied().filter(|&x| deg(x) == 1).collect();
    if ends.len() != 2 {
        return None;
    }
    let mut order = vec![ends[0]];
    while order.len() < side.len() {
        let last = *order.last().unwrap();
        let next = side.iter().copied().find(|&y| !order.contains(&y) && edges_between(d, last, y) == 2)?;
        order.push(next);
    }
    // no other edges between chain members
    for (i, &x) in order.iter().enumerate() {
        for &y in &order[i + 1..] {
            let want = if order.iter().position(|&z| z == y) == Some(i + 1) { 2 } else { 0 };
            if edges_between(d, x, y) != want {
                return None;
            }
        }
    }
    Some(order)
}

fn match_pattern(d: &PlanarKnotDiagram, side: &[usize]) -> Option<(TangleKind, Vec<usize>)> {
    let internal_alternating = side.iter().all(|&x| {
        d.edges_at(x).iter().all(|&e| {
            let (a, b) = d.edge_endpoints(e);
            !(side.contains(&a) && side.contains(&b)) || d.classify_edges()[e] == EdgeKind::Alternating
        })
    });
    if !internal_alternating {
        return None;
    }
    if let Some(order) = chain_order(d, side) {
        return Some((TangleKind::Chain { n: order.len() }, order));
    }
    if side.len() >= 3 {
        for &y in side {
            let rest: Vec<usize> = side.iter().copied().filter(|&z| z != y).collect();
            let Some(order) = chain_order(d, &rest) else { continue };
            let (first, last) = (order[0], *order.last().unwrap());
            let single_ends = edges_between(d, y, first) == 1 && edges_between(d, y, last) == 1;
            let touches_middle = order[1..order.len() - 1].iter().any(|&z| edges_between(d, y, z) > 0);
            if single_ends && !touches_middle && has_chain_face(d, y, &order) {
                let mut all = order.clone();
                all.push(y);
                return Some((TangleKind::ChainPlusOne { n: order.len() }, all));
            }
        }
    }
    None
}

/// Whether some face has exactly the chain plus `y` as its corners.
fn has_chain_face(d: &PlanarKnotDiagram, y: usize, order: &[usize]) -> bool {
    d.faces().iter().any(|f| {
        let mut v = f.vertices();
        v.sort_unstable();
        let mut want: Vec<usize> = order.iter().copied().chain([y]).collect();
        want.sort_unstable();
        v == want
    })
}

/// Every labeling around a nonalternating triangle.
pub fn labelings(d: &PlanarKnotDiagram) -> Vec<Labeling> {
    let (faces, face_of) = d.faces_with_index();
    let mut out = Vec::new();
    for (f3, tri) in faces.iter().enumerate() {
        if !r3_admissible(d, tri) {
            continue;
        }
        for ci in 0..3 {
            let dx = tri.darts[ci];
            let x = crossing_of(dx);
            let s = slot_of(dx);
            let f = face_of[4 * x + ((s + 2) & 3)];
            let e1 = d.edges_at(x)[(s + 1) & 3];
            let e2 = d.edges_at(x)[(s + 2) & 3];
            let across = tri.darts[(ci + 1) % 3];
            let f1 = face_of[d.partner(across)];
            let tri_v = tri.vertices();
            for &dv in &faces[f1].darts {
                let v0 = crossing_of(dv);
                if tri_v.contains(&v0) {
                    continue;
                }
                let f2 = face_of[4 * v0 + ((slot_of(dv) + 2) & 3)];
                for &q in tri_v.iter().filter(|&&q| q != x) {
                    out.push(Labeling { f1, f2, f3, f, x, v0, q, e1, e2 });
                }
            }
        }
    }
    out
}
