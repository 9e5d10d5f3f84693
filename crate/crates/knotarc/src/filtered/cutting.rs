use std::collections::VecDeque;

use serde::Serialize;

use super::{closure_of, FilteredTree};
use crate::diagram::{crossing_of, slot_of, Face, PlanarKnotDiagram};
use crate::error::{Error, Result};

/// An arc inside one face from the newest tree vertex to an older one whose
/// cycle with the tree separates the edges outside the closure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CuttingArc {
    pub face: usize,
    /// Corner darts at the two ends of the arc.
    pub p_dart: usize,
    pub c_dart: usize,
    pub p: usize,
    pub c: usize,
    /// Tree path from `c` to `p`.
    pub path: Vec<usize>,
    /// Edges outside the closure on the side away from the face at the
    /// corner before the newest tree edge.
    pub enclosed: Vec<usize>,
    pub outside: Vec<usize>,
    /// Whether the extension edge, its right and its left neighbour at `p`
    /// lie on the enclosed side.
    pub encloses_extension: bool,
    pub encloses_right: bool,
    pub encloses_left: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum ExtensionClass {
    Good,
    B1,
    B2,
    B3,
}

/// Two-colouring of darts by the sides of a simple closed curve made of
/// `cycle` edges, optionally closed through face `split.0` between corner
/// indices `split.1` and `split.2`.
pub(crate) fn sides(
    d: &PlanarKnotDiagram,
    faces: &[Face],
    cycle: &[bool],
    split: Option<(usize, usize, usize)>,
) -> Vec<usize> {
    let n = 4 * d.crossing_count();
    let mut uf: Vec<usize> = (0..n).collect();
    fn find(uf: &mut [usize], mut x: usize) -> usize {
        while uf[x] != x {
            uf[x] = uf[uf[x]];
            x = uf[x];
        }
        x
    }
    let join = |uf: &mut Vec<usize>, a: usize, b: usize| {
        let (ra, rb) = (find(uf, a), find(uf, b));
        if ra != rb {
            uf[ra] = rb;
        }
    };
    for (fi, f) in faces.iter().enumerate() {
        let m = f.darts.len();
        for j in 0..m {
            let next = (j + 1) % m;
            if let Some((sf, a, b)) = split {
                if sf == fi && (next == a || next == b) {
                    continue;
                }
            }
            join(&mut uf, f.darts[j], f.darts[next]);
        }
    }
    for (e, &on) in cycle.iter().enumerate() {
        if !on {
            let [a, b] = d.edge(e);
            join(&mut uf, a, b);
        }
    }
    (0..n).map(|x| find(&mut uf, x)).collect()
}

/// Path of tree edges between two tree vertices.
pub(crate) fn tree_path(d: &PlanarKnotDiagram, t: &FilteredTree, from: usize, to: usize) -> Vec<usize> {
    let c = d.crossing_count();
    let mut prev: Vec<Option<(usize, usize)>> = vec![None; c];
    let mut seen = vec![false; c];
    seen[from] = true;
    let mut q = VecDeque::from([from]);
    while let Some(v) = q.pop_front() {
        if v == to {
            break;
        }
        for &e in &t.edges {
            let (a, b) = d.edge_endpoints(e);
            let w = if a == v {
                b
            } else if b == v {
                a
            } else {
                continue;
            };
            if !seen[w] {
                seen[w] = true;
                prev[w] = Some((v, e));
                q.push_back(w);
            }
        }
    }
    let mut path = Vec::new();
    let mut v = to;
    while let Some((u, e)) = prev[v] {
        path.push(e);
        v = u;
    }
    path.reverse();
    path
}

/// All cutting arcs of `t` at its newest vertex, innermost first.
pub fn cutting_arcs(d: &PlanarKnotDiagram, t: &FilteredTree) -> Vec<CuttingArc> {
    let Some((p, entry)) = t.newest(d) else {
        return Vec::new();
    };
    let inside = t.vertex_mask(d);
    let cl = closure_of(d, &inside);
    let outside_edges: Vec<usize> = (0..d.edge_count()).filter(|&e| !cl[e]).collect();
    if outside_edges.len() < 2 {
        return Vec::new();
    }
    let (faces, _) = d.faces_with_index();
    let k = slot_of(entry);
    let mut out = Vec::new();
    for (fi, f) in faces.iter().enumerate() {
        let m = f.darts.len();
        for ia in 0..m {
            if crossing_of(f.darts[ia]) != p {
                continue;
            }
            for ib in 0..m {
                let c = crossing_of(f.darts[ib]);
                if c == p || !inside[c] || ib == (ia + 1) % m || ia == (ib + 1) % m {
                    continue;
                }
                let path = tree_path(d, t, c, p);
                let mut cycle = vec![false; d.edge_count()];
                for &e in &path {
                    cycle[e] = true;
                }
                let side = sides(d, &faces, &cycle, Some((fi, ia, ib)));
                let r = side[entry];
                let side_of = |e: usize| side[d.edge(e)[0]];
                let (enclosed, outside): (Vec<usize>, Vec<usize>) =
                    outside_edges.iter().partition(|&&e| side_of(e) != r);
                if enclosed.is_empty() || outside.is_empty() {
                    continue;
                }
                let at = |s: usize| d.edges_at(p)[(k + s) & 3];
                out.push(CuttingArc {
                    face: fi,
                    p_dart: f.darts[ia],
                    c_dart: f.darts[ib],
                    p,
                    c,
                    path,
                    encloses_extension: side_of(at(2)) != r,
                    encloses_right: side_of(at(1)) != r,
                    encloses_left: side_of(at(3)) != r,
                    enclosed,
                    outside,
                });
            }
        }
    }
    out.sort_by_key(|a| (a.enclosed.len(), a.face, a.p_dart, a.c_dart));
    out
}

/// Class of the extension of `t` by an edge with exactly one end in it.
pub fn classify_extension(d: &PlanarKnotDiagram, t: &FilteredTree, e: usize) -> Result<ExtensionClass> {
    Ok(classify_extension_detail(d, t, e)?.0)
}

pub(crate) fn classify_extension_detail(
    d: &PlanarKnotDiagram,
    t: &FilteredTree,
    e: usize,
) -> Result<(ExtensionClass, Option<CuttingArc>)> {
    let inside = t.vertex_mask(d);
    if e >= d.edge_count() {
        return Err(Error::InvalidArgument(format!("edge {e} out of range")));
    }
    let (a, b) = d.edge_endpoints(e);
    if inside[a] == inside[b] {
        return Err(Error::InvalidArgument(format!("edge {e} does not have exactly one end in the tree")));
    }
    let dart = d.edge(e).into_iter().find(|&x| !inside[crossing_of(x)]).unwrap();
    let p = crossing_of(dart);
    let ext = d.edges_at(p)[(slot_of(dart) + 2) & 3];
    let far = d.other_end(ext, p);
    if inside[far] && ext != e {
        return Ok((ExtensionClass::B1, None));
    }
    let t2 = t.extended(e);
    let arcs = cutting_arcs(d, &t2);
    match arcs.into_iter().next() {
        None => Ok((ExtensionClass::Good, None)),
        Some(arc) if arc.encloses_extension => Ok((ExtensionClass::B2, Some(arc))),
        Some(arc) => Ok((ExtensionClass::B3, Some(arc))),
    }
}
