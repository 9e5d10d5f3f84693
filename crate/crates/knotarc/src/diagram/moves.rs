//! Reidemeister moves on knot diagrams.

use super::darts::{pass_through, splice};
use super::{crossing_of, is_over_slot, rot, slot_of, straight, Dart, EdgeKind, Face, PlanarKnotDiagram};
use crate::error::{Error, Result};

/// A triangular face admits a third move when its three corners and edges
/// are distinct and exactly one of its edges is alternating.
pub fn r3_admissible(d: &PlanarKnotDiagram, face: &Face) -> bool {
    if face.len() != 3 {
        return false;
    }
    let mut v = face.vertices();
    v.sort_unstable();
    v.dedup();
    let mut e: Vec<usize> = face.darts.iter().map(|&x| d.edge_of(x)).collect();
    e.sort_unstable();
    e.dedup();
    if v.len() != 3 || e.len() != 3 {
        return false;
    }
    let kinds = d.classify_edges();
    face.darts.iter().filter(|&&x| kinds[d.edge_of(x)] == EdgeKind::Alternating).count() == 1
}

/// Push the triangle `face` across its opposite crossings. Crossing indices
/// are kept, and each crossing keeps its layout of slots.
pub fn reidemeister3(d: &PlanarKnotDiagram, face: &Face) -> Result<PlanarKnotDiagram> {
    if !r3_admissible(d, face) {
        return Err(Error::InvalidArgument("face does not admit a third Reidemeister move".into()));
    }
    let old = d.partners();
    let mut new = old.to_vec();
    // ext darts with their images: f(ext) = internal dart of the same strand
    // at the other corner
    let mut ext: Vec<(Dart, Dart)> = Vec::with_capacity(6);
    for &di in &face.darts {
        let pi = old[di];
        ext.push((straight(di), pi));
        ext.push((straight(pi), di));
        new[straight(di)] = straight(pi);
        new[straight(pi)] = straight(di);
    }
    let f = |e: Dart| ext.iter().find(|(x, _)| *x == e).map(|&(_, y)| y);
    for &(e, fe) in &ext {
        let p = old[e];
        match f(p) {
            None => {
                new[fe] = p;
                new[p] = fe;
            }
            Some(fp) => new[fe] = fp,
        }
    }
    PlanarKnotDiagram::from_partner(new)
}

/// Insert a pair of crossings by pushing edge `dg` across edge `dh`, both
/// seen from the same face. `g_over` picks the strand lying on top.
pub fn reidemeister2_insert(d: &PlanarKnotDiagram, dg: Dart, dh: Dart, g_over: bool) -> Result<PlanarKnotDiagram> {
    let n = d.partners().len();
    if dg >= n || dh >= n {
        return Err(Error::InvalidArgument("dart out of range".into()));
    }
    let (_, face_of) = d.faces_with_index();
    if face_of[dg] != face_of[dh] || d.edge_of(dg) == d.edge_of(dh) {
        return Err(Error::InvalidArgument("darts must bound the same face on distinct edges".into()));
    }
    let old = d.partners();
    let (ag, ah) = (old[dg], old[dh]);
    let x = n / 4;
    let y = x + 1;
    // ccw order g-east, h-north, g-west, h-south, rotated so that the under
    // strand sits on slots 0 and 2
    let r = if g_over { 1 } else { 0 };
    let slot = |c: usize, k: usize| 4 * c + ((k + 4 - r) & 3);
    let (ge, hn, gw, hs) = (0, 1, 2, 3);
    let mut p = old.to_vec();
    p.resize(n + 8, 0);
    let mut link = |a: Dart, b: Dart| {
        p[a] = b;
        p[b] = a;
    };
    link(slot(x, ge), slot(y, gw));
    link(slot(x, hn), slot(y, hn));
    link(slot(x, gw), dg);
    link(slot(y, ge), ag);
    link(slot(y, hs), dh);
    link(slot(x, hs), ah);
    PlanarKnotDiagram::from_partner(p)
}

/// Remove curls and removable bigons until none are left.
pub fn simplify_r1r2(d: &PlanarKnotDiagram) -> PlanarKnotDiagram {
    let mut p = d.partners().to_vec();
    while let Some(q) = simplify_step(&p) {
        p = q;
    }
    PlanarKnotDiagram::from_partner_unchecked(p)
}

fn simplify_step(p: &[Dart]) -> Option<Vec<Dart>> {
    let c = p.len() / 4;
    for dart in 0..p.len() {
        if p[dart] == rot(dart) {
            let mut removed = vec![false; c];
            removed[crossing_of(dart)] = true;
            return Some(splice(p, &removed, pass_through).0);
        }
    }
    for dart in 0..p.len() {
        // bigon: the face orbit of `dart` has length two
        let a = p[dart];
        let next = rot(a);
        let b = p[next];
        if rot(b) != dart || crossing_of(dart) == crossing_of(a) {
            continue;
        }
        let nonalt = |u: Dart, v: Dart| is_over_slot(slot_of(u)) == is_over_slot(slot_of(v));
        if nonalt(dart, a) && nonalt(next, b) {
            let mut removed = vec![false; c];
            removed[crossing_of(dart)] = true;
            removed[crossing_of(a)] = true;
            return Some(splice(p, &removed, pass_through).0);
        }
    }
    None
}
