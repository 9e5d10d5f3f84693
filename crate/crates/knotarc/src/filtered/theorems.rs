//! Sufficient conditions for an arc presentation with fewer arcs than
//! crossings, and the construction realizing it.

use serde::Serialize;

use super::search::{certify, search_construction, SearchOptions};
use super::spoke::Construction;
use crate::diagram::{
    crossing_of, reidemeister3, straight, Labeling, PlanarKnotDiagram, TangleClassification, TangleKind,
};
use crate::error::{Error, Result};

/// One checked condition with the faces, vertices and edges that witness it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Condition {
    pub name: &'static str,
    pub passed: bool,
    pub faces: Vec<usize>,
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LabelingReport {
    pub labeling: Labeling,
    /// The edge `e` whose two faces form `F` for almost alternating diagrams.
    pub edge: Option<usize>,
    pub conditions: Vec<Condition>,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    pub kind: TangleKind,
    pub labelings: Vec<LabelingReport>,
    pub passed: bool,
    /// Index of the first passing labeling.
    pub chosen: Option<usize>,
}

struct Ctx<'a> {
    d: &'a PlanarKnotDiagram,
    fverts: Vec<Vec<usize>>,
    fedges: Vec<Vec<usize>>,
}

impl<'a> Ctx<'a> {
    fn new(d: &'a PlanarKnotDiagram) -> Self {
        let faces = d.faces();
        let fverts = faces
            .iter()
            .map(|f| {
                let mut v = f.vertices();
                v.sort_unstable();
                v.dedup();
                v
            })
            .collect();
        let fedges = faces
            .iter()
            .map(|f| {
                let mut e: Vec<usize> = f.darts.iter().map(|&x| d.edge_of(x)).collect();
                e.sort_unstable();
                e.dedup();
                e
            })
            .collect();
        Ctx { d, fverts, fedges }
    }

    fn verts(&self, faces: &[usize]) -> Vec<usize> {
        let mut v: Vec<usize> = faces.iter().flat_map(|&f| self.fverts[f].iter().copied()).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    fn edges(&self, faces: &[usize]) -> Vec<usize> {
        let mut v: Vec<usize> = faces.iter().flat_map(|&f| self.fedges[f].iter().copied()).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// A piece of the knot from some vertex of `from` to a different vertex
    /// of `to`, using no `forbidden` edge.
    fn string(&self, from: &[usize], to: &[usize], forbidden: &[usize]) -> Option<(usize, usize, Vec<usize>)> {
        let d = self.d;
        for &v in from {
            for s in 0..4 {
                let mut cur = 4 * v + s;
                let mut path = Vec::new();
                for _ in 0..d.edge_count() {
                    let e = d.edge_of(cur);
                    if forbidden.contains(&e) {
                        break;
                    }
                    path.push(e);
                    let arrive = d.partner(cur);
                    let x = crossing_of(arrive);
                    if x != v && to.contains(&x) {
                        return Some((v, x, path));
                    }
                    if x == v {
                        break;
                    }
                    cur = straight(arrive);
                }
            }
        }
        None
    }

    fn disjoint(
        &self,
        name: &'static str,
        l: &Labeling,
        f_faces: &[usize],
        allowed: &[usize],
        need_edges: bool,
    ) -> Condition {
        let fv = self.verts(f_faces);
        let other = self.verts(&[l.f1, l.f2]);
        let common: Vec<usize> = fv.iter().copied().filter(|v| other.contains(v)).collect();
        let fe = self.edges(f_faces);
        let edges_ok = !need_edges || (fe.contains(&l.e1) && fe.contains(&l.e2));
        Condition {
            name,
            passed: edges_ok && common == allowed,
            faces: [f_faces, &[l.f1, l.f2]].concat(),
            vertices: common,
            edges: if need_edges { vec![l.e1, l.e2] } else { Vec::new() },
        }
    }

    fn string_condition(&self, from: Vec<usize>, to: Vec<usize>, forbidden_faces: &[usize]) -> Condition {
        let forbidden = self.edges(forbidden_faces);
        match self.string(&from, &to, &forbidden) {
            Some((v, w, path)) => Condition {
                name: "string",
                passed: true,
                faces: forbidden_faces.to_vec(),
                vertices: vec![v, w],
                edges: path,
            },
            None => Condition {
                name: "string",
                passed: false,
                faces: forbidden_faces.to_vec(),
                vertices: Vec::new(),
                edges: Vec::new(),
            },
        }
    }
}

/// Check the conditions matching `tc.kind` for every labeling.
pub fn check_theorem_conditions(d: &PlanarKnotDiagram, tc: &TangleClassification) -> Result<ConditionReport> {
    if matches!(tc.kind, TangleKind::Alternating | TangleKind::Other) {
        return Err(Error::InvalidArgument(format!("no conditions apply to a diagram of kind {:?}", tc.kind)));
    }
    let ctx = Ctx::new(d);
    let mut reports = Vec::new();
    for l in &tc.labelings {
        match tc.kind {
            TangleKind::ChainPlusOne { .. } => {
                let c1 = ctx.disjoint("face", l, &[l.f], &[], true);
                let mut from = ctx.verts(&[l.f]);
                from.push(l.q);
                let c2 = ctx.string_condition(from, ctx.verts(&[l.f2]), &[l.f1, l.f3]);
                reports.push(report(l.clone(), None, vec![c1, c2]));
            }
            TangleKind::Chain { n: 1 } => {
                for e in [l.e1, l.e2] {
                    let [a, b] = d.edge(e);
                    let faces = faces_of_edge(d, a, b);
                    let c1 = ctx.disjoint("face", l, &faces, &[l.q], false);
                    let c2 = ctx.string_condition(ctx.verts(&faces), ctx.verts(&[l.f2]), &[l.f1, l.f3]);
                    reports.push(report(l.clone(), Some(e), vec![c1, c2]));
                }
            }
            TangleKind::Chain { n } => {
                let c1 = ctx.disjoint("face", l, &[l.f], &[], true);
                let to: Vec<usize> = ctx.verts(&[l.f2]).into_iter().filter(|&w| w != l.q).collect();
                let c2 = ctx.string_condition(ctx.verts(&[l.f]), to, &[l.f1, l.f2, l.f3]);
                let size = d.faces()[l.f2].len();
                let c3 = Condition {
                    name: "f2_size",
                    passed: size >= n + 3,
                    faces: vec![l.f2],
                    vertices: Vec::new(),
                    edges: ctx.edges(&[l.f2]),
                };
                reports.push(report(l.clone(), None, vec![c1, c2, c3]));
            }
            TangleKind::Alternating | TangleKind::Other => unreachable!(),
        }
    }
    let chosen = reports.iter().position(|r| r.passed);
    Ok(ConditionReport { kind: tc.kind, passed: chosen.is_some(), labelings: reports, chosen })
}

fn faces_of_edge(d: &PlanarKnotDiagram, a: usize, b: usize) -> Vec<usize> {
    let (_, face_of) = d.faces_with_index();
    let mut f = vec![face_of[a], face_of[b]];
    f.dedup();
    f
}

fn report(labeling: Labeling, edge: Option<usize>, conditions: Vec<Condition>) -> LabelingReport {
    let passed = conditions.iter().all(|c| c.passed);
    LabelingReport { labeling, edge, conditions, passed }
}

/// An arc presentation with at most `c - 1` arcs: push the triangle of the
/// passing labeling across, then look for a filtered tree on the new diagram
/// meeting three doubly good edges.
pub fn construct_minus_one(
    d: &PlanarKnotDiagram,
    tc: &TangleClassification,
    report: &ConditionReport,
) -> Result<Construction> {
    let Some(i) = report.chosen else {
        return Err(Error::InvalidArgument("the conditions do not hold".into()));
    };
    let l = &report.labelings[i].labeling;
    let tri = d
        .faces()
        .into_iter()
        .nth(l.f3)
        .ok_or_else(|| Error::InvalidArgument("labeling does not match the diagram".into()))?;
    if tc.labelings.iter().all(|x| x != l) {
        return Err(Error::InvalidArgument("report does not belong to this classification".into()));
    }
    let moved = reidemeister3(d, &tri)?;
    let mut last = None;
    for root in [Some(l.v0), None] {
        let opts = SearchOptions { root, ..SearchOptions::default() };
        match search_construction(&moved, 3, &opts) {
            Ok(c) if certify(d, &c.grid)? => return Ok(c),
            Ok(_) => last = Some(Error::Construction("construction does not match the diagram".into())),
            Err(e) => last = Some(e),
        }
    }
    Err(last.unwrap())
}
