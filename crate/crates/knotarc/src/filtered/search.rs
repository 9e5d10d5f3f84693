use serde::Serialize;

use super::cutting::{classify_extension_detail, cutting_arcs, sides, tree_path};
use super::spoke::{finish, Construction, Machine};
use super::{closure_of, new_closure_edges, EdgeLabel, FilteredTree};
use crate::diagram::{EdgeKind, PlanarKnotDiagram};
use crate::error::{Error, Result};
use crate::grid::GridDiagram;
use crate::invariants::{budget_from_env, kauffman_polynomial_with_budget};

use super::cutting::ExtensionClass;

/// Knobs for the tree searches.
#[derive(Clone, Debug, Serialize)]
pub struct SearchOptions {
    /// Restrict to one root crossing; all roots are tried otherwise.
    pub root: Option<usize>,
    /// Maximum number of search nodes before giving up.
    pub node_budget: usize,
    /// Only follow good extensions.
    pub good_only: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self { root: None, node_budget: 200_000, good_only: true }
    }
}

/// Crossing budget for comparing a constructed grid against its diagram.
pub(crate) fn certificate_budget() -> usize {
    budget_from_env().max(24)
}

/// Whether the grid carries the same Kauffman polynomial as the diagram.
pub(crate) fn certify(d: &PlanarKnotDiagram, g: &GridDiagram) -> Result<bool> {
    let b = certificate_budget();
    let f = kauffman_polynomial_with_budget(d, b)?;
    let h = kauffman_polynomial_with_budget(&g.to_planar_diagram()?, b)?;
    Ok(f == h)
}

fn candidates(d: &PlanarKnotDiagram, inside: &[bool]) -> Vec<usize> {
    let kinds = d.classify_edges();
    let mut out: Vec<usize> = (0..d.edge_count())
        .filter(|&e| {
            let (a, b) = d.edge_endpoints(e);
            inside[a] != inside[b]
        })
        .collect();
    // nonalternating edges are better left outside the tree
    out.sort_by_key(|&e| (kinds[e] == EdgeKind::Nonalternating, e));
    out
}

/// Whether every proper prefix is free of cutting arcs and bad edges.
pub fn is_good(d: &PlanarKnotDiagram, t: &FilteredTree) -> bool {
    let spanning = d.crossing_count().saturating_sub(1);
    (1..=t.len()).all(|i| {
        let p = t.prefix(i);
        i == spanning
            || (cutting_arcs(d, &p).is_empty() && new_closure_edges(d, &p).iter().all(|&(_, l)| l != EdgeLabel::Bad))
    })
}

/// Edges whose addition keeps the tree good. Every extension completing a
/// spanning tree counts as good.
pub fn find_good_extensions(d: &PlanarKnotDiagram, t: &FilteredTree) -> Result<Vec<usize>> {
    t.validate(d)?;
    let inside = t.vertex_mask(d);
    let all = candidates(d, &inside);
    if t.len() + 2 >= d.crossing_count() {
        return Ok(all);
    }
    let mut out = Vec::new();
    for e in all {
        if classify_extension_detail(d, t, e)?.0 == ExtensionClass::Good {
            out.push(e);
        }
    }
    Ok(out)
}

fn good_step(d: &PlanarKnotDiagram, t: &FilteredTree, e: usize) -> bool {
    t.len() + 2 >= d.crossing_count() || matches!(classify_extension_detail(d, t, e), Ok((ExtensionClass::Good, _)))
}

/// For a B2 or B3 extension `e`, a run of good extensions that swallows the
/// side of the innermost cutting arc holding the right neighbour of `e`.
pub fn find_detour(d: &PlanarKnotDiagram, t: &FilteredTree, e: usize) -> Result<Vec<usize>> {
    t.validate(d)?;
    let (class, arc) = classify_extension_detail(d, t, e)?;
    let arc = match (class, arc) {
        (ExtensionClass::B2 | ExtensionClass::B3, Some(a)) => a,
        _ => return Err(Error::InvalidArgument(format!("edge {e} is a {class:?} extension, not B2 or B3"))),
    };
    let (faces, _) = d.faces_with_index();
    let mut cycle = vec![false; d.edge_count()];
    for &x in &arc.path {
        cycle[x] = true;
    }
    let fidx = arc.face;
    let f = &faces[fidx];
    let ia = f.darts.iter().position(|&x| x == arc.p_dart).unwrap();
    let ib = f.darts.iter().position(|&x| x == arc.c_dart).unwrap();
    let side = sides(d, &faces, &cycle, Some((fidx, ia, ib)));
    let right = d.edges_at(arc.p)[(crate::diagram::slot_of(d.dart_at(e, arc.p).unwrap()) + 1) & 3];
    let target_side = side[d.edge(right)[0]];
    let before = closure_of(d, &t.vertex_mask(d));
    let allowed: Vec<bool> =
        (0..d.edge_count()).map(|x| x == e || (!cycle[x] && side[d.edge(x)[0]] == target_side)).collect();
    let target: Vec<usize> = (0..d.edge_count()).filter(|&x| x != e && allowed[x] && !before[x]).collect();
    let mut budget = 100_000usize;
    let mut found = None;
    detour_dfs(d, t, &allowed, &target, &mut budget, &mut found);
    let full = found.ok_or_else(|| Error::Construction(format!("no detour found around edge {e}")))?;
    Ok(full.edges[t.len()..].to_vec())
}

fn detour_dfs(
    d: &PlanarKnotDiagram,
    t: &FilteredTree,
    allowed: &[bool],
    target: &[usize],
    budget: &mut usize,
    found: &mut Option<FilteredTree>,
) {
    if found.is_some() || *budget == 0 {
        return;
    }
    *budget -= 1;
    let cl = closure_of(d, &t.vertex_mask(d));
    if target.iter().all(|&x| cl[x]) {
        *found = Some(t.clone());
        return;
    }
    for e in candidates(d, &t.vertex_mask(d)) {
        if allowed[e] && good_step(d, t, e) {
            detour_dfs(d, &t.extended(e), allowed, target, budget, found);
            if found.is_some() {
                return;
            }
        }
    }
}

/// Labels of every closure edge at the step it entered the closure.
fn labels_along(d: &PlanarKnotDiagram, t: &FilteredTree) -> Vec<Option<EdgeLabel>> {
    let mut labels = vec![None; d.edge_count()];
    for i in 0..=t.len() {
        for (e, l) in new_closure_edges(d, &t.prefix(i)) {
            labels[e] = Some(l);
        }
    }
    labels
}

/// Whether the closure edge `f`, new at the last step of `t`, is doubly
/// good: good, nonalternating, and its cycle through the tree has only good
/// closure edges on one side.
pub fn detect_doubly_good(d: &PlanarKnotDiagram, t: &FilteredTree, f: usize) -> bool {
    let new = new_closure_edges(d, t);
    if !new.contains(&(f, EdgeLabel::Good)) || d.classify_edges()[f] != EdgeKind::Nonalternating {
        return false;
    }
    let labels = labels_along(d, t);
    let tree = t.edge_mask(d);
    let (a, b) = d.edge_endpoints(f);
    let mut cycle = vec![false; d.edge_count()];
    cycle[f] = true;
    for e in tree_path(d, t, a, b) {
        cycle[e] = true;
    }
    let (faces, _) = d.faces_with_index();
    let side = sides(d, &faces, &cycle, None);
    let [fa, fb] = d.edge(f);
    [side[fa], side[fb]].into_iter().any(|s| {
        (0..d.edge_count())
            .filter(|&e| !cycle[e] && side[d.edge(e)[0]] == s)
            .all(|e| !tree[e] && labels[e] == Some(EdgeLabel::Good))
    })
}

pub(crate) fn doubly_good_along(d: &PlanarKnotDiagram, t: &FilteredTree) -> Vec<usize> {
    let mut out = Vec::new();
    for i in 1..=t.len() {
        let p = t.prefix(i);
        for (f, _) in new_closure_edges(d, &p) {
            if detect_doubly_good(d, &p, f) {
                out.push(f);
            }
        }
    }
    out
}

fn roots(d: &PlanarKnotDiagram, opts: &SearchOptions) -> Vec<usize> {
    match opts.root {
        Some(r) => vec![r],
        None => (0..d.crossing_count()).collect(),
    }
}

/// A good filtered spanning tree, grown depth first from the root with
/// alternating edges preferred, falling back on detours at dead ends.
pub fn build_good_spanning_tree(d: &PlanarKnotDiagram, opts: &SearchOptions) -> Result<FilteredTree> {
    if d.crossing_count() == 0 {
        return Err(Error::InvalidArgument("the diagram has no crossings".into()));
    }
    let mut budget = opts.node_budget;
    for r in roots(d, opts) {
        if let Some(t) = grow(d, FilteredTree::new(r), &mut budget)? {
            return Ok(t);
        }
    }
    Err(Error::Construction("no good filtered spanning tree found".into()))
}

fn grow(d: &PlanarKnotDiagram, t: FilteredTree, budget: &mut usize) -> Result<Option<FilteredTree>> {
    if t.is_spanning(d) {
        return Ok(Some(t));
    }
    if *budget == 0 {
        return Err(Error::Construction("search budget exhausted".into()));
    }
    *budget -= 1;
    let good = find_good_extensions(d, &t)?;
    for &e in &good {
        if let Some(found) = grow(d, t.extended(e), budget)? {
            return Ok(Some(found));
        }
    }
    if good.is_empty() {
        for e in candidates(d, &t.vertex_mask(d)) {
            if let Ok(detour) = find_detour(d, &t, e) {
                let mut t2 = t.clone();
                t2.edges.extend(detour);
                if let Some(found) = grow(d, t2, budget)? {
                    return Ok(Some(found));
                }
            }
        }
    }
    Ok(None)
}

/// Search filtered spanning trees for a contraction dropping `target`
/// spokes, returning the first whose grid carries the diagram's invariant.
pub fn search_construction(d: &PlanarKnotDiagram, target: usize, opts: &SearchOptions) -> Result<Construction> {
    if d.crossing_count() == 0 {
        return Err(Error::InvalidArgument("the diagram has no crossings".into()));
    }
    let mut budget = opts.node_budget;
    for r in roots(d, opts) {
        let m = Machine::start(d, r, target)?;
        if let Some(c) = dfs(d, FilteredTree::new(r), m, target, opts, &mut budget)? {
            return Ok(c);
        }
    }
    Err(Error::Construction(format!("no filtered tree dropping {target} spokes was found")))
}

fn dfs(
    d: &PlanarKnotDiagram,
    t: FilteredTree,
    m: Machine<'_>,
    target: usize,
    opts: &SearchOptions,
    budget: &mut usize,
) -> Result<Option<Construction>> {
    if t.is_spanning(d) {
        if m.removals < target || m.violations > 0 {
            return Ok(None);
        }
        let c = finish(&m, &t)?;
        if c.grid.is_valid() && certify(d, &c.grid)? {
            return Ok(Some(c));
        }
        return Ok(None);
    }
    if *budget == 0 {
        return Err(Error::Construction("search budget exhausted".into()));
    }
    *budget -= 1;
    for e in candidates(d, &t.vertex_mask(d)) {
        if opts.good_only && !good_step(d, &t, e) {
            continue;
        }
        let mut m2 = m.clone();
        if m2.contract(e).is_err() {
            continue;
        }
        if let Some(c) = dfs(d, t.extended(e), m2, target, opts, budget)? {
            return Ok(Some(c));
        }
    }
    Ok(None)
}

/// An arc presentation with `c` arcs for a prime nonalternating diagram
/// with `c` crossings, from a good tree meeting two doubly good edges.
pub fn construct_nonalternating(d: &PlanarKnotDiagram) -> Result<Construction> {
    if d.is_alternating() {
        return Err(Error::InvalidArgument("the diagram is alternating".into()));
    }
    if !d.is_prime_diagram() {
        return Err(Error::InvalidArgument("the diagram is not prime".into()));
    }
    search_construction(d, 2, &SearchOptions::default())
}
