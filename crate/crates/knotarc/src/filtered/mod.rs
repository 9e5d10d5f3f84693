//! Filtered spanning trees and the constructions of arc presentations from
//! them.
//!
//! A filtered tree is a root crossing plus an ordered edge list in which
//! every prefix is a tree. The spanning tree is contracted edge by edge in
//! [`spoke`], each new loop becoming a spoke; spokes whose endpoints sit at
//! adjacent levels are then dropped, one arc each.

mod cutting;
mod search;
mod spoke;
mod theorems;

pub use cutting::{classify_extension, cutting_arcs, CuttingArc, ExtensionClass};
pub use search::{
    build_good_spanning_tree, construct_nonalternating, detect_doubly_good, find_detour, find_good_extensions, is_good,
    search_construction, SearchOptions,
};
pub use spoke::{arc_presentation_from_tree, run_spoke_machine, ConservationRecord, Construction};
pub use theorems::{check_theorem_conditions, construct_minus_one, Condition, ConditionReport, LabelingReport};

use serde::Serialize;

use crate::diagram::{crossing_of, slot_of, PlanarKnotDiagram};
use crate::error::{Error, Result};

/// Root crossing plus tree edges in filtration order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FilteredTree {
    pub root: usize,
    pub edges: Vec<usize>,
}

/// Label of a closure edge relative to the newest tree edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeLabel {
    Good,
    Bad,
    Neutral,
}

impl FilteredTree {
    pub fn new(root: usize) -> Self {
        Self { root, edges: Vec::new() }
    }

    /// Check that every prefix is a tree.
    pub fn validate(&self, d: &PlanarKnotDiagram) -> Result<()> {
        if self.root >= d.crossing_count() {
            return Err(Error::InvalidArgument(format!("root {} out of range", self.root)));
        }
        let mut inside = vec![false; d.crossing_count()];
        inside[self.root] = true;
        for (i, &e) in self.edges.iter().enumerate() {
            if e >= d.edge_count() {
                return Err(Error::InvalidArgument(format!("edge {e} out of range")));
            }
            let (a, b) = d.edge_endpoints(e);
            match (inside[a], inside[b]) {
                (true, false) => inside[b] = true,
                (false, true) => inside[a] = true,
                _ => {
                    return Err(Error::InvalidArgument(format!(
                        "edge {} (position {}) does not extend the tree",
                        e,
                        i + 1
                    )))
                }
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_spanning(&self, d: &PlanarKnotDiagram) -> bool {
        self.edges.len() + 1 == d.crossing_count()
    }

    /// The first `i` edges.
    pub fn prefix(&self, i: usize) -> FilteredTree {
        FilteredTree { root: self.root, edges: self.edges[..i].to_vec() }
    }

    pub fn extended(&self, e: usize) -> FilteredTree {
        let mut t = self.clone();
        t.edges.push(e);
        t
    }

    /// Vertex membership of the whole tree.
    pub fn vertex_mask(&self, d: &PlanarKnotDiagram) -> Vec<bool> {
        let mut inside = vec![false; d.crossing_count()];
        inside[self.root] = true;
        for &e in &self.edges {
            let (a, b) = d.edge_endpoints(e);
            inside[a] = true;
            inside[b] = true;
        }
        inside
    }

    /// The vertex added by the last edge and the dart through which that
    /// edge reaches it.
    pub fn newest(&self, d: &PlanarKnotDiagram) -> Option<(usize, usize)> {
        let &e = self.edges.last()?;
        let before = self.prefix(self.edges.len() - 1).vertex_mask(d);
        let [a, b] = d.edge(e);
        let dart = if before[crossing_of(a)] { b } else { a };
        Some((crossing_of(dart), dart))
    }

    pub fn edge_mask(&self, d: &PlanarKnotDiagram) -> Vec<bool> {
        let mut m = vec![false; d.edge_count()];
        for &e in &self.edges {
            m[e] = true;
        }
        m
    }
}

/// Edges with both ends in the vertex set.
pub fn closure_of(d: &PlanarKnotDiagram, inside: &[bool]) -> Vec<bool> {
    (0..d.edge_count())
        .map(|e| {
            let (a, b) = d.edge_endpoints(e);
            inside[a] && inside[b]
        })
        .collect()
}

/// Closure of a filtered tree: the tree plus every edge meeting it at both ends.
pub fn closure(d: &PlanarKnotDiagram, t: &FilteredTree) -> Vec<usize> {
    let m = closure_of(d, &t.vertex_mask(d));
    (0..d.edge_count()).filter(|&e| m[e]).collect()
}

/// Good or bad status of a closure edge `f` of the tree `t` relative to its
/// last edge; edges away from the newest vertex are neutral.
pub fn classify_good_bad(d: &PlanarKnotDiagram, t: &FilteredTree, f: usize) -> Result<EdgeLabel> {
    let inside = t.vertex_mask(d);
    let (a, b) = d.edge_endpoints(f);
    if !(inside[a] && inside[b]) || t.edges.contains(&f) {
        return Err(Error::InvalidArgument(format!("edge {f} is not in the closure minus the tree")));
    }
    Ok(label_at_newest(d, t, f))
}

pub(crate) fn label_at_newest(d: &PlanarKnotDiagram, t: &FilteredTree, f: usize) -> EdgeLabel {
    let Some((p, entry)) = t.newest(d) else {
        return EdgeLabel::Neutral;
    };
    let k = slot_of(entry);
    let mut label = EdgeLabel::Neutral;
    for dart in d.edge(f) {
        if crossing_of(dart) != p {
            continue;
        }
        let s = slot_of(dart);
        if s == (k + 2) & 3 {
            return EdgeLabel::Bad;
        }
        if s != k {
            label = EdgeLabel::Good;
        }
    }
    label
}

/// Closure edges added by the last tree edge, with their labels.
pub fn new_closure_edges(d: &PlanarKnotDiagram, t: &FilteredTree) -> Vec<(usize, EdgeLabel)> {
    if t.edges.is_empty() {
        let m = closure_of(d, &t.vertex_mask(d));
        return (0..d.edge_count()).filter(|&e| m[e]).map(|e| (e, EdgeLabel::Neutral)).collect();
    }
    let now = closure_of(d, &t.vertex_mask(d));
    let before = closure_of(d, &t.prefix(t.len() - 1).vertex_mask(d));
    let tree = t.edge_mask(d);
    (0..d.edge_count()).filter(|&e| now[e] && !before[e] && !tree[e]).map(|e| (e, label_at_newest(d, t, e))).collect()
}
