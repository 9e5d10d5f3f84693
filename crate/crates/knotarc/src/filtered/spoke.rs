use serde::Serialize;

use super::FilteredTree;
use crate::diagram::{crossing_of, slot_of, PlanarKnotDiagram};
use crate::error::{Error, Result};
use crate::grid::{ArcPresentation, GridDiagram};

/// Region and spoke counts after one step of the contraction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ConservationRecord {
    pub step: usize,
    pub regions: usize,
    pub spokes: usize,
    pub removals: usize,
}

/// Result of contracting a filtered spanning tree.
#[derive(Clone, Debug, Serialize)]
pub struct Construction {
    pub grid: GridDiagram,
    pub tree: FilteredTree,
    /// Spokes dropped because their endpoints sat at adjacent levels.
    pub removals: usize,
    /// Doubly good edges met along the filtration.
    pub doubly_good: Vec<usize>,
    pub trace: Vec<ConservationRecord>,
    /// Steps at which regions plus spokes differed from `c + 2 - removals`.
    pub violations: usize,
}

impl Construction {
    pub fn arc_count(&self) -> usize {
        self.grid.size()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Item {
    /// An edge leaving the contracted tree; `bind` is the level of its strand.
    Ray {
        dart: usize,
        bind: usize,
    },
    Spoke {
        a: usize,
        b: usize,
    },
}

/// State of the knot-spoke diagram: a single vertex for the contracted tree,
/// the cyclic order of rays and spokes around it, and the levels of the
/// binding points from bottom to top.
#[derive(Clone, Debug)]
pub(crate) struct Machine<'a> {
    d: &'a PlanarKnotDiagram,
    in_tree: Vec<bool>,
    spoked: Vec<bool>,
    tree_edges: Vec<bool>,
    items: Vec<Item>,
    levels: Vec<usize>,
    next_bind: usize,
    pub(crate) removals: usize,
    cap: usize,
    steps: usize,
    pub(crate) trace: Vec<ConservationRecord>,
    pub(crate) violations: usize,
}

impl<'a> Machine<'a> {
    pub(crate) fn start(d: &'a PlanarKnotDiagram, root: usize, cap: usize) -> Result<Self> {
        let c = d.crossing_count();
        if root >= c {
            return Err(Error::InvalidArgument(format!("root {root} out of range")));
        }
        let mut m = Machine {
            d,
            in_tree: vec![false; c],
            spoked: vec![false; d.edge_count()],
            tree_edges: vec![false; d.edge_count()],
            items: (0..4).map(|s| Item::Ray { dart: 4 * root + s, bind: s & 1 }).collect(),
            levels: vec![0, 1],
            next_bind: 2,
            removals: 0,
            cap,
            steps: 0,
            trace: Vec::new(),
            violations: 0,
        };
        m.in_tree[root] = true;
        m.settle()?;
        Ok(m)
    }

    fn ray_index(&self, dart: usize) -> Option<usize> {
        self.items.iter().position(|it| matches!(it, Item::Ray { dart: x, .. } if *x == dart))
    }

    pub(crate) fn contract(&mut self, e: usize) -> Result<()> {
        let d = self.d;
        let [x, y] = d.edge(e);
        let (inner, outer) = match (self.in_tree[crossing_of(x)], self.in_tree[crossing_of(y)]) {
            (true, false) => (x, y),
            (false, true) => (y, x),
            _ => return Err(Error::Construction(format!("edge {e} does not extend the tree"))),
        };
        let idx = self.ray_index(inner).ok_or_else(|| Error::Construction(format!("edge {e} is not a ray")))?;
        let Item::Ray { bind: h, .. } = self.items[idx] else { unreachable!() };
        let p = crossing_of(outer);
        let k = slot_of(outer);
        let nb = self.next_bind;
        self.next_bind += 1;
        // the strand crossing the contracted one goes above everything when
        // it is the over strand at p, below everything otherwise
        if k.is_multiple_of(2) {
            self.levels.push(nb);
        } else {
            self.levels.insert(0, nb);
        }
        let ray = |s: usize, bind| Item::Ray { dart: 4 * p + ((k + s) & 3), bind };
        self.items.splice(idx..=idx, [ray(1, nb), ray(2, h), ray(3, nb)]);
        self.in_tree[p] = true;
        self.tree_edges[e] = true;
        self.settle()
    }

    /// Convert simple loops to spokes, fold the last loop, drop spokes at
    /// adjacent levels, then record the counts.
    fn settle(&mut self) -> Result<()> {
        while self.convert_one_loop() {}
        if self.in_tree.iter().all(|&b| b) {
            self.fold()?;
        }
        while self.removals < self.cap && self.remove_one() {}
        self.record();
        Ok(())
    }

    fn loops(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, it) in self.items.iter().enumerate() {
            if let Item::Ray { dart, .. } = *it {
                if let Some(j) = self.ray_index(self.d.partner(dart)) {
                    if i < j {
                        out.push((i, j));
                    }
                }
            }
        }
        out
    }

    fn is_ray(&self, i: usize) -> bool {
        matches!(self.items[i], Item::Ray { .. })
    }

    fn bind(&self, i: usize) -> usize {
        match self.items[i] {
            Item::Ray { bind, .. } => bind,
            Item::Spoke { .. } => unreachable!(),
        }
    }

    fn level(&self, b: usize) -> usize {
        self.levels.iter().position(|&x| x == b).unwrap()
    }

    fn strictly_spans(&self, i: usize, h: usize) -> bool {
        let Item::Spoke { a, b } = self.items[i] else { return false };
        let (la, lb) = (self.level(a), self.level(b));
        la.min(lb) < h && h < la.max(lb)
    }

    /// Turn one loop with only spokes on one side into a spoke placed where
    /// neither end has to pass a spoke straddling its level.
    fn convert_one_loop(&mut self) -> bool {
        let n = self.items.len();
        for (i, j) in self.loops() {
            let inner: Vec<usize> = (i + 1..j).collect();
            let outer: Vec<usize> = (j + 1..n).chain(0..i).collect();
            let inner_clear = inner.iter().all(|&x| !self.is_ray(x));
            let outer_clear = outer.iter().all(|&x| !self.is_ray(x));
            if inner_clear == outer_clear {
                continue;
            }
            // walk the spoke-only side from `first` to `last`
            let (first, last, side) = if inner_clear { (i, j, inner) } else { (j, i, outer) };
            let (hf, hl) = (self.level(self.bind(first)), self.level(self.bind(last)));
            let place = (0..=side.len()).find(|&t| {
                side[..t].iter().all(|&x| !self.strictly_spans(x, hf))
                    && side[t..].iter().all(|&x| !self.strictly_spans(x, hl))
            });
            let Some(t) = place else {
                continue;
            };
            let spoke = Item::Spoke { a: self.bind(first), b: self.bind(last) };
            let Item::Ray { dart, .. } = self.items[i] else { unreachable!() };
            self.spoked[self.d.edge_of(dart)] = true;
            // rebuild the rotation: the spoke-only side with the new spoke
            // inserted at `t`, followed by the other side
            let other: Vec<usize> = if inner_clear { (j + 1..n).chain(0..i).collect() } else { (i + 1..j).collect() };
            let mut items = Vec::with_capacity(n - 1);
            for (pos, &x) in side.iter().enumerate() {
                if pos == t {
                    items.push(spoke);
                }
                items.push(self.items[x]);
            }
            if t == side.len() {
                items.push(spoke);
            }
            items.extend(other.iter().map(|&x| self.items[x]));
            self.items = items;
            return true;
        }
        false
    }

    /// The last loop is pulled onto the axis at a new top level and becomes
    /// two spokes.
    fn fold(&mut self) -> Result<()> {
        let loops = self.loops();
        let rays = self.items.iter().filter(|it| matches!(it, Item::Ray { .. })).count();
        if rays == 0 {
            return Ok(());
        }
        if loops.len() != 1 || rays != 2 {
            return Err(Error::Construction(format!("{} loops remain at the end", loops.len())));
        }
        let (i, j) = loops[0];
        let w = self.next_bind;
        self.next_bind += 1;
        self.levels.push(w);
        let (bi, bj) = (self.bind(i), self.bind(j));
        let Item::Ray { dart, .. } = self.items[i] else { unreachable!() };
        self.spoked[self.d.edge_of(dart)] = true;
        self.items[i] = Item::Spoke { a: bi, b: w };
        self.items[j] = Item::Spoke { a: w, b: bj };
        Ok(())
    }

    /// Drop a spoke joining adjacent levels, merging the two levels.
    fn remove_one(&mut self) -> bool {
        if self.items.iter().any(|it| matches!(it, Item::Ray { .. })) {
            return false;
        }
        for i in 0..self.items.len() {
            let Item::Spoke { a, b } = self.items[i] else { continue };
            let (la, lb) = (self.level(a), self.level(b));
            if la.abs_diff(lb) != 1 || self.items.iter().filter(|it| matches!(it, Item::Spoke { .. })).count() <= 2 {
                continue;
            }
            self.items.remove(i);
            self.levels.retain(|&x| x != b);
            for it in &mut self.items {
                match it {
                    Item::Ray { bind, .. } if *bind == b => *bind = a,
                    Item::Spoke { a: x, b: y } => {
                        if *x == b {
                            *x = a;
                        }
                        if *y == b {
                            *y = a;
                        }
                    }
                    _ => {}
                }
            }
            self.removals += 1;
            return true;
        }
        false
    }

    fn record(&mut self) {
        let d = self.d;
        let vertices = 1 + self.in_tree.iter().filter(|&&b| !b).count();
        let edges = (0..d.edge_count()).filter(|&e| !self.tree_edges[e] && !self.spoked[e]).count();
        let spokes = self.items.iter().filter(|it| matches!(it, Item::Spoke { .. })).count();
        let regions = if edges == 0 { 0 } else { edges + 2 - vertices };
        let expected = d.crossing_count() + 2 - self.removals;
        let done = edges == 0;
        // after the fold every region has become a spoke
        if regions + spokes != expected && !(done && spokes == expected) {
            self.violations += 1;
        }
        self.trace.push(ConservationRecord { step: self.steps, regions, spokes, removals: self.removals });
        self.steps += 1;
    }

    pub(crate) fn is_finished(&self) -> bool {
        self.items.iter().all(|it| matches!(it, Item::Spoke { .. }))
    }

    pub(crate) fn presentation(&self) -> Result<ArcPresentation> {
        if !self.is_finished() {
            return Err(Error::Construction("the tree is not spanning".into()));
        }
        let pages = self
            .items
            .iter()
            .map(|it| match *it {
                Item::Spoke { a, b } => [self.level(a), self.level(b)],
                Item::Ray { .. } => unreachable!(),
            })
            .collect();
        Ok(ArcPresentation { pages })
    }
}

/// Contract `tree` edge by edge, dropping at most `cap` spokes at adjacent
/// levels.
pub fn run_spoke_machine(d: &PlanarKnotDiagram, tree: &FilteredTree, cap: usize) -> Result<Construction> {
    tree.validate(d)?;
    if !tree.is_spanning(d) {
        return Err(Error::InvalidArgument("the tree must span the diagram".into()));
    }
    if d.crossing_count() == 0 {
        return Ok(Construction {
            grid: GridDiagram::unknot(),
            tree: tree.clone(),
            removals: 0,
            doubly_good: Vec::new(),
            trace: Vec::new(),
            violations: 0,
        });
    }
    let mut m = Machine::start(d, tree.root, cap)?;
    for &e in &tree.edges {
        m.contract(e)?;
    }
    finish(&m, tree)
}

pub(crate) fn finish(m: &Machine<'_>, tree: &FilteredTree) -> Result<Construction> {
    let pres = m.presentation()?;
    let grid = GridDiagram::from_arc_presentation(&pres)?;
    Ok(Construction {
        grid,
        tree: tree.clone(),
        removals: m.removals,
        doubly_good: super::search::doubly_good_along(m.d, tree),
        trace: m.trace.clone(),
        violations: m.violations,
    })
}

/// The `c + 2` arc presentation of a filtered spanning tree, with no spokes
/// dropped.
pub fn arc_presentation_from_tree(d: &PlanarKnotDiagram, tree: &FilteredTree) -> Result<Construction> {
    run_spoke_machine(d, tree, 0)
}
