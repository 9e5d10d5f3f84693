use serde::{Deserialize, Serialize};

use super::GridDiagram;
use crate::diagram::PlanarKnotDiagram;
use crate::error::{Error, Result};

/// An arc presentation: page `i` in the cyclic page order carries one arc
/// joining binding points `pages[i][0]` and `pages[i][1]`, numbered along
/// the axis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArcPresentation {
    pub pages: Vec<[usize; 2]>,
}

impl ArcPresentation {
    pub fn arc_count(&self) -> usize {
        self.pages.len()
    }
}

// crossing slots: the horizontal strand is under
const EAST: usize = 0;
const NORTH: usize = 1;
const WEST: usize = 2;
const SOUTH: usize = 3;

impl GridDiagram {
    /// Read pages as columns and binding points as rows.
    pub fn from_arc_presentation(a: &ArcPresentation) -> Result<Self> {
        Self::new(a.pages.clone())
    }

    pub fn to_arc_presentation(&self) -> ArcPresentation {
        ArcPresentation { pages: self.columns.clone() }
    }

    /// The knot diagram drawn by the grid, oriented from the lower mark of
    /// column 0 going up.
    pub fn to_planar_diagram(&self) -> Result<PlanarKnotDiagram> {
        if let Some(v) = self.validate().first() {
            return Err(Error::InvalidGrid(v.to_string()));
        }
        let n = self.size();
        let rows = self.rows();
        // crossing index of each (column, row) interleaving
        let mut index = vec![usize::MAX; n * n];
        let mut count = 0;
        for c in 0..n {
            let (lo, hi) = self.span(c);
            for (r, &[p, q]) in rows.iter().enumerate() {
                if lo < r && r < hi && p < c && c < q {
                    index[c * n + r] = count;
                    count += 1;
                }
            }
        }
        if count == 0 {
            return Ok(PlanarKnotDiagram::unknot());
        }
        // (entry dart, exit dart) for each crossing passage, in order
        let mut passes: Vec<(usize, usize)> = Vec::with_capacity(2 * count);
        let mut c = 0;
        let mut r = self.span(0).0;
        loop {
            let (lo, hi) = self.span(c);
            let up = r == lo;
            let top = if up { hi } else { lo };
            let ys: Vec<usize> = if up { (lo + 1..hi).collect() } else { (lo + 1..hi).rev().collect() };
            for y in ys {
                let x = index[c * n + y];
                if x != usize::MAX {
                    let (a, b) = if up { (SOUTH, NORTH) } else { (NORTH, SOUTH) };
                    passes.push((4 * x + a, 4 * x + b));
                }
            }
            r = top;
            let [p, q] = rows[r];
            let next = if p == c { q } else { p };
            let right = next > c;
            let xs: Vec<usize> = if right { (c + 1..next).collect() } else { (next + 1..c).rev().collect() };
            for col in xs {
                let x = index[col * n + r];
                if x != usize::MAX {
                    let (a, b) = if right { (WEST, EAST) } else { (EAST, WEST) };
                    passes.push((4 * x + a, 4 * x + b));
                }
            }
            c = next;
            if c == 0 {
                break;
            }
        }
        let mut partner = vec![0; 4 * count];
        for i in 0..passes.len() {
            let out = passes[i].1;
            let inn = passes[(i + 1) % passes.len()].0;
            partner[out] = inn;
            partner[inn] = out;
        }
        PlanarKnotDiagram::from_partner(partner)
    }
}
