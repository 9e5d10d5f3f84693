use serde::{Deserialize, Serialize};

use super::GridDiagram;
use crate::error::{Error, Result};

/// Where a stabilization puts the new column and row relative to the mark.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Corner {
    NE,
    NW,
    SE,
    SW,
}

impl Corner {
    pub const ALL: [Corner; 4] = [Corner::NE, Corner::NW, Corner::SE, Corner::SW];
}

fn other(pair: [usize; 2], x: usize) -> usize {
    if pair[0] == x {
        pair[1]
    } else {
        pair[0]
    }
}

impl GridDiagram {
    /// Connected sum with `n1 + n2 - 2` columns, joining at the lowest row of
    /// each grid.
    pub fn connected_sum(&self, other: &GridDiagram) -> Result<GridDiagram> {
        self.connected_sum_at(0, other, 0)
    }

    /// Connected sum cutting the horizontal segment of row `p` here and of
    /// row `q` in `other`. The rows of `other` replace row `p`, read
    /// cyclically from just above `q`; one column of each grid is merged at
    /// both ends of the cut.
    pub fn connected_sum_at(&self, p: usize, g2: &GridDiagram, q: usize) -> Result<GridDiagram> {
        for g in [self, g2] {
            if let Some(v) = g.validate().first() {
                return Err(Error::InvalidGrid(v.to_string()));
            }
        }
        let (n1, n2) = (self.size(), g2.size());
        if p >= n1 || q >= n2 {
            return Err(Error::InvalidArgument("row out of range".into()));
        }
        let [pc, pc2] = self.rows()[p];
        let [qc, qc2] = g2.rows()[q];
        let map1 = |r: usize| if r < p { r } else { r + n2 - 2 };
        let map2 = |r: usize| p + (r + n2 - q - 1) % n2;
        let merged = |c1: usize, c2: usize| [map1(other(self.columns[c1], p)), map2(other(g2.columns[c2], q))];
        let between = |a: usize, b: usize| -> Vec<usize> {
            let mut v = Vec::new();
            let mut k = (a + 1) % n2;
            while k != b {
                v.push(k);
                k = (k + 1) % n2;
            }
            v
        };
        let g2col = |k: usize| g2.columns[k].map(map2);
        let mut cols = Vec::with_capacity(n1 + n2 - 2);
        for c in 0..n1 {
            if c == pc {
                cols.push(merged(pc, qc));
                cols.extend(between(qc, qc2).into_iter().map(g2col));
            } else if c == pc2 {
                cols.push(merged(pc2, qc2));
                cols.extend(between(qc2, qc).into_iter().map(g2col));
            } else {
                cols.push(self.columns[c].map(map1));
            }
        }
        GridDiagram::new(cols)
    }

    /// Add one column and one row next to the mark at (`column`, `row`).
    pub fn stabilize(&self, column: usize, row: usize, corner: Corner) -> Result<GridDiagram> {
        let n = self.size();
        if column >= n || !self.columns[column].contains(&row) {
            return Err(Error::InvalidArgument(format!("no mark at column {column}, row {row}")));
        }
        let far_row = other(self.columns[column], row);
        let (east, north) = match corner {
            Corner::NE => (true, true),
            Corner::NW => (false, true),
            Corner::SE => (true, false),
            Corner::SW => (false, false),
        };
        // doubled coordinates leave odd slots for the new line
        let mut items: Vec<(isize, [isize; 2])> = Vec::with_capacity(n + 1);
        let ny = 2 * row as isize + if north { 1 } else { -1 };
        let nx = 2 * column as isize + if east { 1 } else { -1 };
        for (c, &[a, b]) in self.columns.iter().enumerate() {
            let pair = if c == column { [2 * far_row as isize, ny] } else { [2 * a as isize, 2 * b as isize] };
            items.push((2 * c as isize, pair));
        }
        items.push((nx, [ny, 2 * row as isize]));
        items.sort_by_key(|&(x, _)| x);
        let mut ys: Vec<isize> = (0..n as isize).map(|r| 2 * r).collect();
        ys.push(ny);
        ys.sort_unstable();
        let rank = |y: isize| ys.binary_search(&y).expect("row present");
        GridDiagram::new(items.into_iter().map(|(_, [a, b])| [rank(a), rank(b)]).collect())
    }

    /// Cyclic shift: new column `i` is old column `i + k`.
    pub fn rotate_columns(&self, k: usize) -> GridDiagram {
        let n = self.size();
        GridDiagram::from_columns_unchecked((0..n).map(|i| self.columns[(i + k) % n]).collect())
    }

    /// Cyclic shift of the rows by `k`.
    pub fn rotate_rows(&self, k: usize) -> GridDiagram {
        let n = self.size();
        GridDiagram::from_columns_unchecked(self.columns.iter().map(|c| c.map(|r| (r + k) % n)).collect())
    }

    /// Reverse the column order, which draws the mirror image.
    pub fn reflect(&self) -> GridDiagram {
        let mut cols = self.columns.clone();
        cols.reverse();
        GridDiagram::from_columns_unchecked(cols)
    }
}
