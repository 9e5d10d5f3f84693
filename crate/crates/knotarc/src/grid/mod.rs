//! Grid diagrams: `n` columns, each a vertical segment between two rows,
//! with every row also carrying two marks. Vertical strands pass over.

mod convert;
mod io;
mod ops;
mod render;

pub use convert::ArcPresentation;
pub use ops::Corner;
pub use render::RenderFormat;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GridDiagram {
    columns: Vec<[usize; 2]>,
}

impl Serialize for GridDiagram {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("GridDiagram", 2)?;
        st.serialize_field("n", &self.size())?;
        st.serialize_field("columns", &self.columns)?;
        st.end()
    }
}

/// One broken grid invariant.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    TooSmall { n: usize },
    RowOutOfRange { column: usize, row: usize },
    DegenerateColumn { column: usize },
    RowMultiplicity { row: usize, count: usize },
    Components { count: usize },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::TooSmall { n } => write!(f, "grid size {n} is below 2"),
            Violation::RowOutOfRange { column, row } => write!(f, "column {column}: row {row} out of range"),
            Violation::DegenerateColumn { column } => write!(f, "column {column}: both marks in one row"),
            Violation::RowMultiplicity { row, count } => write!(f, "row {row} has {count} marks, expected 2"),
            Violation::Components { count } => write!(f, "{count} components, expected 1"),
        }
    }
}

impl GridDiagram {
    /// Build and validate.
    pub fn new(columns: Vec<[usize; 2]>) -> Result<Self> {
        let g = Self { columns };
        let v = g.validate();
        if let Some(first) = v.first() {
            return Err(Error::InvalidGrid(first.to_string()));
        }
        Ok(g)
    }

    /// Build without checking; call [`GridDiagram::validate`] before use.
    pub fn from_columns_unchecked(columns: Vec<[usize; 2]>) -> Self {
        Self { columns }
    }

    /// The 2-grid of the unknot.
    pub fn unknot() -> Self {
        Self { columns: vec![[0, 1], [0, 1]] }
    }

    pub fn size(&self) -> usize {
        self.columns.len()
    }

    pub fn columns(&self) -> &[[usize; 2]] {
        &self.columns
    }

    /// Column span as `(low, high)`.
    pub fn span(&self, c: usize) -> (usize, usize) {
        let [a, b] = self.columns[c];
        (a.min(b), a.max(b))
    }

    /// The two columns holding marks in each row, left one first.
    pub fn rows(&self) -> Vec<[usize; 2]> {
        let n = self.size();
        let mut rows = vec![Vec::with_capacity(2); n];
        for (c, pair) in self.columns.iter().enumerate() {
            for &r in pair {
                if r < n {
                    rows[r].push(c);
                }
            }
        }
        rows.into_iter().map(|v| [v.first().copied().unwrap_or(0), v.get(1).copied().unwrap_or(0)]).collect()
    }

    /// Every broken invariant; empty for a valid grid.
    pub fn validate(&self) -> Vec<Violation> {
        let n = self.size();
        let mut out = Vec::new();
        if n < 2 {
            out.push(Violation::TooSmall { n });
        }
        let mut count = vec![0usize; n];
        for (c, &[a, b]) in self.columns.iter().enumerate() {
            for r in [a, b] {
                if r >= n {
                    out.push(Violation::RowOutOfRange { column: c, row: r });
                } else {
                    count[r] += 1;
                }
            }
            if a == b {
                out.push(Violation::DegenerateColumn { column: c });
            }
        }
        for (r, &k) in count.iter().enumerate() {
            if k != 2 {
                out.push(Violation::RowMultiplicity { row: r, count: k });
            }
        }
        if out.is_empty() {
            let k = self.component_count();
            if k != 1 {
                out.push(Violation::Components { count: k });
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    /// Number of closed curves traced by the segments. Assumes the mark
    /// counts are already correct.
    fn component_count(&self) -> usize {
        let rows = self.rows();
        let n = self.size();
        let mut seen = vec![false; n];
        let mut k = 0;
        for s in 0..n {
            if seen[s] {
                continue;
            }
            k += 1;
            let mut c = s;
            let mut r = self.columns[s][0];
            loop {
                seen[c] = true;
                let [a, b] = self.columns[c];
                r = if r == a { b } else { a };
                let [p, q] = rows[r];
                c = if p == c { q } else { p };
                if c == s {
                    break;
                }
            }
        }
        k
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trefoil_is_valid() {
        let g = GridDiagram::new(vec![[0, 2], [1, 3], [2, 4], [0, 3], [1, 4]]).unwrap();
        assert_eq!(g.size(), 5);
    }

    #[test]
    fn two_squares_fail() {
        let g = GridDiagram::from_columns_unchecked(vec![[0, 1], [2, 3], [0, 1], [2, 3]]);
        assert_eq!(g.validate(), vec![Violation::Components { count: 2 }]);
    }

    #[test]
    fn bad_multiplicity() {
        let g = GridDiagram::from_columns_unchecked(vec![[0, 1], [0, 0]]);
        let v = g.validate();
        assert!(v.contains(&Violation::DegenerateColumn { column: 1 }));
        assert!(v.contains(&Violation::RowMultiplicity { row: 0, count: 3 }));
    }
}
