use serde::{Deserialize, Serialize};

use super::GridDiagram;
use crate::error::{Error, Result};

#[derive(Serialize, Deserialize)]
struct GridJson {
    n: usize,
    columns: Vec<[usize; 2]>,
}

impl GridDiagram {
    /// Parse the text format: `grid <n>` then `col <i>: <r1> <r2>` lines,
    /// `#` starting a comment. The result is validated.
    pub fn parse(text: &str) -> Result<Self> {
        Self::new(parse_text_columns(text)?)
    }

    /// Parse either format without checking the grid invariants.
    pub fn parse_unchecked(text: &str) -> Result<Self> {
        let columns = if text.trim_start().starts_with('{') { json_columns(text)? } else { parse_text_columns(text)? };
        Ok(Self::from_columns_unchecked(columns))
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("grid {}\n", self.size());
        for (i, [a, b]) in self.columns.iter().enumerate() {
            s.push_str(&format!("col {i}: {a} {b}\n"));
        }
        s
    }

    pub fn parse_json(text: &str) -> Result<Self> {
        Self::new(json_columns(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&GridJson { n: self.size(), columns: self.columns.clone() }).expect("grid serializes")
    }

    /// Accept either format.
    pub fn parse_any(text: &str) -> Result<Self> {
        if text.trim_start().starts_with('{') {
            Self::parse_json(text)
        } else {
            Self::parse(text)
        }
    }
}

fn parse_text_columns(text: &str) -> Result<Vec<[usize; 2]>> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (ln, header) = lines.next().ok_or_else(|| Error::Syntax("empty grid file".into()))?;
    let n: usize = header
        .strip_prefix("grid")
        .and_then(|s| s.trim().parse().ok())
        .ok_or_else(|| Error::Syntax(format!("line {ln}: expected 'grid <n>'")))?;
    let mut cols: Vec<Option<[usize; 2]>> = vec![None; n];
    for (ln, l) in lines {
        let bad = || Error::Syntax(format!("line {ln}: expected 'col <i>: <r1> <r2>'"));
        let rest = l.strip_prefix("col").ok_or_else(bad)?;
        let (idx, marks) = rest.split_once(':').ok_or_else(bad)?;
        let i: usize = idx.trim().parse().map_err(|_| bad())?;
        let r: Vec<usize> = marks
            .split_whitespace()
            .map(|t| t.parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| bad())?;
        if r.len() != 2 {
            return Err(bad());
        }
        if i >= n {
            return Err(Error::Syntax(format!("line {ln}: column {i} out of range")));
        }
        if cols[i].replace([r[0], r[1]]).is_some() {
            return Err(Error::Syntax(format!("line {ln}: column {i} given twice")));
        }
    }
    cols.into_iter().enumerate().map(|(i, c)| c.ok_or_else(|| Error::Syntax(format!("column {i} missing")))).collect()
}

fn json_columns(text: &str) -> Result<Vec<[usize; 2]>> {
    let g: GridJson = serde_json::from_str(text).map_err(|e| Error::Syntax(e.to_string()))?;
    if g.n != g.columns.len() {
        return Err(Error::Syntax(format!("n = {} but {} columns", g.n, g.columns.len())));
    }
    Ok(g.columns)
}
