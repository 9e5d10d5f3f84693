//! Grid diagrams of 13 and 14 crossing nonalternating knots with one arc
//! fewer than crossings, shipped as `data/corpus.json`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::{GridDiagram, Violation};
use crate::invariants::{kauffman_polynomial, v_spread};

const EMBEDDED: &str = include_str!("../data/corpus.json");

pub const CATEGORIES: &[&str] = &[
    "(2,1)-nonalternating",
    "(3,1)-nonalternating",
    "(4,1)-nonalternating",
    "(5,1)-nonalternating",
    "2-nonalternating",
    "3-nonalternating",
    "4-nonalternating",
    "5-nonalternating",
    "6-nonalternating",
    "almost alternating",
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
struct RawEntry {
    name: String,
    category: String,
    crossings: usize,
    columns: Vec<[usize; 2]>,
}

#[derive(Deserialize)]
struct RawCorpus {
    entries: Vec<RawEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorpusEntry {
    pub name: String,
    pub category: String,
    pub crossings: usize,
    pub grid: GridDiagram,
}

impl CorpusEntry {
    /// One arc fewer than crossings.
    pub fn expected_columns(&self) -> usize {
        self.crossings - 1
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EntryStatus {
    pub name: String,
    pub category: String,
    pub columns: usize,
    pub expected_columns: usize,
    pub violations: Vec<Violation>,
    /// `v`-spread of the Kauffman polynomial, when requested and affordable.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spread: Option<u32>,
    pub passed: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CategoryCount {
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorpusReport {
    pub entries: Vec<EntryStatus>,
    pub categories: BTreeMap<String, CategoryCount>,
    pub passed: usize,
    pub failed: usize,
}

impl CorpusReport {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Clone, Debug, Default)]
pub struct CheckOptions {
    /// Also compute the Kauffman `v`-spread of each grid, within the budget.
    pub invariants: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Corpus {
    pub entries: Vec<CorpusEntry>,
}

impl Corpus {
    pub fn embedded() -> Result<Self> {
        Self::from_json(EMBEDDED)
    }

    /// Parse a corpus file. Grids are not validated here; see [`Corpus::check`].
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawCorpus = serde_json::from_str(text).map_err(|e| Error::Syntax(format!("corpus: {e}")))?;
        let mut entries = Vec::with_capacity(raw.entries.len());
        for r in raw.entries {
            if !CATEGORIES.contains(&r.category.as_str()) {
                return Err(Error::InvalidArgument(format!("{}: unknown category {:?}", r.name, r.category)));
            }
            if r.crossings < 2 {
                return Err(Error::InvalidArgument(format!("{}: crossing number {}", r.name, r.crossings)));
            }
            entries.push(CorpusEntry {
                name: r.name,
                category: r.category,
                crossings: r.crossings,
                grid: GridDiagram::from_columns_unchecked(r.columns),
            });
        }
        entries.sort_by(|a, b| a.name.cmp(&b.name));
        Ok(Self { entries })
    }

    pub fn to_json(&self) -> String {
        let lines: Vec<String> = self
            .entries
            .iter()
            .map(|e| {
                let raw = RawEntry {
                    name: e.name.clone(),
                    category: e.category.clone(),
                    crossings: e.crossings,
                    columns: e.grid.columns().to_vec(),
                };
                serde_json::to_string(&raw).expect("corpus entries serialize")
            })
            .collect();
        format!("{{\"entries\":[\n{}\n]}}\n", lines.join(",\n"))
    }

    pub fn get(&self, name: &str) -> Option<&CorpusEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    /// Validate every entry, in name order.
    pub fn check(&self, opts: &CheckOptions) -> CorpusReport {
        let mut entries = Vec::with_capacity(self.entries.len());
        let mut categories: BTreeMap<String, CategoryCount> = BTreeMap::new();
        for e in &self.entries {
            let violations = e.grid.validate();
            let columns = e.grid.size();
            let expected = e.expected_columns();
            let spread = if opts.invariants && violations.is_empty() {
                e.grid
                    .to_planar_diagram()
                    .ok()
                    .and_then(|d| kauffman_polynomial(&d).ok())
                    .and_then(|f| v_spread(&f).ok())
            } else {
                None
            };
            let passed =
                violations.is_empty() && columns == expected && spread.is_none_or(|s| s as usize + 2 <= columns);
            let count = categories.entry(e.category.clone()).or_default();
            if passed {
                count.passed += 1;
            } else {
                count.failed += 1;
            }
            entries.push(EntryStatus {
                name: e.name.clone(),
                category: e.category.clone(),
                columns,
                expected_columns: expected,
                violations,
                spread,
                passed,
            });
        }
        let passed = entries.iter().filter(|s| s.passed).count();
        CorpusReport { failed: entries.len() - passed, passed, entries, categories }
    }
}
