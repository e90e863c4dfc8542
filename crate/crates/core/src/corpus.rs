//! Group files and the bundled corpus.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::config::Config;
use crate::error::{Error, Result};
use crate::fusion::FusionSystem;
use crate::group::perm::{from_one_based, parse_cycles};
use crate::group::FiniteGroup;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GroupKind {
    #[serde(alias = "permutation-generators")]
    Permutations,
    #[serde(alias = "multiplication-table")]
    Table,
}

/// A permutation given in cycle notation or as a 1-based image array.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Generator {
    Cycles(String),
    Images(Vec<usize>),
}

/// On-disk description of a finite group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupFile {
    pub name: String,
    pub kind: GroupKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub generators: Vec<Generator>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub table: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub primes: Vec<u64>,
}

impl GroupFile {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn read(path: &Path) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    fn degree(&self) -> Result<usize> {
        if let Some(d) = self.degree {
            return Ok(d);
        }
        let mut d = 0;
        for g in &self.generators {
            d = d.max(match g {
                Generator::Images(v) => v.len(),
                Generator::Cycles(s) => s
                    .split(|c: char| !c.is_ascii_digit())
                    .filter_map(|t| t.parse::<usize>().ok())
                    .max()
                    .unwrap_or(0),
            });
        }
        if d == 0 {
            return Err(Error::Parse(format!("{}: no generators and no degree", self.name)));
        }
        Ok(d)
    }

    /// The validated group, closed from its generators or checked from
    /// its table.
    pub fn ingest(&self, group_cap: usize) -> Result<FiniteGroup> {
        let g = match self.kind {
            GroupKind::Table => {
                if self.table.len() > group_cap {
                    return Err(Error::CapExceeded {
                        what: "group order",
                        limit: group_cap,
                        actual: self.table.len(),
                    });
                }
                FiniteGroup::from_table(self.name.clone(), &self.table)?
            }
            GroupKind::Permutations => {
                let degree = self.degree()?;
                let gens = self
                    .generators
                    .iter()
                    .map(|g| match g {
                        Generator::Cycles(s) => parse_cycles(degree, s),
                        Generator::Images(v) if v.len() == degree => from_one_based(v),
                        Generator::Images(v) => Err(Error::Parse(format!("{v:?} does not have degree {degree}"))),
                    })
                    .collect::<Result<Vec<_>>>()?;
                FiniteGroup::from_permutations(self.name.clone(), degree, &gens, group_cap)?
            }
        };
        Ok(g)
    }
}

/// One group of the corpus together with its key (file stem).
#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub key: String,
    pub file: GroupFile,
}

impl CorpusEntry {
    /// `F_S(G)` for every designated prime, with `S` the canonical Sylow
    /// subgroup.
    pub fn systems(&self, config: &Config) -> Result<Vec<FusionSystem>> {
        let g = self.file.ingest(config.group_cap)?;
        self.file
            .primes
            .iter()
            .map(|&p| FusionSystem::of_group(&g, &g.sylow_subgroup(p), p, config.lattice_cap))
            .collect()
    }
}

const BUNDLED: &[(&str, &str)] = &[
    ("a4", include_str!("../corpus/a4.json")),
    ("a4xa4", include_str!("../corpus/a4xa4.json")),
    ("a5", include_str!("../corpus/a5.json")),
    ("a6", include_str!("../corpus/a6.json")),
    ("c2xc2", include_str!("../corpus/c2xc2.json")),
    ("c2xc2xc2", include_str!("../corpus/c2xc2xc2.json")),
    ("c3_c4", include_str!("../corpus/c3_c4.json")),
    ("c3xc3", include_str!("../corpus/c3xc3.json")),
    ("c4", include_str!("../corpus/c4.json")),
    ("c4xc2", include_str!("../corpus/c4xc2.json")),
    ("d8", include_str!("../corpus/d8.json")),
    ("d8xc2", include_str!("../corpus/d8xc2.json")),
    ("gl23", include_str!("../corpus/gl23.json")),
    ("q8", include_str!("../corpus/q8.json")),
    ("q8oc4", include_str!("../corpus/q8oc4.json")),
    ("s3xs3", include_str!("../corpus/s3xs3.json")),
    ("s4", include_str!("../corpus/s4.json")),
    ("s4xc2", include_str!("../corpus/s4xc2.json")),
    ("sl23", include_str!("../corpus/sl23.json")),
];

/// The corpus shipped with the library, sorted by key.
pub fn bundled() -> Vec<CorpusEntry> {
    BUNDLED
        .iter()
        .map(|(key, text)| CorpusEntry {
            key: key.to_string(),
            file: GroupFile::parse(text).expect("bundled corpus parses"),
        })
        .collect()
}

pub fn bundled_entry(key: &str) -> Option<CorpusEntry> {
    bundled().into_iter().find(|e| e.key == key)
}

/// Every `*.json` group file of a directory, sorted by key.
pub fn load_dir(dir: &Path) -> Result<Vec<CorpusEntry>> {
    let mut out = Vec::new();
    for entry in std::fs::read_dir(dir)? {
        let path = entry?.path();
        if path.extension().is_some_and(|e| e == "json") {
            let key = path.file_stem().and_then(|s| s.to_str()).unwrap_or_default().to_string();
            out.push(CorpusEntry {
                key,
                file: GroupFile::read(&path)?,
            });
        }
    }
    out.sort_by(|a, b| a.key.cmp(&b.key));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_orders() {
        let expected = [
            ("a4", 12),
            ("a4xa4", 144),
            ("a5", 60),
            ("a6", 360),
            ("c2xc2", 4),
            ("c2xc2xc2", 8),
            ("c3_c4", 12),
            ("c3xc3", 9),
            ("c4", 4),
            ("c4xc2", 8),
            ("d8", 8),
            ("d8xc2", 16),
            ("gl23", 48),
            ("q8", 8),
            ("q8oc4", 16),
            ("s3xs3", 36),
            ("s4", 24),
            ("s4xc2", 48),
            ("sl23", 24),
        ];
        let corpus = bundled();
        assert_eq!(corpus.len(), expected.len());
        for (entry, (key, order)) in corpus.iter().zip(expected) {
            assert_eq!(entry.key, key);
            assert_eq!(entry.file.ingest(500).unwrap().order(), order, "{key}");
        }
    }

    #[test]
    fn ingestion() {
        let s4 = GroupFile::parse(r#"{"name": "S4", "kind": "permutation-generators", "generators": ["(1 2)", "(1 2 3 4)"]}"#).unwrap();
        assert_eq!(s4.ingest(500).unwrap().order(), 24);
        let arrays = GroupFile::parse(r#"{"name": "S3", "kind": "permutations", "generators": [[2, 1, 3], [2, 3, 1]]}"#).unwrap();
        assert_eq!(arrays.ingest(500).unwrap().order(), 6);
        let bad = GroupFile::parse(r#"{"name": "L", "kind": "multiplication-table", "table": [[0, 1, 2], [1, 1, 0], [2, 0, 1]]}"#).unwrap();
        assert!(matches!(bad.ingest(500), Err(Error::NotAGroup(_))));
        assert!(matches!(s4.ingest(10), Err(Error::CapExceeded { .. })));
        assert!(matches!(GroupFile::parse("{\"name\": 3}"), Err(Error::Parse(_))));
        let q8 = bundled_entry("q8").unwrap().file.ingest(500).unwrap();
        assert_eq!(q8.center().order(), 2);
        assert_eq!(q8.elements().filter(|&x| q8.elem_order(x) == 2).count(), 1);
    }
}
