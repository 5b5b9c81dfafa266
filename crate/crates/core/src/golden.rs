//! Versioned transcriptions of the exceptional Hasse diagrams and of the
//! transform table for the Cayley plane inside `E7/P1`.
//!
//! Diagram files are tab separated, one Schubert class per line:
//! `node_id  dim  degree  decoration  comment`, with `#` starting a comment
//! line. Decorations are `rigid`, `plus`, `star` and `T`. The table file has
//! lines `source  target`, each a `dim:deg` label with an optional `*`.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::poset::{NodeId, QuotientPoset};

pub const E6_FILE: &str = "e6.tsv";
pub const E7_FILE: &str = "e7.tsv";
pub const TABLE1_FILE: &str = "table1.tsv";

/// Environment variable overriding the golden-data directory.
pub const GOLDEN_DIR_ENV: &str = "SCHUBERT_GOLDEN_DIR";

const E6_EMBEDDED: &str = include_str!("../golden/e6.tsv");
const E7_EMBEDDED: &str = include_str!("../golden/e7.tsv");
const TABLE1_EMBEDDED: &str = include_str!("../golden/table1.tsv");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Decoration {
    Rigid,
    Plus,
    Star,
    T,
}

impl fmt::Display for Decoration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Decoration::Rigid => "rigid",
            Decoration::Plus => "plus",
            Decoration::Star => "star",
            Decoration::T => "T",
        })
    }
}

impl FromStr for Decoration {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rigid" => Ok(Decoration::Rigid),
            "plus" | "+" => Ok(Decoration::Plus),
            "star" | "*" => Ok(Decoration::Star),
            "T" => Ok(Decoration::T),
            other => Err(Error::Golden(format!("unknown decoration {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldenRecord {
    pub node: NodeId,
    pub dim: usize,
    pub degree: BigUint,
    pub decoration: Decoration,
    pub comment: String,
}

/// A parsed diagram file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldenDiagram {
    pub records: Vec<GoldenRecord>,
}

fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim_end_matches('\r')))
        .filter(|(_, l)| !l.trim().is_empty() && !l.starts_with('#'))
}

impl GoldenDiagram {
    pub fn parse(text: &str) -> Result<Self> {
        let mut records = Vec::new();
        for (line_no, line) in data_lines(text) {
            let fields: Vec<&str> = line.splitn(5, '\t').collect();
            if fields.len() < 4 {
                return Err(Error::Golden(format!(
                    "line {line_no}: expected at least 4 tab-separated fields"
                )));
            }
            let bad = |what: &str| Error::Golden(format!("line {line_no}: bad {what}"));
            records.push(GoldenRecord {
                node: fields[0].parse().map_err(|_| bad("node id"))?,
                dim: fields[1].parse().map_err(|_| bad("dimension"))?,
                degree: fields[2].parse().map_err(|_| bad("degree"))?,
                decoration: fields[3]
                    .parse()
                    .map_err(|e: Error| Error::Golden(format!("line {line_no}: {e}")))?,
                comment: fields.get(4).unwrap_or(&"").to_string(),
            });
        }
        Ok(GoldenDiagram { records })
    }

    /// Check that every node of the poset appears exactly once with the
    /// computed dimension and degree.
    pub fn validate(&self, poset: &QuotientPoset) -> Result<()> {
        if self.records.len() != poset.len() {
            return Err(Error::Golden(format!(
                "{} records for {} with {} nodes",
                self.records.len(),
                poset.label(),
                poset.len()
            )));
        }
        let mut seen = vec![false; poset.len()];
        for r in &self.records {
            if r.node >= poset.len() || seen[r.node] {
                return Err(Error::Golden(format!(
                    "node {} is unknown or repeated in {}",
                    r.node,
                    poset.label()
                )));
            }
            seen[r.node] = true;
            let deg = poset.degree(r.node)?;
            if poset.dim(r.node) != r.dim || deg != r.degree {
                return Err(Error::Golden(format!(
                    "node {} recorded as {}:{}, computed {}:{}",
                    r.node,
                    r.dim,
                    r.degree,
                    poset.dim(r.node),
                    deg
                )));
            }
        }
        Ok(())
    }

    /// Decoration of every node, indexed by node id. Call after
    /// [`GoldenDiagram::validate`].
    pub fn decorations(&self) -> Vec<Decoration> {
        let mut out = vec![Decoration::Rigid; self.records.len()];
        for r in &self.records {
            out[r.node] = r.decoration;
        }
        out
    }

    pub fn record(&self, node: NodeId) -> Option<&GoldenRecord> {
        self.records.iter().find(|r| r.node == node)
    }
}

/// A `dim:deg` label with an optional rigidity asterisk.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StarredLabel {
    pub dim: usize,
    pub degree: BigUint,
    pub rigid: bool,
}

impl fmt::Display for StarredLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}:{}{}",
            self.dim,
            self.degree,
            if self.rigid { "*" } else { "" }
        )
    }
}

impl FromStr for StarredLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (body, rigid) = match s.strip_suffix('*') {
            Some(b) => (b, true),
            None => (s, false),
        };
        let (d, g) = body
            .split_once(':')
            .ok_or_else(|| Error::Golden(format!("label {s:?} is not dim:deg")))?;
        Ok(StarredLabel {
            dim: d
                .trim()
                .parse()
                .map_err(|_| Error::Golden(format!("bad dimension in {s:?}")))?,
            degree: g
                .trim()
                .parse()
                .map_err(|_| Error::Golden(format!("bad degree in {s:?}")))?,
            rigid,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldenTable {
    pub rows: Vec<(StarredLabel, StarredLabel)>,
}

impl GoldenTable {
    pub fn parse(text: &str) -> Result<Self> {
        let mut rows = Vec::new();
        for (line_no, line) in data_lines(text) {
            let fields: Vec<&str> = line.split('\t').collect();
            if fields.len() < 2 {
                return Err(Error::Golden(format!(
                    "line {line_no}: expected source and target"
                )));
            }
            rows.push((fields[0].trim().parse()?, fields[1].trim().parse()?));
        }
        Ok(GoldenTable { rows })
    }
}

/// All golden inputs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldenData {
    pub e6: GoldenDiagram,
    pub e7: GoldenDiagram,
    pub table1: GoldenTable,
}

impl GoldenData {
    /// The copies compiled into the library.
    pub fn embedded() -> Self {
        GoldenData {
            e6: GoldenDiagram::parse(E6_EMBEDDED).expect("embedded e6 data parses"),
            e7: GoldenDiagram::parse(E7_EMBEDDED).expect("embedded e7 data parses"),
            table1: GoldenTable::parse(TABLE1_EMBEDDED).expect("embedded table parses"),
        }
    }

    pub fn load_dir(dir: &Path) -> Result<Self> {
        let read = |name: &str| -> Result<String> {
            let path = dir.join(name);
            std::fs::read_to_string(&path).map_err(|e| Error::Io {
                path: path.display().to_string(),
                message: e.to_string(),
            })
        };
        Ok(GoldenData {
            e6: GoldenDiagram::parse(&read(E6_FILE)?)?,
            e7: GoldenDiagram::parse(&read(E7_FILE)?)?,
            table1: GoldenTable::parse(&read(TABLE1_FILE)?)?,
        })
    }
}

/// The directory named by the environment override, else the one shipped
/// with this crate.
pub fn default_golden_dir() -> PathBuf {
    match std::env::var_os(GOLDEN_DIR_ENV) {
        Some(dir) => PathBuf::from(dir),
        None => Path::new(env!("CARGO_MANIFEST_DIR")).join("golden"),
    }
}
