//! Run reports: a line-oriented text rendering plus a JSON sidecar.
//!
//! A report records the SHA-256 of every input file. [`RunReport::reverify`]
//! reloads those inputs, checks the digests and re-verifies the witness.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::{verify_dominating, verify_rb_separating, verify_separating, Coloring, Verdict};
use crate::io::{parse_coloring, read_graph};
use crate::trees::TreeProfile;

pub const REPORT_VERSION: u32 = 1;

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().fold(String::with_capacity(64), |mut s, b| {
        let _ = write!(s, "{b:02x}");
        s
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputDigest {
    pub role: String,
    pub path: String,
    pub sha256: String,
}

impl InputDigest {
    pub fn of_file(role: &str, path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        Ok(InputDigest { role: role.to_string(), path: path.display().to_string(), sha256: sha256_hex(&fs::read(path)?) })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessKind {
    RedBlue,
    AllPairs,
    Dominating,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Holds,
    Fails,
    Skipped,
}

impl CheckStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckStatus::Holds => "holds",
            CheckStatus::Fails => "fails",
            CheckStatus::Skipped => "skipped",
        }
    }
}

/// One evaluated inequality `lhs ≤ rhs`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundCheck {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lhs: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rhs: Option<f64>,
    pub status: CheckStatus,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl BoundCheck {
    pub fn at_most(name: &str, lhs: f64, rhs: f64) -> Self {
        let status = if lhs <= rhs + 1e-9 { CheckStatus::Holds } else { CheckStatus::Fails };
        BoundCheck { name: name.to_string(), lhs: Some(lhs), rhs: Some(rhs), status, note: None }
    }

    pub fn skipped(name: &str, note: impl Into<String>) -> Self {
        BoundCheck { name: name.to_string(), lhs: None, rhs: None, status: CheckStatus::Skipped, note: Some(note.into()) }
    }
}

/// Leaf and support counts of a tree input.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeCounts {
    pub leaves: usize,
    pub supports: usize,
    pub s1: usize,
    pub s_plus: usize,
    pub l_plus: usize,
}

impl From<&TreeProfile> for TreeCounts {
    fn from(p: &TreeProfile) -> Self {
        TreeCounts {
            leaves: p.leaf_count(),
            supports: p.support_count(),
            s1: p.s_i(1).len(),
            s_plus: p.s_plus.len(),
            l_plus: p.l_plus.len(),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub version: u32,
    pub command: String,
    pub inputs: Vec<InputDigest>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generator: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub method: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub optimum: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness_kind: Option<WitnessKind>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verified: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub guarantee: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub size_bound: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lower_bound: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub upper_bound: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub worst_coloring: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nodes_explored: Option<u64>,
    pub elapsed_ms: f64,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub bound_checks: Vec<BoundCheck>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tree: Option<TreeCounts>,
}

impl RunReport {
    pub fn new(command: impl Into<String>) -> Self {
        RunReport { version: REPORT_VERSION, command: command.into(), ..Default::default() }
    }

    pub fn set_witness(&mut self, kind: WitnessKind, set: &VertexSet) {
        self.witness_kind = Some(kind);
        self.witness = Some(set.to_vec());
    }

    /// `key: value` lines in a fixed order; absent fields are omitted.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut line = |k: &str, v: String| {
            let _ = writeln!(out, "{k}: {v}");
        };
        line("command", self.command.clone());
        for d in &self.inputs {
            line("input", format!("{} {} sha256={}", d.role, d.path, d.sha256));
        }
        macro_rules! opt {
            ($key:literal, $field:expr) => {
                if let Some(v) = &$field {
                    line($key, v.to_string());
                }
            };
        }
        opt!("generator", self.generator);
        opt!("method", self.method);
        opt!("optimum", self.optimum);
        if let Some(w) = &self.witness {
            line("witness", w.iter().map(usize::to_string).collect::<Vec<_>>().join(" "));
        }
        opt!("verified", self.verified);
        if let Some(g) = self.guarantee {
            line("guarantee", format!("{g:.4}"));
        }
        opt!("size_bound", self.size_bound);
        opt!("lower_bound", self.lower_bound);
        opt!("upper_bound", self.upper_bound);
        opt!("value", self.value);
        opt!("worst_coloring", self.worst_coloring);
        opt!("nodes_explored", self.nodes_explored);
        if let Some(t) = &self.tree {
            line("tree", format!("leaves={} supports={} s1={} s_plus={} l_plus={}", t.leaves, t.supports, t.s1, t.s_plus, t.l_plus));
        }
        for c in &self.bound_checks {
            let fmt = |x: Option<f64>| x.map_or("-".to_string(), |v| format!("{v}"));
            let mut s = format!("{} {} <= {} {}", c.name, fmt(c.lhs), fmt(c.rhs), c.status.as_str());
            if let Some(n) = &c.note {
                s.push_str(&format!(" ({n})"));
            }
            line("bound", s);
        }
        line("elapsed_ms", format!("{:.3}", self.elapsed_ms));
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn write_json(&self, path: impl AsRef<Path>) -> Result<()> {
        fs::write(path, self.to_json() + "\n")?;
        Ok(())
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        serde_json::from_str(&fs::read_to_string(path)?).map_err(|e| Error::Parse { line: e.line(), message: e.to_string() })
    }

    fn input(&self, role: &str) -> Option<&InputDigest> {
        self.inputs.iter().find(|d| d.role == role)
    }

    fn checked_read(d: &InputDigest) -> Result<String> {
        let bytes = fs::read(&d.path)?;
        if sha256_hex(&bytes) != d.sha256 {
            return Err(Error::Spec(format!("input {} changed since the report was written", d.path)));
        }
        String::from_utf8(bytes).map_err(|_| Error::Parse { line: 1, message: format!("{} is not UTF-8", d.path) })
    }

    /// Re-verifies the witness against the recorded inputs. Reports without
    /// a witness verify trivially.
    pub fn reverify(&self) -> Result<Verdict> {
        let (Some(kind), Some(w)) = (self.witness_kind, &self.witness) else {
            return Ok(Verdict::Valid);
        };
        let gd = self.input("graph").ok_or_else(|| Error::Spec("report has no graph input".into()))?;
        Self::checked_read(gd)?;
        let g = read_graph(&gd.path)?;
        let set = VertexSet::from_indices(g.order(), w.iter().copied());
        if set.len() != w.len() || w.iter().any(|&v| v >= g.order()) {
            return Err(Error::Spec("witness is not a set of graph vertices".into()));
        }
        Ok(match kind {
            WitnessKind::AllPairs => verify_separating(&g, &set),
            WitnessKind::Dominating => verify_dominating(&g, &set),
            WitnessKind::RedBlue => {
                let c: Coloring = match (self.input("coloring"), &self.worst_coloring) {
                    (Some(cd), _) => parse_coloring(&Self::checked_read(cd)?, g.order())?,
                    (None, Some(text)) => parse_coloring(text, g.order())?,
                    (None, None) => return Err(Error::Spec("red-blue witness without a coloring".into())),
                };
                verify_rb_separating(&g, &c, &set)
            }
        })
    }
}
