//! Instance and solution files.
//!
//! Instances are JSON documents with constraints stored as DSL strings:
//!
//! ```json
//! {"name": "e1", "attributes": ["a1", "a2"],
//!  "candidates": [{"id": "c1", "attributes": ["a1"], "profit": 3}],
//!  "constraints": ["a1 -> a2"], "k": 1, "p": 0}
//! ```
//!
//! Profits are integers; `3.0` is rejected.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lang::{parse_constraint, ParseError};
use crate::model::{validate_instance, Candidate, Instance, Solution, Violation};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("{path}: {source}")]
    Read { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Write { path: String, source: std::io::Error },
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("constraint {index} ('{text}'): {source}")]
    Constraint {
        index: usize,
        text: String,
        source: ParseError,
    },
    #[error("invalid instance: {}", .0.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "))]
    Invalid(Vec<Violation>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CandidateFile {
    pub id: String,
    #[serde(default)]
    pub attributes: Vec<String>,
    pub profit: i64,
}

/// On-disk form of an [`Instance`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    #[serde(default)]
    pub name: String,
    pub attributes: Vec<String>,
    pub candidates: Vec<CandidateFile>,
    #[serde(default)]
    pub constraints: Vec<String>,
    pub k: usize,
    pub p: i64,
}

/// Same fields, extra keys ignored.
#[derive(Deserialize)]
struct LenientInstanceFile {
    #[serde(default)]
    name: String,
    attributes: Vec<String>,
    candidates: Vec<LenientCandidate>,
    #[serde(default)]
    constraints: Vec<String>,
    k: usize,
    p: i64,
}

#[derive(Deserialize)]
struct LenientCandidate {
    id: String,
    #[serde(default)]
    attributes: Vec<String>,
    profit: i64,
}

impl From<LenientInstanceFile> for InstanceFile {
    fn from(f: LenientInstanceFile) -> Self {
        InstanceFile {
            name: f.name,
            attributes: f.attributes,
            candidates: f
                .candidates
                .into_iter()
                .map(|c| CandidateFile {
                    id: c.id,
                    attributes: c.attributes,
                    profit: c.profit,
                })
                .collect(),
            constraints: f.constraints,
            k: f.k,
            p: f.p,
        }
    }
}

impl InstanceFile {
    pub fn from_instance(instance: &Instance) -> Self {
        InstanceFile {
            name: instance.name.clone(),
            attributes: instance.attributes.iter().map(|a| a.to_string()).collect(),
            candidates: instance
                .candidates
                .iter()
                .map(|c| CandidateFile {
                    id: c.id.clone(),
                    attributes: c.attributes.iter().map(|a| a.to_string()).collect(),
                    profit: c.profit,
                })
                .collect(),
            constraints: instance.constraints.iter().map(|r| r.to_string()).collect(),
            k: instance.k,
            p: instance.p,
        }
    }

    /// Parses the constraints and validates the result.
    pub fn into_instance(self) -> Result<Instance, IoError> {
        let constraints = self
            .constraints
            .iter()
            .enumerate()
            .map(|(index, text)| {
                parse_constraint(text).map_err(|source| IoError::Constraint {
                    index,
                    text: text.clone(),
                    source,
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        let instance = Instance {
            name: self.name,
            attributes: self.attributes.into_iter().map(Into::into).collect(),
            candidates: self
                .candidates
                .into_iter()
                .map(|c| Candidate::new(c.id, c.attributes, c.profit))
                .collect(),
            constraints,
            k: self.k,
            p: self.p,
        };
        let violations = validate_instance(&instance);
        if violations.is_empty() {
            Ok(instance)
        } else {
            Err(IoError::Invalid(violations))
        }
    }
}

/// Parses an instance; `strict` rejects unknown fields.
pub fn parse_instance(text: &str, strict: bool) -> Result<Instance, IoError> {
    let file: InstanceFile = if strict {
        serde_json::from_str(text)?
    } else {
        serde_json::from_str::<LenientInstanceFile>(text)?.into()
    };
    file.into_instance()
}

pub fn read_instance(path: impl AsRef<Path>, strict: bool) -> Result<Instance, IoError> {
    parse_instance(&read(path.as_ref())?, strict)
}

/// Pretty-printed JSON with a trailing newline.
pub fn instance_to_json(instance: &Instance) -> String {
    let mut s = serde_json::to_string_pretty(&InstanceFile::from_instance(instance)).expect("plain data");
    s.push('\n');
    s
}

pub fn write_instance(path: impl AsRef<Path>, instance: &Instance) -> Result<(), IoError> {
    write(path.as_ref(), &instance_to_json(instance))
}

/// On-disk form of a [`Solution`]. An infeasible solution has an empty
/// committee and no profit.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SolutionFile {
    #[serde(default)]
    pub feasible: bool,
    pub committee: Vec<String>,
    #[serde(default)]
    pub profit: Option<i64>,
    #[serde(default)]
    pub solver: String,
    #[serde(default)]
    pub elapsed_ms: f64,
}

impl SolutionFile {
    pub fn from_solution(solution: &Solution, elapsed_ms: f64) -> Self {
        SolutionFile {
            feasible: solution.feasible,
            committee: solution.committee.clone().unwrap_or_default(),
            profit: solution.profit,
            solver: solution.solver.to_string(),
            elapsed_ms,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data");
        s.push('\n');
        s
    }
}

pub fn parse_solution(text: &str) -> Result<SolutionFile, IoError> {
    Ok(serde_json::from_str(text)?)
}

pub fn read_solution(path: impl AsRef<Path>) -> Result<SolutionFile, IoError> {
    parse_solution(&read(path.as_ref())?)
}

fn read(path: &Path) -> Result<String, IoError> {
    fs::read_to_string(path).map_err(|source| IoError::Read {
        path: path.display().to_string(),
        source,
    })
}

fn write(path: &Path, text: &str) -> Result<(), IoError> {
    fs::write(path, text).map_err(|source| IoError::Write {
        path: path.display().to_string(),
        source,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::e1;

    const E1: &str = r#"{
        "name": "e1",
        "attributes": ["a1", "a2", "a3"],
        "candidates": [
            {"id": "c1", "attributes": ["a1"], "profit": 3},
            {"id": "c2", "attributes": ["a2"], "profit": 2},
            {"id": "c3", "attributes": ["a3"], "profit": 5},
            {"id": "c4", "attributes": [], "profit": 4}
        ],
        "constraints": ["a1 -> a2", "a3 -> ~a2"],
        "k": 2,
        "p": 8
    }"#;

    #[test]
    fn reads_e1() {
        assert_eq!(parse_instance(E1, true).unwrap(), e1());
    }

    #[test]
    fn round_trip() {
        let text = instance_to_json(&e1());
        assert_eq!(parse_instance(&text, true).unwrap(), e1());
        assert_eq!(instance_to_json(&parse_instance(&text, true).unwrap()), text);
    }

    #[test]
    fn strictness() {
        let extra = E1.replacen("\"k\": 2", "\"k\": 2, \"note\": 1", 1);
        assert!(matches!(parse_instance(&extra, true), Err(IoError::Json(_))));
        assert_eq!(parse_instance(&extra, false).unwrap(), e1());
    }

    #[test]
    fn rejects_floats_and_bad_input() {
        assert!(parse_instance(&E1.replace("\"profit\": 3", "\"profit\": 3.0"), true).is_err());
        assert!(parse_instance(&E1.replace("\"p\": 8", "\"p\": 8.5"), true).is_err());
        assert!(parse_instance(&E1.replace("\"k\": 2", "\"k\": -1"), true).is_err());
        assert!(matches!(
            parse_instance(&E1.replace("a3 -> ~a2", "a3 -> "), true),
            Err(IoError::Constraint { index: 1, .. })
        ));
        assert!(matches!(
            parse_instance(&E1.replace("a3 -> ~a2", "a9 -> ~a2"), true),
            Err(IoError::Invalid(_))
        ));
        assert!(parse_instance("{", true).is_err());
    }

    #[test]
    fn minimal_solution_file() {
        let s = parse_solution(r#"{"committee": ["c3", "c4"]}"#).unwrap();
        assert_eq!(s.committee, ["c3", "c4"]);
        assert!(s.profit.is_none());
    }
}
