//! JSON documents for matroids, graphs, lattice path specs, certificates,
//! and verification reports.
//!
//! Output is canonical: struct key order is fixed, bases appear in canonical
//! order with elements in ground order, and every document ends with a
//! trailing newline. Reading reports the path of the first offending field.

use std::io::Write;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coloring::{BorsukResult, BorsukValue, Coloring, PartitionCertificate};
use crate::families::{FamilyError, LatticePathSpec, SimpleGraph};
use crate::graphs::ConflictGraph;
use crate::matroid::{int_labels, Label, Matroid, MatroidError};

#[derive(Debug, Error)]
pub enum JsonError {
    #[error("{context}: {message}")]
    Malformed { context: String, message: String },
    #[error(transparent)]
    Matroid(#[from] MatroidError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// `{"name": ..., "ground_set": [...], "bases": [[...], ...]}`
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MatroidDoc {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub ground_set: Vec<Label>,
    pub bases: Vec<Vec<Label>>,
}

impl MatroidDoc {
    /// Canonical document: bases in increasing mask order, elements of each
    /// basis in ground order.
    pub fn from_matroid(name: Option<String>, m: &Matroid) -> Self {
        let bases = m
            .bases()
            .iter()
            .map(|b| b.iter().map(|i| m.label(i).clone()).collect())
            .collect();
        MatroidDoc {
            name,
            ground_set: m.labels().to_vec(),
            bases,
        }
    }

    pub fn into_matroid(self) -> Result<Matroid, MatroidError> {
        Matroid::from_bases(self.ground_set, &self.bases)
    }
}

/// `{"vertices": 5, "edges": [[0,1], ...]}`; `vertices` may also be a label
/// list, in which case only its length is used for the vertex count.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GraphDoc {
    pub vertices: GraphVertices,
    pub edges: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GraphVertices {
    Count(usize),
    Labels(Vec<Label>),
}

impl GraphDoc {
    pub fn from_graph(g: &SimpleGraph) -> Self {
        GraphDoc {
            vertices: GraphVertices::Count(g.vertex_count()),
            edges: g.edges().to_vec(),
        }
    }

    pub fn into_graph(self) -> Result<SimpleGraph, FamilyError> {
        let count = match self.vertices {
            GraphVertices::Count(c) => c,
            GraphVertices::Labels(labels) => labels.len(),
        };
        SimpleGraph::new(count, self.edges)
    }
}

/// Edge-list export of a conflict graph for external tools.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ConflictGraphDoc {
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
}

impl ConflictGraphDoc {
    pub fn from_conflict(g: &ConflictGraph) -> Self {
        ConflictGraphDoc {
            vertices: g.vertex_count(),
            edges: g.edges(),
        }
    }
}

/// `{"upper": "NENE...", "lower": "EENN..."}`
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PathSpecDoc {
    pub upper: String,
    pub lower: String,
}

impl PathSpecDoc {
    pub fn into_spec(self) -> Result<LatticePathSpec, FamilyError> {
        LatticePathSpec::parse(&self.upper, &self.lower)
    }
}

/// `{"finite": true, "value": 3}` or `{"finite": false}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ValueDoc {
    pub finite: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<usize>,
}

impl From<BorsukValue> for ValueDoc {
    fn from(v: BorsukValue) -> Self {
        match v {
            BorsukValue::Finite(k) => ValueDoc {
                finite: true,
                value: Some(k),
            },
            BorsukValue::Infinite => ValueDoc {
                finite: false,
                value: None,
            },
        }
    }
}

/// Certificate document: `{"diameter": d, "parts": [...], "value": {...}}`,
/// with the diameter-realizing witness appended when one is known. Part
/// entries are indices into the canonical basis order of the matroid
/// document.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BorsukDoc {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diameter: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub parts: Option<Vec<Vec<usize>>>,
    pub value: ValueDoc,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
}

impl BorsukDoc {
    pub fn from_result(r: &BorsukResult) -> Self {
        BorsukDoc {
            diameter: r.certificate.as_ref().map(|c| c.matroid_diameter),
            parts: r.certificate.as_ref().map(|c| c.parts.clone()),
            value: r.value.into(),
            witness: r.lower_bound_witness.clone(),
        }
    }
}

/// Standalone certificate document (no witness), same key layout.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CertificateDoc {
    pub diameter: usize,
    pub parts: Vec<Vec<usize>>,
    pub value: ValueDoc,
}

impl CertificateDoc {
    pub fn from_certificate(cert: &PartitionCertificate) -> Self {
        CertificateDoc {
            diameter: cert.matroid_diameter,
            parts: cert.parts.clone(),
            value: ValueDoc {
                finite: true,
                value: Some(cert.parts.len()),
            },
        }
    }
}

/// Chromatic-number output: the exact value and a proper coloring in vertex
/// order.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ChromaticDoc {
    pub chromatic: usize,
    pub coloring: Vec<usize>,
}

impl ChromaticDoc {
    pub fn new(k: usize, coloring: &Coloring) -> Self {
        ChromaticDoc {
            chromatic: k,
            coloring: coloring.assignment.clone(),
        }
    }
}

/// `props` output, keys in fixed order.
#[derive(Clone, Debug, Serialize)]
pub struct PropsDoc {
    pub loops: Vec<Label>,
    pub coloops: Vec<Label>,
    pub rank: usize,
    pub components: usize,
    pub bip: bool,
    pub strong_bip: bool,
    pub two_disjoint_bases: bool,
    pub diameter: usize,
}

/// Serializes a document with a trailing newline.
pub fn write_json<T: Serialize, W: Write>(writer: &mut W, value: &T) -> Result<(), JsonError> {
    let mut text = serde_json::to_string_pretty(value).map_err(|e| JsonError::Malformed {
        context: "serialization".into(),
        message: e.to_string(),
    })?;
    text.push('\n');
    writer.write_all(text.as_bytes())?;
    Ok(())
}

/// Parses a document, reporting the path of the first offending field.
pub fn read_json<'de, T: Deserialize<'de>>(text: &'de str, context: &str) -> Result<T, JsonError> {
    let deserializer = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(deserializer).map_err(|e| JsonError::Malformed {
        context: format!("{context} at {}", e.path()),
        message: e.inner().to_string(),
    })
}

/// Convenience: parse a matroid document and build the matroid.
pub fn matroid_from_str(text: &str, context: &str) -> Result<Matroid, JsonError> {
    let doc: MatroidDoc = read_json(text, context)?;
    Ok(doc.into_matroid()?)
}

/// Detects whether a JSON document is a matroid (has `bases`) or a graph
/// (has `edges`).
pub fn sniff_kind(text: &str) -> Option<&'static str> {
    let value: serde_json::Value = serde_json::from_str(text).ok()?;
    let object = value.as_object()?;
    if object.contains_key("bases") {
        Some("matroid")
    } else if object.contains_key("edges") {
        Some("graph")
    } else {
        None
    }
}

/// Ground labels `1..=n` shared by generators that use integer labels.
pub fn default_labels(n: usize) -> Vec<Label> {
    int_labels(n)
}
