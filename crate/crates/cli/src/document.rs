//! JSON hypergraph documents with 1-based vertex labels:
//!
//! ```json
//! {"version": 1, "vertices": 4, "vertex_weights": [1, 1, 1, 1],
//!  "edges": [{"members": [1, 2, 3], "weight": 1}]}
//! ```
//!
//! `version`, `vertex_weights` and edge `weight` are optional (defaults 1).

use serde::{Deserialize, Serialize};
use whn_core::{Hyperedge, Hypergraph};

use crate::error::{invalid, CliResult};

pub const SCHEMA_VERSION: u32 = 1;

fn schema_version() -> u32 {
    SCHEMA_VERSION
}

fn unit_weight() -> f64 {
    1.0
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HypergraphDocument {
    #[serde(default = "schema_version")]
    pub version: u32,
    pub vertices: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertex_weights: Option<Vec<f64>>,
    #[serde(default)]
    pub edges: Vec<EdgeDocument>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeDocument {
    pub members: Vec<i64>,
    #[serde(default = "unit_weight")]
    pub weight: f64,
}

impl HypergraphDocument {
    pub fn from_hypergraph(h: &Hypergraph<f64>) -> Self {
        Self {
            version: SCHEMA_VERSION,
            vertices: h.n_vertices(),
            vertex_weights: Some(h.vertex_weights().to_vec()),
            edges: h
                .edges()
                .iter()
                .map(|e| EdgeDocument {
                    members: e.members().iter().map(|&v| v as i64 + 1).collect(),
                    weight: e.weight(),
                })
                .collect(),
        }
    }

    pub fn to_hypergraph(&self) -> CliResult<Hypergraph<f64>> {
        if self.version != SCHEMA_VERSION {
            return Err(invalid(format!(
                "version: unsupported schema version {}, expected {SCHEMA_VERSION}",
                self.version
            )));
        }
        let n = self.vertices;
        if n == 0 {
            return Err(invalid("vertices: must be at least 1"));
        }
        if let Some(w) = &self.vertex_weights {
            if w.len() != n {
                return Err(invalid(format!(
                    "vertex_weights: expected {n} entries, got {}",
                    w.len()
                )));
            }
            if let Some(i) = w.iter().position(|&x| !(x > 0.0)) {
                return Err(invalid(format!(
                    "vertex_weights[{i}]: weight must be positive, got {}",
                    w[i]
                )));
            }
        }
        let mut edges = Vec::with_capacity(self.edges.len());
        for (e, edge) in self.edges.iter().enumerate() {
            if !(edge.weight > 0.0) {
                return Err(invalid(format!(
                    "edges[{e}].weight: weight must be positive, got {}",
                    edge.weight
                )));
            }
            let mut members = Vec::with_capacity(edge.members.len());
            for (k, &m) in edge.members.iter().enumerate() {
                if m < 1 || m as u64 > n as u64 {
                    return Err(invalid(format!(
                        "edges[{e}].members[{k}]: vertex {m} out of range 1..={n}"
                    )));
                }
                members.push(m as usize - 1);
            }
            edges.push(Hyperedge::new(members, edge.weight));
        }
        Ok(Hypergraph::new(n, self.vertex_weights.clone(), edges)?)
    }
}

pub fn parse_hypergraph(text: &str) -> CliResult<Hypergraph<f64>> {
    let doc: HypergraphDocument = serde_json::from_str(text)
        .map_err(|e| invalid(format!("malformed hypergraph document: {e}")))?;
    doc.to_hypergraph()
}

pub fn serialize_hypergraph(h: &Hypergraph<f64>) -> String {
    crate::format::to_json(&HypergraphDocument::from_hypergraph(h))
}
