//! JSON report document written by `hexcut compute`.
//!
//! Index values are decimal strings so that 128-bit results survive JSON
//! readers that parse numbers as doubles.

use hexcut::indices::{IndexValues, Method, Timings};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub input: InputInfo,
    pub counts: Counts,
    pub indices: Indices,
    pub method: String,
    pub timings_us: TimingsUs,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputInfo {
    pub format: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hexagons: Option<u64>,
    pub boundary_length: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    pub vertices: u64,
    pub edges: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Indices {
    pub wiener: String,
    pub edge_wiener: String,
    pub edge_wiener_hat: String,
    pub szeged: String,
    pub edge_szeged: String,
    pub pi: String,
    pub vertex_pi: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TimingsUs {
    pub parse: u64,
    pub trees: u64,
    pub indices: u64,
    pub total: u64,
}

impl ReportDocument {
    pub fn new(input: InputInfo, values: &IndexValues, method: Method, t: Timings) -> Self {
        Self {
            input,
            counts: Counts { vertices: values.vertices, edges: values.edges },
            indices: Indices {
                wiener: values.wiener.to_string(),
                edge_wiener: values.edge_wiener.to_string(),
                edge_wiener_hat: values.edge_wiener_hat.to_string(),
                szeged: values.szeged.to_string(),
                edge_szeged: values.edge_szeged.to_string(),
                pi: values.pi.to_string(),
                vertex_pi: values.vertex_pi.to_string(),
            },
            method: method.as_str().to_string(),
            timings_us: TimingsUs {
                parse: t.parse_us,
                trees: t.trees_us,
                indices: t.indices_us,
                total: t.total_us,
            },
        }
    }
}
