//! Graph exchange formats: `{"vertices": m, "adjacency": [[...]]}` JSON and DOT.

use std::fmt::Write;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{graph_from_adjacency, MultiGraph};
use crate::error::{Error, Result};
use crate::exact::IntMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub vertices: usize,
    #[serde(with = "crate::exact::json_int::matrix")]
    pub adjacency: Vec<Vec<BigInt>>,
}

impl GraphJson {
    pub fn from_graph(g: &MultiGraph) -> Self {
        GraphJson {
            vertices: g.vertex_count(),
            adjacency: g.adjacency().matrix().rows().to_vec(),
        }
    }

    pub fn to_matrix(&self) -> Result<IntMatrix> {
        if self.adjacency.len() != self.vertices {
            return Err(Error::ParseError(format!(
                "declared {} vertices but adjacency has {} rows",
                self.vertices,
                self.adjacency.len()
            )));
        }
        IntMatrix::new(self.adjacency.clone())
    }

    pub fn to_graph(&self) -> Result<MultiGraph> {
        graph_from_adjacency(&self.to_matrix()?)
    }
}

pub fn graph_to_json(g: &MultiGraph) -> String {
    serde_json::to_string_pretty(&GraphJson::from_graph(g)).expect("serialisable")
}

pub fn graph_from_json(text: &str) -> Result<MultiGraph> {
    let parsed: GraphJson =
        serde_json::from_str(text).map_err(|e| Error::ParseError(e.to_string()))?;
    parsed.to_graph()
}

/// Undirected DOT rendering: one line per geometric edge or loop.
pub fn graph_to_dot(g: &MultiGraph, name: &str) -> String {
    let mut out = String::new();
    writeln!(out, "graph {name} {{").unwrap();
    for v in 0..g.vertex_count() {
        writeln!(out, "  v{v};").unwrap();
    }
    for (i, e) in g.edges().iter().enumerate() {
        if i < e.reverse {
            writeln!(out, "  v{} -- v{};", e.tail, e.head).unwrap();
        }
    }
    out.push_str("}\n");
    out
}
