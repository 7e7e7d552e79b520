//! JSON model documents.
//!
//! ```json
//! {"format_version":1,"k":4,"edges":[[0],[1,2],[0,1,3]],"couplings":[1.0,1.0,1.0],"beta":0.5}
//! ```
//!
//! `couplings` and `beta` are optional. The canonical text form has the field
//! order above, vertices sorted inside each edge, edge order preserved,
//! shortest round-trip floats and no whitespace.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::Error;
use crate::hypergraph::Hypergraph;
use crate::spin::SpinModel;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelDocument {
    pub format_version: u32,
    pub k: usize,
    pub edges: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub couplings: Option<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DocumentError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{0}")]
    Validation(String),
    #[error("document has no {0}")]
    Missing(&'static str),
}

impl ModelDocument {
    pub fn from_hypergraph(h: &Hypergraph) -> Self {
        Self {
            format_version: FORMAT_VERSION,
            k: h.num_vertices(),
            edges: h.edges().to_vec(),
            couplings: None,
            beta: None,
        }
    }

    pub fn from_spin_model(m: &SpinModel) -> Self {
        Self {
            couplings: Some(m.couplings().to_vec()),
            beta: Some(m.beta()),
            ..Self::from_hypergraph(m.hypergraph())
        }
    }

    pub fn hypergraph(&self) -> Result<Hypergraph, DocumentError> {
        Hypergraph::new(self.k, self.edges.clone()).map_err(validation)
    }

    /// Spin model from the document, with optional overrides for a uniform
    /// coupling and the inverse temperature.
    pub fn spin_model(
        &self,
        coupling: Option<f64>,
        beta: Option<f64>,
    ) -> Result<SpinModel, DocumentError> {
        let h = self.hypergraph()?;
        let couplings = match (coupling, &self.couplings) {
            (Some(j), _) => vec![j; h.num_edges()],
            (None, Some(js)) => js.clone(),
            (None, None) => return Err(DocumentError::Missing("couplings")),
        };
        let beta = beta.or(self.beta).ok_or(DocumentError::Missing("beta"))?;
        SpinModel::new(h, couplings, beta).map_err(validation)
    }

    fn validate(&mut self) -> Result<(), DocumentError> {
        if self.format_version != FORMAT_VERSION {
            return Err(DocumentError::Validation(format!(
                "unsupported format_version {}",
                self.format_version
            )));
        }
        let h = self.hypergraph()?;
        self.edges = h.edges().to_vec();
        if let Some(js) = &self.couplings {
            if js.len() != self.edges.len() {
                return Err(DocumentError::Validation(format!(
                    "{} couplings for {} edges",
                    js.len(),
                    self.edges.len()
                )));
            }
        }
        if let Some(b) = self.beta {
            if b < 0.0 {
                return Err(DocumentError::Validation(format!("beta {b} is negative")));
            }
        }
        Ok(())
    }
}

fn validation(e: Error) -> DocumentError {
    DocumentError::Validation(e.to_string())
}

/// Parses and validates a document; edges come back with sorted vertices.
pub fn parse_model(text: &str) -> Result<ModelDocument, DocumentError> {
    let mut doc: ModelDocument =
        serde_json::from_str(text).map_err(|e| DocumentError::Syntax {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
    doc.validate()?;
    Ok(doc)
}

/// Canonical compact text, without a trailing newline.
pub fn serialize_model(doc: &ModelDocument) -> String {
    serde_json::to_string(doc).expect("model documents always serialize")
}
