//! The `divide-map/1` JSON document.

use serde::{Deserialize, Serialize};

use super::DivideMap;
use crate::error::{DivideError, Result};

pub const MAP_FORMAT: &str = "divide-map/1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeDocument {
    pub a: (String, i64),
    pub b: (String, i64),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapDocument {
    pub format: String,
    pub endpoints: Vec<String>,
    pub crossings: Vec<String>,
    pub edges: Vec<EdgeDocument>,
}

impl MapDocument {
    pub fn into_map(self) -> Result<DivideMap> {
        if self.format != MAP_FORMAT {
            return Err(DivideError::UnknownFormat(self.format));
        }
        let edges: Vec<_> = self.edges.into_iter().map(|e| (e.a, e.b)).collect();
        DivideMap::new(&self.endpoints, &self.crossings, &edges)
    }
}

pub fn parse_divide(document: &str) -> Result<DivideMap> {
    let doc: MapDocument = serde_json::from_str(document)?;
    doc.into_map()
}

impl DivideMap {
    pub fn to_document(&self) -> MapDocument {
        let at = |a: super::Attach| (self.label(a.vertex).to_string(), a.slot as i64);
        MapDocument {
            format: MAP_FORMAT.to_string(),
            endpoints: self.labels()[..self.endpoint_count()].to_vec(),
            crossings: self.labels()[self.endpoint_count()..].to_vec(),
            edges: self.edges().iter().map(|e| EdgeDocument { a: at(e[0]), b: at(e[1]) }).collect(),
        }
    }

    /// Pretty-printed `divide-map/1` text with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_document()).expect("map documents always serialize");
        s.push('\n');
        s
    }
}
