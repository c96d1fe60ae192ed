//! The on-disk point-set format: a JSON object with a `dim` field and a
//! `points` list. Duplicate points and vectors of the wrong length are
//! rejected rather than repaired, so fixture mistakes surface early.

use std::fs;
use std::io::Read;

use serde::{Deserialize, Serialize};

use gridtopo::{Point, PointSet};

use crate::CliError;

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct PointSetDocument {
    pub dim: usize,
    pub points: Vec<Vec<i32>>,
}

impl PointSetDocument {
    pub fn from_set(set: &PointSet) -> Self {
        PointSetDocument {
            dim: set.dim(),
            points: set.iter().map(|p| p.coords().to_vec()).collect(),
        }
    }

    /// Reads a document from a file path, or from standard input when
    /// the path is `-`.
    pub fn load(path: &str) -> Result<Self, CliError> {
        let text = if path == "-" {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| CliError::Io { path: "<stdin>".into(), source: e })?;
            buf
        } else {
            fs::read_to_string(path)
                .map_err(|e| CliError::Io { path: path.into(), source: e })?
        };
        let doc: PointSetDocument = serde_json::from_str(&text)
            .map_err(|e| CliError::Document(format!("{path}: {e}")))?;
        Ok(doc)
    }

    pub fn to_set(&self) -> Result<PointSet, CliError> {
        let mut set = PointSet::empty(self.dim).map_err(CliError::Core)?;
        for coords in &self.points {
            if coords.len() != self.dim {
                return Err(CliError::Document(format!(
                    "point {coords:?} has {} coordinates, document says dim = {}",
                    coords.len(),
                    self.dim
                )));
            }
            let p = Point::new(coords).map_err(CliError::Core)?;
            if !set.insert(p).map_err(CliError::Core)? {
                return Err(CliError::Document(format!("duplicate point {coords:?}")));
            }
        }
        Ok(set)
    }

    pub fn to_json(&self) -> String {
        crate::report::to_display_json(self)
    }
}
