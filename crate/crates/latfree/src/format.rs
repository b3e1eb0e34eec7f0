//! The simplex file format shared by every subcommand:
//!
//! ```json
//! {"dim": 3, "vertices": [[0,0,0],[2,0,0],[0,3,0],[0,0,6]]}
//! ```
//!
//! Coordinates must be integers that fit in 64 bits.

use std::fs;
use std::path::Path;

use latfree_core::{CanonicalForm, Simplex};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SimplexDoc {
    pub dim: usize,
    pub vertices: Vec<Vec<i64>>,
}

impl SimplexDoc {
    pub fn from_simplex(s: &Simplex) -> Self {
        SimplexDoc {
            dim: s.dim(),
            vertices: s.vertices().to_vec(),
        }
    }

    /// Checks the declared shape, then builds the simplex.
    pub fn to_simplex(&self) -> Result<Simplex, CliError> {
        if self.vertices.len() != self.dim + 1 {
            return Err(CliError::Malformed(format!(
                "dimension {} needs {} vertices, found {}",
                self.dim,
                self.dim + 1,
                self.vertices.len()
            )));
        }
        if let Some(v) = self.vertices.iter().find(|v| v.len() != self.dim) {
            return Err(CliError::Malformed(format!(
                "vertex {v:?} has {} coordinates, expected {}",
                v.len(),
                self.dim
            )));
        }
        Simplex::new(self.vertices.clone()).map_err(CliError::from)
    }
}

pub fn parse_simplex(text: &str) -> Result<Simplex, CliError> {
    let doc: SimplexDoc =
        serde_json::from_str(text).map_err(|e| CliError::Malformed(e.to_string()))?;
    doc.to_simplex()
}

pub fn read_simplex(path: &Path) -> Result<Simplex, CliError> {
    let text =
        fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    parse_simplex(&text).map_err(|e| e.in_file(path))
}

pub fn simplex_json(s: &Simplex) -> String {
    serde_json::to_string(&SimplexDoc::from_simplex(s)).expect("integers serialize")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CanonicalDoc {
    pub dim: usize,
    pub hnf: Vec<Vec<i64>>,
}

impl From<&CanonicalForm> for CanonicalDoc {
    fn from(c: &CanonicalForm) -> Self {
        CanonicalDoc {
            dim: c.dim,
            hnf: c.h.to_rows(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_a_simplex() {
        let s = parse_simplex(r#"{"dim": 2, "vertices": [[0,0],[2,0],[0,2]]}"#).unwrap();
        assert_eq!(s.dim(), 2);
        assert_eq!(parse_simplex(&simplex_json(&s)).unwrap(), s);
    }

    #[test]
    fn rejects_floats_and_bad_shapes() {
        for text in [
            r#"{"dim": 2, "vertices": [[0,0],[2.5,0],[0,2]]}"#,
            r#"{"dim": 2, "vertices": [[0,0],[2.0,0],[0,2]]}"#,
            r#"{"dim": 2, "vertices": [[0,0],[2,0]]}"#,
            r#"{"dim": 2, "vertices": [[0,0],[2,0],[0,2,1]]}"#,
            r#"{"dim": 2, "vertices": [[0,0],[2,0],[0,2]], "extra": 1}"#,
            r#"{"dim": 2, "vertices": [[0,0],[99999999999999999999,0],[0,2]]}"#,
            r#"not json"#,
        ] {
            assert!(
                matches!(parse_simplex(text), Err(CliError::Malformed(_))),
                "{text}"
            );
        }
    }

    #[test]
    fn degenerate_is_its_own_error() {
        let e = parse_simplex(r#"{"dim": 2, "vertices": [[0,0],[1,1],[2,2]]}"#).unwrap_err();
        assert!(matches!(e, CliError::Degenerate));
    }
}
