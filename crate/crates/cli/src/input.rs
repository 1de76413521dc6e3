//! JSON input formats.
//!
//! A matrix is `{"rows": m, "cols": n, "entries": [[q0, q1, q2, q3], ...]}`
//! with the `m·n` entries in row-major order. A Stein problem is
//! `{"A": <matrix>, "B": <matrix>, "C": <matrix>}`.

use std::fs;
use std::path::Path;

use serde::Deserialize;
use sqmat::{SplitQuaternion, SqMatrix};

use crate::error::{CliError, CliResult};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixFile {
    rows: usize,
    cols: usize,
    entries: Vec<[f64; 4]>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ProblemFile {
    #[serde(rename = "A")]
    a: MatrixFile,
    #[serde(rename = "B")]
    b: MatrixFile,
    #[serde(rename = "C")]
    c: MatrixFile,
}

impl MatrixFile {
    fn into_matrix(self, what: &str) -> CliResult<SqMatrix> {
        let expected = self.rows.checked_mul(self.cols).ok_or_else(|| {
            CliError::Shape(format!("{what}: {}x{} is too large", self.rows, self.cols))
        })?;
        if self.entries.len() != expected {
            return Err(CliError::Shape(format!(
                "{what}: {}x{} matrix needs {expected} entries, found {}",
                self.rows,
                self.cols,
                self.entries.len()
            )));
        }
        let data = self
            .entries
            .into_iter()
            .map(SplitQuaternion::from)
            .collect();
        SqMatrix::new(self.rows, self.cols, data).map_err(CliError::from)
    }
}

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

pub fn parse_matrix(text: &str, what: &str) -> CliResult<SqMatrix> {
    let file: MatrixFile =
        serde_json::from_str(text).map_err(|e| CliError::Parse(format!("{what}: {e}")))?;
    file.into_matrix(what)
}

pub fn parse_problem(text: &str, what: &str) -> CliResult<(SqMatrix, SqMatrix, SqMatrix)> {
    let file: ProblemFile =
        serde_json::from_str(text).map_err(|e| CliError::Parse(format!("{what}: {e}")))?;
    Ok((
        file.a.into_matrix(&format!("{what}: A"))?,
        file.b.into_matrix(&format!("{what}: B"))?,
        file.c.into_matrix(&format!("{what}: C"))?,
    ))
}

pub fn read_matrix(path: &Path) -> CliResult<SqMatrix> {
    parse_matrix(&read(path)?, &path.display().to_string())
}

pub fn read_problem(path: &Path) -> CliResult<(SqMatrix, SqMatrix, SqMatrix)> {
    parse_problem(&read(path)?, &path.display().to_string())
}
