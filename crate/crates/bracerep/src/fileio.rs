//! JSON file formats for brace tables and representation data.
//!
//! A brace file holds `{"order": n, "dot": [[int]], "circ": [[int]]}` with
//! row-major tables whose entry `t[a][b]` is the product of `a` and `b`.
//! A representation file holds `{"modulus": q, "dim": d, "beta": {"k":
//! [[int]]}, "rho": {...}}` where the keys are element indices (every
//! element must appear in both maps) and matrix entries are signed
//! integers reduced modulo `q`.
//!
//! Parsing here is purely syntactic — shapes, ranges, and row uniqueness —
//! with positioned diagnostics.  Whether tables satisfy the group and
//! brace axioms is checked separately so the caller can distinguish a
//! malformed file from a mathematically invalid one.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::{LinalgError, Matrix, PrimeField};
use crate::brace::SkewBrace;
use crate::rep::{RepData, RepError};

#[derive(Debug, Error)]
pub enum FileError {
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    /// Syntax-level JSON failure; the message carries line and column.
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    /// Structurally valid JSON whose content violates the format.
    #[error("{0}")]
    Malformed(String),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BraceFile {
    order: usize,
    dot: Vec<Vec<i64>>,
    circ: Vec<Vec<i64>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RepFile {
    modulus: u64,
    dim: usize,
    beta: BTreeMap<String, Vec<Vec<i64>>>,
    rho: BTreeMap<String, Vec<Vec<i64>>>,
}

/// Parses a brace file into its two multiplication tables, rejecting
/// ragged rows, out-of-range entries, and repeats within a row.
pub fn parse_brace_tables(text: &str) -> Result<(Vec<Vec<usize>>, Vec<Vec<usize>>), FileError> {
    let file: BraceFile = serde_json::from_str(text)?;
    if file.order == 0 {
        return Err(FileError::Malformed("order must be at least 1".into()));
    }
    let dot = validate_table("dot", &file.dot, file.order)?;
    let circ = validate_table("circ", &file.circ, file.order)?;
    Ok((dot, circ))
}

fn validate_table(
    name: &str,
    table: &[Vec<i64>],
    order: usize,
) -> Result<Vec<Vec<usize>>, FileError> {
    if table.len() != order {
        return Err(FileError::Malformed(format!(
            "{name} has {} rows, expected {order}",
            table.len()
        )));
    }
    let mut out = Vec::with_capacity(order);
    for (i, row) in table.iter().enumerate() {
        if row.len() != order {
            return Err(FileError::Malformed(format!(
                "{name} row {i} has {} entries, expected {order}",
                row.len()
            )));
        }
        let mut seen_at = vec![usize::MAX; order];
        let mut converted = Vec::with_capacity(order);
        for (j, &entry) in row.iter().enumerate() {
            if entry < 0 || entry as usize >= order {
                return Err(FileError::Malformed(format!(
                    "{name}[{i}][{j}] = {entry} is out of range for order {order}"
                )));
            }
            let value = entry as usize;
            if seen_at[value] != usize::MAX {
                return Err(FileError::Malformed(format!(
                    "{name} row {i} repeats entry {value} at columns {} and {j}",
                    seen_at[value]
                )));
            }
            seen_at[value] = j;
            converted.push(value);
        }
        out.push(converted);
    }
    Ok(out)
}

/// Parses a representation file into validated matrix data.  The element
/// count is inferred from the key sets, which must both be exactly
/// `0..count`.
pub fn parse_rep_data(text: &str) -> Result<RepData, FileError> {
    let file: RepFile = serde_json::from_str(text)?;
    let field = PrimeField::new(file.modulus)?;
    if file.dim == 0 {
        return Err(FileError::Malformed("dim must be at least 1".into()));
    }
    let beta = collect_side("beta", &file.beta, field, file.dim)?;
    let rho = collect_side("rho", &file.rho, field, file.dim)?;
    if beta.len() != rho.len() {
        return Err(FileError::Malformed(format!(
            "beta covers {} elements but rho covers {}",
            beta.len(),
            rho.len()
        )));
    }
    Ok(RepData::new(field, beta, rho)?)
}

fn collect_side(
    name: &str,
    side: &BTreeMap<String, Vec<Vec<i64>>>,
    field: PrimeField,
    dim: usize,
) -> Result<Vec<Matrix>, FileError> {
    if side.is_empty() {
        return Err(FileError::Malformed(format!("{name} map is empty")));
    }
    let count = side.len();
    let mut matrices: Vec<Option<Matrix>> = vec![None; count];
    for (key, rows) in side {
        let index: usize = key.parse().map_err(|_| {
            FileError::Malformed(format!("{name} key {key:?} is not an element index"))
        })?;
        if index >= count {
            return Err(FileError::Malformed(format!(
                "{name} has key {index} but only {count} elements; indices must be 0..{count}"
            )));
        }
        if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
            return Err(FileError::Malformed(format!(
                "{name}[{index}] is not a {dim}x{dim} matrix"
            )));
        }
        matrices[index] = Some(Matrix::from_rows_i64(field, rows));
    }
    let mut out = Vec::with_capacity(count);
    for (index, slot) in matrices.into_iter().enumerate() {
        match slot {
            Some(m) => out.push(m),
            None => {
                return Err(FileError::Malformed(format!(
                    "{name} is missing element {index}"
                )))
            }
        }
    }
    Ok(out)
}

/// Reads and syntactically validates a brace file from disk.
pub fn read_brace_tables(
    path: impl AsRef<Path>,
) -> Result<(Vec<Vec<usize>>, Vec<Vec<usize>>), FileError> {
    parse_brace_tables(&std::fs::read_to_string(path)?)
}

/// Reads and syntactically validates a representation file from disk.
pub fn read_rep_data(path: impl AsRef<Path>) -> Result<RepData, FileError> {
    parse_rep_data(&std::fs::read_to_string(path)?)
}

/// Serializes a brace's tables in the file format.
pub fn brace_json(brace: &SkewBrace) -> String {
    let as_i64 = |t: Vec<Vec<usize>>| -> Vec<Vec<i64>> {
        t.into_iter()
            .map(|row| row.into_iter().map(|x| x as i64).collect())
            .collect()
    };
    let file = BraceFile {
        order: brace.order(),
        dot: as_i64(brace.dot_table()),
        circ: as_i64(brace.circ_table()),
    };
    serde_json::to_string_pretty(&file).expect("serialization cannot fail")
}

/// Serializes representation data in the file format with canonical
/// (reduced) entries.
pub fn rep_json(data: &RepData) -> String {
    let side = |pick: &dyn Fn(usize) -> Matrix| -> BTreeMap<String, Vec<Vec<i64>>> {
        (0..data.elements())
            .map(|a| {
                let m = pick(a);
                let rows = (0..m.rows())
                    .map(|i| (0..m.cols()).map(|j| m.get(i, j) as i64).collect())
                    .collect();
                (a.to_string(), rows)
            })
            .collect()
    };
    let file = RepFile {
        modulus: u64::from(data.field().modulus()),
        dim: data.dim(),
        beta: side(&|a| data.beta(a).clone()),
        rho: side(&|a| data.rho(a).clone()),
    };
    serde_json::to_string_pretty(&file).expect("serialization cannot fail")
}
