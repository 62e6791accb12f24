//! CSV and JSON file formats.
//!
//! Matrices are headerless CSV, one row per sample. Floats are written with
//! 17 significant digits so every value re-reads bit-exactly.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::DataMatrix;

/// Full-precision decimal rendering (17 significant digits).
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

fn io_err(path: &Path, source: std::io::Error) -> Error {
    Error::Io {
        path: path.display().to_string(),
        source,
    }
}

fn csv_err(path: &Path, e: csv::Error) -> Error {
    match e.kind() {
        csv::ErrorKind::Io(_) => match e.into_kind() {
            csv::ErrorKind::Io(source) => io_err(path, source),
            _ => unreachable!(),
        },
        _ => Error::Parse(format!("{}: {e}", path.display())),
    }
}

/// Reads a headerless numeric CSV. Ragged rows, empty files and
/// non-numeric or non-finite cells are rejected.
pub fn read_matrix_csv(path: &Path) -> Result<DataMatrix> {
    let file = File::open(path).map_err(|e| io_err(path, e))?;
    parse_matrix_csv(file, path)
}

fn parse_matrix_csv(reader: impl std::io::Read, path: &Path) -> Result<DataMatrix> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .from_reader(reader);
    let mut rows: Vec<Vec<f64>> = Vec::new();
    for (line, rec) in rdr.records().enumerate() {
        let rec = rec.map_err(|e| csv_err(path, e))?;
        let row = rec
            .iter()
            .enumerate()
            .map(|(col, cell)| {
                cell.parse::<f64>().map_err(|_| {
                    Error::Parse(format!(
                        "{}: row {}, column {}: {cell:?} is not a number",
                        path.display(),
                        line + 1,
                        col + 1
                    ))
                })
            })
            .collect::<Result<Vec<f64>>>()?;
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(Error::Parse(format!("{}: no rows", path.display())));
    }
    DataMatrix::from_rows(&rows).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

pub fn write_matrix_csv(path: &Path, x: &DataMatrix) -> Result<()> {
    let rows = x
        .row_iter()
        .map(|r| r.iter().map(|&v| fmt_f64(v)).collect())
        .collect::<Vec<Vec<String>>>();
    write_csv(path, None, &rows)
}

/// Writes string rows with an optional header line.
pub fn write_csv(path: &Path, header: Option<&[String]>, rows: &[Vec<String>]) -> Result<()> {
    let file = File::create(path).map_err(|e| io_err(path, e))?;
    let mut w = csv::WriterBuilder::new()
        .flexible(false)
        .from_writer(BufWriter::new(file));
    if let Some(h) = header {
        w.write_record(h).map_err(|e| csv_err(path, e))?;
    }
    for r in rows {
        w.write_record(r).map_err(|e| csv_err(path, e))?;
    }
    w.flush().map_err(|e| io_err(path, e))
}

pub fn write_json(path: &Path, value: &impl Serialize) -> Result<()> {
    let file = File::create(path).map_err(|e| io_err(path, e))?;
    let mut w = BufWriter::new(file);
    serde_json::to_writer_pretty(&mut w, value)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    w.write_all(b"\n").map_err(|e| io_err(path, e))?;
    w.flush().map_err(|e| io_err(path, e))
}
