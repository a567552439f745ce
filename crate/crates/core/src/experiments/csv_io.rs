use std::fs::File;
use std::io::{Read, Write};
use std::path::Path;

use crate::error::{Error, Result};

use super::TrialRecord;

pub const CSV_HEADER: [&str; 11] = [
    "trial_index",
    "dim",
    "epsilon",
    "delta",
    "lhs_actual",
    "bound_new",
    "bound_gour",
    "gour_applicable",
    "bound_bluhm",
    "slack_new",
    "lambda_min_sigma",
];

/// Twelve significant digits.
fn real(v: f64) -> String {
    format!("{v:.11e}")
}

fn optional(v: Option<f64>) -> String {
    v.map(real).unwrap_or_default()
}

fn csv_err(e: csv::Error) -> Error {
    match e.into_kind() {
        csv::ErrorKind::Io(e) => Error::NumericalFault(format!("csv i/o: {e}")),
        other => Error::Usage(format!("malformed csv: {other:?}")),
    }
}

/// Writes the header and one row per record.
pub fn write_csv<W: Write>(records: &[TrialRecord], out: W) -> Result<()> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
    w.write_record(CSV_HEADER).map_err(csv_err)?;
    for r in records {
        w.write_record([
            r.trial_index.to_string(),
            r.dim.to_string(),
            real(r.epsilon),
            optional(r.delta),
            real(r.lhs_actual),
            real(r.bound_new),
            optional(r.bound_gour),
            r.gour_applicable.to_string(),
            real(r.bound_bluhm),
            real(r.slack_new),
            real(r.lambda_min_sigma),
        ])
        .map_err(csv_err)?;
    }
    w.flush().map_err(|e| Error::NumericalFault(format!("csv i/o: {e}")))
}

/// Writes `records` to `path`.
pub fn emit_csv(records: &[TrialRecord], path: &Path) -> Result<()> {
    let io = |source| Error::Io {
        path: path.to_path_buf(),
        source,
    };
    let mut buf = Vec::new();
    write_csv(records, &mut buf)?;
    let mut file = File::create(path).map_err(io)?;
    file.write_all(&buf).map_err(io)?;
    file.sync_all().map_err(io)
}

fn parse_field<T: std::str::FromStr>(row: usize, name: &str, s: &str) -> Result<T> {
    s.parse()
        .map_err(|_| Error::Usage(format!("row {row}: bad {name} '{s}'")))
}

fn parse_optional(row: usize, name: &str, s: &str) -> Result<Option<f64>> {
    if s.is_empty() {
        Ok(None)
    } else {
        parse_field(row, name, s).map(Some)
    }
}

/// Parses CSV produced by [`write_csv`]. The header must match exactly.
pub fn read_csv<R: Read>(input: R) -> Result<Vec<TrialRecord>> {
    let mut rdr = csv::ReaderBuilder::new().has_headers(true).from_reader(input);
    let header = rdr.headers().map_err(csv_err)?;
    if header.iter().ne(CSV_HEADER) {
        return Err(Error::Usage(format!(
            "unexpected csv header '{}'",
            header.iter().collect::<Vec<_>>().join(",")
        )));
    }
    let mut records = Vec::new();
    for (i, row) in rdr.records().enumerate() {
        let row = row.map_err(csv_err)?;
        let n = i + 1;
        let f = |k: usize| &row[k];
        records.push(TrialRecord {
            trial_index: parse_field(n, CSV_HEADER[0], f(0))?,
            dim: parse_field(n, CSV_HEADER[1], f(1))?,
            epsilon: parse_field(n, CSV_HEADER[2], f(2))?,
            delta: parse_optional(n, CSV_HEADER[3], f(3))?,
            lhs_actual: parse_field(n, CSV_HEADER[4], f(4))?,
            bound_new: parse_field(n, CSV_HEADER[5], f(5))?,
            bound_gour: parse_optional(n, CSV_HEADER[6], f(6))?,
            gour_applicable: parse_field(n, CSV_HEADER[7], f(7))?,
            bound_bluhm: parse_field(n, CSV_HEADER[8], f(8))?,
            slack_new: parse_field(n, CSV_HEADER[9], f(9))?,
            lambda_min_sigma: parse_field(n, CSV_HEADER[10], f(10))?,
        });
    }
    Ok(records)
}

/// Reads a CSV file written by [`emit_csv`].
pub fn parse_csv(path: &Path) -> Result<Vec<TrialRecord>> {
    let file = File::open(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    read_csv(file)
}
