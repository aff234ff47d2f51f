use std::io::Write;

use serde::Serialize;

use crate::args::Format;
use crate::error::CliError;

pub fn write_json<T: Serialize + ?Sized>(out: &mut dyn Write, doc: &T) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut *out, doc)?;
    writeln!(out)?;
    Ok(())
}

pub fn write_csv<T: Serialize>(out: &mut dyn Write, rows: &[T]) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}

/// A table printed as CSV, or as a JSON array of row objects.
pub fn write_table<T: Serialize>(out: &mut dyn Write, format: Format, rows: &[T]) -> Result<(), CliError> {
    match format {
        Format::Csv => write_csv(out, rows),
        Format::Json => write_json(out, rows),
    }
}

/// A document printed as JSON, or as the given one-row CSV flattening.
pub fn write_document<D: Serialize, R: Serialize>(
    out: &mut dyn Write,
    format: Format,
    doc: &D,
    row: &R,
) -> Result<(), CliError> {
    match format {
        Format::Json => write_json(out, doc),
        Format::Csv => write_csv(out, std::slice::from_ref(row)),
    }
}

pub fn pair(z: zetalab_core::Complex) -> [f64; 2] {
    [z.re, z.im]
}
