//! Rendering of tables and records as text, CSV or JSON.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use clap::ValueEnum;
use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

pub fn open_sink(path: Option<&Path>) -> io::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

/// Rows of named cells; the common shape of every multi-row output.
#[derive(Debug, Clone, Default)]
pub struct Table {
    pub headers: Vec<&'static str>,
    pub rows: Vec<Vec<Value>>,
}

impl Table {
    pub fn new(headers: &[&'static str]) -> Self {
        Table {
            headers: headers.to_vec(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Value>) {
        debug_assert_eq!(row.len(), self.headers.len());
        self.rows.push(row);
    }

    pub fn write(&self, out: &mut dyn Write, format: Format) -> io::Result<()> {
        match format {
            Format::Text => self.write_text(out),
            Format::Csv => self.write_csv(out),
            Format::Json => {
                let records: Vec<serde_json::Map<String, Value>> = self
                    .rows
                    .iter()
                    .map(|row| {
                        self.headers
                            .iter()
                            .map(|h| h.to_string())
                            .zip(row.iter().cloned())
                            .collect()
                    })
                    .collect();
                write_json(out, &records)
            }
        }
    }

    fn write_text(&self, out: &mut dyn Write) -> io::Result<()> {
        let cells: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(plain).collect())
            .collect();
        let widths: Vec<usize> = (0..self.headers.len())
            .map(|i| {
                cells
                    .iter()
                    .map(|r| r[i].len())
                    .chain([self.headers[i].len()])
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let line = |out: &mut dyn Write, row: &[String]| -> io::Result<()> {
            let padded: Vec<String> = row
                .iter()
                .zip(&widths)
                .map(|(c, w)| format!("{c:<w$}"))
                .collect();
            writeln!(out, "{}", padded.join("  ").trim_end())
        };
        let headers: Vec<String> = self.headers.iter().map(|h| h.to_string()).collect();
        line(out, &headers)?;
        for row in &cells {
            line(out, row)?;
        }
        Ok(())
    }

    fn write_csv(&self, out: &mut dyn Write) -> io::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(&self.headers)?;
        for row in &self.rows {
            w.write_record(row.iter().map(plain))?;
        }
        w.flush()
    }
}

/// Cell text without JSON quoting; `null` becomes empty.
pub fn plain(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

pub fn write_json<T: Serialize + ?Sized>(out: &mut dyn Write, value: &T) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)
}

/// One record: `key: value` lines as text, a one-row CSV, or a JSON object.
pub fn write_record<T: Serialize>(
    out: &mut dyn Write,
    format: Format,
    fields: &[(&'static str, Value)],
    json: &T,
) -> io::Result<()> {
    match format {
        Format::Json => write_json(out, json),
        Format::Csv => {
            let mut t = Table::new(&fields.iter().map(|f| f.0).collect::<Vec<_>>());
            t.push(fields.iter().map(|f| f.1.clone()).collect());
            t.write_csv(out)
        }
        Format::Text => {
            let width = fields.iter().map(|f| f.0.len()).max().unwrap_or(0);
            for (k, v) in fields {
                writeln!(
                    out,
                    "{:<width$}  {}",
                    format!("{k}:"),
                    plain(v),
                    width = width + 1
                )?;
            }
            Ok(())
        }
    }
}
