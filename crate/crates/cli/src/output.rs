//! JSON, CSV and text rendering of command reports.

use serde::Serialize;

/// Version of the JSON envelope.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// A command result that can be rendered in every [`Format`].
pub trait Report: Serialize {
    /// Name of the producing command, recorded in the JSON envelope.
    fn command(&self) -> &'static str;
    fn write_csv(&self, w: &mut csv::Writer<Vec<u8>>) -> csv::Result<()>;
    fn write_text(&self, out: &mut String);
}

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    schema: u32,
    command: &'static str,
    result: &'a T,
}

pub fn render<R: Report>(report: &R, format: Format) -> anyhow::Result<String> {
    Ok(match format {
        Format::Json => {
            let env = Envelope {
                schema: SCHEMA_VERSION,
                command: report.command(),
                result: report,
            };
            let mut s = serde_json::to_string_pretty(&env)?;
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            report.write_csv(&mut w)?;
            String::from_utf8(w.into_inner().map_err(|e| e.into_error())?)?
        }
        Format::Text => {
            let mut s = String::new();
            report.write_text(&mut s);
            s
        }
    })
}

/// Left-aligned first column, right-aligned rest.
pub(crate) fn table(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for row in rows {
        let mut line = String::new();
        for (c, cell) in row.iter().enumerate() {
            if c == 0 {
                line.push_str(&format!("{cell:<w$}", w = widths[c]));
            } else {
                line.push_str(&format!("  {cell:>w$}", w = widths[c]));
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}
