use std::io::{self, Write};

use clap::ValueEnum;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// One command result in every output format.
pub struct Rendered {
    pub json: serde_json::Value,
    /// Header first.
    pub csv: Vec<Vec<String>>,
    pub text: String,
}

pub fn emit(r: &Rendered, format: Format) -> io::Result<()> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut out, &r.json)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut out);
            for row in &r.csv {
                w.write_record(row)?;
            }
            w.flush()?;
        }
        Format::Text => write!(out, "{}", r.text)?,
    }
    out.flush()
}

/// Floats in CSV and text, to six decimal places.
pub fn num(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.6}")
    } else {
        x.to_string()
    }
}

pub fn opt(x: Option<f64>) -> String {
    x.map(num).unwrap_or_default()
}
