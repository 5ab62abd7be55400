//! Command results and their three renderings.

use std::io::Write;

use clap::ValueEnum;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

/// Everything a subcommand produces. `negative` selects exit code 1.
pub struct Report {
    pub json: Value,
    pub headers: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
    pub text: String,
    pub negative: bool,
}

impl Report {
    pub fn new(json: Value, text: String) -> Self {
        Report { json, headers: Vec::new(), rows: Vec::new(), text, negative: false }
    }

    pub fn table(mut self, headers: Vec<&'static str>, rows: Vec<Vec<String>>) -> Self {
        self.headers = headers;
        self.rows = rows;
        self
    }

    pub fn negative(mut self, negative: bool) -> Self {
        self.negative = negative;
        self
    }

    pub fn render(&self, format: Format) -> anyhow::Result<Vec<u8>> {
        let mut out = Vec::new();
        match format {
            Format::Json => {
                serde_json::to_writer_pretty(&mut out, &self.json)?;
                out.push(b'\n');
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(&mut out);
                w.write_record(&self.headers)?;
                for row in &self.rows {
                    w.write_record(row)?;
                }
                w.flush()?;
            }
            Format::Pretty => {
                out.write_all(self.text.as_bytes())?;
                if !self.text.ends_with('\n') {
                    out.push(b'\n');
                }
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_quotes_coefficient_lists() {
        let r = Report::new(serde_json::json!({}), "x".into())
            .table(vec!["n", "poly"], vec![vec!["2".into(), "0,-1/2,1/2".into()]]);
        let out = String::from_utf8(r.render(Format::Csv).unwrap()).unwrap();
        assert_eq!(out, "n,poly\n2,\"0,-1/2,1/2\"\n");
        assert_eq!(r.render(Format::Pretty).unwrap(), b"x\n");
    }
}
