//! Text renderings of tabular output.

use std::fmt::Write;

use clap::ValueEnum;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
    Markdown,
}

/// Rows of already formatted cells. Rows may be shorter than the header;
/// missing cells are left out (csv/json) or blank (markdown).
#[derive(Clone, Debug, Default)]
pub struct Grid {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Grid {
    pub fn new<S: Into<String>>(header: impl IntoIterator<Item = S>) -> Self {
        Grid {
            header: header.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Csv => self.csv(),
            OutputFormat::Json => self.json(),
            OutputFormat::Markdown => self.markdown(),
        }
    }

    pub fn csv(&self) -> String {
        let mut out = String::new();
        for line in std::iter::once(&self.header).chain(&self.rows) {
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }

    pub fn json(&self) -> String {
        let value = json!({ "columns": self.header, "rows": self.rows });
        to_json_line(&value)
    }

    pub fn markdown(&self) -> String {
        let mut out = String::new();
        let width = self.header.len();
        let _ = writeln!(out, "| {} |", self.header.join(" | "));
        let _ = writeln!(out, "|{}", "---:|".repeat(width));
        for row in &self.rows {
            let cells: Vec<&str> = (0..width).map(|i| row.get(i).map_or("", String::as_str)).collect();
            let _ = writeln!(out, "| {} |", cells.join(" | "));
        }
        out
    }
}

pub fn to_json_line(value: &Value) -> String {
    let mut s = serde_json::to_string(value).expect("json values always serialize");
    s.push('\n');
    s
}

/// Shortest representation that reads back to the same `f64`.
pub fn float(v: f64) -> String {
    format!("{v:?}")
}
