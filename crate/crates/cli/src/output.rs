//! Rendering of command results as json, csv or plain text.

use std::io::Write;
use std::path::Path;

use clap::ValueEnum;
use serde::Serialize;
use tetra_core::report::Report;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// A command result in all three renderings. `passed` drives the exit code.
pub struct Output {
    pub json: serde_json::Value,
    pub csv_header: Vec<String>,
    pub csv_rows: Vec<Vec<String>>,
    pub text: Vec<String>,
    pub passed: bool,
}

impl Output {
    pub fn new(json: &impl Serialize, passed: bool) -> Self {
        Output {
            json: serde_json::to_value(json).expect("command results serialize"),
            csv_header: Vec::new(),
            csv_rows: Vec::new(),
            text: Vec::new(),
            passed,
        }
    }

    pub fn csv(mut self, header: &[&str], rows: Vec<Vec<String>>) -> Self {
        self.csv_header = header.iter().map(|s| s.to_string()).collect();
        self.csv_rows = rows;
        self
    }

    pub fn text(mut self, lines: Vec<String>) -> Self {
        self.text = lines;
        self
    }

    pub fn from_report(report: &Report) -> Self {
        let rows = report
            .checks
            .iter()
            .map(|c| {
                let status = if c.passed() { "pass" } else { "fail" };
                vec![c.name.clone(), status.into(), c.witness.clone().unwrap_or_default()]
            })
            .collect();
        let mut lines: Vec<String> = report
            .checks
            .iter()
            .map(|c| {
                let status = if c.passed() { "PASS" } else { "FAIL" };
                match &c.witness {
                    Some(w) => format!("{status} {}: {w}", c.name),
                    None => format!("{status} {}", c.name),
                }
            })
            .collect();
        lines.push(format!("{}: {} passed, {} failed", report.suite, report.summary.passed, report.summary.failed));
        Output::new(report, report.all_passed()).csv(&["name", "status", "witness"], rows).text(lines)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("json values serialize");
                s.push('\n');
                s
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&self.csv_header).expect("in-memory csv");
                for row in &self.csv_rows {
                    w.write_record(row).expect("in-memory csv");
                }
                String::from_utf8(w.into_inner().expect("in-memory csv")).expect("utf-8 input")
            }
            Format::Text => {
                let mut s = self.text.join("\n");
                s.push('\n');
                s
            }
        }
    }
}

pub fn emit(text: &str, out: Option<&Path>) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, text),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()
        }
    }
}
