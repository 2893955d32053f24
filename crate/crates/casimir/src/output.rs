//! Tables, CSV/JSON rendering and the provenance header.

use serde_json::{json, Map, Value};

use crate::config::{Format, RunConfig};

pub const VERSION: &str = concat!(env!("CARGO_PKG_NAME"), " ", env!("CARGO_PKG_VERSION"));

#[derive(Clone, Debug, PartialEq)]
pub enum Cell {
    Int(i64),
    Float(f64),
    Text(String),
}

impl Cell {
    /// CSV text; floats carry 17 significant digits.
    pub fn csv(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Float(v) if v.is_finite() => format!("{v:.16e}"),
            Cell::Float(v) => v.to_string().to_lowercase(),
            Cell::Text(s) => s.clone(),
        }
    }

    pub fn json(&self) -> Value {
        match self {
            Cell::Int(v) => json!(v),
            Cell::Float(v) => serde_json::Number::from_f64(*v).map_or(Value::Null, Value::Number),
            Cell::Text(s) => json!(s),
        }
    }
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Float(v)
    }
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v as i64)
    }
}

impl From<u32> for Cell {
    fn from(v: u32) -> Self {
        Cell::Int(i64::from(v))
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.into())
    }
}

/// Result of one subcommand.
#[derive(Clone, Debug, Default)]
pub struct Report {
    pub command: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
    /// Free-form lines emitted as comments (CSV) or `meta.notes` (JSON).
    pub notes: Vec<String>,
    /// Extra top-level JSON members.
    pub extra: Map<String, Value>,
    /// Side files written next to the main output as `<out>.<suffix>`.
    pub attachments: Vec<(String, String)>,
}

impl Report {
    pub fn new(command: &str, columns: &[&str]) -> Self {
        Self {
            command: command.into(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            ..Self::default()
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn column(&self, name: &str) -> Option<usize> {
        self.columns.iter().position(|c| c == name)
    }

    pub fn render(&self, format: Format, config: &RunConfig) -> String {
        match format {
            Format::Csv => self.render_csv(config),
            Format::Json => self.render_json(config),
        }
    }

    fn render_csv(&self, config: &RunConfig) -> String {
        let mut out = String::new();
        for line in header_lines(&self.command, config).iter().chain(&self.notes) {
            out.push_str("# ");
            out.push_str(line);
            out.push('\n');
        }
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.columns).expect("in-memory write");
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::csv)).expect("in-memory write");
        }
        out.push_str(&String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8"));
        out
    }

    fn render_json(&self, config: &RunConfig) -> String {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|r| Value::Object(self.columns.iter().cloned().zip(r.iter().map(Cell::json)).collect()))
            .collect();
        let mut top = Map::new();
        top.insert(
            "meta".into(),
            json!({
                "version": VERSION,
                "command": self.command,
                "config": serde_json::to_value(config).expect("configuration serializes"),
                "notes": self.notes,
            }),
        );
        top.insert("columns".into(), json!(self.columns));
        top.insert("rows".into(), Value::Array(rows));
        top.extend(self.extra.clone());
        let mut s = serde_json::to_string_pretty(&Value::Object(top)).expect("json");
        s.push('\n');
        s
    }
}

/// Version line followed by the resolved configuration, one TOML line each.
pub fn header_lines(command: &str, config: &RunConfig) -> Vec<String> {
    let mut v = vec![format!("{VERSION} {command}")];
    v.extend(config.to_toml().lines().filter(|l| !l.is_empty()).map(str::to_string));
    v
}

/// Small CSV table with the provenance header, for side files.
pub fn csv_with_header(command: &str, config: &RunConfig, columns: &[&str], rows: &[Vec<Cell>]) -> String {
    let mut r = Report::new(command, columns);
    r.rows = rows.to_vec();
    r.render_csv(config)
}
