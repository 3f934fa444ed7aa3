//! CSV and JSON rendering with a metadata header, and atomic file output.

use std::io::Write;
use std::path::Path;

use serde_json::{Map, Number, Value};
use sha2::{Digest, Sha256};

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Float(f64),
    Int(i64),
    Bool(bool),
    Text(String),
    Empty,
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Float(v)
    }
}

impl From<i64> for Cell {
    fn from(v: i64) -> Self {
        Cell::Int(v)
    }
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v as i64)
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Bool(v)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_string())
    }
}

impl From<String> for Cell {
    fn from(v: String) -> Self {
        Cell::Text(v)
    }
}

/// 17 significant digits in scientific notation; round-trips every `f64`.
pub fn format_float(v: f64) -> String {
    if v.is_nan() {
        "NaN".into()
    } else if v.is_infinite() {
        if v > 0.0 { "inf" } else { "-inf" }.into()
    } else {
        format!("{v:.16e}")
    }
}

impl Cell {
    fn to_csv(&self) -> String {
        match self {
            Cell::Float(v) => format_float(*v),
            Cell::Int(v) => v.to_string(),
            Cell::Bool(v) => v.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Empty => String::new(),
        }
    }

    fn to_json(&self) -> Value {
        match self {
            Cell::Float(v) if v.is_finite() => Value::Number(
                format_float(*v)
                    .parse::<Number>()
                    .expect("valid JSON number"),
            ),
            Cell::Float(_) | Cell::Empty => Value::Null,
            Cell::Int(v) => Value::from(*v),
            Cell::Bool(v) => Value::from(*v),
            Cell::Text(s) => Value::from(s.as_str()),
        }
    }
}

/// Output of one command: scalar summary entries and a table.
#[derive(Debug, Clone, Default)]
pub struct Report {
    pub summary: Vec<(String, Cell)>,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Report {
    pub fn new(columns: &[&'static str]) -> Self {
        Self {
            columns: columns.to_vec(),
            ..Self::default()
        }
    }

    pub fn summary(&mut self, key: &str, value: impl Into<Cell>) {
        self.summary.push((key.to_string(), value.into()));
    }

    pub fn push(&mut self, row: Vec<Cell>) -> Result<(), CliError> {
        if row.len() != self.columns.len() {
            return Err(CliError::Config(format!(
                "row has {} fields, schema has {}",
                row.len(),
                self.columns.len()
            )));
        }
        self.rows.push(row);
        Ok(())
    }
}

/// Provenance written ahead of the data.
#[derive(Debug, Clone)]
pub struct Meta {
    pub tool: String,
    /// Compact JSON of the resolved configuration.
    pub config: String,
    pub s0: f64,
}

impl Meta {
    pub fn new(config: &Value, s0: f64) -> Self {
        Self {
            tool: format!("efimov {}", env!("CARGO_PKG_VERSION")),
            config: serde_json::to_string(config).expect("config serializes"),
            s0,
        }
    }

    pub fn config_sha256(&self) -> String {
        config_sha256(&self.config)
    }
}

pub fn config_sha256(config: &str) -> String {
    hex::encode(Sha256::digest(config.as_bytes()))
}

pub fn render_csv(meta: &Meta, report: &Report) -> Result<String, CliError> {
    let mut out = String::new();
    out.push_str(&format!("# tool: {}\n", meta.tool));
    out.push_str(&format!("# config: {}\n", meta.config));
    out.push_str(&format!("# config_sha256: {}\n", meta.config_sha256()));
    out.push_str(&format!("# s0: {}\n", format_float(meta.s0)));
    for (k, v) in &report.summary {
        out.push_str(&format!("# {k}: {}\n", v.to_csv()));
    }
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    let csv_err = |e: csv::Error| CliError::Config(format!("csv: {e}"));
    w.write_record(&report.columns).map_err(csv_err)?;
    for row in &report.rows {
        w.write_record(row.iter().map(Cell::to_csv))
            .map_err(csv_err)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| CliError::Config(format!("csv: {e}")))?;
    out.push_str(&String::from_utf8(bytes).expect("csv output is UTF-8"));
    Ok(out)
}

pub fn render_json(meta: &Meta, report: &Report) -> String {
    let mut m = Map::new();
    m.insert("tool".into(), meta.tool.clone().into());
    m.insert(
        "config".into(),
        serde_json::from_str(&meta.config).expect("config is JSON"),
    );
    m.insert("config_sha256".into(), meta.config_sha256().into());
    m.insert("s0".into(), Cell::Float(meta.s0).to_json());

    let summary: Map<String, Value> = report
        .summary
        .iter()
        .map(|(k, v)| (k.clone(), v.to_json()))
        .collect();
    let rows: Vec<Value> = report
        .rows
        .iter()
        .map(|r| {
            Value::Object(
                report
                    .columns
                    .iter()
                    .zip(r)
                    .map(|(c, v)| (c.to_string(), v.to_json()))
                    .collect(),
            )
        })
        .collect();

    let mut doc = Map::new();
    doc.insert("meta".into(), Value::Object(m));
    doc.insert("summary".into(), Value::Object(summary));
    doc.insert(
        "columns".into(),
        Value::from(
            report
                .columns
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>(),
        ),
    );
    doc.insert("rows".into(), Value::Array(rows));
    let mut s = serde_json::to_string_pretty(&Value::Object(doc)).expect("document serializes");
    s.push('\n');
    s
}

/// Writes `contents` to a temporary file next to `path`, then renames it.
pub fn write_atomic(path: &Path, contents: &str) -> Result<(), CliError> {
    let io = |source| CliError::Io {
        path: path.to_path_buf(),
        source,
    };
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io)?;
    tmp.write_all(contents.as_bytes()).map_err(io)?;
    tmp.as_file().sync_all().map_err(io)?;
    tmp.persist(path).map_err(|e| io(e.error))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn meta() -> Meta {
        Meta::new(&serde_json::json!({"command": "s0"}), 1.0)
    }

    #[test]
    fn empty_table_is_header_only() {
        let csv = render_csv(&meta(), &Report::new(&["a", "b"])).unwrap();
        let data: Vec<&str> = csv.lines().filter(|l| !l.starts_with('#')).collect();
        assert_eq!(data, vec!["a,b"]);
    }

    #[test]
    fn row_length_must_match_schema() {
        let mut r = Report::new(&["a", "b"]);
        assert!(matches!(
            r.push(vec![Cell::Int(1)]),
            Err(CliError::Config(_))
        ));
    }

    #[test]
    fn float_formatting() {
        assert_eq!(format_float(1.0), "1.0000000000000000e0");
        assert_eq!(format_float(-2.5e-300), "-2.5000000000000000e-300");
        assert_eq!(format_float(f64::INFINITY), "inf");
    }

    #[test]
    fn json_numbers_keep_all_digits() {
        let mut r = Report::new(&["x"]);
        r.push(vec![Cell::Float(0.1)]).unwrap();
        let json = render_json(&meta(), &r);
        assert!(json.contains("1.0000000000000001e-1"));
        let v: Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["rows"][0]["x"].as_f64(), Some(0.1));
    }
}
