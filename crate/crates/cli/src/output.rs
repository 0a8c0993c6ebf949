//! Deterministic CSV and JSON emission.
//!
//! CSV: `#`-prefixed comment lines carry the schema version and the full
//! parameter echo, then the header row, then data rows. Floats are printed
//! with 17 significant digits so repeated runs are byte-identical and the
//! values round-trip exactly. JSON carries the same numeric content in a
//! single object `{schema_version, command, parameters, rows}` with sorted
//! keys.

use std::collections::BTreeMap;

pub const SCHEMA_VERSION: &str = "1";

/// One cell of an output row.
#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Int(i64),
    Float(f64),
    Bool(bool),
    Text(String),
}

/// 17 significant digits, '.' decimal separator: exact f64 round-trip.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

fn csv_escape(field: &str) -> String {
    if field.contains(',') || field.contains('"') || field.contains('\n') {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

impl Value {
    fn to_csv_field(&self) -> String {
        match self {
            Value::Int(v) => v.to_string(),
            Value::Float(v) => fmt_f64(*v),
            Value::Bool(v) => v.to_string(),
            Value::Text(v) => csv_escape(v),
        }
    }

    fn to_json(&self) -> serde_json::Value {
        match self {
            Value::Int(v) => serde_json::Value::from(*v),
            Value::Float(v) => serde_json::Value::from(*v),
            Value::Bool(v) => serde_json::Value::from(*v),
            Value::Text(v) => serde_json::Value::from(v.as_str()),
        }
    }
}

/// A complete command emission: identification, parameter echo, and
/// column-labeled numeric rows.
#[derive(Debug, Clone)]
pub struct OutputRecord {
    pub command: String,
    pub parameters: BTreeMap<String, String>,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Value>>,
}

impl OutputRecord {
    pub fn new(command: impl Into<String>, columns: Vec<&'static str>) -> Self {
        Self {
            command: command.into(),
            parameters: BTreeMap::new(),
            columns,
            rows: Vec::new(),
        }
    }

    pub fn set_parameter(&mut self, key: impl Into<String>, value: impl Into<String>) {
        self.parameters.insert(key.into(), value.into());
    }

    pub fn push_row(&mut self, row: Vec<Value>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("# schema_version={SCHEMA_VERSION}\n"));
        out.push_str(&format!("# command={}\n", self.command));
        for (key, value) in &self.parameters {
            out.push_str(&format!("# {key}={value}\n"));
        }
        out.push_str(&self.columns.join(","));
        out.push('\n');
        for row in &self.rows {
            let fields: Vec<String> = row.iter().map(Value::to_csv_field).collect();
            out.push_str(&fields.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut root = serde_json::Map::new();
        root.insert("schema_version".into(), SCHEMA_VERSION.into());
        root.insert("command".into(), self.command.as_str().into());
        let params: serde_json::Map<String, serde_json::Value> = self
            .parameters
            .iter()
            .map(|(k, v)| (k.clone(), serde_json::Value::from(v.as_str())))
            .collect();
        root.insert("parameters".into(), params.into());
        let rows: Vec<serde_json::Value> = self
            .rows
            .iter()
            .map(|row| {
                let obj: serde_json::Map<String, serde_json::Value> = self
                    .columns
                    .iter()
                    .zip(row)
                    .map(|(col, v)| (col.to_string(), v.to_json()))
                    .collect();
                serde_json::Value::from(obj)
            })
            .collect();
        root.insert("rows".into(), rows.into());
        let mut text = serde_json::Value::from(root).to_string();
        text.push('\n');
        text
    }
}
