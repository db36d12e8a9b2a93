//! CSV and JSON rendering. Numbers carry 12 significant digits.

use serde_json::{json, Map, Value as Json};

use crate::config::Format;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Num(f64),
    Text(String),
    Bool(bool),
}

/// Column data: one header row plus numeric rows.
#[derive(Debug, Clone)]
pub struct Table {
    pub units: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

/// Named scalar results.
#[derive(Debug, Clone)]
pub struct Record {
    pub units: String,
    pub entries: Vec<(String, Value)>,
    /// In JSON, emit only the entries without the metadata wrapper.
    pub bare_json: bool,
}

#[derive(Debug, Clone)]
pub enum Report {
    Table(Table),
    Record(Record),
}

pub struct Meta<'a> {
    pub command: &'a str,
    pub config_sha256: &'a str,
}

pub fn fmt_num(x: f64) -> String {
    format!("{x:.11e}")
}

fn json_num(x: f64) -> Json {
    if !x.is_finite() {
        return Json::Null;
    }
    let rounded: f64 = fmt_num(x).parse().expect("formatted float parses");
    json!(rounded)
}

fn json_value(v: &Value) -> Json {
    match v {
        Value::Num(x) => json_num(*x),
        Value::Text(s) => json!(s),
        Value::Bool(b) => json!(b),
    }
}

fn header(meta: &Meta, units: &str) -> String {
    format!(
        "# forster-dots {VERSION}\n# config_sha256: {}\n# command: {}\n# units: {units}\n",
        meta.config_sha256, meta.command
    )
}

fn meta_json(meta: &Meta, units: &str) -> Json {
    json!({
        "version": VERSION,
        "config_sha256": meta.config_sha256,
        "command": meta.command,
        "units": units,
    })
}

pub fn render(report: &Report, format: Format, meta: &Meta) -> String {
    match (report, format) {
        (Report::Table(t), Format::Csv) => {
            let mut out = header(meta, &t.units);
            out.push_str(&t.columns.join(","));
            out.push('\n');
            for row in &t.rows {
                let cells: Vec<String> = row.iter().map(|&x| fmt_num(x)).collect();
                out.push_str(&cells.join(","));
                out.push('\n');
            }
            out
        }
        (Report::Table(t), Format::Json) => {
            let rows: Vec<Json> = t
                .rows
                .iter()
                .map(|r| Json::Array(r.iter().map(|&x| json_num(x)).collect()))
                .collect();
            let doc = json!({
                "meta": meta_json(meta, &t.units),
                "columns": t.columns,
                "rows": rows,
            });
            format!(
                "{}\n",
                serde_json::to_string_pretty(&doc).expect("serialisable")
            )
        }
        (Report::Record(r), Format::Csv) => {
            let mut out = header(meta, &r.units);
            out.push_str("quantity,value\n");
            for (k, v) in &r.entries {
                let cell = match v {
                    Value::Num(x) => fmt_num(*x),
                    Value::Text(s) => s.clone(),
                    Value::Bool(b) => b.to_string(),
                };
                out.push_str(&format!("{k},{cell}\n"));
            }
            out
        }
        (Report::Record(r), Format::Json) => {
            let mut values = Map::new();
            for (k, v) in &r.entries {
                values.insert(k.clone(), json_value(v));
            }
            let doc = if r.bare_json {
                Json::Object(values)
            } else {
                json!({ "meta": meta_json(meta, &r.units), "values": values })
            };
            format!(
                "{}\n",
                serde_json::to_string_pretty(&doc).expect("serialisable")
            )
        }
    }
}
