use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::ValueEnum;
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Clone, Debug)]
pub struct OutputSpec {
    pub format: Format,
    pub path: Option<PathBuf>,
    pub precision: usize,
}

#[derive(Clone, Debug)]
pub enum Cell {
    Int(i64),
    /// exact value, printed verbatim
    Exact(String),
    Float(f64),
    Bool(bool),
}

/// Parameter header plus a rectangular table.
#[derive(Clone, Debug, Default)]
pub struct Table {
    pub params: Vec<(String, String)>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: &[&str]) -> Self {
        Table { columns: columns.iter().map(|c| c.to_string()).collect(), ..Default::default() }
    }

    pub fn param(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.params.push((key.to_string(), value.to_string()));
        self
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }
}

fn float_text(x: f64, precision: usize) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    let s = format!("{x:.precision$}");
    // avoid "-0.000"
    if s.starts_with('-') && s[1..].chars().all(|c| c == '0' || c == '.') {
        s[1..].to_string()
    } else {
        s
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn render(table: &Table, spec: &OutputSpec) -> String {
    match spec.format {
        Format::Csv => render_csv(table, spec.precision),
        Format::Json => render_json(table, spec.precision),
    }
}

fn render_csv(table: &Table, precision: usize) -> String {
    let mut out = String::new();
    let header: Vec<String> = table.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
    writeln!(out, "# {}", header.join(" ")).unwrap();
    writeln!(out, "{}", table.columns.iter().map(|c| csv_field(c)).collect::<Vec<_>>().join(",")).unwrap();
    for row in &table.rows {
        let fields: Vec<String> = row
            .iter()
            .map(|c| match c {
                Cell::Int(i) => i.to_string(),
                Cell::Exact(s) => csv_field(s),
                Cell::Float(x) => float_text(*x, precision),
                Cell::Bool(b) => b.to_string(),
            })
            .collect();
        writeln!(out, "{}", fields.join(",")).unwrap();
    }
    out
}

fn render_json(table: &Table, precision: usize) -> String {
    let params: Map<String, Value> =
        table.params.iter().map(|(k, v)| (k.clone(), Value::String(v.clone()))).collect();
    let rows: Vec<Value> = table
        .rows
        .iter()
        .map(|row| {
            Value::Array(
                row.iter()
                    .map(|c| match c {
                        Cell::Int(i) => Value::from(*i),
                        Cell::Exact(s) => Value::String(s.clone()),
                        Cell::Float(x) if x.is_finite() => {
                            // round through the fixed-precision text so both formats agree
                            let r: f64 = float_text(*x, precision).parse().unwrap();
                            serde_json::Number::from_f64(r).map(Value::Number).unwrap_or(Value::Null)
                        }
                        Cell::Float(_) => Value::Null,
                        Cell::Bool(b) => Value::Bool(*b),
                    })
                    .collect(),
            )
        })
        .collect();
    let mut obj = Map::new();
    obj.insert("params".into(), Value::Object(params));
    obj.insert("columns".into(), Value::from(table.columns.clone()));
    obj.insert("rows".into(), Value::Array(rows));
    let mut s = serde_json::to_string_pretty(&Value::Object(obj)).unwrap();
    s.push('\n');
    s
}

pub fn emit(table: &Table, spec: &OutputSpec) -> io::Result<()> {
    let text = render(table, spec);
    match &spec.path {
        Some(p) => fs::write(p, text),
        None => io::stdout().lock().write_all(text.as_bytes()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Table {
        let mut t = Table::new(&["n", "x", "exact"]);
        t.param("a", "10");
        t.push(vec![Cell::Int(0), Cell::Float(-1e-20), Cell::Exact("3/2".into())]);
        t.push(vec![Cell::Int(1), Cell::Float(f64::NAN), Cell::Exact("-7".into())]);
        t
    }

    #[test]
    fn csv_layout() {
        let s = render(&sample(), &OutputSpec { format: Format::Csv, path: None, precision: 3 });
        assert_eq!(s, "# a=10\nn,x,exact\n0,0.000,3/2\n1,nan,-7\n");
    }

    #[test]
    fn json_layout() {
        let s = render(&sample(), &OutputSpec { format: Format::Json, path: None, precision: 3 });
        let v: Value = serde_json::from_str(&s).unwrap();
        assert_eq!(v["params"]["a"], "10");
        assert_eq!(v["columns"][2], "exact");
        assert_eq!(v["rows"][0][1], 0.0);
        assert!(v["rows"][1][1].is_null());
    }
}
