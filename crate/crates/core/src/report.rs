//! Versioned JSON reports and their text views.
//!
//! A report is one `serde_json::Value`; the pretty and CSV renderers only
//! reformat it. Keys keep insertion order, so output is byte-deterministic.

use std::fmt::Write as _;
use std::str::FromStr;

use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::exactla::{Backend, CohomologyDims};

pub const SCHEMA: &str = "swcohom/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Pretty,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "pretty" => Ok(Format::Pretty),
            other => Err(Error::InvalidSpec(format!("unknown format {other:?}"))),
        }
    }
}

/// An ordered report under construction.
#[derive(Clone, Debug)]
pub struct Report {
    fields: Map<String, Value>,
}

impl Report {
    pub fn new(command: &str, seed: u64, backend: Backend) -> Self {
        let mut fields = Map::new();
        fields.insert("schema".into(), SCHEMA.into());
        fields.insert("command".into(), command.into());
        fields.insert("version".into(), env!("CARGO_PKG_VERSION").into());
        fields.insert("seed".into(), seed.into());
        fields.insert("backend".into(), backend.to_string().into());
        Self { fields }
    }

    pub fn insert(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.fields.insert(key.into(), value.into());
        self
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.fields.get(key)
    }

    pub fn to_value(&self) -> Value {
        Value::Object(self.fields.clone())
    }

    pub fn render(&self, format: Format) -> String {
        let v = self.to_value();
        match format {
            Format::Json => serde_json::to_string_pretty(&v).expect("serializable") + "\n",
            Format::Csv => render_csv(&v),
            Format::Pretty => render_pretty(&v),
        }
    }
}

/// `{"1": d_1, "2": d_2, ...}` in ascending degree.
pub fn dims_json(h: &CohomologyDims) -> Value {
    let mut m = Map::new();
    for (d, n) in &h.0 {
        m.insert(d.to_string(), (*n).into());
    }
    Value::Object(m)
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

fn is_flat(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

/// Indented `key: value` tree; scalar arrays and small scalar maps stay on one line.
pub fn render_pretty(v: &Value) -> String {
    fn go(out: &mut String, v: &Value, indent: usize) {
        let pad = "  ".repeat(indent);
        match v {
            Value::Object(m) => {
                for (k, x) in m {
                    match x {
                        Value::Object(inner)
                            if inner.values().all(is_flat) && inner.len() <= 16 =>
                        {
                            let parts: Vec<String> = inner
                                .iter()
                                .map(|(a, b)| format!("{a}: {}", scalar_text(b)))
                                .collect();
                            let _ = writeln!(out, "{pad}{k}: {{{}}}", parts.join(", "));
                        }
                        Value::Array(a) if a.iter().all(is_flat) => {
                            let parts: Vec<String> = a.iter().map(scalar_text).collect();
                            let _ = writeln!(out, "{pad}{k}: [{}]", parts.join(", "));
                        }
                        x if is_flat(x) => {
                            let _ = writeln!(out, "{pad}{k}: {}", scalar_text(x));
                        }
                        x => {
                            let _ = writeln!(out, "{pad}{k}:");
                            go(out, x, indent + 1);
                        }
                    }
                }
            }
            Value::Array(a) => {
                for x in a {
                    if is_flat(x) {
                        let _ = writeln!(out, "{pad}- {}", scalar_text(x));
                    } else {
                        let _ = writeln!(out, "{pad}-");
                        go(out, x, indent + 1);
                    }
                }
            }
            x => {
                let _ = writeln!(out, "{pad}{}", scalar_text(x));
            }
        }
    }
    let mut out = String::new();
    go(&mut out, v, 0);
    out
}

/// `path,value` rows, one per leaf; paths join keys and array indices with dots.
pub fn render_csv(v: &Value) -> String {
    fn quote(s: &str) -> String {
        if s.contains([',', '"', '\n']) {
            format!("\"{}\"", s.replace('"', "\"\""))
        } else {
            s.to_string()
        }
    }
    fn go(out: &mut String, path: &str, v: &Value) {
        let join = |k: &str| {
            if path.is_empty() {
                k.to_string()
            } else {
                format!("{path}.{k}")
            }
        };
        match v {
            Value::Object(m) => m.iter().for_each(|(k, x)| go(out, &join(k), x)),
            Value::Array(a) => a
                .iter()
                .enumerate()
                .for_each(|(i, x)| go(out, &join(&i.to_string()), x)),
            x => {
                let _ = writeln!(out, "{},{}", quote(path), quote(&scalar_text(x)));
            }
        }
    }
    let mut out = String::from("path,value\n");
    go(&mut out, "", v);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    #[test]
    fn views_share_one_value() {
        let mut r = Report::new("series", 7, Backend::Exact);
        let h = CohomologyDims(BTreeMap::from([(1, 1), (2, 0), (10, 3)]));
        r.insert("H", dims_json(&h));
        r.insert("verdicts", vec!["kox: pass (ratio 1/2)"]);
        let json = r.render(Format::Json);
        assert!(json.starts_with("{\n  \"schema\": \"swcohom/1\""));
        assert!(json.find("\"2\"").unwrap() < json.find("\"10\"").unwrap());
        let csv = r.render(Format::Csv);
        assert!(csv.contains("H.10,3\n"));
        let pretty = r.render(Format::Pretty);
        assert!(pretty.contains("H: {1: 1, 2: 0, 10: 3}"));
        assert!(pretty.contains("kox: pass (ratio 1/2)"));
        assert_eq!(json, r.render(Format::Json));
    }
}
