//! Ordered key/value reports rendered either as `key: value` text or as a
//! JSON object with the same keys.

use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Default)]
pub struct Report {
    fields: Map<String, Value>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        let mut r = Report::default();
        r.set("command", command);
        r
    }

    pub fn set(&mut self, key: &str, value: impl Into<Value>) {
        self.fields.insert(key.to_owned(), value.into());
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.fields.get(key)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.fields).expect("plain JSON values");
                s.push('\n');
                s
            }
            Format::Text => {
                let mut out = String::new();
                for (k, v) in &self.fields {
                    match v {
                        Value::Array(items) if !items.is_empty() => {
                            out.push_str(k);
                            out.push_str(":\n");
                            for item in items {
                                out.push_str("  ");
                                out.push_str(&inline(item));
                                out.push('\n');
                            }
                        }
                        _ => {
                            out.push_str(k);
                            out.push_str(": ");
                            out.push_str(&inline(v));
                            out.push('\n');
                        }
                    }
                }
                out
            }
        }
    }
}

/// Strings bare, objects as `key=value` pairs, everything else as JSON.
fn inline(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Object(m) => m
            .iter()
            .map(|(k, v)| format!("{k}={}", inline(v)))
            .collect::<Vec<_>>()
            .join(" "),
        Value::Array(items) if items.iter().all(Value::is_string) => {
            let parts: Vec<&str> = items.iter().filter_map(Value::as_str).collect();
            format!("[{}]", parts.join(" "))
        }
        other => other.to_string(),
    }
}
