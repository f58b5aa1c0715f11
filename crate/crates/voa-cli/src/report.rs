//! Report container and deterministic rendering.
//!
//! JSON output is byte-deterministic: `serde_json`'s default map is ordered
//! by key, every rational is rendered as a canonical string, and the
//! `timing_ms` field is always serialized as `0` so that identical inputs
//! produce identical bytes.  Wall-clock timing goes to stderr instead.

use serde_json::{json, Value};

pub struct Report {
    pub command: &'static str,
    pub l: usize,
    /// "pass", "fail", or "error".
    pub status: &'static str,
    pub payload: Value,
}

impl Report {
    pub fn to_json(&self) -> String {
        let doc = json!({
            "command": self.command,
            "l": self.l,
            "status": self.status,
            "timing_ms": 0,
            "payload": self.payload,
        });
        let mut s = serde_json::to_string_pretty(&doc).expect("serializable report");
        s.push('\n');
        s
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("# voa {} (l = {})\n\n", self.command, self.l));
        out.push_str(&format!("status: **{}**\n\n", self.status));
        render_value(&self.payload, 0, &mut out);
        out
    }
}

/// Renders a JSON value as nested Markdown bullets, preserving key order.
fn render_value(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, val) in map {
                match val {
                    Value::Object(_) | Value::Array(_) => {
                        out.push_str(&format!("{pad}- {k}:\n"));
                        render_value(val, indent + 1, out);
                    }
                    _ => out.push_str(&format!("{pad}- {k}: {}\n", scalar(val))),
                }
            }
        }
        Value::Array(items) => {
            for (t, val) in items.iter().enumerate() {
                match val {
                    Value::Object(_) | Value::Array(_) => {
                        out.push_str(&format!("{pad}- [{t}]\n"));
                        render_value(val, indent + 1, out);
                    }
                    _ => out.push_str(&format!("{pad}- {}\n", scalar(val))),
                }
            }
        }
        _ => out.push_str(&format!("{pad}- {}\n", scalar(v))),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
