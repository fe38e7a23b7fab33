//! Plain-text rendering of a result object: one `key: value` line per field,
//! nested objects flattened with dotted keys, and matrices one row per line.

use serde_json::{Map, Value};

pub fn text_lines(fields: &Map<String, Value>) -> Vec<String> {
    let mut lines = Vec::new();
    push_fields(&mut lines, "", fields);
    lines
}

fn push_fields(lines: &mut Vec<String>, prefix: &str, fields: &Map<String, Value>) {
    for (key, value) in fields {
        let key = format!("{prefix}{key}");
        match value {
            Value::Object(inner) => push_fields(lines, &format!("{key}."), inner),
            Value::Array(items) if items.iter().any(Value::is_array) => {
                lines.push(format!("{key}:"));
                for item in items {
                    lines.push(format!("  {}", inline(item)));
                }
            }
            other => lines.push(format!("{key}: {}", inline(other))),
        }
    }
}

fn inline(value: &Value) -> String {
    match value {
        Value::String(s) => s.clone(),
        Value::Null => "none".to_owned(),
        Value::Array(items) if items.is_empty() => "none".to_owned(),
        Value::Array(items) => items.iter().map(inline).collect::<Vec<_>>().join("  "),
        other => other.to_string(),
    }
}
