//! Text rendering of reports: `key: value` lines, dotted keys for nested
//! objects, aligned tables for lists of records. `null` prints as `none`.

use serde_json::Value;

pub fn text(report: &Value) -> String {
    let mut out = String::new();
    if let Value::Object(map) = report {
        for (key, value) in map {
            field(&mut out, key, value);
        }
    }
    out
}

fn field(out: &mut String, key: &str, value: &Value) {
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                field(out, &format!("{key}.{k}"), v);
            }
        }
        Value::Array(items) if !items.is_empty() && items.iter().all(Value::is_object) => {
            out.push_str(key);
            out.push_str(":\n");
            table(out, items);
        }
        Value::String(s) if s.contains('\n') => {
            out.push_str(key);
            out.push_str(":\n");
            out.push_str(s);
            if !s.ends_with('\n') {
                out.push('\n');
            }
        }
        other => {
            out.push_str(key);
            out.push_str(": ");
            out.push_str(&scalar(other));
            out.push('\n');
        }
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::Null => "none".into(),
        Value::String(s) => s.clone(),
        Value::Array(items) if items.is_empty() => "[]".into(),
        Value::Array(items) => items
            .iter()
            .map(|i| match i {
                Value::Array(inner) => inner.iter().map(scalar).collect::<Vec<_>>().join(","),
                other => scalar(other),
            })
            .collect::<Vec<_>>()
            .join(" "),
        other => other.to_string(),
    }
}

fn table(out: &mut String, rows: &[Value]) {
    let Some(Value::Object(first)) = rows.first() else {
        return;
    };
    let headers: Vec<&String> = first.keys().collect();
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|row| headers.iter().map(|h| scalar(row.get(h.as_str()).unwrap_or(&Value::Null))).collect())
        .collect();
    let widths: Vec<usize> = headers
        .iter()
        .enumerate()
        .map(|(i, h)| cells.iter().map(|r| r[i].len()).chain([h.len()]).max().unwrap_or(0))
        .collect();
    let line = |items: Vec<&str>| -> String {
        let padded: Vec<String> = items
            .iter()
            .zip(&widths)
            .map(|(s, &w)| format!("{s:<w$}"))
            .collect();
        format!("  {}\n", padded.join("  ").trim_end())
    };
    out.push_str(&line(headers.iter().map(|h| h.as_str()).collect()));
    for row in &cells {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
    }
}
