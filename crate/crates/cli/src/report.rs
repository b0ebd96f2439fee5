//! Reports are one JSON tree; the text format is a line-oriented rendering
//! of the same tree.

use serde_json::{json, Map, Value};

use t0kit::caps::Caps;

pub const SCHEMA_VERSION: u64 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// Fields are kept in insertion order.
pub struct Report {
    root: Map<String, Value>,
}

impl Report {
    pub fn new(command: &str, caps: &Caps) -> Report {
        let mut root = Map::new();
        root.insert("report".into(), json!(SCHEMA_VERSION));
        root.insert("command".into(), json!(command));
        root.insert(
            "caps".into(),
            json!({
                "carrier": caps.carrier,
                "product": caps.product,
                "owf_opens": caps.owf_opens,
                "maps": caps.maps,
            }),
        );
        Report { root }
    }

    pub fn set(&mut self, key: &str, value: impl Into<Value>) {
        self.root.insert(key.to_string(), value.into());
    }

    pub fn render(&self, format: Format) -> String {
        let tree = Value::Object(self.root.clone());
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&tree).expect("report trees serialize");
                s.push('\n');
                s
            }
            Format::Text => render_text(&tree),
        }
    }
}

fn is_atom(v: &Value) -> bool {
    match v {
        Value::Bool(_) | Value::Number(_) => true,
        Value::String(s) => !s.contains('\n'),
        _ => false,
    }
}

/// One-line rendering, if the value has one.
fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("none".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) if !s.contains('\n') => Some(s.clone()),
        Value::Array(items) if items.iter().all(is_atom) => {
            let parts: Vec<String> = items.iter().map(|i| scalar(i).unwrap()).collect();
            Some(format!("[{}]", parts.join(", ")))
        }
        Value::Object(m) if m.is_empty() => Some("{}".into()),
        _ => None,
    }
}

fn push_entry(out: &mut String, indent: usize, key: &str, v: &Value) {
    let pad = " ".repeat(indent);
    if let Some(s) = scalar(v) {
        out.push_str(&format!("{pad}{key}: {s}\n"));
        return;
    }
    match v {
        Value::String(s) => {
            out.push_str(&format!("{pad}{key}: |\n"));
            for line in s.lines() {
                out.push_str(&format!("{pad}  {line}\n"));
            }
        }
        Value::Object(m) => {
            out.push_str(&format!("{pad}{key}:\n"));
            push_object(out, indent + 2, m);
        }
        Value::Array(items) => {
            out.push_str(&format!("{pad}{key}:\n"));
            for item in items {
                push_item(out, indent + 2, item);
            }
        }
        _ => unreachable!("scalars handled above"),
    }
}

fn push_object(out: &mut String, indent: usize, m: &Map<String, Value>) {
    for (k, v) in m {
        push_entry(out, indent, k, v);
    }
}

/// `- ` list items; an object item puts its fields at `indent + 2`.
fn push_item(out: &mut String, indent: usize, item: &Value) {
    let pad = " ".repeat(indent);
    match item {
        Value::Object(m) if !m.is_empty() => {
            let mut block = String::new();
            push_object(&mut block, indent + 2, m);
            // the first field shares the dash line
            let body = &block[indent + 2..];
            out.push_str(&format!("{pad}- {body}"));
        }
        Value::Array(items) if scalar(item).is_none() => {
            out.push_str(&format!("{pad}-\n"));
            for i in items {
                push_item(out, indent + 2, i);
            }
        }
        other => match scalar(other) {
            Some(s) => out.push_str(&format!("{pad}- {s}\n")),
            None => {
                out.push_str(&format!("{pad}- |\n"));
                for line in other.as_str().unwrap_or_default().lines() {
                    out.push_str(&format!("{pad}    {line}\n"));
                }
            }
        },
    }
}

pub fn render_text(tree: &Value) -> String {
    let mut out = String::new();
    match tree {
        Value::Object(m) => push_object(&mut out, 0, m),
        other => push_item(&mut out, 0, other),
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_layout() {
        let tree = json!({
            "a": 1,
            "b": [1, 2],
            "c": {"d": "x", "e": null},
            "f": [{"g": true, "h": []}, {"g": false, "h": [{"i": 3}]}],
            "doc": "line one\nline two\n",
        });
        let expected = "\
a: 1
b: [1, 2]
c:
  d: x
  e: none
f:
  - g: true
    h: []
  - g: false
    h:
      - i: 3
doc: |
  line one
  line two
";
        assert_eq!(render_text(&tree), expected);
    }

    #[test]
    fn caps_are_echoed() {
        let r = Report::new("check", &Caps::default());
        let text = r.render(Format::Text);
        assert!(
            text.contains("caps:\n  carrier: 16\n  product: 4096\n  owf_opens: 12\n  maps: 1000000\n"),
            "{text}"
        );
    }
}
