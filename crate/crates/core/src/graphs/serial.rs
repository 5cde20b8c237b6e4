//! DOT and JSON forms of a weighted dual graph.
//!
//! JSON schema (keys sorted, numbers exact):
//! `{"arrows":[id..], "edges":[[i,j]..], "schema":"lattice-cf/1",
//!   "vertices":[{"genus":g, "id":i, "label":text|null, "weight":w}..]}`.

use std::fmt::Write as _;

use num_bigint::BigInt;
use serde_json::{json, Value};

use super::WeightedDualGraph;
use crate::error::{Error, Result};

pub const JSON_SCHEMA: &str = "lattice-cf/1";

/// Exact JSON number for a big integer.
pub(crate) fn json_int(n: &BigInt) -> Value {
    serde_json::from_str(&n.to_string()).expect("integers are valid JSON numbers")
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Graphviz text. Vertices appear in id order as `v<id>`, arrows as
/// arrow-shaped terminal nodes `a<k>`.
pub fn to_dot(g: &WeightedDualGraph) -> String {
    let g = g.normalized();
    let mut out = String::from("graph dual {\n  node [shape=circle];\n");
    for (i, v) in g.vertices().iter().enumerate() {
        let text = match &v.label {
            Some(l) => format!("{}\\n{}", dot_escape(l), v.weight),
            None => v.weight.to_string(),
        };
        let _ = writeln!(
            out,
            "  v{i} [label=\"{text}\", weight=\"{}\", genus=\"{}\"];",
            v.weight, v.genus
        );
    }
    for (k, a) in g.arrows().iter().enumerate() {
        let _ = writeln!(out, "  a{k} [shape=rarrow, label=\"\"];");
        let _ = writeln!(out, "  v{a} -- a{k};");
    }
    for (a, b) in g.edges() {
        let _ = writeln!(out, "  v{a} -- v{b};");
    }
    out.push_str("}\n");
    out
}

pub fn to_json(g: &WeightedDualGraph) -> String {
    let g = g.normalized();
    let vertices: Vec<Value> = g
        .vertices()
        .iter()
        .enumerate()
        .map(|(i, v)| {
            json!({
                "id": i,
                "genus": v.genus,
                "weight": json_int(&v.weight),
                "label": v.label,
            })
        })
        .collect();
    let edges: Vec<Value> = g.edges().iter().map(|(a, b)| json!([a, b])).collect();
    let value = json!({
        "schema": JSON_SCHEMA,
        "vertices": vertices,
        "edges": edges,
        "arrows": g.arrows(),
    });
    let mut text = serde_json::to_string_pretty(&value).expect("serializable");
    text.push('\n');
    text
}

fn bad(msg: impl Into<String>) -> Error {
    Error::Json(msg.into())
}

fn as_index(v: &Value, what: &str) -> Result<usize> {
    v.as_u64()
        .and_then(|n| usize::try_from(n).ok())
        .ok_or_else(|| bad(format!("{what} must be a nonnegative integer")))
}

pub fn from_json(text: &str) -> Result<WeightedDualGraph> {
    let value: Value = serde_json::from_str(text).map_err(|e| bad(e.to_string()))?;
    if value.get("schema").and_then(Value::as_str) != Some(JSON_SCHEMA) {
        return Err(bad(format!("expected schema {JSON_SCHEMA}")));
    }
    let field = |name: &str| {
        value
            .get(name)
            .and_then(Value::as_array)
            .ok_or_else(|| bad(format!("missing array {name}")))
    };
    let mut g = WeightedDualGraph::new();
    for (i, v) in field("vertices")?.iter().enumerate() {
        if as_index(&v["id"], "vertex id")? != i {
            return Err(bad("vertex ids must be 0, 1, 2, ... in order"));
        }
        let genus = v["genus"].as_u64().ok_or_else(|| bad("genus must be a nonnegative integer"))?;
        let weight = match &v["weight"] {
            Value::Number(n) => n.to_string().parse::<BigInt>().map_err(|_| bad("weight must be an integer"))?,
            _ => return Err(bad("weight must be an integer")),
        };
        let label = match &v["label"] {
            Value::Null => None,
            Value::String(s) => Some(s.clone()),
            _ => return Err(bad("label must be a string or null")),
        };
        g.add_vertex(weight, genus, label).map_err(|e| bad(e.to_string()))?;
    }
    for e in field("edges")? {
        let pair = e.as_array().filter(|p| p.len() == 2).ok_or_else(|| bad("edges are pairs"))?;
        let (a, b) = (as_index(&pair[0], "edge end")?, as_index(&pair[1], "edge end")?);
        g.add_edge(a, b).map_err(|e| bad(e.to_string()))?;
    }
    for a in field("arrows")? {
        g.add_arrow(as_index(a, "arrow")?).map_err(|e| bad(e.to_string()))?;
    }
    Ok(g.normalized())
}
