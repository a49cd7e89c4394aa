//! Graph serialization.
//!
//! JSON: `{"vertices": ["a", ...], "edges": [["a", "b"], ...]}`; vertex
//! identifiers may be strings or integers.
//!
//! Text: one item per line, `v <name>` or `e <u> <v>`; `#` starts a comment.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::DiGraph;
use crate::error::{Error, Result};

/// How repeated input edges are treated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum EdgePolicy {
    #[default]
    Strict,
    Lenient,
}

/// Serialized form of a graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub vertices: Vec<String>,
    pub edges: Vec<[String; 2]>,
}

impl From<&DiGraph> for GraphJson {
    fn from(g: &DiGraph) -> Self {
        GraphJson {
            vertices: g.labels().to_vec(),
            edges: g
                .edges()
                .map(|(u, v)| [g.label(u).to_string(), g.label(v).to_string()])
                .collect(),
        }
    }
}

impl DiGraph {
    pub fn to_json_value(&self) -> Value {
        serde_json::to_value(GraphJson::from(self)).expect("plain data")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&GraphJson::from(self)).expect("plain data")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for l in self.labels() {
            s.push_str(&format!("v {l}\n"));
        }
        for (u, v) in self.edges() {
            s.push_str(&format!("e {} {}\n", self.label(u), self.label(v)));
        }
        s
    }
}

fn vertex_id(v: &Value, ctx: &str) -> Result<String> {
    match v {
        Value::String(s) => Ok(s.clone()),
        Value::Number(n) if n.is_i64() || n.is_u64() => Ok(n.to_string()),
        other => Err(Error::Input(format!(
            "{ctx}: vertex must be a string or integer, got {other}"
        ))),
    }
}

/// Parses the JSON graph format.
pub fn parse_json(input: &str, policy: EdgePolicy) -> Result<DiGraph> {
    let root: Value = serde_json::from_str(input)
        .map_err(|e| Error::Input(format!("invalid JSON at line {}: {e}", e.line())))?;
    let obj = root
        .as_object()
        .ok_or_else(|| Error::Input("graph must be a JSON object".into()))?;
    if let Some(k) = obj.keys().find(|k| *k != "vertices" && *k != "edges") {
        return Err(Error::Input(format!("unknown field `{k}`")));
    }
    let vs = obj
        .get("vertices")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Input("field `vertices` must be an array".into()))?;
    let vertices = vs
        .iter()
        .enumerate()
        .map(|(i, v)| vertex_id(v, &format!("vertices[{i}]")))
        .collect::<Result<Vec<_>>>()?;
    let es = match obj.get("edges") {
        None => Vec::new(),
        Some(Value::Array(a)) => a.clone(),
        Some(_) => return Err(Error::Input("field `edges` must be an array".into())),
    };
    let mut edges = Vec::with_capacity(es.len());
    for (i, e) in es.iter().enumerate() {
        let pair = e
            .as_array()
            .filter(|p| p.len() == 2)
            .ok_or_else(|| Error::Input(format!("edges[{i}]: expected a pair [u, v]")))?;
        edges.push((
            vertex_id(&pair[0], &format!("edges[{i}][0]"))?,
            vertex_id(&pair[1], &format!("edges[{i}][1]"))?,
        ));
    }
    DiGraph::from_labels(&vertices, &edges, policy).map_err(|e| match e {
        Error::UnknownVertex(v) => Error::Input(format!("edge endpoint `{v}` is not listed in `vertices`")),
        other => other,
    })
}

/// Parses the line-oriented text format.
pub fn parse_text(input: &str, policy: EdgePolicy) -> Result<DiGraph> {
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    let mut declared = std::collections::HashSet::new();
    for (lineno, raw) in input.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        let at = |msg: &str| Error::Input(format!("line {}: {msg}", lineno + 1));
        match toks.as_slice() {
            ["v", name] => {
                if !declared.insert(name.to_string()) {
                    return Err(at(&format!("duplicate vertex `{name}`")));
                }
                vertices.push(name.to_string());
            }
            ["e", u, v] => {
                for w in [u, v] {
                    if !declared.contains(*w) {
                        return Err(at(&format!("edge endpoint `{w}` is not declared")));
                    }
                }
                edges.push((u.to_string(), v.to_string()));
            }
            _ => return Err(at(&format!("expected `v <name>` or `e <u> <v>`, got `{line}`"))),
        }
    }
    DiGraph::from_labels(&vertices, &edges, policy)
}

/// Parses either format, choosing JSON when the first non-blank character
/// is `{`.
pub fn parse_graph(input: &str, policy: EdgePolicy) -> Result<DiGraph> {
    if input.trim_start().starts_with('{') {
        parse_json(input, policy)
    } else {
        parse_text(input, policy)
    }
}

/// Parses a vertex assignment `{"map": {"<from>": "<to>", ...}}`.
pub fn parse_map_json(input: &str) -> Result<std::collections::HashMap<String, String>> {
    let root: Value = serde_json::from_str(input)
        .map_err(|e| Error::Input(format!("invalid JSON at line {}: {e}", e.line())))?;
    let obj = root
        .as_object()
        .ok_or_else(|| Error::Input("map must be a JSON object".into()))?;
    if let Some(k) = obj.keys().find(|k| *k != "map") {
        return Err(Error::Input(format!("unknown field `{k}`")));
    }
    let entries = obj
        .get("map")
        .and_then(Value::as_object)
        .ok_or_else(|| Error::Input("field `map` must be an object".into()))?;
    entries
        .iter()
        .map(|(k, v)| Ok((k.clone(), vertex_id(v, &format!("map.{k}"))?)))
        .collect()
}
