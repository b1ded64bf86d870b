//! Graph JSON v1 and DOT.
//!
//! Writers sort vertices and edges, so output is byte-stable for equal
//! graphs. Readers reject loops, dangling endpoints, and colour maps that do
//! not match the edge set, naming the offending element.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Color, ColoredGraph, MultiGraph, VertexId};

pub const GRAPH_FORMAT: &str = "fareyforge-graph-v1";

/// Serialized shape of a graph document; also embedded in other documents.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphJson {
    pub format: String,
    pub vertices: Vec<String>,
    pub edges: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub colors: Option<BTreeMap<String, Color>>,
}

/// A decoded graph document.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphValue {
    Plain(MultiGraph),
    Colored(ColoredGraph),
}

impl GraphValue {
    pub fn graph(&self) -> &MultiGraph {
        match self {
            GraphValue::Plain(g) => g,
            GraphValue::Colored(c) => c.graph(),
        }
    }

    pub fn into_graph(self) -> MultiGraph {
        match self {
            GraphValue::Plain(g) => g,
            GraphValue::Colored(c) => c.into_graph(),
        }
    }
}

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

impl GraphJson {
    pub fn from_graph(g: &MultiGraph) -> Self {
        let mut edges = Vec::new();
        for (u, v, m) in g.edges() {
            for _ in 0..m {
                edges.push(vec![u.to_string(), v.to_string()]);
            }
        }
        GraphJson {
            format: GRAPH_FORMAT.to_string(),
            vertices: g.vertices().map(|v| v.to_string()).collect(),
            edges,
            colors: None,
        }
    }

    pub fn from_colored(c: &ColoredGraph) -> Self {
        let mut doc = GraphJson::from_graph(c.graph());
        doc.colors = Some(c.colors().iter().map(|((u, v), col)| (format!("{u}|{v}"), *col)).collect());
        doc
    }

    pub fn decode(&self) -> Result<GraphValue> {
        if self.format != GRAPH_FORMAT {
            return Err(parse_err(format!("format: expected {GRAPH_FORMAT:?}, found {:?}", self.format)));
        }
        let mut g = MultiGraph::new();
        for (i, v) in self.vertices.iter().enumerate() {
            if v.is_empty() {
                return Err(parse_err(format!("vertices[{i}]: empty token")));
            }
            if g.contains(&VertexId::from(v.as_str())) {
                return Err(parse_err(format!("vertices[{i}]: duplicate vertex {v:?}")));
            }
            g.add_vertex(v.as_str());
        }
        for (i, e) in self.edges.iter().enumerate() {
            let [a, b] = e.as_slice() else {
                return Err(parse_err(format!("edges[{i}]: expected 2 endpoints, found {}", e.len())));
            };
            if a == b {
                return Err(parse_err(format!("edges[{i}]: loop on {a:?}")));
            }
            for x in [a, b] {
                if !g.contains(&VertexId::from(x.as_str())) {
                    return Err(parse_err(format!("edges[{i}]: dangling endpoint {x:?}")));
                }
            }
            g.add_edge(a.as_str(), b.as_str()).map_err(|e| parse_err(format!("edges[{i}]: {e}")))?;
        }
        let Some(colors) = &self.colors else {
            return Ok(GraphValue::Plain(g));
        };
        if !g.is_simple() {
            return Err(parse_err("colors: only legal when no edge repeats"));
        }
        let mut map = BTreeMap::new();
        for (key, col) in colors {
            let (a, b) = key.split_once('|').ok_or_else(|| parse_err(format!("colors[{key:?}]: key is not min|max")))?;
            let (a, b) = (VertexId::from(a), VertexId::from(b));
            if a >= b || !g.has_edge(&a, &b) {
                return Err(parse_err(format!("colors[{key:?}]: not an edge in min|max form")));
            }
            map.insert((a, b), *col);
        }
        ColoredGraph::new(g, map).map(GraphValue::Colored).map_err(|e| parse_err(format!("colors: {e}")))
    }
}

/// Decodes a graph document.
pub fn read_graph(bytes: &[u8]) -> Result<GraphValue> {
    let doc: GraphJson = serde_json::from_slice(bytes).map_err(|e| parse_err(format!("malformed graph document: {e}")))?;
    doc.decode()
}

fn to_pretty<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}

pub fn write_graph(g: &MultiGraph) -> String {
    to_pretty(&GraphJson::from_graph(g))
}

pub fn write_colored(c: &ColoredGraph) -> String {
    to_pretty(&GraphJson::from_colored(c))
}

/// Serializes any document with the same layout as the graph writers.
pub fn write_document<T: Serialize>(doc: &T) -> String {
    to_pretty(doc)
}

fn dot_id(v: &VertexId) -> String {
    format!("\"{}\"", v.as_str().replace('\\', "\\\\").replace('"', "\\\""))
}

/// Undirected DOT; blue edges carry `color=blue`.
pub fn to_dot(g: &MultiGraph, colors: Option<&BTreeMap<(VertexId, VertexId), Color>>) -> String {
    let mut out = String::from("graph G {\n");
    for v in g.vertices() {
        let _ = writeln!(out, "  {};", dot_id(v));
    }
    for (u, v, m) in g.edges() {
        let blue = colors.and_then(|c| c.get(&(u.clone(), v.clone()))) == Some(&Color::Blue);
        for _ in 0..m {
            let attr = if blue { " [color=blue]" } else { "" };
            let _ = writeln!(out, "  {} -- {}{attr};", dot_id(u), dot_id(v));
        }
    }
    out.push_str("}\n");
    out
}

pub fn value_to_dot(value: &GraphValue) -> String {
    match value {
        GraphValue::Plain(g) => to_dot(g, None),
        GraphValue::Colored(c) => to_dot(c.graph(), Some(c.colors())),
    }
}
