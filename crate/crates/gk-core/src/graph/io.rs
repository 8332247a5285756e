//! JSON and DOT encodings of prime graphs.

use serde::{Deserialize, Serialize};

use super::{PrimeGraph, Vertex};
use crate::error::{Error, Result};

#[derive(Serialize, Deserialize)]
struct GraphJson {
    edges: Vec<[String; 2]>,
    vertices: Vec<String>,
}

impl Serialize for PrimeGraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GraphJson {
            edges: self
                .edges
                .iter()
                .map(|(a, b)| [a.to_string(), b.to_string()])
                .collect(),
            vertices: self.vertices.iter().map(Vertex::to_string).collect(),
        }
        .serialize(s)
    }
}

impl PrimeGraph {
    /// Pretty-printed JSON with vertices and edge pairs in ascending order,
    /// terminated by a newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("graph JSON serializes");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let doc: GraphJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        let vertices = doc
            .vertices
            .iter()
            .map(|v| v.parse())
            .collect::<Result<Vec<Vertex>>>()?;
        let edges = doc
            .edges
            .iter()
            .map(|[a, b]| Ok((a.parse()?, b.parse()?)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(vertices, edges)
    }

    /// Graphviz source: one quoted node per line, then one edge per line.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph gk {\n");
        for v in &self.vertices {
            s.push_str(&format!("  \"{v}\";\n"));
        }
        for (a, b) in &self.edges {
            s.push_str(&format!("  \"{a}\" -- \"{b}\";\n"));
        }
        s.push_str("}\n");
        s
    }

    /// Parses the subset of DOT written by [`PrimeGraph::to_dot`].
    pub fn from_dot(s: &str) -> Result<Self> {
        let bad = |line: &str| Error::Parse(format!("unexpected DOT line {line:?}"));
        let mut lines = s.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty DOT input".into()))?;
        if !(header.starts_with("graph ") && header.ends_with('{')) {
            return Err(bad(header));
        }
        let unquote = |t: &str| -> Result<Vertex> {
            t.trim()
                .strip_prefix('"')
                .and_then(|t| t.strip_suffix('"'))
                .ok_or_else(|| bad(t))?
                .parse()
        };
        let (mut vertices, mut edges) = (Vec::new(), Vec::new());
        let mut closed = false;
        for line in lines {
            if closed {
                return Err(bad(line));
            }
            if line == "}" {
                closed = true;
                continue;
            }
            let body = line.strip_suffix(';').ok_or_else(|| bad(line))?;
            match body.split_once("--") {
                Some((a, b)) => edges.push((unquote(a)?, unquote(b)?)),
                None => vertices.push(unquote(body)?),
            }
        }
        if !closed {
            return Err(Error::Parse("missing closing brace".into()));
        }
        Self::new(vertices, edges)
    }
}
