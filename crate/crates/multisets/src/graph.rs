//! Canonical labeled multigraphs.
//!
//! The theorem checks in this crate come down to comparing labeled multigraphs
//! for equality, so graphs are stored in a canonical form: vertex keys sorted
//! lexicographically, each undirected edge with its endpoints in sorted key
//! order, and the edge list sorted by endpoint pair and label. Two graphs built
//! from the same data through any construction order compare equal with `==`
//! and serialize to identical bytes.

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use crate::{Error, Result};

/// Edge labels that know how to render themselves in DOT and JSON exports.
pub trait GraphLabel: Clone + Ord + fmt::Display {
    /// DOT color attribute value.
    fn dot_color(&self) -> &'static str;
    /// Structured JSON form of the label.
    fn json_value(&self) -> Value;
}

/// Which of the group's two regular actions an edge comes from, or which merge
/// direction produced a shared face.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Side {
    Left,
    Right,
    Row,
    Col,
}

impl Side {
    pub fn as_str(&self) -> &'static str {
        match self {
            Side::Left => "L",
            Side::Right => "R",
            Side::Row => "Row",
            Side::Col => "Col",
        }
    }
}

/// Label on a Cayley-graph or dual-graph edge: the acting side plus the index
/// of the adjacent transposition (or merge position).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct EdgeTag {
    pub side: Side,
    pub index: usize,
}

impl EdgeTag {
    pub fn new(side: Side, index: usize) -> Self {
        EdgeTag { side, index }
    }
}

impl fmt::Display for EdgeTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.side.as_str(), self.index)
    }
}

impl GraphLabel for EdgeTag {
    fn dot_color(&self) -> &'static str {
        // Horizontal-factor edges are blue, vertical-factor edges are red.
        match self.side {
            Side::Left | Side::Row => "blue",
            Side::Right | Side::Col => "red",
        }
    }

    fn json_value(&self) -> Value {
        json!({ "side": self.side.as_str(), "index": self.index })
    }
}

/// Spine edge colors. An edge moving mass within the right column of a 2x2
/// vertex label fixes the left column and is blue; fixing the right column is
/// cyan; fixing the bottom row is red; fixing the top row is orange. Edges of
/// lower-dimensional spines that move mass on both sides at once are mixed.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Color {
    Blue,
    Cyan,
    Red,
    Orange,
    Mixed,
}

impl Color {
    pub fn as_str(&self) -> &'static str {
        match self {
            Color::Blue => "blue",
            Color::Cyan => "cyan",
            Color::Red => "red",
            Color::Orange => "orange",
            Color::Mixed => "mixed",
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl GraphLabel for Color {
    fn dot_color(&self) -> &'static str {
        match self {
            Color::Mixed => "gray",
            other => other.as_str(),
        }
    }

    fn json_value(&self) -> Value {
        json!({ "color": self.as_str() })
    }
}

/// An undirected multigraph with string vertex keys and labeled, possibly
/// parallel edges, held in canonical order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LabeledMultigraph<L> {
    vertices: Vec<String>,
    /// (u, v, label) with u <= v as indices into `vertices`.
    edges: Vec<(usize, usize, L)>,
}

impl<L: GraphLabel> LabeledMultigraph<L> {
    /// Builds a graph from vertex keys and keyed edges. Rejects edges whose
    /// endpoints are not listed and duplicate vertex keys.
    pub fn new(vertices: Vec<String>, edges: Vec<(String, String, L)>) -> Result<Self> {
        let mut vertices = vertices;
        vertices.sort();
        if vertices.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::DuplicateVertex);
        }
        let index: BTreeMap<&str, usize> = vertices
            .iter()
            .enumerate()
            .map(|(i, key)| (key.as_str(), i))
            .collect();
        let mut indexed = Vec::with_capacity(edges.len());
        for (a, b, label) in &edges {
            let ia = *index
                .get(a.as_str())
                .ok_or_else(|| Error::UnknownVertex(a.clone()))?;
            let ib = *index
                .get(b.as_str())
                .ok_or_else(|| Error::UnknownVertex(b.clone()))?;
            let (u, v) = if ia <= ib { (ia, ib) } else { (ib, ia) };
            indexed.push((u, v, label.clone()));
        }
        indexed.sort();
        Ok(LabeledMultigraph {
            vertices,
            edges: indexed,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> impl Iterator<Item = (&str, &str, &L)> {
        self.edges
            .iter()
            .map(|(u, v, l)| (self.vertices[*u].as_str(), self.vertices[*v].as_str(), l))
    }

    /// Degree counting parallel edges; loops would count twice, but no
    /// construction in this crate produces loops.
    pub fn degree(&self, key: &str) -> usize {
        let Some(idx) = self.vertices.binary_search_by(|v| v.as_str().cmp(key)).ok() else {
            return 0;
        };
        self.edges
            .iter()
            .map(|(u, v, _)| usize::from(*u == idx) + usize::from(*v == idx))
            .sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut degs = vec![0; self.vertices.len()];
        for (u, v, _) in &self.edges {
            degs[*u] += 1;
            degs[*v] += 1;
        }
        degs
    }

    pub fn contains_edge(&self, a: &str, b: &str, label: &L) -> bool {
        self.edges()
            .any(|(u, v, l)| l == label && ((u == a && v == b) || (u == b && v == a)))
    }

    pub fn is_connected(&self) -> bool {
        if self.vertices.is_empty() {
            return true;
        }
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for (u, v, _) in &self.edges {
            adj[*u].push(*v);
            adj[*v].push(*u);
        }
        let mut seen = vec![false; self.vertices.len()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(at) = stack.pop() {
            for &next in &adj[at] {
                if !seen[next] {
                    seen[next] = true;
                    stack.push(next);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Rebuilds the graph with every label passed through `f`.
    pub fn map_labels<M: GraphLabel>(&self, f: impl Fn(&L) -> M) -> LabeledMultigraph<M> {
        let mut edges: Vec<(usize, usize, M)> =
            self.edges.iter().map(|(u, v, l)| (*u, *v, f(l))).collect();
        edges.sort();
        LabeledMultigraph {
            vertices: self.vertices.clone(),
            edges,
        }
    }

    /// Describes the first place two canonical graphs differ, if any.
    pub fn first_difference(&self, other: &Self) -> Option<String> {
        if self.vertices != other.vertices {
            for (a, b) in self.vertices.iter().zip(&other.vertices) {
                if a != b {
                    return Some(format!("vertex lists differ: {a:?} vs {b:?}"));
                }
            }
            return Some(format!(
                "vertex counts differ: {} vs {}",
                self.vertices.len(),
                other.vertices.len()
            ));
        }
        for ((u1, v1, l1), (u2, v2, l2)) in self.edges.iter().zip(&other.edges) {
            if (u1, v1) != (u2, v2) || l1 != l2 {
                return Some(format!(
                    "edges differ: {} -- {} [{}] vs {} -- {} [{}]",
                    self.vertices[*u1],
                    self.vertices[*v1],
                    l1,
                    other.vertices[*u2],
                    other.vertices[*v2],
                    l2
                ));
            }
        }
        if self.edges.len() != other.edges.len() {
            return Some(format!(
                "edge counts differ: {} vs {}",
                self.edges.len(),
                other.edges.len()
            ));
        }
        None
    }

    /// DOT export; parallel edges appear as separate lines.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = format!("graph {name} {{\n");
        for v in &self.vertices {
            out.push_str(&format!("  \"{v}\";\n"));
        }
        for (u, v, l) in &self.edges {
            out.push_str(&format!(
                "  \"{}\" -- \"{}\" [label=\"{}\", color={}];\n",
                self.vertices[*u],
                self.vertices[*v],
                l,
                l.dot_color()
            ));
        }
        out.push_str("}\n");
        out
    }

    /// JSON export: `{vertices: [key], edges: [[key, key, label]]}` in
    /// canonical order.
    pub fn to_json(&self) -> Value {
        let edges: Vec<Value> = self
            .edges
            .iter()
            .map(|(u, v, l)| json!([self.vertices[*u], self.vertices[*v], l.json_value()]))
            .collect();
        json!({ "vertices": self.vertices, "edges": edges })
    }
}
