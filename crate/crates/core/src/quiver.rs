//! Quivers, their doubles, and the edge-reversal involution.
//!
//! Vertices and edges are interned as small integers. For a quiver with `n`
//! edges, the double quiver numbers the original edges `0..n` in declaration
//! order and their reverses `n..2n`, so the derived `Ord` on [`Edge`] is the
//! global edge order used by every canonical form downstream.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex(pub u16);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge(pub u16);

impl Vertex {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl Edge {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuiverEdge {
    pub name: String,
    pub tail: Vertex,
    pub head: Vertex,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    edges: Vec<QuiverEdge>,
}

impl Quiver {
    /// Builds a quiver from vertex names and `(name, tail, head)` triples.
    pub fn new<V, E>(vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator,
        V::Item: Into<String>,
        E: IntoIterator<Item = (String, String, String)>,
    {
        let vertices: Vec<String> = vertices.into_iter().map(Into::into).collect();
        let mut quiver = Quiver {
            vertices: Vec::new(),
            edges: Vec::new(),
        };
        for v in vertices {
            quiver.push_vertex(v, 0)?;
        }
        for (name, tail, head) in edges {
            quiver.push_edge(name, &tail, &head, 0)?;
        }
        Ok(quiver)
    }

    fn push_vertex(&mut self, name: String, line: usize) -> Result<()> {
        validate_name(&name, line)?;
        if self.vertices.contains(&name) {
            return Err(parse_err(line, format!("duplicate vertex `{name}`")));
        }
        self.vertices.push(name);
        Ok(())
    }

    fn push_edge(&mut self, name: String, tail: &str, head: &str, line: usize) -> Result<()> {
        validate_name(&name, line)?;
        if self.edges.iter().any(|e| e.name == name) {
            return Err(parse_err(line, format!("duplicate edge `{name}`")));
        }
        let lookup = |v: &str| {
            self.vertex_by_name(v)
                .ok_or_else(|| parse_err(line, format!("undeclared vertex `{v}`")))
        };
        let tail = lookup(tail)?;
        let head = lookup(head)?;
        self.edges.push(QuiverEdge { name, tail, head });
        Ok(())
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[QuiverEdge] {
        &self.edges
    }

    pub fn vertex_by_name(&self, name: &str) -> Option<Vertex> {
        self.vertices.iter().position(|v| v == name).map(|i| Vertex(i as u16))
    }
}

fn parse_err(line: usize, message: String) -> Error {
    Error::Parse { line, message }
}

fn validate_name(name: &str, line: usize) -> Result<()> {
    let ok = !name.is_empty() && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'');
    if ok {
        Ok(())
    } else {
        Err(parse_err(line, format!("invalid name `{name}`")))
    }
}

/// Parses the quiver file format:
///
/// ```text
/// vertices: 1 2
/// edges: a: 1 -> 2, l: 1 -> 1
/// ```
///
/// Blank lines and `#` comments are ignored; `edges:` may be repeated.
pub fn parse_quiver(text: &str) -> Result<Quiver> {
    let mut quiver = Quiver {
        vertices: Vec::new(),
        edges: Vec::new(),
    };
    let mut saw_vertices = false;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if let Some(rest) = content.strip_prefix("vertices:") {
            if saw_vertices {
                return Err(parse_err(line, "repeated `vertices:` line".into()));
            }
            saw_vertices = true;
            for v in rest.split_whitespace() {
                quiver.push_vertex(v.to_string(), line)?;
            }
        } else if let Some(rest) = content.strip_prefix("edges:") {
            for decl in rest.split(',').map(str::trim).filter(|d| !d.is_empty()) {
                let (name, ends) = decl
                    .split_once(':')
                    .ok_or_else(|| parse_err(line, format!("expected `name: tail -> head`, got `{decl}`")))?;
                let (tail, head) = ends
                    .split_once("->")
                    .ok_or_else(|| parse_err(line, format!("missing `->` in `{decl}`")))?;
                quiver.push_edge(name.trim().to_string(), tail.trim(), head.trim(), line)?;
            }
        } else {
            return Err(parse_err(line, format!("unrecognised line `{content}`")));
        }
    }
    Ok(quiver)
}

/// The double quiver: every base edge `e` gains a reverse `e*`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubleQuiver {
    base: Quiver,
    tails: Vec<Vertex>,
    heads: Vec<Vertex>,
    names: Vec<String>,
}

impl DoubleQuiver {
    pub fn new(base: Quiver) -> Self {
        build_double(base)
    }

    pub fn base(&self) -> &Quiver {
        &self.base
    }

    pub fn vertex_count(&self) -> usize {
        self.base.vertices.len()
    }

    /// Number of edges of the base quiver, `|Q|`.
    pub fn base_edge_count(&self) -> usize {
        self.base.edges.len()
    }

    /// Number of edges of the double, `|Q̄| = 2|Q|`.
    pub fn edge_count(&self) -> usize {
        self.tails.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + Clone {
        (0..self.edge_count() as u16).map(Edge)
    }

    pub fn base_edges(&self) -> impl Iterator<Item = Edge> + Clone {
        (0..self.base_edge_count() as u16).map(Edge)
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + Clone {
        (0..self.vertex_count() as u16).map(Vertex)
    }

    pub fn tail(&self, x: Edge) -> Vertex {
        self.tails[x.index()]
    }

    pub fn head(&self, x: Edge) -> Vertex {
        self.heads[x.index()]
    }

    /// True for edges of `Q`, false for edges of `Q*`.
    pub fn is_base(&self, x: Edge) -> bool {
        x.index() < self.base_edge_count()
    }

    pub fn reverse(&self, x: Edge) -> Edge {
        let n = self.base_edge_count();
        debug_assert!(x.index() < 2 * n);
        if x.index() < n {
            Edge((x.index() + n) as u16)
        } else {
            Edge((x.index() - n) as u16)
        }
    }

    /// Checked variant of [`DoubleQuiver::reverse`].
    pub fn try_reverse(&self, x: Edge) -> Result<Edge> {
        if x.index() < self.edge_count() {
            Ok(self.reverse(x))
        } else {
            Err(Error::UnknownEdge(format!("#{}", x.0)))
        }
    }

    pub fn edge_name(&self, x: Edge) -> &str {
        &self.names[x.index()]
    }

    pub fn vertex_name(&self, v: Vertex) -> &str {
        &self.base.vertices[v.index()]
    }

    /// Resolves `e` or `e*`.
    pub fn edge_by_name(&self, name: &str) -> Result<Edge> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(|i| Edge(i as u16))
            .ok_or_else(|| Error::UnknownEdge(name.to_string()))
    }

    pub fn vertex_by_name(&self, name: &str) -> Result<Vertex> {
        self.base
            .vertex_by_name(name)
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn contains_edge(&self, x: Edge) -> bool {
        x.index() < self.edge_count()
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        v.index() < self.vertex_count()
    }
}

pub fn build_double(q: Quiver) -> DoubleQuiver {
    let n = q.edges.len();
    let mut tails = Vec::with_capacity(2 * n);
    let mut heads = Vec::with_capacity(2 * n);
    let mut names = Vec::with_capacity(2 * n);
    for e in &q.edges {
        tails.push(e.tail);
        heads.push(e.head);
        names.push(e.name.clone());
    }
    for e in &q.edges {
        tails.push(e.head);
        heads.push(e.tail);
        names.push(format!("{}*", e.name));
    }
    DoubleQuiver {
        base: q,
        tails,
        heads,
        names,
    }
}

impl fmt::Display for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "vertices: {}", self.vertices.join(" "))?;
        let edges: Vec<String> = self
            .edges
            .iter()
            .map(|e| {
                format!(
                    "{}: {} -> {}",
                    e.name,
                    self.vertices[e.tail.index()],
                    self.vertices[e.head.index()]
                )
            })
            .collect();
        writeln!(f, "edges: {}", edges.join(", "))
    }
}

/// Small quivers used throughout the test suites.
pub mod samples {
    use super::{parse_quiver, DoubleQuiver};

    /// One vertex `v` with one loop `e`.
    pub fn loop1() -> DoubleQuiver {
        DoubleQuiver::new(parse_quiver("vertices: v\nedges: e: v -> v").unwrap())
    }

    /// One vertex `v` with two loops `e`, `f`.
    pub fn two_loop() -> DoubleQuiver {
        DoubleQuiver::new(parse_quiver("vertices: v\nedges: e: v -> v, f: v -> v").unwrap())
    }

    /// `1 -> 2` with a loop `l` at vertex 1.
    pub fn a2_with_loop() -> DoubleQuiver {
        DoubleQuiver::new(parse_quiver("vertices: 1 2\nedges: a: 1 -> 2, l: 1 -> 1").unwrap())
    }

    /// `1 -> 2` with no loop.
    pub fn a2() -> DoubleQuiver {
        DoubleQuiver::new(parse_quiver("vertices: 1 2\nedges: a: 1 -> 2").unwrap())
    }
}
