//! Signed directed graphs presenting signed edge shifts.
//!
//! A [`SignedGraph`] carries a sign on every edge. The sign of a point of the
//! edge shift is the sign of its 0th edge, so the graph is a signed
//! presentation. Vertex and edge identifiers are opaque strings; every
//! ordering in this crate follows input order.

use std::collections::{HashMap, HashSet};
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::algebra::IntMatrix;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Minus => -1,
            Sign::Plus => 1,
        }
    }

    pub fn from_value(v: i64) -> Option<Self> {
        match v {
            -1 => Some(Sign::Minus),
            1 => Some(Sign::Plus),
            _ => None,
        }
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

/// Graph file record (`{"id", "src", "dst", "sign"}`); `sign` defaults to +1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeRecord {
    pub id: String,
    pub src: String,
    pub dst: String,
    #[serde(default = "plus_one")]
    pub sign: i64,
}

fn plus_one() -> i64 {
    1
}

/// The graph file format, before validation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphFile {
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub id: String,
    pub src: usize,
    pub dst: usize,
    pub sign: Sign,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedGraph {
    vertices: Vec<String>,
    edges: Vec<Edge>,
}

/// Checks the graph invariants of a raw graph file.
pub fn validate(file: &GraphFile) -> Result<()> {
    SignedGraph::from_file(file).map(|_| ())
}

impl SignedGraph {
    pub fn from_file(file: &GraphFile) -> Result<Self> {
        if file.vertices.is_empty() {
            return Err(Error::EmptyGraph);
        }
        Self::from_file_allowing_empty(file)
    }

    /// Fiber products may legitimately have no edges at all.
    pub(crate) fn from_file_allowing_empty(file: &GraphFile) -> Result<Self> {
        let mut index = HashMap::with_capacity(file.vertices.len());
        for (i, v) in file.vertices.iter().enumerate() {
            if index.insert(v.as_str(), i).is_some() {
                return Err(Error::DuplicateId(v.clone()));
            }
        }
        let mut seen = HashSet::with_capacity(file.edges.len());
        let mut edges = Vec::with_capacity(file.edges.len());
        for e in &file.edges {
            if !seen.insert(e.id.as_str()) {
                return Err(Error::DuplicateId(e.id.clone()));
            }
            let lookup = |v: &str| {
                index.get(v).copied().ok_or_else(|| Error::DanglingEdge {
                    edge: e.id.clone(),
                    vertex: v.to_string(),
                })
            };
            let src = lookup(&e.src)?;
            let dst = lookup(&e.dst)?;
            let sign = Sign::from_value(e.sign).ok_or_else(|| Error::BadSign {
                edge: e.id.clone(),
                sign: e.sign,
            })?;
            edges.push(Edge {
                id: e.id.clone(),
                src,
                dst,
                sign,
            });
        }
        Ok(Self {
            vertices: file.vertices.clone(),
            edges,
        })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: GraphFile =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_file(&file)
    }

    /// Convenience constructor: `(id, src, dst, sign)`.
    pub fn build(vertices: &[&str], edges: &[(&str, &str, &str, i64)]) -> Result<Self> {
        Self::from_file(&GraphFile {
            vertices: vertices.iter().map(|v| v.to_string()).collect(),
            edges: edges
                .iter()
                .map(|&(id, src, dst, sign)| EdgeRecord {
                    id: id.into(),
                    src: src.into(),
                    dst: dst.into(),
                    sign,
                })
                .collect(),
        })
    }

    pub fn to_file(&self) -> GraphFile {
        GraphFile {
            vertices: self.vertices.clone(),
            edges: self
                .edges
                .iter()
                .map(|e| EdgeRecord {
                    id: e.id.clone(),
                    src: self.vertices[e.src].clone(),
                    dst: self.vertices[e.dst].clone(),
                    sign: e.sign.value(),
                })
                .collect(),
        }
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> &Edge {
        &self.edges[i]
    }

    pub fn edge_index(&self, id: &str) -> Option<usize> {
        self.edges.iter().position(|e| e.id == id)
    }

    /// Same graph with every sign set to +1.
    pub fn unsigned(&self) -> Self {
        Self {
            vertices: self.vertices.clone(),
            edges: self
                .edges
                .iter()
                .map(|e| Edge {
                    sign: Sign::Plus,
                    ..e.clone()
                })
                .collect(),
        }
    }

    /// Outgoing edge indices of every vertex, in edge order.
    pub fn out_edges(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.vertices.len()];
        for (i, e) in self.edges.iter().enumerate() {
            out[e.src].push(i);
        }
        out
    }

    /// Incoming edge indices of every vertex, in edge order.
    pub fn in_edges(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.vertices.len()];
        for (i, e) in self.edges.iter().enumerate() {
            inc[e.dst].push(i);
        }
        inc
    }
}

/// A path of `edges.len()` edges starting at `start`; a path of length 0 is
/// just the vertex `start`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub start: usize,
    pub edges: Vec<usize>,
}

impl Path {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn end(&self, g: &SignedGraph) -> usize {
        self.edges.last().map_or(self.start, |&e| g.edge(e).dst)
    }

    pub fn label(&self, g: &SignedGraph) -> String {
        match self.edges.as_slice() {
            [] => return g.vertices[self.start].clone(),
            [e] => return g.edge(*e).id.clone(),
            _ => {}
        }
        join_ids(self.edges.iter().map(|&e| g.edge(e).id.as_str()))
    }
}

/// Joins ids with `.`; falls back to a quoted list when an id contains `.`
/// so distinct sequences always get distinct labels.
fn join_ids<'a, I: Iterator<Item = &'a str> + Clone>(ids: I) -> String {
    if ids.clone().any(|s| s.contains('.')) {
        format!("{:?}", ids.collect::<Vec<_>>())
    } else {
        ids.collect::<Vec<_>>().join(".")
    }
}

/// All paths with `m` edges, lexicographic in edge order. For `m = 0` these
/// are the vertices.
pub fn enumerate_paths(g: &SignedGraph, m: usize) -> Vec<Path> {
    if m == 0 {
        return (0..g.vertices.len())
            .map(|v| Path {
                start: v,
                edges: Vec::new(),
            })
            .collect();
    }
    let out = g.out_edges();
    let mut result = Vec::new();
    let mut stack = Vec::with_capacity(m);
    for e in 0..g.edges.len() {
        stack.push(e);
        extend_paths(g, &out, m, &mut stack, &mut result);
        stack.pop();
    }
    result
}

fn extend_paths(
    g: &SignedGraph,
    out: &[Vec<usize>],
    m: usize,
    stack: &mut Vec<usize>,
    result: &mut Vec<Path>,
) {
    if stack.len() == m {
        result.push(Path {
            start: g.edge(stack[0]).src,
            edges: stack.clone(),
        });
        return;
    }
    let last = g.edge(*stack.last().unwrap()).dst;
    for &e in &out[last] {
        stack.push(e);
        extend_paths(g, out, m, stack, result);
        stack.pop();
    }
}

/// The higher block presentation `G^k`: edges are paths of length `k`,
/// vertices paths of length `k - 1`, and an edge carries the sign of its last
/// underlying edge.
pub fn higher_block(g: &SignedGraph, k: usize) -> Result<SignedGraph> {
    if k < 1 {
        return Err(Error::BadBlockLevel(k));
    }
    let verts = enumerate_paths(g, k - 1);
    let vindex: HashMap<&Path, usize> = verts.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let edges = enumerate_paths(g, k)
        .into_iter()
        .map(|p| {
            let head = Path {
                start: p.start,
                edges: p.edges[..k - 1].to_vec(),
            };
            let tail = Path {
                start: g.edge(p.edges[0]).dst,
                edges: p.edges[1..].to_vec(),
            };
            let last = *p.edges.last().unwrap();
            Edge {
                id: p.label(g),
                src: vindex[&head],
                dst: vindex[&tail],
                sign: g.edge(last).sign,
            }
        })
        .collect();
    Ok(SignedGraph {
        vertices: verts.iter().map(|p| p.label(g)).collect(),
        edges,
    })
}

/// Entry `[u][v]` is the sum of the signs of the edges from `u` to `v`; this
/// is the matrix of the transfer map on ℤ[vertices], whose image of `v` is
/// `sum_{t(e) = v} sign(e) * i(e)`.
pub fn signed_adjacency(g: &SignedGraph) -> IntMatrix {
    let n = g.vertices.len();
    let mut a = IntMatrix::zeros(n, n);
    for e in &g.edges {
        a[(e.src, e.dst)] += BigInt::from(e.sign.value());
    }
    a
}

/// Transfer map on the free group on paths of length `m`.
///
/// For `m = 0` this is [`signed_adjacency`]. For `m >= 1`, a path
/// `p_1 .. p_m` maps to `sign(p_m) * sum (e, p_1, .., p_{m-1})` over edges `e`
/// ending where `p_1` starts, which is the transfer map of `G^{m+1}`.
pub fn transfer_on_paths(g: &SignedGraph, m: usize) -> IntMatrix {
    if m == 0 {
        return signed_adjacency(g);
    }
    let paths = enumerate_paths(g, m);
    let index: HashMap<&[usize], usize> = paths
        .iter()
        .enumerate()
        .map(|(i, p)| (p.edges.as_slice(), i))
        .collect();
    let inc = g.in_edges();
    let mut t = IntMatrix::zeros(paths.len(), paths.len());
    let mut buf = Vec::with_capacity(m);
    for (col, p) in paths.iter().enumerate() {
        let weight = BigInt::from(g.edge(*p.edges.last().unwrap()).sign.value());
        for &e in &inc[p.start] {
            buf.clear();
            buf.push(e);
            buf.extend_from_slice(&p.edges[..m - 1]);
            let row = index[buf.as_slice()];
            t[(row, col)] += &weight;
        }
    }
    t
}

impl fmt::Display for SignedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.edges {
            writeln!(
                f,
                "{}: {} -> {} ({})",
                e.id,
                self.vertices[e.src],
                self.vertices[e.dst],
                if e.sign == Sign::Plus { "+" } else { "-" }
            )?;
        }
        Ok(())
    }
}
