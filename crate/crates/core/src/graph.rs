//! Vertices, simple undirected graphs and the Hamming / box-product generators.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// Default cap on the number of vertices a generator may produce.
pub const DEFAULT_VERTEX_LIMIT: usize = 100_000;

/// A tuple of 1-based coordinates.
///
/// The coordinate bounds `(q_1, ..., q_n)` belong to the host graph rather than
/// to each vertex; see [`Graph::dims`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex(Vec<u32>);

impl Vertex {
    pub fn new(coords: Vec<u32>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::domain("a vertex needs at least one coordinate"));
        }
        if coords.contains(&0) {
            return Err(Error::domain(format!(
                "coordinates are 1-based, got {coords:?}"
            )));
        }
        Ok(Vertex(coords))
    }

    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    /// True when every coordinate lies in `1..=dims[i]`.
    pub fn fits(&self, dims: &[u32]) -> bool {
        self.0.len() == dims.len() && self.0.iter().zip(dims).all(|(&c, &q)| c <= q)
    }

    /// The tuple with coordinate `axis` (0-based) removed.
    pub fn project_out(&self, axis: usize) -> Vec<u32> {
        let mut p = self.0.clone();
        p.remove(axis);
        p
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl From<Vertex> for Vec<u32> {
    fn from(v: Vertex) -> Self {
        v.0
    }
}

fn check_same_arity(x: &Vertex, y: &Vertex) -> Result<()> {
    if x.arity() != y.arity() {
        return Err(Error::domain(format!(
            "vertices ({x}) and ({y}) have different arity"
        )));
    }
    Ok(())
}

/// Number of coordinates in which `x` and `y` differ.
pub fn hamming_distance(x: &Vertex, y: &Vertex) -> Result<usize> {
    check_same_arity(x, y)?;
    Ok(x.0.iter().zip(&y.0).filter(|(a, b)| a != b).count())
}

/// Lexicographic comparison: the first differing coordinate decides.
pub fn lex_compare(x: &Vertex, y: &Vertex) -> Result<Ordering> {
    check_same_arity(x, y)?;
    Ok(x.0.cmp(&y.0))
}

/// A finite simple undirected graph over an ordered vertex list.
///
/// Vertices are addressed by dense indices. When `dims` is set every vertex
/// fits inside the box `[q_1] x ... x [q_n]`; `is_box` additionally records
/// that the graph *is* the Cartesian product `K_{q_1} □ ... □ K_{q_n}` with
/// vertices in lexicographic order.
#[derive(Clone, Debug)]
pub struct Graph {
    vertices: Vec<Vertex>,
    dims: Option<Vec<u32>>,
    adj: Vec<Vec<usize>>,
    edge_count: usize,
    is_box: bool,
    index: HashMap<Vertex, usize>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.dims == other.dims && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds a graph from vertices and an edge list. Duplicate edges are
    /// merged; loops and out-of-range endpoints are rejected.
    pub fn new(
        vertices: Vec<Vertex>,
        dims: Option<Vec<u32>>,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let n = vertices.len();
        let mut index = HashMap::with_capacity(n);
        for (i, v) in vertices.iter().enumerate() {
            if let Some(d) = &dims {
                if !v.fits(d) {
                    return Err(Error::domain(format!("vertex ({v}) lies outside dims {d:?}")));
                }
            }
            if index.insert(v.clone(), i).is_some() {
                return Err(Error::domain(format!("duplicate vertex ({v})")));
            }
        }
        if dims.is_none() {
            if let Some(a) = vertices.first().map(Vertex::arity) {
                if vertices.iter().any(|v| v.arity() != a) {
                    return Err(Error::domain("vertices have mixed arity"));
                }
            }
        }
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::domain(format!(
                    "edge ({u},{v}) references a vertex outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::domain(format!("loop at vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        let edge_count = adj.iter().map(Vec::len).sum::<usize>() / 2;
        let mut g = Graph {
            vertices,
            dims,
            adj,
            edge_count,
            is_box: false,
            index,
        };
        g.is_box = g.detect_box();
        Ok(g)
    }

    /// A graph on vertices labelled `(1), (2), ..., (n)` with 0-based edges.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let vertices = (1..=n as u32).map(|i| Vertex(vec![i])).collect();
        Graph::new(vertices, None, edges.iter().copied())
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> &Vertex {
        &self.vertices[i]
    }

    pub fn dims(&self) -> Option<&[u32]> {
        self.dims.as_deref()
    }

    /// True for Hamming and box graphs in canonical (lexicographic) layout.
    pub fn is_box(&self) -> bool {
        self.is_box
    }

    pub fn index_of(&self, v: &Vertex) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn index_of_coords(&self, coords: &[u32]) -> Option<usize> {
        self.index.get(&Vertex(coords.to_vec())).copied()
    }

    /// Sorted neighbour indices.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let (a, b) = if self.adj[u].len() <= self.adj[v].len() {
            (u, v)
        } else {
            (v, u)
        };
        self.adj[a].binary_search(&b).is_ok()
    }

    /// Edges as `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn is_clique(&self, members: &[usize]) -> bool {
        members.iter().enumerate().all(|(a, &u)| {
            u < self.vertex_count()
                && members[a + 1..].iter().all(|&v| u != v && self.has_edge(u, v))
        })
    }

    /// Induced subgraph on `members` (kept in the given order). Coordinate
    /// bounds carry over but the result is never flagged as a box.
    pub fn induced_subgraph(&self, members: &[usize]) -> Result<Graph> {
        let mut local = HashMap::with_capacity(members.len());
        for (i, &v) in members.iter().enumerate() {
            if v >= self.vertex_count() {
                return Err(Error::domain(format!("vertex index {v} out of range")));
            }
            local.insert(v, i);
        }
        let mut edges = Vec::new();
        for (i, &v) in members.iter().enumerate() {
            for w in &self.adj[v] {
                if let Some(&j) = local.get(w) {
                    if i < j {
                        edges.push((i, j));
                    }
                }
            }
        }
        let vertices = members.iter().map(|&v| self.vertices[v].clone()).collect();
        let mut g = Graph::new(vertices, self.dims.clone(), edges)?;
        g.is_box = false;
        Ok(g)
    }

    pub fn has_triangle(&self) -> bool {
        self.edges().any(|(u, v)| {
            let (a, b) = (&self.adj[u], &self.adj[v]);
            let (mut i, mut j) = (0, 0);
            while i < a.len() && j < b.len() {
                match a[i].cmp(&b[j]) {
                    Ordering::Less => i += 1,
                    Ordering::Greater => j += 1,
                    Ordering::Equal => return true,
                }
            }
            false
        })
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == n
    }

    fn detect_box(&self) -> bool {
        let Some(dims) = &self.dims else {
            return false;
        };
        let Some(total) = box_size(dims) else {
            return false;
        };
        if total != self.vertex_count() {
            return false;
        }
        let in_lex_order = BoxTuples::new(dims)
            .zip(&self.vertices)
            .all(|(t, v)| t == v.0);
        if !in_lex_order {
            return false;
        }
        let expected: usize = dims.iter().map(|&q| (q as usize).saturating_sub(1)).sum::<usize>() * total / 2;
        expected == self.edge_count
            && self
                .edges()
                .all(|(u, v)| self.vertices[u].0.iter().zip(&self.vertices[v].0).filter(|(a, b)| a != b).count() == 1)
    }
}

fn box_size(dims: &[u32]) -> Option<usize> {
    dims.iter()
        .try_fold(1usize, |acc, &q| acc.checked_mul(q as usize))
}

/// Iterates `[q_1] x ... x [q_n]` in lexicographic order.
pub(crate) struct BoxTuples {
    dims: Vec<u32>,
    next: Option<Vec<u32>>,
}

impl BoxTuples {
    pub(crate) fn new(dims: &[u32]) -> Self {
        let next = if dims.iter().all(|&q| q >= 1) {
            Some(vec![1; dims.len()])
        } else {
            None
        };
        BoxTuples {
            dims: dims.to_vec(),
            next,
        }
    }
}

impl Iterator for BoxTuples {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        for axis in (0..succ.len()).rev() {
            if succ[axis] < self.dims[axis] {
                succ[axis] += 1;
                self.next = Some(succ);
                break;
            }
            succ[axis] = 1;
        }
        Some(current)
    }
}

/// Builds `K_{q_1} □ ... □ K_{q_n}` without validating the individual sizes.
fn product_graph(dims: &[u32], limit: usize) -> Result<Graph> {
    if dims.is_empty() {
        return Err(Error::domain("at least one dimension is required"));
    }
    if dims.contains(&0) {
        return Err(Error::domain(format!("dimensions must be positive, got {dims:?}")));
    }
    let total = box_size(dims).unwrap_or(usize::MAX);
    Error::check_limit("vertex count", total, limit)?;

    // stride[i] = number of tuples per step of coordinate i
    let mut stride = vec![1usize; dims.len()];
    for i in (0..dims.len().saturating_sub(1)).rev() {
        stride[i] = stride[i + 1] * dims[i + 1] as usize;
    }
    let vertices: Vec<Vertex> = BoxTuples::new(dims).map(Vertex).collect();
    let mut adj = vec![Vec::new(); total];
    for (idx, v) in vertices.iter().enumerate() {
        let list = &mut adj[idx];
        for (axis, &c) in v.0.iter().enumerate() {
            let base = idx - (c as usize - 1) * stride[axis];
            for other in 1..=dims[axis] {
                if other != c {
                    list.push(base + (other as usize - 1) * stride[axis]);
                }
            }
        }
        list.sort_unstable();
    }
    let edge_count = adj.iter().map(Vec::len).sum::<usize>() / 2;
    let index = vertices.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect();
    Ok(Graph {
        vertices,
        dims: Some(dims.to_vec()),
        adj,
        edge_count,
        is_box: true,
        index,
    })
}

/// The Hamming graph `H(n, q)`: vertex set `[q]^n` in lexicographic order,
/// adjacency at Hamming distance one.
pub fn hamming_graph(n: usize, q: u32) -> Result<Graph> {
    hamming_graph_with_limit(n, q, DEFAULT_VERTEX_LIMIT)
}

pub fn hamming_graph_with_limit(n: usize, q: u32, limit: usize) -> Result<Graph> {
    if n == 0 || q == 0 {
        return Err(Error::domain(format!("H(n,q) needs n, q >= 1, got ({n},{q})")));
    }
    product_graph(&vec![q; n], limit)
}

/// The Cartesian product of complete graphs `K_{q_1} □ ... □ K_{q_n}`, each `q_i >= 2`.
pub fn box_graph(dims: &[u32]) -> Result<Graph> {
    box_graph_with_limit(dims, DEFAULT_VERTEX_LIMIT)
}

pub fn box_graph_with_limit(dims: &[u32], limit: usize) -> Result<Graph> {
    if let Some(q) = dims.iter().find(|&&q| q < 2) {
        return Err(Error::domain(format!(
            "box dimensions must be at least 2, got {q} in {dims:?}"
        )));
    }
    product_graph(dims, limit)
}
