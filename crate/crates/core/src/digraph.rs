//! Digraphs with labelled extra (isolated) vertices, acyclic orderings and
//! the topological check.
//!
//! Orderings follow the prey-first convention: for every arc `(u, v)` the
//! target `v` appears *earlier* than the source `u`.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::graph::Vertex;

/// A digraph over real vertices (coordinate tuples) followed by extra vertices
/// `z1, ..., zk`. Extra vertices take indices `real_count()..vertex_count()`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    real: Vec<Vertex>,
    dims: Option<Vec<u32>>,
    isolated: Vec<String>,
    out: Vec<Vec<usize>>,
    inn: Vec<Vec<usize>>,
}

impl Digraph {
    pub fn new(
        real: Vec<Vertex>,
        dims: Option<Vec<u32>>,
        isolated: Vec<String>,
        arcs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let n = real.len() + isolated.len();
        let mut out = vec![Vec::new(); n];
        let mut inn = vec![Vec::new(); n];
        for (s, t) in arcs {
            if s >= n || t >= n {
                return Err(Error::domain(format!(
                    "arc ({s},{t}) references a vertex outside 0..{n}"
                )));
            }
            if s == t {
                return Err(Error::domain(format!("loop at vertex {s}")));
            }
            out[s].push(t);
            inn[t].push(s);
        }
        for list in out.iter_mut().chain(inn.iter_mut()) {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Digraph {
            real,
            dims,
            isolated,
            out,
            inn,
        })
    }

    /// Labels `z1, ..., zk`.
    pub fn z_labels(k: usize) -> Vec<String> {
        (1..=k).map(|i| format!("z{i}")).collect()
    }

    pub fn vertex_count(&self) -> usize {
        self.out.len()
    }

    pub fn real_count(&self) -> usize {
        self.real.len()
    }

    pub fn real_vertices(&self) -> &[Vertex] {
        &self.real
    }

    pub fn isolated_labels(&self) -> &[String] {
        &self.isolated
    }

    pub fn dims(&self) -> Option<&[u32]> {
        self.dims.as_deref()
    }

    pub fn is_extra(&self, v: usize) -> bool {
        v >= self.real.len()
    }

    pub fn label(&self, v: usize) -> String {
        match self.real.get(v) {
            Some(x) => x.to_string(),
            None => self.isolated[v - self.real.len()].clone(),
        }
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.inn[v]
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(Vec::len).sum()
    }

    /// Arcs sorted by `(source, target)`.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(s, ts)| ts.iter().map(move |&t| (s, t)))
    }
}

/// A sequence of every vertex of a digraph in which arc targets precede arc
/// sources.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AcyclicOrdering(Vec<usize>);

impl AcyclicOrdering {
    /// Checks that `order` is a permutation of the vertices of `d` and that
    /// every arc points to an earlier position.
    pub fn new(d: &Digraph, order: Vec<usize>) -> Result<Self> {
        let pos = positions(d.vertex_count(), &order)?;
        if let Some((s, t)) = d.arcs().find(|&(s, t)| pos[t] >= pos[s]) {
            return Err(Error::domain(format!(
                "arc ({} -> {}) points forward in the ordering",
                d.label(s),
                d.label(t)
            )));
        }
        Ok(AcyclicOrdering(order))
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `position[v]` for every vertex.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }
}

pub(crate) fn positions(n: usize, order: &[usize]) -> Result<Vec<usize>> {
    if order.len() != n {
        return Err(Error::domain(format!(
            "ordering has {} entries, expected {n}",
            order.len()
        )));
    }
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        if v >= n || pos[v] != usize::MAX {
            return Err(Error::domain(format!(
                "ordering is not a permutation (entry {v})"
            )));
        }
        pos[v] = i;
    }
    Ok(pos)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TopoOutcome {
    Acyclic(AcyclicOrdering),
    /// Vertices `c_0, c_1, ..., c_{m-1}` with arcs `c_i -> c_{i+1}` and `c_{m-1} -> c_0`.
    Cycle(Vec<usize>),
}

/// Finds an acyclic ordering or a directed cycle.
///
/// A vertex is emitted once all of its out-neighbours have been emitted; ties
/// go to the smallest index, so the result is deterministic.
pub fn topological_check(d: &Digraph) -> TopoOutcome {
    let n = d.vertex_count();
    let mut pending: Vec<usize> = (0..n).map(|v| d.out_neighbors(v).len()).collect();
    let mut heap: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&v| pending[v] == 0).map(Reverse).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(Reverse(v)) = heap.pop() {
        order.push(v);
        for &u in d.in_neighbors(v) {
            pending[u] -= 1;
            if pending[u] == 0 {
                heap.push(Reverse(u));
            }
        }
    }
    if order.len() == n {
        return TopoOutcome::Acyclic(AcyclicOrdering(order));
    }

    // Every unplaced vertex still has an unplaced out-neighbour; walk until a repeat.
    let start = (0..n).find(|&v| pending[v] > 0).expect("unplaced vertex");
    let mut seen_at = vec![usize::MAX; n];
    let mut walk = Vec::new();
    let mut v = start;
    while seen_at[v] == usize::MAX {
        seen_at[v] = walk.len();
        walk.push(v);
        v = *d
            .out_neighbors(v)
            .iter()
            .find(|&&w| pending[w] > 0)
            .expect("unplaced vertex keeps an unplaced out-neighbour");
    }
    TopoOutcome::Cycle(walk.split_off(seen_at[v]))
}
