//! Cliques of Hamming and box graphs, edge clique covers and the exact
//! clique-cover numbers.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Default vertex limit for [`maximal_cliques`].
pub const MAXIMAL_CLIQUE_LIMIT: usize = 64;
/// Default vertex limit for the clique-cover oracles.
pub const THETA_LIMIT: usize = 16;

/// A set of vertex indices, kept sorted and duplicate-free.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Clique(Vec<usize>);

impl Clique {
    pub fn new(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        Clique(members)
    }

    pub fn members(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_superset_of(&self, other: &Clique) -> bool {
        other.0.iter().all(|&v| self.contains(v))
    }
}

impl From<Vec<usize>> for Clique {
    fn from(members: Vec<usize>) -> Self {
        Clique::new(members)
    }
}

/// An ordered collection of cliques of some host graph.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CliqueFamily(Vec<Clique>);

impl CliqueFamily {
    pub fn new(cliques: Vec<Clique>) -> Self {
        CliqueFamily(cliques)
    }

    pub fn cliques(&self) -> &[Clique] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Clique> {
        self.0.iter()
    }

    /// The family as a set, for order-insensitive comparison.
    pub fn to_set(&self) -> BTreeSet<Clique> {
        self.0.iter().cloned().collect()
    }

    /// Errors unless every member is a non-empty clique of `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        for c in &self.0 {
            if c.is_empty() || !g.is_clique(c.members()) {
                return Err(Error::domain(format!(
                    "{:?} is not a clique of the host graph",
                    c.members()
                )));
            }
        }
        Ok(())
    }
}

impl FromIterator<Clique> for CliqueFamily {
    fn from_iter<I: IntoIterator<Item = Clique>>(iter: I) -> Self {
        CliqueFamily(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a CliqueFamily {
    type Item = &'a Clique;
    type IntoIter = std::slice::Iter<'a, Clique>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

fn box_dims(g: &Graph) -> Result<&[u32]> {
    match g.dims() {
        Some(d) if g.is_box() => Ok(d),
        _ => Err(Error::domain(
            "operation needs a Hamming or box graph with known dimensions",
        )),
    }
}

/// `S_j(p)`: every vertex whose coordinates off axis `axis` (1-based) equal `p`.
pub fn axis_clique(g: &Graph, axis: usize, p: &[u32]) -> Result<Clique> {
    let dims = box_dims(g)?;
    if axis == 0 || axis > dims.len() {
        return Err(Error::domain(format!(
            "axis {axis} outside 1..={}",
            dims.len()
        )));
    }
    let j = axis - 1;
    let rest: Vec<u32> = dims.iter().enumerate().filter(|&(i, _)| i != j).map(|(_, &q)| q).collect();
    if p.len() != rest.len() || p.iter().zip(&rest).any(|(&c, &q)| c == 0 || c > q) {
        return Err(Error::domain(format!(
            "{p:?} is not a tuple of the remaining dimensions {rest:?}"
        )));
    }
    let mut coords = p.to_vec();
    coords.insert(j, 1);
    let members = (1..=dims[j])
        .map(|c| {
            coords[j] = c;
            g.index_of_coords(&coords).expect("box graph contains every tuple")
        })
        .collect();
    Ok(Clique::new(members))
}

/// All axis cliques `S_j(p)`, axis-major and then `p` in lexicographic order.
pub fn canonical_family(g: &Graph) -> Result<CliqueFamily> {
    let dims = box_dims(g)?.to_vec();
    let mut family = Vec::new();
    for j in 0..dims.len() {
        // representatives: vertices with coordinate j equal to 1, already lex-ordered
        for v in g.vertices().iter().filter(|v| v.coords()[j] == 1) {
            family.push(axis_clique(g, j + 1, &v.project_out(j))?);
        }
    }
    Ok(CliqueFamily(family))
}

/// The unique axis clique containing a clique `k` with at least two members.
///
/// Two distinct members of a clique differ in exactly one axis `j`; the
/// answer is `S_j(π_j(x))` for any member `x`.
pub fn unique_containing_maximal_clique(g: &Graph, k: &Clique) -> Result<Clique> {
    box_dims(g)?;
    if k.len() < 2 {
        return Err(Error::domain("clique must have at least two members"));
    }
    if !g.is_clique(k.members()) {
        return Err(Error::domain(format!("{:?} is not a clique", k.members())));
    }
    let x = g.vertex(k.members()[0]);
    let y = g.vertex(k.members()[1]);
    let j = x
        .coords()
        .iter()
        .zip(y.coords())
        .position(|(a, b)| a != b)
        .expect("adjacent vertices differ");
    let s = axis_clique(g, j + 1, &x.project_out(j))?;
    debug_assert!(s.is_superset_of(k));
    Ok(s)
}

fn adjacency_masks(g: &Graph) -> Vec<u64> {
    (0..g.vertex_count())
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
        .collect()
}

fn mask_members(mut m: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(m.count_ones() as usize);
    while m != 0 {
        out.push(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    out
}

/// Every inclusion-maximal clique (isolated vertices give singletons), sorted
/// by member list.
pub fn maximal_cliques(g: &Graph) -> Result<CliqueFamily> {
    maximal_cliques_with_limit(g, MAXIMAL_CLIQUE_LIMIT)
}

pub fn maximal_cliques_with_limit(g: &Graph, limit: usize) -> Result<CliqueFamily> {
    Error::check_limit("vertex count", g.vertex_count(), limit.min(64))?;
    let adj = adjacency_masks(g);
    let all = if g.vertex_count() == 64 {
        u64::MAX
    } else {
        (1u64 << g.vertex_count()) - 1
    };
    let mut found = Vec::new();
    if g.vertex_count() > 0 {
        bron_kerbosch(&adj, 0, all, 0, &mut found);
    }
    let mut cliques: Vec<Clique> = found.into_iter().map(|m| Clique(mask_members(m))).collect();
    cliques.sort();
    Ok(CliqueFamily(cliques))
}

fn bron_kerbosch(adj: &[u64], r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>) {
    if p == 0 {
        if x == 0 {
            out.push(r);
        }
        return;
    }
    // pivot: the candidate with most neighbours in p
    let pivot = mask_members(p | x)
        .into_iter()
        .max_by_key(|&u| ((adj[u] & p).count_ones(), std::cmp::Reverse(u)))
        .expect("p is non-empty");
    for v in mask_members(p & !adj[pivot]) {
        let bit = 1u64 << v;
        bron_kerbosch(adj, r | bit, p & adj[v], x & adj[v], out);
        p &= !bit;
        x |= bit;
    }
}

/// Returns an edge not contained in any member of `f`, if there is one.
pub fn uncovered_edge(g: &Graph, f: &CliqueFamily) -> Option<(usize, usize)> {
    g.edges()
        .find(|&(u, v)| !f.iter().any(|c| c.contains(u) && c.contains(v)))
}

/// True iff every edge of `g` lies inside some member of `f`.
pub fn is_edge_clique_cover(g: &Graph, f: &CliqueFamily) -> bool {
    uncovered_edge(g, f).is_none()
}

/// Exact minimum set cover of `universe` by `sets`; returns chosen set indices.
///
/// Branches on the uncovered element with fewest covering sets.
fn min_cover(universe: u128, sets: &[u128]) -> Vec<usize> {
    struct Search<'a> {
        sets: &'a [u128],
        largest: u32,
        best: Option<Vec<usize>>,
    }

    impl Search<'_> {
        fn run(&mut self, uncovered: u128, chosen: &mut Vec<usize>) {
            if uncovered == 0 {
                if self.best.as_ref().map_or(true, |b| chosen.len() < b.len()) {
                    self.best = Some(chosen.clone());
                }
                return;
            }
            let need = uncovered.count_ones().div_ceil(self.largest) as usize;
            if let Some(b) = &self.best {
                if chosen.len() + need >= b.len() {
                    return;
                }
            }
            let mut pick = None;
            let mut fewest = usize::MAX;
            let mut rest = uncovered;
            while rest != 0 {
                let e = rest.trailing_zeros();
                rest &= rest - 1;
                let n = self.sets.iter().filter(|&&s| s >> e & 1 == 1).count();
                if n < fewest {
                    fewest = n;
                    pick = Some(e);
                }
            }
            let e = pick.expect("uncovered is non-empty");
            let mut options: Vec<usize> = (0..self.sets.len())
                .filter(|&i| self.sets[i] >> e & 1 == 1)
                .collect();
            options.sort_by_key(|&i| std::cmp::Reverse((self.sets[i] & uncovered).count_ones()));
            for i in options {
                chosen.push(i);
                self.run(uncovered & !self.sets[i], chosen);
                chosen.pop();
            }
        }
    }

    let largest = sets.iter().map(|s| s.count_ones()).max().unwrap_or(1).max(1);
    let mut search = Search {
        sets,
        largest,
        best: None,
    };
    search.run(universe, &mut Vec::new());
    let mut best = search.best.expect("every element is covered by some set");
    best.sort_unstable();
    best
}

/// A minimum edge clique cover, built from maximal cliques.
pub fn minimum_edge_clique_cover(g: &Graph) -> Result<CliqueFamily> {
    minimum_edge_clique_cover_with_limit(g, THETA_LIMIT)
}

pub fn minimum_edge_clique_cover_with_limit(g: &Graph, limit: usize) -> Result<CliqueFamily> {
    Error::check_limit("vertex count", g.vertex_count(), limit)?;
    let edges: Vec<(usize, usize)> = g.edges().collect();
    Error::check_limit("edge count", edges.len(), 128)?;
    if edges.is_empty() {
        return Ok(CliqueFamily::default());
    }
    let maximal: Vec<Clique> = maximal_cliques_with_limit(g, limit)?
        .0
        .into_iter()
        .filter(|c| c.len() >= 2)
        .collect();
    let masks: Vec<u128> = maximal
        .iter()
        .map(|c| {
            edges.iter().enumerate().fold(0u128, |m, (i, &(u, v))| {
                if c.contains(u) && c.contains(v) {
                    m | 1 << i
                } else {
                    m
                }
            })
        })
        .collect();
    let universe = if edges.len() == 128 {
        u128::MAX
    } else {
        (1u128 << edges.len()) - 1
    };
    let chosen = min_cover(universe, &masks);
    Ok(chosen.into_iter().map(|i| maximal[i].clone()).collect())
}

/// θ_E: the minimum size of an edge clique cover.
pub fn theta_e_bruteforce(g: &Graph) -> Result<usize> {
    minimum_edge_clique_cover(g).map(|f| f.len())
}

pub fn theta_e_bruteforce_with_limit(g: &Graph, limit: usize) -> Result<usize> {
    minimum_edge_clique_cover_with_limit(g, limit).map(|f| f.len())
}

/// A minimum vertex clique cover, built from maximal cliques.
pub fn minimum_vertex_clique_cover(g: &Graph) -> Result<CliqueFamily> {
    minimum_vertex_clique_cover_with_limit(g, THETA_LIMIT)
}

pub fn minimum_vertex_clique_cover_with_limit(g: &Graph, limit: usize) -> Result<CliqueFamily> {
    Error::check_limit("vertex count", g.vertex_count(), limit.min(64))?;
    if g.vertex_count() == 0 {
        return Ok(CliqueFamily::default());
    }
    let maximal = maximal_cliques_with_limit(g, limit)?;
    let masks: Vec<u128> = maximal
        .iter()
        .map(|c| c.members().iter().fold(0u128, |m, &v| m | 1 << v))
        .collect();
    let universe = (1u128 << g.vertex_count()) - 1;
    let chosen = min_cover(universe, &masks);
    Ok(chosen.into_iter().map(|i| maximal.0[i].clone()).collect())
}

/// θ_V: the minimum number of cliques covering every vertex.
pub fn theta_v_bruteforce(g: &Graph) -> Result<usize> {
    minimum_vertex_clique_cover(g).map(|f| f.len())
}

pub fn theta_v_bruteforce_with_limit(g: &Graph, limit: usize) -> Result<usize> {
    minimum_vertex_clique_cover_with_limit(g, limit).map(|f| f.len())
}

/// Induced subgraph on the open (`closed == false`) or closed neighbourhood of `v`.
pub fn neighborhood_subgraph(g: &Graph, v: usize, closed: bool) -> Result<Graph> {
    if v >= g.vertex_count() {
        return Err(Error::domain(format!("vertex index {v} out of range")));
    }
    let mut members = g.neighbors(v).to_vec();
    if closed {
        members.push(v);
        members.sort_unstable();
    }
    g.induced_subgraph(&members)
}

/// Looks up the index of the vertex with the given coordinates.
pub fn vertex_index(g: &Graph, coords: &[u32]) -> Result<usize> {
    let v = Vertex::new(coords.to_vec())?;
    g.index_of(&v)
        .ok_or_else(|| Error::domain(format!("({v}) is not a vertex of the graph")))
}
