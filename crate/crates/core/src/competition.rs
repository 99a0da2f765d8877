//! Competition graphs of digraphs and realization certificates.
//!
//! A [`Realization`] certifies that `G ∪ I_k` is the competition graph of an
//! acyclic digraph: it carries the digraph, an acyclic ordering with the `k`
//! extra vertices at the head, and the clique assigned to each prey.

use std::fmt;

use crate::clique::{uncovered_edge, Clique, CliqueFamily};
use crate::digraph::{positions, topological_check, AcyclicOrdering, Digraph, TopoOutcome};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matching::{hall_violator, maximum_matching};

/// `C(D)` split into the part on real vertices and any edges that touch an
/// extra vertex (indices into the digraph).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompetitionGraph {
    pub real: Graph,
    pub extra_edges: Vec<(usize, usize)>,
}

/// Two distinct vertices are adjacent iff they share an out-neighbour.
pub fn competition_graph(d: &Digraph) -> CompetitionGraph {
    let m = d.real_count();
    let mut real_edges = Vec::new();
    let mut extra_edges = Vec::new();
    for prey in 0..d.vertex_count() {
        let preds = d.in_neighbors(prey);
        for (i, &u) in preds.iter().enumerate() {
            for &v in &preds[i + 1..] {
                if u < m && v < m {
                    real_edges.push((u, v));
                } else {
                    extra_edges.push((u, v));
                }
            }
        }
    }
    extra_edges.sort_unstable();
    extra_edges.dedup();
    let real = Graph::new(
        d.real_vertices().to_vec(),
        d.dims().map(<[u32]>::to_vec),
        real_edges,
    )
    .expect("digraph vertices form a valid graph");
    CompetitionGraph { real, extra_edges }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InNeighborhood {
    pub prey: usize,
    pub members: Clique,
}

/// In-neighbourhoods with at least two members, ordered by prey index.
pub fn in_neighborhood_family(d: &Digraph) -> Vec<InNeighborhood> {
    (0..d.vertex_count())
        .filter(|&v| d.in_neighbors(v).len() >= 2)
        .map(|v| InNeighborhood {
            prey: v,
            members: Clique::new(d.in_neighbors(v).to_vec()),
        })
        .collect()
}

/// The member sets of [`in_neighborhood_family`].
pub fn in_neighborhood_cliques(d: &Digraph) -> CliqueFamily {
    in_neighborhood_family(d).into_iter().map(|n| n.members).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Assignment {
    pub clique: Clique,
    pub prey: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Realization {
    digraph: Digraph,
    ordering: AcyclicOrdering,
    assignment: Vec<Assignment>,
}

impl Realization {
    /// Checks that the ordering is acyclic, preys are distinct, and the arcs
    /// are exactly `{(u, prey(C)) : u ∈ C}`.
    pub fn new(digraph: Digraph, ordering: Vec<usize>, assignment: Vec<Assignment>) -> Result<Self> {
        let ordering = AcyclicOrdering::new(&digraph, ordering)?;
        let n = digraph.vertex_count();
        let mut used = vec![false; n];
        let mut expected = Vec::new();
        for a in &assignment {
            if a.prey >= n || std::mem::replace(&mut used[a.prey], true) {
                return Err(Error::domain(format!(
                    "prey {} is out of range or assigned twice",
                    a.prey
                )));
            }
            for &u in a.clique.members() {
                if u >= n {
                    return Err(Error::domain(format!("clique member {u} out of range")));
                }
                expected.push((u, a.prey));
            }
        }
        expected.sort_unstable();
        if expected.len() != digraph.arc_count() || !expected.iter().copied().eq(digraph.arcs()) {
            return Err(Error::domain(
                "digraph arcs differ from the arcs implied by the assignment",
            ));
        }
        Ok(Realization {
            digraph,
            ordering,
            assignment,
        })
    }

    pub fn digraph(&self) -> &Digraph {
        &self.digraph
    }

    pub fn ordering(&self) -> &AcyclicOrdering {
        &self.ordering
    }

    pub fn assignment(&self) -> &[Assignment] {
        &self.assignment
    }

    /// Number of extra vertices.
    pub fn k(&self) -> usize {
        self.digraph.isolated_labels().len()
    }

    pub fn assigned_family(&self) -> CliqueFamily {
        self.assignment.iter().map(|a| a.clique.clone()).collect()
    }

    /// The graph on the real vertices of the digraph.
    pub fn host(&self) -> Result<Graph> {
        Ok(competition_graph(&self.digraph).real)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Clause {
    Cycle,
    ExtraEdge,
    MissingEdge,
    ExtraVertexNotIsolated,
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Clause::Cycle => "cycle",
            Clause::ExtraEdge => "extra-edge",
            Clause::MissingEdge => "missing-edge",
            Clause::ExtraVertexNotIsolated => "z-not-isolated",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail { clause: Clause, witness: String },
}

impl Verdict {
    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Pass => f.write_str("PASS"),
            Verdict::Fail { clause, witness } => write!(f, "FAIL {clause} {witness}"),
        }
    }
}

/// Checks that `d` is acyclic and `C(D) = G ∪ {z_1, ..., z_k}` with labels
/// compared verbatim.
pub fn verify_realization(d: &Digraph, g: &Graph, k: usize) -> Result<Verdict> {
    if d.real_vertices() != g.vertices() {
        return Err(Error::domain(
            "real vertices of the digraph do not match the graph's vertex list",
        ));
    }
    if d.isolated_labels().len() != k {
        return Err(Error::domain(format!(
            "digraph has {} extra vertices, expected k = {k}",
            d.isolated_labels().len()
        )));
    }

    if let TopoOutcome::Cycle(c) = topological_check(d) {
        let mut labels: Vec<String> = c.iter().map(|&v| d.label(v)).collect();
        labels.push(d.label(c[0]));
        return Ok(Verdict::Fail {
            clause: Clause::Cycle,
            witness: labels.join("->"),
        });
    }

    let cg = competition_graph(d);
    let edge_label = |(u, v): (usize, usize)| format!("{}--{}", d.label(u), d.label(v));
    if let Some(e) = cg.real.edges().find(|&(u, v)| !g.has_edge(u, v)) {
        return Ok(Verdict::Fail {
            clause: Clause::ExtraEdge,
            witness: edge_label(e),
        });
    }
    if let Some(e) = g.edges().find(|&(u, v)| !cg.real.has_edge(u, v)) {
        return Ok(Verdict::Fail {
            clause: Clause::MissingEdge,
            witness: edge_label(e),
        });
    }
    if let Some(&e) = cg.extra_edges.first() {
        return Ok(Verdict::Fail {
            clause: Clause::ExtraVertexNotIsolated,
            witness: edge_label(e),
        });
    }
    Ok(Verdict::Pass)
}

/// Cliques that cannot all receive distinct eligible preys, with the preys
/// they could use between them (one fewer than the cliques).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HallViolator {
    pub cliques: Vec<usize>,
    pub preys: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RealizeOutcome {
    Realized(Realization),
    Infeasible(HallViolator),
}

/// Assigns every clique of the cover `f` to a distinct prey strictly earlier
/// than all of its members, where the ordering is `z_1, ..., z_k` followed by
/// `ordering` (a permutation of the vertices of `g`).
pub fn realize_from_ecc(g: &Graph, f: &CliqueFamily, ordering: &[usize], k: usize) -> Result<RealizeOutcome> {
    realize_from_ecc_excluding(g, f, ordering, k, &[])
}

/// As [`realize_from_ecc`], but the real vertices in `excluded` never act as preys.
pub fn realize_from_ecc_excluding(
    g: &Graph,
    f: &CliqueFamily,
    ordering: &[usize],
    k: usize,
    excluded: &[usize],
) -> Result<RealizeOutcome> {
    f.validate(g)?;
    if let Some((u, v)) = uncovered_edge(g, f) {
        return Err(Error::domain(format!(
            "family is not an edge clique cover: ({})--({}) is uncovered",
            g.vertex(u),
            g.vertex(v)
        )));
    }
    let m = g.vertex_count();
    let pos = positions(m, ordering)?;

    // right side: digraph indices in ordering position order
    let mut slots: Vec<usize> = (m..m + k).collect();
    slots.extend(ordering.iter().copied().filter(|v| !excluded.contains(v)));
    let slot_of = |prey: usize| slots.iter().position(|&s| s == prey).expect("slot");
    let eligible: Vec<Vec<usize>> = f
        .iter()
        .map(|c| {
            let first = c.members().iter().map(|&u| pos[u]).min().unwrap_or(0);
            let mut opts: Vec<usize> = (0..k).collect();
            opts.extend(
                ordering[..first]
                    .iter()
                    .filter(|v| !excluded.contains(v))
                    .map(|&v| slot_of(v)),
            );
            opts
        })
        .collect();
    let matching = maximum_matching(&eligible, slots.len());
    if let Some(start) = matching.left.iter().position(Option::is_none) {
        let (cliques, preys) = hall_violator(&eligible, &matching, start);
        return Ok(RealizeOutcome::Infeasible(HallViolator {
            cliques,
            preys: preys.into_iter().map(|s| slots[s]).collect(),
        }));
    }

    let assignment: Vec<Assignment> = f
        .iter()
        .zip(&matching.left)
        .map(|(c, slot)| Assignment {
            clique: c.clone(),
            prey: slots[slot.expect("perfect matching")],
        })
        .collect();
    let arcs = assignment
        .iter()
        .flat_map(|a| a.clique.members().iter().map(move |&u| (u, a.prey)));
    let digraph = Digraph::new(
        g.vertices().to_vec(),
        g.dims().map(<[u32]>::to_vec),
        Digraph::z_labels(k),
        arcs,
    )?;
    let full_order: Vec<usize> = (m..m + k).chain(ordering.iter().copied()).collect();
    Ok(RealizeOutcome::Realized(Realization::new(
        digraph,
        full_order,
        assignment,
    )?))
}
