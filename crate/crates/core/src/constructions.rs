//! Explicit acyclic digraphs realizing `H(2,q) ∪ I_2` and
//! `(K_{q1} □ K_{q2} □ K_{q3}) ∪ I_6`.

use std::collections::HashMap;

use crate::clique::{axis_clique, canonical_family, vertex_index, Clique};
use crate::competition::{realize_from_ecc_excluding, Assignment, Realization, RealizeOutcome};
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::graph::{box_graph_with_limit, hamming_graph, Graph, DEFAULT_VERTEX_LIMIT};

fn realization_from_assignment(g: &Graph, k: usize, ordering: Vec<usize>, assignment: Vec<Assignment>) -> Result<Realization> {
    let arcs: Vec<(usize, usize)> = assignment
        .iter()
        .flat_map(|a| a.clique.members().iter().map(move |&u| (u, a.prey)))
        .collect();
    let digraph = Digraph::new(
        g.vertices().to_vec(),
        g.dims().map(<[u32]>::to_vec),
        Digraph::z_labels(k),
        arcs,
    )?;
    Realization::new(digraph, ordering, assignment)
}

/// The digraph on `[q]^2 ∪ {z1, z2}` with `S_1(1) -> z1`, `S_2(1) -> z2`,
/// `S_1(i) -> (1, i-1)` and `S_2(i) -> (i-1, q)` for `2 <= i <= q`.
///
/// Ordering: `z1, z2`, then `[q]^2` lexicographically.
pub fn build_d_h2q(q: u32) -> Result<Realization> {
    if q < 2 {
        return Err(Error::domain(format!("H(2,q) construction needs q >= 2, got {q}")));
    }
    let g = hamming_graph(2, q)?;
    let m = g.vertex_count();
    let (z1, z2) = (m, m + 1);
    let mut assignment = vec![
        Assignment {
            clique: axis_clique(&g, 1, &[1])?,
            prey: z1,
        },
        Assignment {
            clique: axis_clique(&g, 2, &[1])?,
            prey: z2,
        },
    ];
    for i in 2..=q {
        assignment.push(Assignment {
            clique: axis_clique(&g, 1, &[i])?,
            prey: vertex_index(&g, &[1, i - 1])?,
        });
        assignment.push(Assignment {
            clique: axis_clique(&g, 2, &[i])?,
            prey: vertex_index(&g, &[i - 1, q])?,
        });
    }
    let ordering = (m..m + 2).chain(0..m).collect();
    realization_from_assignment(&g, 2, ordering, assignment)
}

/// A realization of `H(3,2) ∪ I_6` whose in-neighbourhoods are cube edges,
/// found by matching the twelve edges to preys under the lexicographic
/// ordering with the last two vertices kept prey-free.
pub fn build_d_h32() -> Result<Realization> {
    let g = hamming_graph(3, 2)?;
    let edges = canonical_family(&g)?;
    let lex: Vec<usize> = (0..g.vertex_count()).collect();
    let last_two = &lex[lex.len() - 2..];
    match realize_from_ecc_excluding(&g, &edges, &lex, 6, last_two)? {
        RealizeOutcome::Realized(r) => Ok(r),
        RealizeOutcome::Infeasible(h) => panic!("H(3,2) base case must be realizable with k = 6: {h:?}"),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Node {
    Real([u32; 3]),
    Extra(usize),
}

/// A box realization in coordinates, so that a smaller box embeds unchanged
/// into a larger one.
struct Partial {
    ordering: Vec<Node>,
    /// Sorted clique members and their prey.
    assignment: Vec<(Vec<[u32; 3]>, Node)>,
}

/// The axis reduced at each induction step: the first one longer than 2.
fn reduction_axis(dims: [u32; 3]) -> Option<usize> {
    dims.iter().position(|&q| q > 2)
}

fn base_partial() -> Result<Partial> {
    let r = build_d_h32()?;
    let d = r.digraph();
    let coords = |v: usize| -> [u32; 3] {
        let c = d.real_vertices()[v].coords();
        [c[0], c[1], c[2]]
    };
    let node = |v: usize| {
        if d.is_extra(v) {
            Node::Extra(v - d.real_count())
        } else {
            Node::Real(coords(v))
        }
    };
    Ok(Partial {
        ordering: r.ordering().as_slice().iter().map(|&v| node(v)).collect(),
        assignment: r
            .assignment()
            .iter()
            .map(|a| (a.clique.members().iter().map(|&u| coords(u)).collect(), node(a.prey)))
            .collect(),
    })
}

fn box_partial(dims: [u32; 3]) -> Result<Partial> {
    let Some(a) = reduction_axis(dims) else {
        return base_partial();
    };
    let mut reduced = dims;
    reduced[a] -= 1;
    let mut p = box_partial(reduced)?;

    let (b, c) = match a {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    };
    let (qa, qb, qc) = (dims[a], dims[b], dims[c]);
    let slab = |pb: u32, pc: u32| {
        let mut x = [0; 3];
        x[a] = qa;
        x[b] = pb;
        x[c] = pc;
        x
    };

    let len = p.ordering.len();
    let (w1, w2) = (p.ordering[len - 2], p.ordering[len - 1]);
    assert!(
        p.assignment.iter().all(|(_, prey)| *prey != w1 && *prey != w2),
        "last two vertices of the smaller realization must be prey-free"
    );

    // glue: S_a((pb, pc)) minus its slab vertex is an assigned clique of the smaller box
    let position: HashMap<Node, usize> = p.ordering.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut by_clique: HashMap<Vec<[u32; 3]>, usize> = HashMap::new();
    for (i, (members, prey)) in p.assignment.iter().enumerate() {
        by_clique
            .entry(members.clone())
            .and_modify(|best| {
                if position[prey] < position[&p.assignment[*best].1] {
                    *best = i;
                }
            })
            .or_insert(i);
    }
    for pb in 1..=qb {
        for pc in 1..=qc {
            let mut stem: Vec<[u32; 3]> = (1..qa)
                .map(|l| {
                    let mut x = slab(pb, pc);
                    x[a] = l;
                    x
                })
                .collect();
            stem.sort_unstable();
            let i = *by_clique
                .get(&stem)
                .expect("every truncated axis clique has a prey in the smaller realization");
            let members = &mut p.assignment[i].0;
            members.push(slab(pb, pc));
            members.sort_unstable();
        }
    }

    // slab digraph: S_b-cliques along the c axis, S_c-cliques along the b axis
    for i in 1..=qc {
        let prey = if i == 1 { w1 } else { Node::Real(slab(1, i - 1)) };
        let mut members: Vec<[u32; 3]> = (1..=qb).map(|l| slab(l, i)).collect();
        members.sort_unstable();
        p.assignment.push((members, prey));
    }
    for i in 1..=qb {
        let prey = if i == 1 { w2 } else { Node::Real(slab(i - 1, qc)) };
        let mut members: Vec<[u32; 3]> = (1..=qc).map(|l| slab(i, l)).collect();
        members.sort_unstable();
        p.assignment.push((members, prey));
    }

    for pb in 1..=qb {
        for pc in 1..=qc {
            p.ordering.push(Node::Real(slab(pb, pc)));
        }
    }
    Ok(p)
}

/// Realization of `K_{q1} □ K_{q2} □ K_{q3} ∪ I_6` by induction on
/// `q1 + q2 + q3`, starting from [`build_d_h32`].
pub fn build_d_box(dims: &[u32]) -> Result<Realization> {
    build_d_box_with_limit(dims, DEFAULT_VERTEX_LIMIT)
}

pub fn build_d_box_with_limit(dims: &[u32], limit: usize) -> Result<Realization> {
    let &[q1, q2, q3] = dims else {
        return Err(Error::domain(format!("box construction needs three dimensions, got {dims:?}")));
    };
    let g = box_graph_with_limit(dims, limit)?;
    let p = box_partial([q1, q2, q3])?;
    let m = g.vertex_count();
    let index = |v: Node| match v {
        Node::Real(x) => g.index_of_coords(&x).expect("vertex of the box"),
        Node::Extra(i) => m + i,
    };
    let ordering = p.ordering.iter().map(|&v| index(v)).collect();
    let assignment = p
        .assignment
        .iter()
        .map(|(members, prey)| Assignment {
            clique: Clique::new(members.iter().map(|&x| index(Node::Real(x))).collect()),
            prey: index(*prey),
        })
        .collect();
    realization_from_assignment(&g, 6, ordering, assignment)
}
