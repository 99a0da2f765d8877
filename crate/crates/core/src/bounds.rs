//! Lower bounds, counting checks and the exact competition-number oracle.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;

use crate::clique::{maximal_cliques, neighborhood_subgraph, theta_v_bruteforce_with_limit, Clique, CliqueFamily, THETA_LIMIT};
use crate::competition::{realize_from_ecc, Realization, RealizeOutcome};
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matching::maximum_matching;

/// Default vertex limit for [`competition_number_bruteforce`].
pub const BRUTE_FORCE_LIMIT: usize = 9;

/// The competition number of `H(n, q)` where a closed form is known.
pub fn known_competition_number(n: usize, q: u32) -> Option<u64> {
    match (n, q) {
        (0, _) | (_, 0) => None,
        (_, 1) => Some(0),
        (n, 2) => {
            // (n - 2) 2^{n-1} + 2
            let half = 1u64.checked_shl(n as u32 - 1)?;
            (n as u64).checked_mul(half)?.checked_add(2)?.checked_sub(2 * half)
        }
        (1, _) => Some(1),
        (2, _) => Some(2),
        (3, _) => Some(6),
        _ => None,
    }
}

/// `|E| - |V| + 2`, valid for connected triangle-free graphs on at least two vertices.
pub fn triangle_free_formula(g: &Graph) -> Result<usize> {
    if g.vertex_count() < 2 {
        return Err(Error::domain("graph needs at least two vertices"));
    }
    if !g.is_connected() {
        return Err(Error::domain("graph is not connected"));
    }
    if g.has_triangle() {
        return Err(Error::domain("graph contains a triangle"));
    }
    Ok(g.edge_count() + 2 - g.vertex_count())
}

/// `min_v θ_V(N(v))` over open neighbourhoods.
pub fn opsut_lower_bound(g: &Graph) -> Result<usize> {
    opsut_lower_bound_with_limit(g, THETA_LIMIT)
}

pub fn opsut_lower_bound_with_limit(g: &Graph, limit: usize) -> Result<usize> {
    let mut best = None;
    for v in 0..g.vertex_count() {
        let theta = theta_v_bruteforce_with_limit(&neighborhood_subgraph(g, v, false)?, limit)?;
        best = Some(best.map_or(theta, |b: usize| b.min(theta)));
    }
    Ok(best.unwrap_or(0))
}

/// Number of members of `f` that meet `u`.
pub fn count_intersecting_cliques(f: &CliqueFamily, u: &[usize]) -> usize {
    f.iter()
        .filter(|c| u.iter().any(|&v| c.contains(v)))
        .count()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CountingVerdict {
    Pass,
    /// The first prefix `{v_1, ..., v_i}` meeting more than `k + i - 1` cliques.
    Fail { i: usize, count: usize, bound: usize },
}

impl fmt::Display for CountingVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CountingVerdict::Pass => f.write_str("PASS"),
            CountingVerdict::Fail { i, count, bound } => {
                write!(f, "FAIL counting i={i} count={count} bound={bound}")
            }
        }
    }
}

/// For the ordering `z_1..z_k, v_1..v_m` of `r`, checks that every prefix
/// `{v_1..v_i}` meets at most `k + i - 1` members of `f`.
pub fn check_counting_inequality(r: &Realization, f: &CliqueFamily, k: usize) -> Result<CountingVerdict> {
    let d = r.digraph();
    let order = r.ordering().as_slice();
    if d.isolated_labels().len() != k || !order[..k].iter().all(|&v| d.is_extra(v)) {
        return Err(Error::domain(format!(
            "ordering must start with exactly the {k} extra vertices"
        )));
    }
    let mut containing: Vec<Vec<usize>> = vec![Vec::new(); d.real_count()];
    for (ci, c) in f.iter().enumerate() {
        for &v in c.members() {
            if v >= d.real_count() {
                return Err(Error::domain(format!("clique member {v} is not a real vertex")));
            }
            containing[v].push(ci);
        }
    }
    let mut hit = vec![false; f.len()];
    let mut count = 0;
    for (i, &v) in order[k..].iter().enumerate() {
        for &ci in &containing[v] {
            if !std::mem::replace(&mut hit[ci], true) {
                count += 1;
            }
        }
        let bound = k + i;
        if count > bound {
            return Ok(CountingVerdict::Fail { i: i + 1, count, bound });
        }
    }
    Ok(CountingVerdict::Pass)
}

/// `k(H(n,q)) >= 3n - 4` for `n >= 3`, `q >= 3`.
pub fn lower_bound_3n_minus_4(n: usize, q: u32) -> Result<usize> {
    if n < 3 || q < 3 {
        return Err(Error::domain(format!(
            "bound holds for n >= 3 and q >= 3, got ({n},{q})"
        )));
    }
    Ok(3 * n - 4)
}

/// Isomorphism types of graphs on four vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FourVertexType {
    K4,
    Diamond,
    Paw,
    C4,
    P4,
    Claw,
    TriangleAndIsolated,
    TwoK2,
    P3AndIsolated,
    K2AndTwoIsolated,
    I4,
}

impl FourVertexType {
    pub const ALL: [FourVertexType; 11] = [
        FourVertexType::K4,
        FourVertexType::Diamond,
        FourVertexType::Paw,
        FourVertexType::C4,
        FourVertexType::P4,
        FourVertexType::Claw,
        FourVertexType::TriangleAndIsolated,
        FourVertexType::TwoK2,
        FourVertexType::P3AndIsolated,
        FourVertexType::K2AndTwoIsolated,
        FourVertexType::I4,
    ];

    /// Roman numeral in the conventional listing (i) K4 ... (xi) I4.
    pub fn numeral(self) -> &'static str {
        ["i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix", "x", "xi"][self as usize]
    }

    pub fn name(self) -> &'static str {
        match self {
            FourVertexType::K4 => "K_4",
            FourVertexType::Diamond => "K_{1,1,2}",
            FourVertexType::Paw => "K_4 - E(P_3)",
            FourVertexType::C4 => "C_4",
            FourVertexType::P4 => "P_4",
            FourVertexType::Claw => "K_{1,3}",
            FourVertexType::TriangleAndIsolated => "K_3 ∪ I_1",
            FourVertexType::TwoK2 => "K_2 ∪ K_2",
            FourVertexType::P3AndIsolated => "P_3 ∪ I_1",
            FourVertexType::K2AndTwoIsolated => "K_2 ∪ I_2",
            FourVertexType::I4 => "I_4",
        }
    }
}

impl fmt::Display for FourVertexType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) {}", self.numeral(), self.name())
    }
}

fn classify_four(g: &Graph, u: [usize; 4]) -> FourVertexType {
    let mut deg = [0usize; 4];
    let mut edges = 0;
    for a in 0..4 {
        for b in a + 1..4 {
            if g.has_edge(u[a], u[b]) {
                deg[a] += 1;
                deg[b] += 1;
                edges += 1;
            }
        }
    }
    deg.sort_unstable_by(|x, y| y.cmp(x));
    use FourVertexType::*;
    match (edges, deg) {
        (6, _) => K4,
        (5, _) => Diamond,
        (4, [2, 2, 2, 2]) => C4,
        (4, _) => Paw,
        (3, [3, 1, 1, 1]) => Claw,
        (3, [2, 2, 2, 0]) => TriangleAndIsolated,
        (3, _) => P4,
        (2, [1, 1, 1, 1]) => TwoK2,
        (2, _) => P3AndIsolated,
        (1, _) => K2AndTwoIsolated,
        _ => I4,
    }
}

/// Isomorphism type of the subgraph induced by four distinct vertices.
pub fn induced_type_on_4(g: &Graph, u: &[usize]) -> Result<FourVertexType> {
    let &[a, b, c, d] = u else {
        return Err(Error::domain(format!("need exactly four vertices, got {}", u.len())));
    };
    let set: BTreeSet<usize> = u.iter().copied().collect();
    if set.len() != 4 || set.iter().any(|&v| v >= g.vertex_count()) {
        return Err(Error::domain("vertices must be distinct and in range"));
    }
    Ok(classify_four(g, [a, b, c, d]))
}

/// Scans every 4-subset of `g`, recording which counts of intersecting
/// members of `f` occur for each induced type.
pub fn scan_four_subsets(g: &Graph, f: &CliqueFamily) -> BTreeMap<FourVertexType, BTreeSet<usize>> {
    let n = g.vertex_count();
    let mut containing: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (ci, c) in f.iter().enumerate() {
        for &v in c.members() {
            containing[v].push(ci);
        }
    }
    let mut table: BTreeMap<FourVertexType, BTreeSet<usize>> = BTreeMap::new();
    let mut seen = vec![usize::MAX; f.len()];
    let mut stamp = 0;
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let u = [a, b, c, d];
                    stamp += 1;
                    let mut count = 0;
                    for &v in &u {
                        for &ci in &containing[v] {
                            if seen[ci] != stamp {
                                seen[ci] = stamp;
                                count += 1;
                            }
                        }
                    }
                    table.entry(classify_four(g, u)).or_default().insert(count);
                }
            }
        }
    }
    table
}

#[derive(Clone, Debug)]
pub enum BruteForceOutcome {
    /// The exact competition number with a certificate.
    Exact { k: usize, witness: Realization },
    ExceedsKMax,
}

/// Exact `k(G)` by search over irredundant edge clique covers and vertex
/// orderings; returns [`BruteForceOutcome::ExceedsKMax`] if `k(G) > k_max`.
pub fn competition_number_bruteforce(g: &Graph, k_max: Option<usize>) -> Result<BruteForceOutcome> {
    competition_number_bruteforce_with_limit(g, k_max, BRUTE_FORCE_LIMIT)
}

pub fn competition_number_bruteforce_with_limit(
    g: &Graph,
    k_max: Option<usize>,
    limit: usize,
) -> Result<BruteForceOutcome> {
    Error::check_limit("vertex count", g.vertex_count(), limit.min(64))?;
    let k_max = k_max.unwrap_or(g.edge_count());
    let n = g.vertex_count();

    if g.edge_count() == 0 {
        let d = Digraph::new(g.vertices().to_vec(), g.dims().map(<[u32]>::to_vec), Vec::new(), [])?;
        let witness = Realization::new(d, (0..n).collect(), Vec::new())?;
        return Ok(BruteForceOutcome::Exact { k: 0, witness });
    }

    let mut families = irredundant_covers(g)?;
    families.sort_by_key(|f| f.len());

    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));

    let mut search = OrderSearch {
        n,
        by_degree,
        best: k_max + 1,
        witness: None,
    };
    for (fi, f) in families.iter().enumerate() {
        if search.best == 0 {
            break;
        }
        search.run_family(fi, f);
    }

    match search.witness {
        None => Ok(BruteForceOutcome::ExceedsKMax),
        Some((fi, order)) => {
            let k = search.best;
            match realize_from_ecc(g, &families[fi], &order, k)? {
                RealizeOutcome::Realized(witness) => Ok(BruteForceOutcome::Exact { k, witness }),
                RealizeOutcome::Infeasible(h) => unreachable!("matching deficiency disagrees with realization: {h:?}"),
            }
        }
    }
}

/// Every edge clique cover made of cliques of size >= 2 in which each member
/// covers an edge no other member covers.
fn irredundant_covers(g: &Graph) -> Result<Vec<CliqueFamily>> {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut cliques: BTreeSet<Vec<usize>> = BTreeSet::new();
    for m in maximal_cliques(g)?.iter().filter(|c| c.len() >= 2) {
        let members = m.members();
        for mask in 1u64..1 << members.len() {
            if mask.count_ones() >= 2 {
                cliques.insert((0..members.len()).filter(|&i| mask >> i & 1 == 1).map(|i| members[i]).collect());
            }
        }
    }
    let cliques: Vec<Vec<usize>> = cliques.into_iter().collect();
    let covers: Vec<Vec<usize>> = cliques
        .iter()
        .map(|c| {
            edges
                .iter()
                .enumerate()
                .filter(|(_, (u, v))| c.contains(u) && c.contains(v))
                .map(|(i, _)| i)
                .collect()
        })
        .collect();
    let by_edge: Vec<Vec<usize>> = (0..edges.len())
        .map(|e| (0..cliques.len()).filter(|&c| covers[c].contains(&e)).collect())
        .collect();

    fn extend(
        chosen: &mut Vec<usize>,
        multiplicity: &mut Vec<usize>,
        covers: &[Vec<usize>],
        by_edge: &[Vec<usize>],
        out: &mut HashSet<Vec<usize>>,
    ) {
        let Some(e) = multiplicity.iter().position(|&m| m == 0) else {
            let private = |c: usize| covers[c].iter().any(|&e| multiplicity[e] == 1);
            if chosen.iter().all(|&c| private(c)) {
                let mut fam = chosen.clone();
                fam.sort_unstable();
                out.insert(fam);
            }
            return;
        };
        for &c in &by_edge[e] {
            // adding c must not make an already chosen clique redundant
            chosen.push(c);
            covers[c].iter().for_each(|&x| multiplicity[x] += 1);
            let still_private = chosen[..chosen.len() - 1]
                .iter()
                .all(|&o| covers[o].iter().any(|&x| multiplicity[x] == 1));
            if still_private {
                extend(chosen, multiplicity, covers, by_edge, out);
            }
            covers[c].iter().for_each(|&x| multiplicity[x] -= 1);
            chosen.pop();
        }
    }

    let mut found = HashSet::new();
    extend(&mut Vec::new(), &mut vec![0; edges.len()], &covers, &by_edge, &mut found);
    let mut found: Vec<Vec<usize>> = found.into_iter().collect();
    found.sort();
    Ok(found
        .into_iter()
        .map(|fam| fam.into_iter().map(|c| Clique::new(cliques[c].clone())).collect())
        .collect())
}

struct OrderSearch {
    n: usize,
    by_degree: Vec<usize>,
    /// Smallest k found so far (or k_max + 1).
    best: usize,
    witness: Option<(usize, Vec<usize>)>,
}

impl OrderSearch {
    fn run_family(&mut self, fi: usize, f: &CliqueFamily) {
        let masks: Vec<u64> = f
            .iter()
            .map(|c| c.members().iter().fold(0u64, |m, &v| m | 1 << v))
            .collect();
        let per_vertex: Vec<Vec<usize>> = (0..self.n)
            .map(|v| (0..masks.len()).filter(|&c| masks[c] >> v & 1 == 1).collect())
            .collect();
        // the last vertex is never a prey, so at most n - 1 real preys
        let floor = f.len().saturating_sub(self.n - 1);
        let min_first = per_vertex.iter().map(Vec::len).min().unwrap_or(0);
        if floor.max(min_first) >= self.best {
            return;
        }
        let mut state = PrefixState {
            order: Vec::with_capacity(self.n),
            placed: 0,
            hit: vec![false; masks.len()],
            hit_count: 0,
            bound: 0,
        };
        self.extend(fi, &masks, &per_vertex, &mut state);
    }

    fn extend(&mut self, fi: usize, masks: &[u64], per_vertex: &[Vec<usize>], s: &mut PrefixState) {
        if s.order.len() == self.n {
            let k = masks.len() - real_prey_matching(masks, &s.order);
            if k < self.best {
                self.best = k;
                self.witness = Some((fi, s.order.clone()));
            }
            return;
        }
        for idx in 0..self.n {
            let v = self.by_degree[idx];
            if s.placed >> v & 1 == 1 {
                continue;
            }
            let saved = (s.hit_count, s.bound);
            let mut newly = Vec::new();
            for &c in &per_vertex[v] {
                if !s.hit[c] {
                    s.hit[c] = true;
                    newly.push(c);
                }
            }
            s.hit_count += newly.len();
            // prefix of length i meets at most k + i - 1 members
            let i = s.order.len() + 1;
            s.bound = s.bound.max((s.hit_count + 1).saturating_sub(i));
            if s.bound < self.best {
                s.order.push(v);
                s.placed |= 1 << v;
                self.extend(fi, masks, per_vertex, s);
                s.placed &= !(1 << v);
                s.order.pop();
            }
            for c in newly {
                s.hit[c] = false;
            }
            (s.hit_count, s.bound) = saved;
            if self.best == 0 {
                return;
            }
        }
    }
}

struct PrefixState {
    order: Vec<usize>,
    placed: u64,
    hit: Vec<bool>,
    hit_count: usize,
    bound: usize,
}

/// Largest set of cliques that can take distinct real preys, each prey
/// strictly earlier than every member of its clique.
fn real_prey_matching(masks: &[u64], order: &[usize]) -> usize {
    let mut pos = [0usize; 64];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let eligible: Vec<Vec<usize>> = masks
        .iter()
        .map(|&m| {
            let mut first = usize::MAX;
            let mut rest = m;
            while rest != 0 {
                first = first.min(pos[rest.trailing_zeros() as usize]);
                rest &= rest - 1;
            }
            (0..first).collect()
        })
        .collect();
    maximum_matching(&eligible, order.len()).size()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clique::{canonical_family, vertex_index};
    use crate::graph::hamming_graph;

    fn exact(g: &Graph) -> usize {
        match competition_number_bruteforce(g, None).unwrap() {
            BruteForceOutcome::Exact { k, .. } => k,
            BruteForceOutcome::ExceedsKMax => panic!("k_max defaults to |E|"),
        }
    }

    #[test]
    fn known_values() {
        assert_eq!(known_competition_number(5, 2), Some(50));
        assert_eq!(known_competition_number(3, 7), Some(6));
        assert_eq!(known_competition_number(4, 3), None);
        assert_eq!(known_competition_number(1, 2), Some(1));
        assert_eq!(known_competition_number(2, 2), Some(2));
        assert_eq!(known_competition_number(3, 2), Some(6));
        assert_eq!(known_competition_number(7, 1), Some(0));
        assert_eq!(known_competition_number(1, 9), Some(1));
        assert_eq!(known_competition_number(2, 9), Some(2));
    }

    #[test]
    fn triangle_free_examples() {
        assert_eq!(triangle_free_formula(&hamming_graph(3, 2).unwrap()).unwrap(), 6);
        assert_eq!(triangle_free_formula(&hamming_graph(2, 2).unwrap()).unwrap(), 2);
        assert!(triangle_free_formula(&hamming_graph(1, 3).unwrap()).is_err());
        assert!(triangle_free_formula(&Graph::from_edge_list(3, &[(0, 1)]).unwrap()).is_err());
        assert!(triangle_free_formula(&Graph::from_edge_list(1, &[]).unwrap()).is_err());
    }

    #[test]
    fn opsut_examples() {
        assert_eq!(opsut_lower_bound(&hamming_graph(2, 3).unwrap()).unwrap(), 2);
        assert_eq!(opsut_lower_bound(&hamming_graph(3, 2).unwrap()).unwrap(), 3);
        assert_eq!(opsut_lower_bound(&hamming_graph(1, 5).unwrap()).unwrap(), 1);
    }

    #[test]
    fn counting_examples() {
        let g = hamming_graph(3, 3).unwrap();
        let f = canonical_family(&g).unwrap();
        let idx = |c: &[u32]| vertex_index(&g, c).unwrap();
        let k3 = [idx(&[1, 1, 1]), idx(&[2, 1, 1]), idx(&[3, 1, 1])];
        assert_eq!(count_intersecting_cliques(&f, &k3), 7);
        let c4 = [idx(&[1, 1, 1]), idx(&[1, 1, 2]), idx(&[1, 2, 2]), idx(&[1, 2, 1])];
        assert_eq!(count_intersecting_cliques(&f, &c4), 8);
        assert_eq!(induced_type_on_4(&g, &c4).unwrap(), FourVertexType::C4);
        assert_eq!(count_intersecting_cliques(&f, &[]), 0);
        assert!(induced_type_on_4(&g, &c4[..3]).is_err());
        assert!(induced_type_on_4(&g, &[0, 0, 1, 2]).is_err());
    }

    #[test]
    fn four_vertex_types() {
        let h = hamming_graph(3, 4).unwrap();
        let line: Vec<usize> = (1..=4).map(|c| vertex_index(&h, &[1, 1, c]).unwrap()).collect();
        assert_eq!(induced_type_on_4(&h, &line).unwrap(), FourVertexType::K4);
        let far = [vec![1, 1, 1], vec![2, 2, 1], vec![3, 3, 1], vec![4, 4, 1]]
            .map(|c| vertex_index(&h, &c).unwrap());
        assert_eq!(induced_type_on_4(&h, &far).unwrap(), FourVertexType::I4);
        let diamond = Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert_eq!(induced_type_on_4(&diamond, &[0, 1, 2, 3]).unwrap(), FourVertexType::Diamond);
        assert_eq!(FourVertexType::Paw.to_string(), "(iii) K_4 - E(P_3)");
    }

    #[test]
    fn lemma_bound() {
        assert_eq!(lower_bound_3n_minus_4(3, 3).unwrap(), 5);
        assert_eq!(lower_bound_3n_minus_4(4, 3).unwrap(), 8);
        assert!(lower_bound_3n_minus_4(3, 2).is_err());
        assert!(lower_bound_3n_minus_4(2, 5).is_err());
    }

    #[test]
    fn brute_force_small_values() {
        assert_eq!(exact(&hamming_graph(2, 2).unwrap()), 2);
        assert_eq!(exact(&hamming_graph(1, 3).unwrap()), 1);
        assert_eq!(exact(&hamming_graph(3, 2).unwrap()), 6);
        assert_eq!(exact(&hamming_graph(2, 1).unwrap()), 0);
        let path = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(exact(&path), 1);
        // an isolated vertex can serve as the prey of the edge
        let k2_plus_k1 = Graph::from_edge_list(3, &[(1, 2)]).unwrap();
        assert_eq!(exact(&k2_plus_k1), 0);
    }

    #[test]
    fn brute_force_k_max_and_limit() {
        let g = hamming_graph(3, 2).unwrap();
        assert!(matches!(
            competition_number_bruteforce(&g, Some(5)).unwrap(),
            BruteForceOutcome::ExceedsKMax
        ));
        assert!(matches!(
            competition_number_bruteforce(&hamming_graph(2, 4).unwrap(), None),
            Err(Error::Resource { limit: 9, .. })
        ));
    }

    #[test]
    fn irredundant_covers_of_triangle() {
        let k3 = hamming_graph(1, 3).unwrap();
        let covers = irredundant_covers(&k3).unwrap();
        let sizes: Vec<usize> = covers.iter().map(CliqueFamily::len).collect();
        assert_eq!(covers.len(), 2);
        assert!(sizes.contains(&1) && sizes.contains(&3));
    }
}
