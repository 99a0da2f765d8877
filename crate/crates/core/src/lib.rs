//! Competition numbers of Hamming graphs.
//!
//! The crate builds and checks acyclic digraphs whose competition graphs are
//! `H(2,q) ∪ I_2` and `(K_{q1} □ K_{q2} □ K_{q3}) ∪ I_6`, and provides exact
//! brute-force oracles (competition number, `θ_E`, `θ_V`) for small graphs.

pub mod bounds;
pub mod clique;
pub mod competition;
pub mod constructions;
pub mod digraph;
pub mod error;
pub mod graph;
pub mod io;
pub mod matching;

pub use bounds::{
    check_counting_inequality, competition_number_bruteforce, competition_number_bruteforce_with_limit,
    count_intersecting_cliques, induced_type_on_4, known_competition_number, lower_bound_3n_minus_4,
    opsut_lower_bound, scan_four_subsets, triangle_free_formula, BruteForceOutcome, CountingVerdict,
    FourVertexType,
};
pub use clique::{
    axis_clique, canonical_family, is_edge_clique_cover, maximal_cliques, neighborhood_subgraph,
    theta_e_bruteforce, theta_v_bruteforce, unique_containing_maximal_clique, Clique, CliqueFamily,
};
pub use competition::{
    competition_graph, in_neighborhood_cliques, in_neighborhood_family, realize_from_ecc,
    verify_realization, Assignment, Realization, RealizeOutcome, Verdict,
};
pub use constructions::{build_d_box, build_d_h2q, build_d_h32};
pub use digraph::{topological_check, AcyclicOrdering, Digraph, TopoOutcome};
pub use error::{Error, Result};
pub use graph::{box_graph, hamming_distance, hamming_graph, lex_compare, Graph, Vertex};
