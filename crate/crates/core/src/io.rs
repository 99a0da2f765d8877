//! JSON documents and Graphviz DOT export.
//!
//! Graph: `{"kind":"graph","dims":[..],"vertices":[[..],..],"edges":[[i,j],..]}`
//! with `i < j`. Digraphs add `"isolated":["z1",..]` and `"arcs":[[src,dst],..]`,
//! the isolated vertices taking the indices after the real ones. Realizations
//! add `"ordering"` and `"assignment":[{"clique":[..],"prey":i},..]`.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::clique::{Clique, CliqueFamily};
use crate::competition::{Assignment, Realization};
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDoc {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dims: Option<Vec<u32>>,
    pub vertices: Vec<Vec<u32>>,
    pub edges: Vec<[usize; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DigraphDoc {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dims: Option<Vec<u32>>,
    pub vertices: Vec<Vec<u32>>,
    #[serde(default)]
    pub isolated: Vec<String>,
    pub arcs: Vec<[usize; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AssignmentDoc {
    pub clique: Vec<usize>,
    pub prey: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealizationDoc {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dims: Option<Vec<u32>>,
    pub vertices: Vec<Vec<u32>>,
    #[serde(default)]
    pub isolated: Vec<String>,
    pub arcs: Vec<[usize; 2]>,
    pub ordering: Vec<usize>,
    pub assignment: Vec<AssignmentDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueFamilyDoc {
    pub kind: String,
    pub cliques: Vec<Vec<usize>>,
}

fn expect_kind(kind: &str, expected: &str) -> Result<()> {
    if kind != expected {
        return Err(Error::domain(format!(
            "expected a \"{expected}\" document, found \"{kind}\""
        )));
    }
    Ok(())
}

fn to_vertices(raw: Vec<Vec<u32>>) -> Result<Vec<Vertex>> {
    raw.into_iter().map(Vertex::new).collect()
}

impl GraphDoc {
    pub fn from_graph(g: &Graph) -> Self {
        GraphDoc {
            kind: "graph".into(),
            dims: g.dims().map(<[u32]>::to_vec),
            vertices: g.vertices().iter().map(|v| v.coords().to_vec()).collect(),
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
        }
    }

    pub fn into_graph(self) -> Result<Graph> {
        expect_kind(&self.kind, "graph")?;
        Graph::new(
            to_vertices(self.vertices)?,
            self.dims,
            self.edges.into_iter().map(|[u, v]| (u, v)),
        )
    }
}

impl DigraphDoc {
    pub fn from_digraph(d: &Digraph) -> Self {
        DigraphDoc {
            kind: "digraph".into(),
            dims: d.dims().map(<[u32]>::to_vec),
            vertices: d.real_vertices().iter().map(|v| v.coords().to_vec()).collect(),
            isolated: d.isolated_labels().to_vec(),
            arcs: d.arcs().map(|(s, t)| [s, t]).collect(),
        }
    }

    pub fn into_digraph(self) -> Result<Digraph> {
        expect_kind(&self.kind, "digraph")?;
        Digraph::new(
            to_vertices(self.vertices)?,
            self.dims,
            self.isolated,
            self.arcs.into_iter().map(|[s, t]| (s, t)),
        )
    }
}

impl RealizationDoc {
    pub fn from_realization(r: &Realization) -> Self {
        let d = DigraphDoc::from_digraph(r.digraph());
        RealizationDoc {
            kind: "realization".into(),
            dims: d.dims,
            vertices: d.vertices,
            isolated: d.isolated,
            arcs: d.arcs,
            ordering: r.ordering().as_slice().to_vec(),
            assignment: r
                .assignment()
                .iter()
                .map(|a| AssignmentDoc {
                    clique: a.clique.members().to_vec(),
                    prey: a.prey,
                })
                .collect(),
        }
    }

    pub fn into_realization(self) -> Result<Realization> {
        expect_kind(&self.kind, "realization")?;
        let d = DigraphDoc {
            kind: "digraph".into(),
            dims: self.dims,
            vertices: self.vertices,
            isolated: self.isolated,
            arcs: self.arcs,
        }
        .into_digraph()?;
        let assignment = self
            .assignment
            .into_iter()
            .map(|a| Assignment {
                clique: Clique::new(a.clique),
                prey: a.prey,
            })
            .collect();
        Realization::new(d, self.ordering, assignment)
    }
}

impl CliqueFamilyDoc {
    pub fn from_family(f: &CliqueFamily) -> Self {
        CliqueFamilyDoc {
            kind: "clique_family".into(),
            cliques: f.iter().map(|c| c.members().to_vec()).collect(),
        }
    }

    pub fn into_family(self) -> Result<CliqueFamily> {
        expect_kind(&self.kind, "clique_family")?;
        Ok(self.cliques.into_iter().map(Clique::new).collect())
    }
}

fn to_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string(doc).expect("documents serialize");
    s.push('\n');
    s
}

pub fn graph_to_json(g: &Graph) -> String {
    to_json(&GraphDoc::from_graph(g))
}

pub fn graph_from_json(s: &str) -> Result<Graph> {
    serde_json::from_str::<GraphDoc>(s)?.into_graph()
}

pub fn digraph_to_json(d: &Digraph) -> String {
    to_json(&DigraphDoc::from_digraph(d))
}

pub fn digraph_from_json(s: &str) -> Result<Digraph> {
    serde_json::from_str::<DigraphDoc>(s)?.into_digraph()
}

pub fn realization_to_json(r: &Realization) -> String {
    to_json(&RealizationDoc::from_realization(r))
}

pub fn realization_from_json(s: &str) -> Result<Realization> {
    serde_json::from_str::<RealizationDoc>(s)?.into_realization()
}

pub fn clique_family_to_json(f: &CliqueFamily) -> String {
    to_json(&CliqueFamilyDoc::from_family(f))
}

pub fn clique_family_from_json(s: &str) -> Result<CliqueFamily> {
    serde_json::from_str::<CliqueFamilyDoc>(s)?.into_family()
}

/// Undirected DOT; vertices are labelled like `"1,2,3"`.
pub fn graph_to_dot(g: &Graph) -> String {
    let mut out = String::from("graph G {\n");
    for v in g.vertices() {
        let _ = writeln!(out, "  \"{v}\";");
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  \"{}\" -- \"{}\";", g.vertex(u), g.vertex(v));
    }
    out.push_str("}\n");
    out
}

/// Directed DOT; extra vertices keep their `z` labels.
pub fn digraph_to_dot(d: &Digraph) -> String {
    let mut out = String::from("digraph D {\n");
    for v in 0..d.vertex_count() {
        let _ = writeln!(out, "  \"{}\";", d.label(v));
    }
    for (s, t) in d.arcs() {
        let _ = writeln!(out, "  \"{}\" -> \"{}\";", d.label(s), d.label(t));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::build_d_h2q;
    use crate::graph::hamming_graph;

    #[test]
    fn graph_document_layout() {
        let g = hamming_graph(1, 2).unwrap();
        assert_eq!(
            graph_to_json(&g),
            "{\"kind\":\"graph\",\"dims\":[2],\"vertices\":[[1],[2]],\"edges\":[[0,1]]}\n"
        );
        assert_eq!(graph_to_dot(&g), "graph G {\n  \"1\";\n  \"2\";\n  \"1\" -- \"2\";\n}\n");
    }

    #[test]
    fn realization_round_trip() {
        let r = build_d_h2q(3).unwrap();
        let s = realization_to_json(&r);
        assert_eq!(realization_from_json(&s).unwrap(), r);
        let d = digraph_from_json(&digraph_to_json(r.digraph())).unwrap();
        assert_eq!(&d, r.digraph());
        assert!(digraph_to_dot(&d).contains("\"2,1\" -> \"z1\";"));
    }

    #[test]
    fn bad_documents() {
        assert!(matches!(graph_from_json("{"), Err(Error::Parse(_))));
        assert!(matches!(
            graph_from_json("{\"kind\":\"digraph\",\"vertices\":[],\"edges\":[]}"),
            Err(Error::Domain(_))
        ));
        assert!(graph_from_json("{\"kind\":\"graph\",\"vertices\":[[1],[2]],\"edges\":[[0,2]]}").is_err());
        let f = clique_family_from_json("{\"kind\":\"clique_family\",\"cliques\":[[2,0]]}").unwrap();
        assert_eq!(f.cliques()[0].members(), &[0, 2]);
    }
}
