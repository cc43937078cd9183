//! Graph operators: subdivision, line graph, complement.
//!
//! All three are total pure functions; empty and edgeless graphs are legal
//! inputs. Subdivision and line graph index their output by the canonical
//! edge order of the input, so results are deterministic and fixtures stay
//! stable.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::graph::Graph;

/// Replaces each edge by a path of length 2.
///
/// Original vertices keep their indices and degrees; the i-th canonical
/// edge gains the new vertex `vertex_count + i` of degree 2.
pub fn subdivide(g: &Graph) -> Graph {
    let n = g.vertex_count();
    let mut edges = Vec::with_capacity(2 * g.edge_count());
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        let mid = n + i;
        edges.push((u, mid));
        edges.push((v, mid));
    }
    Graph::from_edges(n + g.edge_count(), edges).expect("subdivision of a simple graph is simple")
}

/// Line graph: vertex i is the i-th canonical edge of the input; two
/// vertices are adjacent iff the corresponding edges share an endpoint.
///
/// In a simple graph two distinct edges share at most one endpoint, so each
/// adjacency is produced exactly once by the shared vertex.
pub fn line_graph(g: &Graph) -> Graph {
    let mut incident = vec![Vec::new(); g.vertex_count()];
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        incident[u].push(i);
        incident[v].push(i);
    }
    let mut edges = Vec::new();
    for ids in &incident {
        for (a, &e) in ids.iter().enumerate() {
            for &f in &ids[a + 1..] {
                edges.push((e, f));
            }
        }
    }
    Graph::from_edges(g.edge_count(), edges).expect("line graph of a simple graph is simple")
}

/// Complement on the same vertex set: `(u, v)` present iff absent in the
/// input. Quadratic in the vertex count.
pub fn complement(g: &Graph) -> Graph {
    let n = g.vertex_count();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if !g.has_edge(u, v) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("complement of a simple graph is simple")
}

/// A transform usable in a family transform chain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Transform {
    Subdivide,
    LineGraph,
}

impl Transform {
    pub fn apply(self, g: &Graph) -> Graph {
        match self {
            Transform::Subdivide => subdivide(g),
            Transform::LineGraph => line_graph(g),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Transform::Subdivide => "subdivide",
            Transform::LineGraph => "line_graph",
        }
    }
}

impl fmt::Display for Transform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Transform {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "subdivide" => Ok(Transform::Subdivide),
            "line_graph" => Ok(Transform::LineGraph),
            other => Err(format!(
                "unknown transform '{other}' (expected subdivide or line_graph)"
            )),
        }
    }
}
