//! Exact degree-based topological indices.
//!
//! Every index is an integer; arithmetic is generic over [`IndexScalar`]
//! and fully checked, so a value that exceeds the scalar's range is
//! rejected rather than wrapped (see [`crate::scalar`] for the headroom
//! discussion). Isolated vertices contribute 0 to the plain indices and
//! participate in coindex pairs with degree 0.
//!
//! Two quantities are deliberately computed along two independent routes:
//!
//! * F is evaluated in vertex form (sum of d^3) and edge form (sum over
//!   edges of d(u)^2 + d(v)^2); both are computed on every call and must
//!   agree.
//! * The F-coindex has a pairwise enumeration over non-adjacent pairs and
//!   a closed identity `(|V|-1) * M1 - F` (every vertex lies in exactly
//!   |V|-1 unordered pairs). The verifier cross-checks one against the
//!   other.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;
use crate::scalar::{add, from_usize, mul, sub, IndexScalar, Overflow};
use crate::IndexInt;

/// Computation failure: overflow of the chosen scalar, or disagreement
/// between two routes that must produce the same integer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IndexError {
    #[error(transparent)]
    Overflow(#[from] Overflow),
    #[error("self-check failed: {what} disagree ({left} vs {right})")]
    SelfCheck {
        what: &'static str,
        left: String,
        right: String,
    },
}

/// The six supported indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum IndexKind {
    #[serde(rename = "M1")]
    M1,
    #[serde(rename = "M2")]
    M2,
    #[serde(rename = "F")]
    F,
    #[serde(rename = "M1_co")]
    M1Co,
    #[serde(rename = "M2_co")]
    M2Co,
    #[serde(rename = "F_co")]
    FCo,
}

impl IndexKind {
    pub const ALL: [IndexKind; 6] = [
        IndexKind::M1,
        IndexKind::M2,
        IndexKind::F,
        IndexKind::M1Co,
        IndexKind::M2Co,
        IndexKind::FCo,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            IndexKind::M1 => "M1",
            IndexKind::M2 => "M2",
            IndexKind::F => "F",
            IndexKind::M1Co => "M1_co",
            IndexKind::M2Co => "M2_co",
            IndexKind::FCo => "F_co",
        }
    }

    pub fn coindex(self) -> Option<CoindexKind> {
        match self {
            IndexKind::M1Co => Some(CoindexKind::M1Co),
            IndexKind::M2Co => Some(CoindexKind::M2Co),
            IndexKind::FCo => Some(CoindexKind::FCo),
            _ => None,
        }
    }
}

impl fmt::Display for IndexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for IndexKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "m1" => Ok(IndexKind::M1),
            "m2" => Ok(IndexKind::M2),
            "f" => Ok(IndexKind::F),
            "m1_co" => Ok(IndexKind::M1Co),
            "m2_co" => Ok(IndexKind::M2Co),
            "f_co" => Ok(IndexKind::FCo),
            other => Err(format!(
                "unknown index '{other}' (expected M1, M2, F, M1_co, M2_co or F_co)"
            )),
        }
    }
}

/// The three pairwise coindices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoindexKind {
    M1Co,
    M2Co,
    FCo,
}

/// A computed index value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexValue {
    pub index: IndexKind,
    pub value: IndexInt,
}

/// First Zagreb index: sum of d(v)^2.
pub fn m1<T: IndexScalar>(g: &Graph) -> Result<T, IndexError> {
    let mut acc = T::zero();
    for d in g.degrees() {
        let d = from_usize::<T>(d, "M1 term")?;
        acc = add(acc, mul(d, d, "M1 term")?, "M1 sum")?;
    }
    Ok(acc)
}

/// Second Zagreb index: sum over edges of d(u) * d(v).
pub fn m2<T: IndexScalar>(g: &Graph) -> Result<T, IndexError> {
    let deg = scalar_degrees::<T>(g)?;
    let mut acc = T::zero();
    for &(u, v) in g.edges() {
        acc = add(acc, mul(deg[u], deg[v], "M2 term")?, "M2 sum")?;
    }
    Ok(acc)
}

/// Forgotten index: sum of d(v)^3, with the edge-form evaluation
/// (sum over edges of d(u)^2 + d(v)^2) recomputed and checked against it.
pub fn f_index<T: IndexScalar>(g: &Graph) -> Result<T, IndexError> {
    let deg = scalar_degrees::<T>(g)?;

    let mut vertex_form = T::zero();
    for &d in &deg {
        let cube = mul(mul(d, d, "F term")?, d, "F term")?;
        vertex_form = add(vertex_form, cube, "F sum")?;
    }

    let mut edge_form = T::zero();
    for &(u, v) in g.edges() {
        let du2 = mul(deg[u], deg[u], "F edge term")?;
        let dv2 = mul(deg[v], deg[v], "F edge term")?;
        edge_form = add(edge_form, add(du2, dv2, "F edge term")?, "F edge sum")?;
    }

    if vertex_form != edge_form {
        return Err(IndexError::SelfCheck {
            what: "vertex-form and edge-form F",
            left: vertex_form.to_string(),
            right: edge_form.to_string(),
        });
    }
    Ok(vertex_form)
}

/// Coindex by explicit enumeration of non-adjacent unordered vertex pairs.
/// Degrees are taken in `g` itself, not in its complement. Quadratic in the
/// vertex count.
pub fn pairwise_coindex<T: IndexScalar>(g: &Graph, kind: CoindexKind) -> Result<T, IndexError> {
    let n = g.vertex_count();
    let deg = scalar_degrees::<T>(g)?;
    let mut deg_sq = Vec::with_capacity(n);
    for &d in &deg {
        deg_sq.push(mul(d, d, "coindex term")?);
    }

    let mut acc = T::zero();
    for u in 0..n {
        // neighbors(u) is ascending; walk it in step with v.
        let mut next_neighbor = g.neighbors(u).iter().skip_while(|&&w| w <= u).peekable();
        for v in (u + 1)..n {
            if next_neighbor.peek() == Some(&&v) {
                next_neighbor.next();
                continue;
            }
            let term = match kind {
                CoindexKind::M1Co => add(deg[u], deg[v], "M1_co term")?,
                CoindexKind::M2Co => mul(deg[u], deg[v], "M2_co term")?,
                CoindexKind::FCo => add(deg_sq[u], deg_sq[v], "F_co term")?,
            };
            acc = add(acc, term, "coindex sum")?;
        }
    }
    Ok(acc)
}

/// F-coindex via the identity `(|V| - 1) * M1 - F`; the linear-time oracle
/// for [`pairwise_coindex`] with [`CoindexKind::FCo`].
pub fn f_coindex_via_identity<T: IndexScalar>(g: &Graph) -> Result<T, IndexError> {
    let n = from_usize::<T>(g.vertex_count(), "vertex count")?;
    let pairs_per_vertex = sub(n, T::one(), "|V| - 1")?;
    let m1 = m1::<T>(g)?;
    let f = f_index::<T>(g)?;
    Ok(sub(
        mul(pairs_per_vertex, m1, "F_co identity")?,
        f,
        "F_co identity",
    )?)
}

/// Computes one index by kind.
pub fn compute<T: IndexScalar>(g: &Graph, kind: IndexKind) -> Result<T, IndexError> {
    match kind {
        IndexKind::M1 => m1(g),
        IndexKind::M2 => m2(g),
        IndexKind::F => f_index(g),
        IndexKind::M1Co => pairwise_coindex(g, CoindexKind::M1Co),
        IndexKind::M2Co => pairwise_coindex(g, CoindexKind::M2Co),
        IndexKind::FCo => pairwise_coindex(g, CoindexKind::FCo),
    }
}

fn scalar_degrees<T: IndexScalar>(g: &Graph) -> Result<Vec<T>, Overflow> {
    g.degrees()
        .map(|d| from_usize(d, "vertex degree"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{Family, FamilySpec};
    use crate::transforms::complement;
    use crate::transforms::Transform::{LineGraph, Subdivide};
    use proptest::prelude::*;

    fn triangle() -> Graph {
        Graph::from_edges(3, [(0, 1), (0, 2), (1, 2)]).unwrap()
    }

    fn cycle8() -> Graph {
        Family::Cycle { n: 8 }.build().unwrap()
    }

    fn line_of_subdivision(family: Family) -> Graph {
        FamilySpec::new(family, [Subdivide, LineGraph])
            .generate()
            .unwrap()
    }

    #[test]
    fn zagreb_indices_on_small_graphs() {
        assert_eq!(m1::<i64>(&triangle()), Ok(12));
        assert_eq!(m2::<i64>(&triangle()), Ok(12));
        assert_eq!(m1::<i64>(&cycle8()), Ok(32));
        assert_eq!(m2::<i64>(&cycle8()), Ok(32));
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(m2::<i64>(&p3), Ok(4));
    }

    #[test]
    fn m1_of_wheel_line_of_subdivision() {
        let g = line_of_subdivision(Family::Wheel { n: 3 });
        assert_eq!(m1::<i64>(&g), Ok(108));
    }

    #[test]
    fn f_index_examples() {
        assert_eq!(f_index::<i64>(&triangle()), Ok(24));
        assert_eq!(f_index::<i64>(&cycle8()), Ok(64));
        let star = line_of_subdivision(Family::Star { n: 4 });
        assert_eq!(f_index::<i64>(&star), Ok(84));
        assert_eq!(m1::<i64>(&star), Ok(30));
        let tadpole = line_of_subdivision(Family::Tadpole { n: 4, k: 3 });
        assert_eq!(f_index::<i64>(&tadpole), Ok(162));
    }

    #[test]
    fn coindex_examples() {
        assert_eq!(
            pairwise_coindex::<i64>(&triangle(), CoindexKind::FCo),
            Ok(0)
        );
        assert_eq!(
            pairwise_coindex::<i64>(&cycle8(), CoindexKind::FCo),
            Ok(160)
        );
        let star = line_of_subdivision(Family::Star { n: 4 });
        assert_eq!(pairwise_coindex::<i64>(&star, CoindexKind::FCo), Ok(66));
    }

    #[test]
    fn identity_form_examples() {
        assert_eq!(f_coindex_via_identity::<i64>(&cycle8()), Ok(160));
        assert_eq!(f_coindex_via_identity::<i64>(&triangle()), Ok(0));
        let star = line_of_subdivision(Family::Star { n: 4 });
        assert_eq!(f_coindex_via_identity::<i64>(&star), Ok(66));
    }

    #[test]
    fn f_coindex_differs_from_f_of_complement() {
        // Degrees are taken in the original graph, so these are different
        // quantities; C8 is the witness.
        let g = cycle8();
        let fco = pairwise_coindex::<i64>(&g, CoindexKind::FCo).unwrap();
        let f_of_complement = f_index::<i64>(&complement(&g)).unwrap();
        assert_eq!(fco, 160);
        assert_eq!(f_of_complement, 1000);
        assert_ne!(fco, f_of_complement);
    }

    #[test]
    fn isolated_vertices_join_coindex_pairs_with_degree_zero() {
        // One edge plus an isolated vertex: non-adjacent pairs are
        // (0,2) and (1,2), each contributing d^2(endpoint) for F_co.
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert_eq!(pairwise_coindex::<i64>(&g, CoindexKind::FCo), Ok(2));
        assert_eq!(pairwise_coindex::<i64>(&g, CoindexKind::M1Co), Ok(2));
        assert_eq!(pairwise_coindex::<i64>(&g, CoindexKind::M2Co), Ok(0));
        assert_eq!(f_index::<i64>(&g), Ok(2));
    }

    #[test]
    fn empty_graph_is_all_zero() {
        let g = Graph::from_edges(0, []).unwrap();
        for kind in IndexKind::ALL {
            assert_eq!(compute::<i64>(&g, kind), Ok(0));
        }
        assert_eq!(f_coindex_via_identity::<i64>(&g), Ok(0));
    }

    #[test]
    fn large_star_fits_i64_headroom() {
        let g = Family::Star { n: 100_001 }.build().unwrap();
        assert_eq!(g.edge_count(), 100_000);
        assert_eq!(f_index::<i64>(&g), Ok(1_000_000_000_000_000 + 100_000));
    }

    #[test]
    fn narrow_scalar_is_rejected_not_wrapped() {
        // Center degree 1999: 1999^3 > i32::MAX, well within i64.
        let g = Family::Star { n: 2000 }.build().unwrap();
        assert!(matches!(f_index::<i32>(&g), Err(IndexError::Overflow(_))));
        assert!(f_index::<i64>(&g).is_ok());
        assert_eq!(
            f_index::<i64>(&g).unwrap(),
            f_index::<i128>(&g).unwrap() as i64
        );
    }

    #[test]
    fn index_kind_names_round_trip() {
        for kind in IndexKind::ALL {
            assert_eq!(kind.as_str().parse::<IndexKind>(), Ok(kind));
            assert_eq!(
                kind.as_str().to_ascii_lowercase().parse::<IndexKind>(),
                Ok(kind)
            );
        }
        assert!("randic".parse::<IndexKind>().is_err());
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..max_n).prop_flat_map(|n| {
            let all_pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
                .collect();
            let len = all_pairs.len();
            proptest::sample::subsequence(all_pairs, 0..=len)
                .prop_map(move |edges| Graph::from_edges(n, edges).unwrap())
        })
    }

    proptest! {
        #[test]
        fn pairwise_fco_equals_identity(g in arb_graph(24)) {
            prop_assert_eq!(
                pairwise_coindex::<i64>(&g, CoindexKind::FCo).unwrap(),
                f_coindex_via_identity::<i64>(&g).unwrap()
            );
        }

        #[test]
        fn pairwise_m1co_equals_per_vertex_regrouping(g in arb_graph(24)) {
            // Same sum regrouped: each vertex sits in (n-1-d) non-adjacent pairs.
            let n = g.vertex_count() as i64;
            let regrouped: i64 = g.degrees().map(|d| d as i64 * (n - 1 - d as i64)).sum();
            prop_assert_eq!(
                pairwise_coindex::<i64>(&g, CoindexKind::M1Co).unwrap(),
                regrouped
            );
        }

        #[test]
        fn f_edge_form_agrees_with_vertex_form(g in arb_graph(24)) {
            // f_index self-checks internally; recompute the edge form here as
            // an external witness.
            let f = f_index::<i64>(&g).unwrap();
            let edge_form: i64 = g
                .edges()
                .iter()
                .map(|&(u, v)| {
                    let du = g.degree(u).unwrap() as i64;
                    let dv = g.degree(v).unwrap() as i64;
                    du * du + dv * dv
                })
                .sum();
            prop_assert_eq!(f, edge_form);
        }
    }
}
