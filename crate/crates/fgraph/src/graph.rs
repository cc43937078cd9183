//! Immutable undirected simple graph with degree queries.
//!
//! Vertices are dense 0-based indices. Edges are stored canonically as
//! `(u, v)` pairs with `u < v`, sorted lexicographically, so two graphs
//! built from the same edge set compare equal regardless of input order.
//! Construction rejects self-loops, out-of-range endpoints and duplicate
//! edges: duplicates indicate a generator bug and must fail loudly rather
//! than be silently merged.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

/// Construction or query error for [`Graph`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge ({u}, {v}) has an endpoint outside 0..{vertex_count}")]
    EndpointOutOfRange {
        u: usize,
        v: usize,
        vertex_count: usize,
    },
    #[error("edge ({v}, {v}) is a self-loop")]
    SelfLoop { v: usize },
    #[error("duplicate edge ({u}, {v})")]
    DuplicateEdge { u: usize, v: usize },
    #[error("vertex {v} out of range 0..{vertex_count}")]
    VertexOutOfRange { v: usize, vertex_count: usize },
}

/// Immutable undirected simple graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list, canonicalizing each pair to
    /// `(min, max)` and sorting the edge set.
    pub fn from_edges(
        vertex_count: usize,
        edge_list: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut edges: Vec<(usize, usize)> = Vec::new();
        for (a, b) in edge_list {
            if a == b {
                return Err(GraphError::SelfLoop { v: a });
            }
            if a >= vertex_count || b >= vertex_count {
                return Err(GraphError::EndpointOutOfRange {
                    u: a,
                    v: b,
                    vertex_count,
                });
            }
            edges.push((a.min(b), a.max(b)));
        }
        edges.sort_unstable();
        for w in edges.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::DuplicateEdge {
                    u: w[0].0,
                    v: w[0].1,
                });
            }
        }

        let mut adjacency = vec![Vec::new(); vertex_count];
        for &(u, v) in &edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        // Lexicographic edge order feeds every list in ascending order.
        debug_assert!(adjacency.iter().all(|l| l.windows(2).all(|w| w[0] < w[1])));
        debug_assert_eq!(
            adjacency.iter().map(Vec::len).sum::<usize>(),
            2 * edges.len(),
            "handshake: degree sum must be twice the edge count"
        );

        Ok(Graph {
            vertex_count,
            edges,
            adjacency,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Canonical edge list: `(u, v)` with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Degree of vertex `v`.
    pub fn degree(&self, v: usize) -> Result<usize, GraphError> {
        self.adjacency
            .get(v)
            .map(Vec::len)
            .ok_or(GraphError::VertexOutOfRange {
                v,
                vertex_count: self.vertex_count,
            })
    }

    /// Neighbors of `v` in ascending order.
    ///
    /// Panics if `v >= vertex_count`, like slice indexing.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        match (self.adjacency.get(u), self.adjacency.get(v)) {
            (Some(nu), Some(nv)) => {
                let shorter = if nu.len() <= nv.len() {
                    (nu, v)
                } else {
                    (nv, u)
                };
                shorter.0.binary_search(&shorter.1).is_ok()
            }
            _ => false,
        }
    }

    /// Iterator over all vertex degrees, in vertex order.
    pub fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.adjacency.iter().map(Vec::len)
    }

    pub fn degree_multiset(&self) -> DegreeMultiset {
        DegreeMultiset::from_degrees(self.degrees())
    }

    /// Serializes to the edge-list interchange format:
    /// line 1 is `<vertex_count> <edge_count>`, followed by one `<u> <v>`
    /// line per edge with `u < v`, sorted lexicographically, 0-based,
    /// LF-terminated. Output is byte-identical across platforms.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::with_capacity(16 + 12 * self.edges.len());
        out.push_str(&format!("{} {}\n", self.vertex_count, self.edges.len()));
        for &(u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    /// Parses the edge-list interchange format, reporting the offending
    /// line on malformed input.
    pub fn from_edge_list(text: &str) -> Result<Self, EdgeListError> {
        let mut lines = text.lines().enumerate();
        let (_, header) = lines.next().ok_or(EdgeListError::MissingHeader)?;
        let mut parts = header.split_ascii_whitespace();
        let vertex_count: usize = parse_field(parts.next(), 1, "vertex count")?;
        let edge_count: usize = parse_field(parts.next(), 1, "edge count")?;
        if parts.next().is_some() {
            return Err(EdgeListError::Malformed {
                line: 1,
                reason: "header must be exactly '<vertex_count> <edge_count>'".into(),
            });
        }

        let mut edges = Vec::with_capacity(edge_count);
        let mut seen: Vec<(usize, usize)> = Vec::with_capacity(edge_count);
        for (idx, raw) in lines {
            let line = idx + 1;
            if edges.len() == edge_count {
                if raw.trim().is_empty() {
                    continue;
                }
                return Err(EdgeListError::Malformed {
                    line,
                    reason: format!("unexpected content after {edge_count} edges"),
                });
            }
            let mut parts = raw.split_ascii_whitespace();
            let u: usize = parse_field(parts.next(), line, "edge endpoint")?;
            let v: usize = parse_field(parts.next(), line, "edge endpoint")?;
            if parts.next().is_some() {
                return Err(EdgeListError::Malformed {
                    line,
                    reason: "edge line must be exactly '<u> <v>'".into(),
                });
            }
            if u == v {
                return Err(EdgeListError::SelfLoop { line, v });
            }
            if u >= vertex_count || v >= vertex_count {
                return Err(EdgeListError::EndpointOutOfRange {
                    line,
                    u,
                    v,
                    vertex_count,
                });
            }
            let canon = (u.min(v), u.max(v));
            match seen.binary_search(&canon) {
                Ok(_) => {
                    return Err(EdgeListError::DuplicateEdge {
                        line,
                        u: canon.0,
                        v: canon.1,
                    })
                }
                Err(pos) => seen.insert(pos, canon),
            }
            edges.push(canon);
        }
        if edges.len() != edge_count {
            return Err(EdgeListError::WrongEdgeCount {
                expected: edge_count,
                found: edges.len(),
            });
        }

        Graph::from_edges(vertex_count, edges).map_err(|e| EdgeListError::Malformed {
            line: 1,
            reason: e.to_string(),
        })
    }
}

fn parse_field(
    field: Option<&str>,
    line: usize,
    what: &'static str,
) -> Result<usize, EdgeListError> {
    let raw = field.ok_or(EdgeListError::Malformed {
        line,
        reason: format!("missing {what}"),
    })?;
    raw.parse().map_err(|_| EdgeListError::Malformed {
        line,
        reason: format!("invalid {what} '{raw}'"),
    })
}

/// Parse error for the edge-list text format; carries the 1-based line.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EdgeListError {
    #[error("empty input: missing '<vertex_count> <edge_count>' header")]
    MissingHeader,
    #[error("line {line}: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("line {line}: self-loop ({v}, {v})")]
    SelfLoop { line: usize, v: usize },
    #[error("line {line}: edge ({u}, {v}) has an endpoint outside 0..{vertex_count}")]
    EndpointOutOfRange {
        line: usize,
        u: usize,
        v: usize,
        vertex_count: usize,
    },
    #[error("line {line}: duplicate edge ({u}, {v})")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("expected {expected} edges, found {found}")]
    WrongEdgeCount { expected: usize, found: usize },
}

/// Map from degree to vertex count: the sufficient statistic for every
/// degree-determined index in this crate.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DegreeMultiset {
    counts: BTreeMap<usize, usize>,
    total: usize,
}

impl DegreeMultiset {
    pub fn from_degrees(degrees: impl IntoIterator<Item = usize>) -> Self {
        let mut counts = BTreeMap::new();
        let mut total = 0;
        for d in degrees {
            *counts.entry(d).or_insert(0) += 1;
            total += 1;
        }
        DegreeMultiset { counts, total }
    }

    /// Builds from `(degree, count)` pairs, merging repeated degrees and
    /// dropping zero counts (so parametric profiles with vanishing classes
    /// stay well-formed).
    pub fn from_counts(pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut counts = BTreeMap::new();
        let mut total = 0;
        for (d, c) in pairs {
            if c == 0 {
                continue;
            }
            *counts.entry(d).or_insert(0) += c;
            total += c;
        }
        DegreeMultiset { counts, total }
    }

    /// Number of vertices with the given degree.
    pub fn count(&self, degree: usize) -> usize {
        self.counts.get(&degree).copied().unwrap_or(0)
    }

    /// `(degree, count)` pairs in ascending degree order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.counts.iter().map(|(&d, &c)| (d, c))
    }

    pub fn total(&self) -> usize {
        self.total
    }

    /// Sum of degree x count, i.e. twice the edge count when taken from a
    /// graph. Computed in u128 so it cannot overflow for any input we accept.
    pub fn degree_weighted_sum(&self) -> u128 {
        self.counts
            .iter()
            .map(|(&d, &c)| d as u128 * c as u128)
            .sum()
    }
}

impl fmt::Display for DegreeMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (d, c)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{d}:{c}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn triangle() -> Graph {
        Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    fn star4() -> Graph {
        Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap()
    }

    #[test]
    fn builds_triangle() {
        let g = triangle();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn builds_isolated_vertex() {
        let g = Graph::from_edges(1, []).unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.edge_count(), 0);
        assert_eq!(g.degree(0), Ok(0));
    }

    #[test]
    fn rejects_duplicate_edge_even_when_reversed() {
        let err = Graph::from_edges(4, [(0, 1), (1, 0)]).unwrap_err();
        assert_eq!(err, GraphError::DuplicateEdge { u: 0, v: 1 });
    }

    #[test]
    fn rejects_self_loop_and_out_of_range() {
        assert_eq!(
            Graph::from_edges(3, [(1, 1)]).unwrap_err(),
            GraphError::SelfLoop { v: 1 }
        );
        assert_eq!(
            Graph::from_edges(3, [(0, 3)]).unwrap_err(),
            GraphError::EndpointOutOfRange {
                u: 0,
                v: 3,
                vertex_count: 3
            }
        );
    }

    #[test]
    fn degree_queries() {
        assert_eq!(triangle().degree(0), Ok(2));
        assert_eq!(star4().degree(0), Ok(3));
        let p2 = Graph::from_edges(2, [(0, 1)]).unwrap();
        assert_eq!(p2.degree(1), Ok(1));
        assert_eq!(
            p2.degree(2),
            Err(GraphError::VertexOutOfRange {
                v: 2,
                vertex_count: 2
            })
        );
    }

    #[test]
    fn degree_multisets() {
        let s4 = star4().degree_multiset();
        assert_eq!(s4.count(3), 1);
        assert_eq!(s4.count(1), 3);
        assert_eq!(s4.total(), 4);

        let c8 = Graph::from_edges(8, (0..8).map(|i| (i, (i + 1) % 8)))
            .unwrap()
            .degree_multiset();
        assert_eq!(c8, DegreeMultiset::from_counts([(2, 8)]));
    }

    #[test]
    fn from_counts_merges_and_drops_zeros() {
        let m = DegreeMultiset::from_counts([(3, 2), (3, 1), (2, 0), (1, 4)]);
        assert_eq!(m.count(3), 3);
        assert_eq!(m.count(2), 0);
        assert_eq!(m.count(1), 4);
        assert_eq!(m.total(), 7);
        assert_eq!(m.to_string(), "{1:4, 3:3}");
    }

    #[test]
    fn edge_list_round_trip() {
        let g = star4();
        let text = g.to_edge_list();
        assert_eq!(text, "4 3\n0 1\n0 2\n0 3\n");
        assert_eq!(Graph::from_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn edge_list_errors_name_the_line() {
        assert_eq!(
            Graph::from_edge_list("3 2\n0 1\n0 1\n"),
            Err(EdgeListError::DuplicateEdge {
                line: 3,
                u: 0,
                v: 1
            })
        );
        assert_eq!(
            Graph::from_edge_list("3 1\n0 7\n"),
            Err(EdgeListError::EndpointOutOfRange {
                line: 2,
                u: 0,
                v: 7,
                vertex_count: 3
            })
        );
        assert_eq!(
            Graph::from_edge_list("2 2\n0 1\n"),
            Err(EdgeListError::WrongEdgeCount {
                expected: 2,
                found: 1
            })
        );
        assert!(matches!(
            Graph::from_edge_list("x y\n"),
            Err(EdgeListError::Malformed { line: 1, .. })
        ));
        assert_eq!(Graph::from_edge_list(""), Err(EdgeListError::MissingHeader));
    }

    #[test]
    fn accepts_unsorted_input_and_canonicalizes() {
        let g = Graph::from_edge_list("3 3\n2 1\n0 2\n1 0\n").unwrap();
        assert_eq!(g, triangle());
    }

    fn arb_edge_set(max_n: usize) -> impl Strategy<Value = (usize, Vec<(usize, usize)>)> {
        (2..max_n).prop_flat_map(|n| {
            let all_pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
                .collect();
            let max_edges = all_pairs.len();
            proptest::sample::subsequence(all_pairs, 0..=max_edges)
                .prop_map(move |edges| (n, edges))
        })
    }

    proptest! {
        #[test]
        fn handshake_holds((n, edges) in arb_edge_set(12)) {
            let g = Graph::from_edges(n, edges).unwrap();
            let degree_sum: usize = g.degrees().sum();
            prop_assert_eq!(degree_sum, 2 * g.edge_count());
            let ms = g.degree_multiset();
            prop_assert_eq!(ms.total(), g.vertex_count());
            prop_assert_eq!(ms.degree_weighted_sum(), 2 * g.edge_count() as u128);
        }

        #[test]
        fn construction_is_order_insensitive(
            (n, edges) in arb_edge_set(10),
            seed in any::<u64>(),
        ) {
            let g1 = Graph::from_edges(n, edges.clone()).unwrap();
            let mut shuffled = edges;
            // Cheap deterministic shuffle + orientation flip.
            let mut state = seed;
            for i in (1..shuffled.len()).rev() {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let j = (state >> 33) as usize % (i + 1);
                shuffled.swap(i, j);
                if state & 1 == 1 {
                    let (u, v) = shuffled[i];
                    shuffled[i] = (v, u);
                }
            }
            let g2 = Graph::from_edges(n, shuffled).unwrap();
            prop_assert_eq!(g1, g2);
        }

        #[test]
        fn edge_list_text_round_trips((n, edges) in arb_edge_set(12)) {
            let g = Graph::from_edges(n, edges).unwrap();
            prop_assert_eq!(Graph::from_edge_list(&g.to_edge_list()).unwrap(), g);
        }
    }
}
