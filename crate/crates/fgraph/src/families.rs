//! Deterministic generators for the supported graph families.
//!
//! Labeling schemes are fixed so fixtures can reference specific vertices:
//!
//! * path `P_n`: vertices `0..n-1`, edges `(i, i+1)`.
//! * cycle `C_n`: the path plus `(n-1, 0)`.
//! * star `S_n`: center `0` joined to `1..n-1` (n vertices total).
//! * wheel `W_{n+1}`: hub `0`, rim `1..=n` forming a cycle; `n` is the rim
//!   size, so the graph has `n+1` vertices and `2n` edges.
//! * tadpole `T_{n,k}`: cycle on `0..n-1`, path vertices `n..n+k-1`, joined
//!   by the edge `(0, n)`.
//! * ladder `L_n` = grid(2, n).
//! * grid(m, n): vertex `(i, j)` has index `i*n + j`; edges join orthogonal
//!   neighbors.
//! * TUC4C8 lattice(p, q): p x q cells; cell `(i, j)` holds four vertices
//!   N, E, S, W at index `4*(i*q + j) + {0,1,2,3}` forming the 4-cycle
//!   N-E-S-W-N; inter-cell edges E(i,j)-W(i+1,j) and S(i,j)-N(i,j+1).
//! * nanotube(p, q): the lattice plus wrap edges E(p-1,j)-W(0,j).
//! * nanotorus(p, q): the nanotube plus wrap edges S(i,q-1)-N(i,0).
//!
//! For p = 1 (or q = 1) the wrap joins opposite corners of a single cell's
//! 4-cycle, which are non-adjacent, so the graph stays simple; the
//! duplicate-edge guard in [`Graph::from_edges`] enforces this across the
//! whole domain.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;
use crate::transforms::Transform;

/// Generation error: a parameter outside its family's domain, or a graph
/// too large to address in memory.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("{family} requires {constraint}")]
    Domain {
        family: &'static str,
        constraint: &'static str,
    },
    #[error("{family} with these parameters exceeds addressable size")]
    TooLarge { family: &'static str },
}

/// Parse error for the family-spec text syntax.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid family spec: {0}")]
pub struct SpecParseError(String);

/// A base graph family with its integer parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "family")]
pub enum Family {
    Path { n: u32 },
    Cycle { n: u32 },
    Star { n: u32 },
    Wheel { n: u32 },
    Tadpole { n: u32, k: u32 },
    Ladder { n: u32 },
    Grid { m: u32, n: u32 },
    TucLattice { p: u32, q: u32 },
    TucNanotube { p: u32, q: u32 },
    TucNanotorus { p: u32, q: u32 },
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Path { .. } => "path",
            Family::Cycle { .. } => "cycle",
            Family::Star { .. } => "star",
            Family::Wheel { .. } => "wheel",
            Family::Tadpole { .. } => "tadpole",
            Family::Ladder { .. } => "ladder",
            Family::Grid { .. } => "grid",
            Family::TucLattice { .. } => "tuc_lattice",
            Family::TucNanotube { .. } => "tuc_nanotube",
            Family::TucNanotorus { .. } => "tuc_nanotorus",
        }
    }

    fn check_domain(&self) -> Result<(), FamilyError> {
        let fail = |constraint| {
            Err(FamilyError::Domain {
                family: self.name(),
                constraint,
            })
        };
        match *self {
            Family::Path { n } if n < 1 => fail("n >= 1"),
            Family::Cycle { n } if n < 3 => fail("n >= 3"),
            Family::Star { n } if n < 2 => fail("n >= 2"),
            Family::Wheel { n } if n < 3 => fail("n >= 3"),
            Family::Tadpole { n, .. } if n < 3 => fail("n >= 3"),
            Family::Tadpole { k, .. } if k < 1 => fail("k >= 1"),
            Family::Ladder { n } if n < 2 => fail("n >= 2"),
            Family::Grid { m, n } if m < 2 || n < 2 => fail("m >= 2 and n >= 2"),
            Family::TucLattice { p, q }
            | Family::TucNanotube { p, q }
            | Family::TucNanotorus { p, q }
                if p < 1 || q < 1 =>
            {
                fail("p >= 1 and q >= 1")
            }
            _ => Ok(()),
        }
    }

    /// Builds the base family graph (no transforms applied).
    pub fn build(&self) -> Result<Graph, FamilyError> {
        self.check_domain()?;
        let too_large = FamilyError::TooLarge {
            family: self.name(),
        };
        let simple = |g: Result<Graph, crate::graph::GraphError>| {
            g.expect("family construction yields a simple graph")
        };
        let graph = match *self {
            Family::Path { n } => {
                let n = n as usize;
                simple(Graph::from_edges(
                    n,
                    (0..n.saturating_sub(1)).map(|i| (i, i + 1)),
                ))
            }
            Family::Cycle { n } => {
                let n = n as usize;
                simple(Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))))
            }
            Family::Star { n } => {
                let n = n as usize;
                simple(Graph::from_edges(n, (1..n).map(|i| (0, i))))
            }
            Family::Wheel { n } => {
                let n = n as usize;
                let hub = (1..=n).map(|i| (0, i));
                let rim = (1..n).map(|i| (i, i + 1)).chain([(n, 1)]);
                simple(Graph::from_edges(n + 1, hub.chain(rim)))
            }
            Family::Tadpole { n, k } => {
                let (n, k) = (n as usize, k as usize);
                let cycle = (0..n).map(|i| (i, (i + 1) % n));
                let bridge = [(0, n)];
                let tail = (0..k - 1).map(|i| (n + i, n + i + 1));
                simple(Graph::from_edges(n + k, cycle.chain(bridge).chain(tail)))
            }
            Family::Ladder { n } => return Family::Grid { m: 2, n }.build(),
            Family::Grid { m, n } => {
                let (m, n) = (m as usize, n as usize);
                let count = m.checked_mul(n).ok_or(too_large)?;
                let mut edges = Vec::with_capacity(2 * count);
                for i in 0..m {
                    for j in 0..n {
                        let v = i * n + j;
                        if j + 1 < n {
                            edges.push((v, v + 1));
                        }
                        if i + 1 < m {
                            edges.push((v, v + n));
                        }
                    }
                }
                simple(Graph::from_edges(count, edges))
            }
            Family::TucLattice { p, q } => tuc(p, q, false, false, too_large)?,
            Family::TucNanotube { p, q } => tuc(p, q, true, false, too_large)?,
            Family::TucNanotorus { p, q } => tuc(p, q, true, true, too_large)?,
        };
        Ok(graph)
    }
}

// Vertex roles within a TUC4C8 cell.
const N: usize = 0;
const E: usize = 1;
const S: usize = 2;
const W: usize = 3;

fn tuc(
    p: u32,
    q: u32,
    wrap_p: bool,
    wrap_q: bool,
    too_large: FamilyError,
) -> Result<Graph, FamilyError> {
    let (p, q) = (p as usize, q as usize);
    let count = p
        .checked_mul(q)
        .and_then(|cells| cells.checked_mul(4))
        .ok_or(too_large)?;
    let at = |i: usize, j: usize, corner: usize| 4 * (i * q + j) + corner;

    let mut edges = Vec::with_capacity(count + 2 * p * q);
    for i in 0..p {
        for j in 0..q {
            edges.push((at(i, j, N), at(i, j, E)));
            edges.push((at(i, j, E), at(i, j, S)));
            edges.push((at(i, j, S), at(i, j, W)));
            edges.push((at(i, j, W), at(i, j, N)));
            if i + 1 < p {
                edges.push((at(i, j, E), at(i + 1, j, W)));
            }
            if j + 1 < q {
                edges.push((at(i, j, S), at(i, j + 1, N)));
            }
        }
    }
    if wrap_p {
        for j in 0..q {
            edges.push((at(p - 1, j, E), at(0, j, W)));
        }
    }
    if wrap_q {
        for i in 0..p {
            edges.push((at(i, q - 1, S), at(i, 0, N)));
        }
    }
    Ok(Graph::from_edges(count, edges).expect("TUC4C8 construction yields a simple graph"))
}

/// A family plus an ordered transform chain, applied left to right.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: Family,
    pub transforms: Vec<Transform>,
}

impl FamilySpec {
    pub fn new(family: Family, transforms: impl Into<Vec<Transform>>) -> Self {
        FamilySpec {
            family,
            transforms: transforms.into(),
        }
    }

    /// Generates the base graph and applies the transform chain.
    pub fn generate(&self) -> Result<Graph, FamilyError> {
        let mut g = self.family.build()?;
        for t in &self.transforms {
            g = t.apply(&g);
        }
        Ok(g)
    }
}

/// Generates the graph described by a spec.
pub fn generate(spec: &FamilySpec) -> Result<Graph, FamilyError> {
    spec.generate()
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.family.name())?;
        for (i, (name, value)) in family_params(&self.family).iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{name}={value}")?;
        }
        if !self.transforms.is_empty() {
            write!(f, "|")?;
            for (i, t) in self.transforms.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{t}")?;
            }
        }
        Ok(())
    }
}

fn family_params(family: &Family) -> Vec<(&'static str, u32)> {
    match *family {
        Family::Path { n }
        | Family::Cycle { n }
        | Family::Star { n }
        | Family::Wheel { n }
        | Family::Ladder { n } => vec![("n", n)],
        Family::Tadpole { n, k } => vec![("n", n), ("k", k)],
        Family::Grid { m, n } => vec![("m", m), ("n", n)],
        Family::TucLattice { p, q }
        | Family::TucNanotube { p, q }
        | Family::TucNanotorus { p, q } => vec![("p", p), ("q", q)],
    }
}

impl FromStr for FamilySpec {
    type Err = SpecParseError;

    /// Syntax: `<family>:<param>=<int>[,<param>=<int>][|<transform>[,<transform>]]`,
    /// e.g. `tadpole:n=4,k=3|subdivide,line_graph`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |msg: String| SpecParseError(msg);
        let (head, chain) = match s.split_once('|') {
            Some((head, chain)) => (head, Some(chain)),
            None => (s, None),
        };
        let (name, params_str) = head.split_once(':').ok_or_else(|| {
            err(format!(
                "'{s}' is missing ':' between family and parameters"
            ))
        })?;

        let mut params: Vec<(&str, u32)> = Vec::new();
        for piece in params_str.split(',') {
            let (key, value) = piece
                .split_once('=')
                .ok_or_else(|| err(format!("parameter '{piece}' is not of the form name=value")))?;
            if params.iter().any(|&(k, _)| k == key) {
                return Err(err(format!("parameter '{key}' given twice")));
            }
            let value: u32 = value
                .parse()
                .map_err(|_| err(format!("parameter '{key}' has non-integer value '{value}'")))?;
            params.push((key, value));
        }

        let expected: &[&str] = match name {
            "path" | "cycle" | "star" | "wheel" | "ladder" => &["n"],
            "tadpole" => &["n", "k"],
            "grid" => &["m", "n"],
            "tuc_lattice" | "tuc_nanotube" | "tuc_nanotorus" => &["p", "q"],
            other => return Err(err(format!("unknown family '{other}'"))),
        };
        let get = |key: &str| -> Result<u32, SpecParseError> {
            params
                .iter()
                .find(|&&(k, _)| k == key)
                .map(|&(_, v)| v)
                .ok_or_else(|| err(format!("{name} requires parameter '{key}'")))
        };
        let family = match name {
            "path" => Family::Path { n: get("n")? },
            "cycle" => Family::Cycle { n: get("n")? },
            "star" => Family::Star { n: get("n")? },
            "wheel" => Family::Wheel { n: get("n")? },
            "ladder" => Family::Ladder { n: get("n")? },
            "tadpole" => Family::Tadpole {
                n: get("n")?,
                k: get("k")?,
            },
            "grid" => Family::Grid {
                m: get("m")?,
                n: get("n")?,
            },
            "tuc_lattice" => Family::TucLattice {
                p: get("p")?,
                q: get("q")?,
            },
            "tuc_nanotube" => Family::TucNanotube {
                p: get("p")?,
                q: get("q")?,
            },
            "tuc_nanotorus" => Family::TucNanotorus {
                p: get("p")?,
                q: get("q")?,
            },
            _ => unreachable!(),
        };
        if let Some(&(key, _)) = params.iter().find(|&&(k, _)| !expected.contains(&k)) {
            return Err(err(format!("{name} does not take parameter '{key}'")));
        }

        let transforms = match chain {
            None => Vec::new(),
            Some(chain) => chain
                .split(',')
                .map(|t| t.parse::<Transform>().map_err(SpecParseError))
                .collect::<Result<_, _>>()?,
        };
        Ok(FamilySpec { family, transforms })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::DegreeMultiset;
    use crate::transforms::Transform::{LineGraph, Subdivide};

    fn build(family: Family) -> Graph {
        family.build().unwrap()
    }

    #[test]
    fn order_and_size_across_parameter_sweep() {
        for n in 1..=12u32 {
            let g = build(Family::Path { n });
            assert_eq!(
                (g.vertex_count(), g.edge_count()),
                (n as usize, n as usize - 1)
            );
        }
        for n in 3..=12u32 {
            let g = build(Family::Cycle { n });
            assert_eq!((g.vertex_count(), g.edge_count()), (n as usize, n as usize));
            let g = build(Family::Star { n });
            assert_eq!(
                (g.vertex_count(), g.edge_count()),
                (n as usize, n as usize - 1)
            );
            let g = build(Family::Wheel { n });
            assert_eq!(
                (g.vertex_count(), g.edge_count()),
                (n as usize + 1, 2 * n as usize)
            );
        }
        for n in 3..=8u32 {
            for k in 1..=8u32 {
                let g = build(Family::Tadpole { n, k });
                let nk = (n + k) as usize;
                assert_eq!((g.vertex_count(), g.edge_count()), (nk, nk));
            }
        }
        for n in 2..=10u32 {
            let g = build(Family::Ladder { n });
            assert_eq!(
                (g.vertex_count(), g.edge_count()),
                (2 * n as usize, 3 * n as usize - 2)
            );
        }
        for m in 2..=8u32 {
            for n in 2..=8u32 {
                let g = build(Family::Grid { m, n });
                let (mu, nu) = (m as usize, n as usize);
                assert_eq!(
                    (g.vertex_count(), g.edge_count()),
                    (mu * nu, 2 * mu * nu - mu - nu)
                );
            }
        }
    }

    #[test]
    fn tuc_order_size_and_degree_profiles() {
        for p in 1..=8u32 {
            for q in 1..=8u32 {
                let (pu, qu) = (p as usize, q as usize);
                let lattice = build(Family::TucLattice { p, q });
                assert_eq!(lattice.vertex_count(), 4 * pu * qu);
                assert_eq!(lattice.edge_count(), 6 * pu * qu - pu - qu);
                assert_eq!(
                    lattice.degree_multiset(),
                    DegreeMultiset::from_counts([
                        (2, 2 * pu + 2 * qu),
                        (3, 4 * pu * qu - 2 * pu - 2 * qu),
                    ])
                );

                let tube = build(Family::TucNanotube { p, q });
                assert_eq!(tube.vertex_count(), 4 * pu * qu);
                assert_eq!(tube.edge_count(), 6 * pu * qu - pu);
                assert_eq!(
                    tube.degree_multiset(),
                    DegreeMultiset::from_counts([(2, 2 * pu), (3, 4 * pu * qu - 2 * pu)])
                );

                let torus = build(Family::TucNanotorus { p, q });
                assert_eq!(torus.vertex_count(), 4 * pu * qu);
                assert_eq!(torus.edge_count(), 6 * pu * qu);
                assert_eq!(
                    torus.degree_multiset(),
                    DegreeMultiset::from_counts([(3, 4 * pu * qu)])
                );
            }
        }
    }

    #[test]
    fn tuc_examples_at_p4_q3() {
        let lattice = build(Family::TucLattice { p: 4, q: 3 });
        assert_eq!((lattice.vertex_count(), lattice.edge_count()), (48, 65));
        let tube = build(Family::TucNanotube { p: 4, q: 3 });
        assert_eq!((tube.vertex_count(), tube.edge_count()), (48, 68));
        let torus = build(Family::TucNanotorus { p: 4, q: 3 });
        assert_eq!((torus.vertex_count(), torus.edge_count()), (48, 72));
        assert!(torus.degrees().all(|d| d == 3));
    }

    #[test]
    fn single_cell_nanotorus_is_k4() {
        let torus = build(Family::TucNanotorus { p: 1, q: 1 });
        assert_eq!(
            torus.edges(),
            &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
        );
    }

    #[test]
    fn ladder_equals_two_row_grid() {
        for n in 2..=10u32 {
            assert_eq!(build(Family::Ladder { n }), build(Family::Grid { m: 2, n }));
        }
    }

    #[test]
    fn cycle4_counts() {
        let g = build(Family::Cycle { n: 4 });
        assert_eq!((g.vertex_count(), g.edge_count()), (4, 4));
    }

    #[test]
    fn tadpole_line_of_subdivision_profile() {
        let spec = FamilySpec::new(Family::Tadpole { n: 4, k: 3 }, [Subdivide, LineGraph]);
        let g = spec.generate().unwrap();
        assert_eq!(g.vertex_count(), 14);
        assert_eq!(
            g.degree_multiset(),
            DegreeMultiset::from_counts([(3, 3), (2, 10), (1, 1)])
        );
    }

    #[test]
    fn domain_errors_name_the_constraint() {
        assert_eq!(
            Family::Tadpole { n: 2, k: 1 }.build().unwrap_err(),
            FamilyError::Domain {
                family: "tadpole",
                constraint: "n >= 3"
            }
        );
        assert_eq!(
            Family::Cycle { n: 2 }.build().unwrap_err(),
            FamilyError::Domain {
                family: "cycle",
                constraint: "n >= 3"
            }
        );
        assert_eq!(
            Family::Grid { m: 1, n: 5 }.build().unwrap_err(),
            FamilyError::Domain {
                family: "grid",
                constraint: "m >= 2 and n >= 2"
            }
        );
        assert_eq!(
            Family::TucLattice { p: 0, q: 3 }.build().unwrap_err(),
            FamilyError::Domain {
                family: "tuc_lattice",
                constraint: "p >= 1 and q >= 1"
            }
        );
    }

    #[test]
    fn transform_chain_on_edgeless_base_is_legal() {
        let spec = FamilySpec::new(Family::Path { n: 1 }, [LineGraph]);
        let g = spec.generate().unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (0, 0));
    }

    #[test]
    fn spec_text_round_trip() {
        for text in [
            "cycle:n=4",
            "tadpole:n=4,k=3|subdivide,line_graph",
            "grid:m=3,n=5",
            "tuc_nanotorus:p=2,q=7|subdivide",
            "wheel:n=6|subdivide,line_graph",
        ] {
            let spec: FamilySpec = text.parse().unwrap();
            assert_eq!(spec.to_string(), text);
        }
    }

    #[test]
    fn spec_parse_errors() {
        for bad in [
            "nonagon:n=4",
            "cycle",
            "cycle:m=4",
            "cycle:n=4,n=5",
            "cycle:n=x",
            "tadpole:n=4",
            "cycle:n=4,k=1",
            "cycle:n=4|mycielskian",
        ] {
            assert!(bad.parse::<FamilySpec>().is_err(), "{bad} should not parse");
        }
    }

    #[test]
    fn spec_parse_accepts_any_param_order() {
        let a: FamilySpec = "tadpole:k=3,n=4".parse().unwrap();
        let b: FamilySpec = "tadpole:n=4,k=3".parse().unwrap();
        assert_eq!(a, b);
    }
}
