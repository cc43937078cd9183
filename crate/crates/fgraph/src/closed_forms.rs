//! Registry of closed-form expressions for the F-index / F-coindex of
//! line graphs of subdivision graphs, together with the degree profiles
//! each derivation asserts for those graphs.
//!
//! The registry stores the published expressions verbatim, even where they
//! disagree with direct computation on the generated graphs; adjudication
//! belongs to [`crate::verifier`], which compares both sides pointwise.
//! Everything here is pure integer arithmetic over [`IndexScalar`].

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::families::{Family, FamilySpec};
use crate::graph::DegreeMultiset;
use crate::scalar::{IndexScalar, Overflow};
use crate::transforms::Transform;

/// Registry lookup / evaluation error.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TheoremError {
    #[error("unknown theorem id '{0}'")]
    UnknownId(String),
    #[error("{id} requires parameter '{name}'")]
    MissingParam { id: TheoremId, name: ParamName },
    #[error("{id} requires {constraint}")]
    OutOfDomain {
        id: TheoremId,
        constraint: &'static str,
    },
    #[error(transparent)]
    Overflow(#[from] Overflow),
}

/// Named integer parameter of a theorem or family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ParamName {
    K,
    M,
    N,
    P,
    Q,
}

impl ParamName {
    pub fn as_str(self) -> &'static str {
        match self {
            ParamName::K => "k",
            ParamName::M => "m",
            ParamName::N => "n",
            ParamName::P => "p",
            ParamName::Q => "q",
        }
    }
}

impl fmt::Display for ParamName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ParamName {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "k" => Ok(ParamName::K),
            "m" => Ok(ParamName::M),
            "n" => Ok(ParamName::N),
            "p" => Ok(ParamName::P),
            "q" => Ok(ParamName::Q),
            other => Err(format!("unknown parameter name '{other}'")),
        }
    }
}

/// A point in parameter space: named non-negative integers.
///
/// Serializes as a JSON object with deterministically ordered keys.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Params(BTreeMap<ParamName, u32>);

impl Params {
    pub fn new() -> Self {
        Params::default()
    }

    pub fn with(mut self, name: ParamName, value: u32) -> Self {
        self.0.insert(name, value);
        self
    }

    pub fn get(&self, name: ParamName) -> Option<u32> {
        self.0.get(&name).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (ParamName, u32)> + '_ {
        self.0.iter().map(|(&k, &v)| (k, v))
    }

    /// Renders values in the given name order, e.g. `n=4,k=3`.
    pub fn display_in_order(&self, order: &[ParamName]) -> String {
        order
            .iter()
            .filter_map(|&name| self.get(name).map(|v| format!("{name}={v}")))
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// One named parameter point, e.g. `Params::new().with(ParamName::N, 4)`.
pub fn params1(a: (ParamName, u32)) -> Params {
    Params::new().with(a.0, a.1)
}

pub fn params2(a: (ParamName, u32), b: (ParamName, u32)) -> Params {
    Params::new().with(a.0, a.1).with(b.0, b.1)
}

/// Stable identifiers for the fourteen closed forms.
///
/// Identifiers are semantic rather than numeric because the source
/// numbering is not unique. Declaration order is the canonical report
/// order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum TheoremId {
    #[serde(rename = "CYCLE_F")]
    CycleF,
    #[serde(rename = "CYCLE_FCO")]
    CycleFco,
    #[serde(rename = "STAR_F")]
    StarF,
    #[serde(rename = "STAR_FCO")]
    StarFco,
    #[serde(rename = "TADPOLE_F")]
    TadpoleF,
    #[serde(rename = "TADPOLE_FCO")]
    TadpoleFco,
    #[serde(rename = "WHEEL_F")]
    WheelF,
    #[serde(rename = "WHEEL_FCO")]
    WheelFco,
    #[serde(rename = "LADDER_F")]
    LadderF,
    #[serde(rename = "LADDER_FCO")]
    LadderFco,
    #[serde(rename = "GRID_F")]
    GridF,
    #[serde(rename = "LATTICE_F")]
    LatticeF,
    #[serde(rename = "NANOTUBE_F")]
    NanotubeF,
    #[serde(rename = "NANOTORUS_F")]
    NanotorusF,
}

use TheoremId::*;

/// Which index a theorem's closed form describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormulaIndex {
    F,
    FCo,
}

impl TheoremId {
    pub const ALL: [TheoremId; 14] = [
        CycleF, CycleFco, StarF, StarFco, TadpoleF, TadpoleFco, WheelF, WheelFco, LadderF,
        LadderFco, GridF, LatticeF, NanotubeF, NanotorusF,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CycleF => "CYCLE_F",
            CycleFco => "CYCLE_FCO",
            StarF => "STAR_F",
            StarFco => "STAR_FCO",
            TadpoleF => "TADPOLE_F",
            TadpoleFco => "TADPOLE_FCO",
            WheelF => "WHEEL_F",
            WheelFco => "WHEEL_FCO",
            LadderF => "LADDER_F",
            LadderFco => "LADDER_FCO",
            GridF => "GRID_F",
            LatticeF => "LATTICE_F",
            NanotubeF => "NANOTUBE_F",
            NanotorusF => "NANOTORUS_F",
        }
    }

    pub fn index(self) -> FormulaIndex {
        match self {
            CycleFco | StarFco | TadpoleFco | WheelFco | LadderFco => FormulaIndex::FCo,
            _ => FormulaIndex::F,
        }
    }

    /// Parameter names in canonical display order.
    pub fn param_names(self) -> &'static [ParamName] {
        match self {
            CycleF | CycleFco | StarF | StarFco | WheelF | WheelFco | LadderF | LadderFco => {
                &[ParamName::N]
            }
            TadpoleF | TadpoleFco => &[ParamName::N, ParamName::K],
            GridF => &[ParamName::M, ParamName::N],
            LatticeF | NanotubeF | NanotorusF => &[ParamName::P, ParamName::Q],
        }
    }

    /// Smallest admissible value for each parameter of this theorem.
    pub fn param_minimum(self, name: ParamName) -> Option<u32> {
        let minimum = match (self, name) {
            (CycleF | CycleFco, ParamName::N) => 3,
            (StarF | StarFco, ParamName::N) => 3,
            (TadpoleF | TadpoleFco, ParamName::N) => 3,
            (TadpoleF | TadpoleFco, ParamName::K) => 1,
            (WheelF | WheelFco, ParamName::N) => 3,
            (LadderF | LadderFco, ParamName::N) => 2,
            (GridF, ParamName::M | ParamName::N) => 2,
            (LatticeF | NanotubeF | NanotorusF, ParamName::P | ParamName::Q) => 1,
            _ => return None,
        };
        Some(minimum)
    }

    fn domain_constraint(self) -> &'static str {
        match self {
            CycleF | CycleFco | StarF | StarFco | WheelF | WheelFco => "n >= 3",
            TadpoleF | TadpoleFco => "n >= 3 and k >= 1",
            LadderF | LadderFco => "n >= 2",
            GridF => "m >= 2 and n >= 2",
            LatticeF | NanotubeF | NanotorusF => "p >= 1 and q >= 1",
        }
    }

    /// Checks presence and domain of every parameter.
    pub fn check_domain(self, params: &Params) -> Result<(), TheoremError> {
        for &name in self.param_names() {
            let value = params
                .get(name)
                .ok_or(TheoremError::MissingParam { id: self, name })?;
            let minimum = self
                .param_minimum(name)
                .expect("declared parameter has a minimum");
            if value < minimum {
                return Err(TheoremError::OutOfDomain {
                    id: self,
                    constraint: self.domain_constraint(),
                });
            }
        }
        Ok(())
    }

    /// The generated object each theorem talks about: the base family with
    /// subdivision followed by line graph.
    pub fn family(self, params: &Params) -> Result<FamilySpec, TheoremError> {
        self.check_domain(params)?;
        let get = |name| params.get(name).expect("checked by domain");
        let family = match self {
            CycleF | CycleFco => Family::Cycle {
                n: get(ParamName::N),
            },
            StarF | StarFco => Family::Star {
                n: get(ParamName::N),
            },
            TadpoleF | TadpoleFco => Family::Tadpole {
                n: get(ParamName::N),
                k: get(ParamName::K),
            },
            WheelF | WheelFco => Family::Wheel {
                n: get(ParamName::N),
            },
            LadderF | LadderFco => Family::Ladder {
                n: get(ParamName::N),
            },
            GridF => Family::Grid {
                m: get(ParamName::M),
                n: get(ParamName::N),
            },
            LatticeF => Family::TucLattice {
                p: get(ParamName::P),
                q: get(ParamName::Q),
            },
            NanotubeF => Family::TucNanotube {
                p: get(ParamName::P),
                q: get(ParamName::Q),
            },
            NanotorusF => Family::TucNanotorus {
                p: get(ParamName::P),
                q: get(ParamName::Q),
            },
        };
        Ok(FamilySpec::new(
            family,
            [Transform::Subdivide, Transform::LineGraph],
        ))
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = TheoremError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TheoremId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| TheoremError::UnknownId(s.to_string()))
    }
}

/// Exact evaluation of the registered closed form at a parameter point.
pub fn paper_formula<T: IndexScalar>(id: TheoremId, params: &Params) -> Result<T, TheoremError> {
    id.check_domain(params)?;
    let var = |name| Ck::<T>(T::from_u32(params.get(name).expect("checked by domain")));
    let c = |v: i32| Ck::<T>(T::from_i32(v));
    let value = match id {
        CycleF | CycleFco | StarF | StarFco | WheelF | WheelFco | LadderF | LadderFco => {
            let n = var(ParamName::N);
            match id {
                CycleF => c(16) * n,
                CycleFco => c(16) * n * n - c(16) * n,
                StarF => n * (n - c(1)) * (n * n - c(3) * n + c(3)),
                StarFco => (n - c(1)) * (n - c(2)) * (n * n - c(2) * n + c(3)),
                WheelF => n * (n * n * n + c(81)),
                WheelFco => c(2) * n * (n * n * n + c(56) * n - c(56)),
                LadderF => c(162) * n - c(260),
                LadderFco => c(324) * n * n - c(832) * n + c(532),
                _ => unreachable!(),
            }
        }
        TadpoleF | TadpoleFco => {
            let n = var(ParamName::N);
            let k = var(ParamName::K);
            match id {
                TadpoleF => c(16) * n + c(16) * k + c(50),
                TadpoleFco => c(16) * (n + k) * (n + k) - c(57),
                _ => unreachable!(),
            }
        }
        GridF => {
            let m = var(ParamName::M);
            let n = var(ParamName::N);
            c(256) * m * n - c(350) * m - c(350) * n + c(440)
        }
        LatticeF | NanotubeF | NanotorusF => {
            let p = var(ParamName::P);
            let q = var(ParamName::Q);
            match id {
                LatticeF => c(324) * p * q - c(130) * p - c(130) * q,
                NanotubeF => c(324) * p * q - c(130) * p + c(2) * q,
                NanotorusF => c(324) * p * q + c(2) * p + c(2) * q,
                _ => unreachable!(),
            }
        }
    };
    Ok(value.finish("closed-form evaluation")?)
}

/// The degree multiset the derivation asserts for the generated graph at a
/// parameter point. Degree classes that collide for specific parameters
/// (e.g. the wheel hub class at n = 3) merge their multiplicities; classes
/// with zero count vanish.
pub fn paper_degree_profile(
    id: TheoremId,
    params: &Params,
) -> Result<DegreeMultiset, TheoremError> {
    id.check_domain(params)?;
    let get = |name| params.get(name).expect("checked by domain") as usize;
    let counts: Vec<(usize, usize)> = match id {
        CycleF | CycleFco => {
            let n = get(ParamName::N);
            vec![(2, 2 * n)]
        }
        StarF | StarFco => {
            let n = get(ParamName::N);
            vec![(n - 1, n - 1), (1, n - 1)]
        }
        TadpoleF | TadpoleFco => {
            let n = get(ParamName::N);
            let k = get(ParamName::K);
            vec![(3, 3), (1, 1), (2, 2 * n + 2 * k - 4)]
        }
        WheelF | WheelFco => {
            let n = get(ParamName::N);
            vec![(3, 3 * n), (n, n)]
        }
        LadderF | LadderFco => {
            let n = get(ParamName::N);
            vec![(2, 8), (3, 6 * n - 12)]
        }
        GridF => {
            let m = get(ParamName::M);
            let n = get(ParamName::N);
            vec![
                (2, 8),
                (3, 6 * (m - 2) + 6 * (n - 2)),
                (4, 4 * (m - 2) * (n - 2)),
            ]
        }
        LatticeF => {
            let p = get(ParamName::P);
            let q = get(ParamName::Q);
            vec![(2, 4 * p + 4 * q), (3, 12 * p * q - 6 * p - 6 * q)]
        }
        NanotubeF => {
            let p = get(ParamName::P);
            let q = get(ParamName::Q);
            vec![(1, 2 * q), (2, 4 * p), (3, 12 * p * q - 6 * p)]
        }
        NanotorusF => {
            let p = get(ParamName::P);
            let q = get(ParamName::Q);
            vec![(1, 2 * p + 2 * q), (3, 12 * p * q)]
        }
    };
    Ok(DegreeMultiset::from_counts(counts))
}

/// F evaluated from a degree multiset: sum over classes of count * d^3.
pub fn f_from_profile<T: IndexScalar>(profile: &DegreeMultiset) -> Result<T, Overflow> {
    let mut acc = T::zero();
    for (d, count) in profile.iter() {
        let d = Ck::<T>(T::from_usize(d));
        let count = Ck::<T>(T::from_usize(count));
        acc = (Ck(Some(acc)) + count * d * d * d).finish("F from profile")?;
    }
    Ok(acc)
}

/// F-coindex evaluated from a degree multiset via the pair identity
/// `(total - 1) * sum(count * d^2) - sum(count * d^3)`.
pub fn fco_from_profile<T: IndexScalar>(profile: &DegreeMultiset) -> Result<T, Overflow> {
    let mut m1 = Ck::<T>(Some(T::zero()));
    for (d, count) in profile.iter() {
        let d = Ck::<T>(T::from_usize(d));
        let count = Ck::<T>(T::from_usize(count));
        m1 = m1 + count * d * d;
    }
    let f = Ck(Some(f_from_profile::<T>(profile)?));
    let total = Ck::<T>(T::from_usize(profile.total()));
    let one = Ck::<T>(Some(T::one()));
    ((total - one) * m1 - f).finish("F_co from profile")
}

/// Checked-arithmetic expression wrapper: `None` latches on overflow and is
/// reported once at the end of the expression.
#[derive(Clone, Copy)]
struct Ck<T>(Option<T>);

impl<T: IndexScalar> Ck<T> {
    fn finish(self, context: &'static str) -> Result<T, Overflow> {
        self.0.ok_or(Overflow(context))
    }
}

impl<T: IndexScalar> Add for Ck<T> {
    type Output = Ck<T>;
    fn add(self, rhs: Self) -> Self {
        Ck(self.0.zip(rhs.0).and_then(|(a, b)| a.checked_add(&b)))
    }
}

impl<T: IndexScalar> Sub for Ck<T> {
    type Output = Ck<T>;
    fn sub(self, rhs: Self) -> Self {
        Ck(self.0.zip(rhs.0).and_then(|(a, b)| a.checked_sub(&b)))
    }
}

impl<T: IndexScalar> Mul for Ck<T> {
    type Output = Ck<T>;
    fn mul(self, rhs: Self) -> Self {
        Ck(self.0.zip(rhs.0).and_then(|(a, b)| a.checked_mul(&b)))
    }
}
