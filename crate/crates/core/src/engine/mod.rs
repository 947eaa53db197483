//! Axiom and theorem checking over the models.
//!
//! Each model is exposed through the [`Geometry`] trait. Finite models can
//! be checked exhaustively; every model can be checked on a seeded sample,
//! where universal quantifiers are sampled and existential ones are
//! answered by explicit constructions. Known counterexamples are consulted
//! before any search, so a `Fails` report for them is exact.

mod checks;
mod geometry;
mod report;
mod violation;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::gf5plane::Relation;
use crate::sampling::{SampleBounds, Stream};

pub use geometry::{
    FiniteGeometry, FiveLine, Geometry, Gf5Geometry, PentalineGeometry, PrismGeometry,
    PuncturedGeometry, SampledGeometry,
};
pub use report::{AxiomReport, Status, Strategy, Witness};
pub use violation::{Violation, WitnessError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ModelId {
    Pentaline,
    Prism,
    Gf5Mid,
    Gf5Comp,
    Punctured,
}

impl ModelId {
    pub const ALL: [ModelId; 5] = [
        ModelId::Pentaline,
        ModelId::Prism,
        ModelId::Gf5Mid,
        ModelId::Gf5Comp,
        ModelId::Punctured,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ModelId::Pentaline => "pentaline",
            ModelId::Prism => "prism",
            ModelId::Gf5Mid => "gf5-mid",
            ModelId::Gf5Comp => "gf5-comp",
            ModelId::Punctured => "punctured",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AxiomId {
    I1,
    I2,
    I3,
    I4,
    B1,
    B2,
    B3,
    B4,
    B4star,
    T1,
    T2,
    T3,
    T4,
    T5,
    Arch5,
    Cantor5,
    Dedekind5,
}

impl AxiomId {
    pub const ALL: [AxiomId; 17] = [
        AxiomId::I1,
        AxiomId::I2,
        AxiomId::I3,
        AxiomId::I4,
        AxiomId::B1,
        AxiomId::B2,
        AxiomId::B3,
        AxiomId::B4,
        AxiomId::B4star,
        AxiomId::T1,
        AxiomId::T2,
        AxiomId::T3,
        AxiomId::T4,
        AxiomId::T5,
        AxiomId::Arch5,
        AxiomId::Cantor5,
        AxiomId::Dedekind5,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AxiomId::I1 => "I1",
            AxiomId::I2 => "I2",
            AxiomId::I3 => "I3",
            AxiomId::I4 => "I4",
            AxiomId::B1 => "B1",
            AxiomId::B2 => "B2",
            AxiomId::B3 => "B3",
            AxiomId::B4 => "B4",
            AxiomId::B4star => "B4star",
            AxiomId::T1 => "T1",
            AxiomId::T2 => "T2",
            AxiomId::T3 => "T3",
            AxiomId::T4 => "T4",
            AxiomId::T5 => "T5",
            AxiomId::Arch5 => "Arch5",
            AxiomId::Cantor5 => "Cantor5",
            AxiomId::Dedekind5 => "Dedekind5",
        }
    }

    /// Position in [`AxiomId::ALL`]; also the index of the check's sample
    /// stream.
    pub fn ordinal(self) -> usize {
        self as usize
    }

    pub fn is_continuity(self) -> bool {
        matches!(self, AxiomId::Arch5 | AxiomId::Cantor5 | AxiomId::Dedekind5)
    }

    /// Statements about a single line, meaningful on the five-point line.
    pub fn is_linear(self) -> bool {
        matches!(
            self,
            AxiomId::B1
                | AxiomId::B2
                | AxiomId::B3
                | AxiomId::T1
                | AxiomId::T2
                | AxiomId::T3
                | AxiomId::T4
        ) || self.is_continuity()
    }
}

macro_rules! name_impls {
    ($t:ty) => {
        impl fmt::Display for $t {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.name())
            }
        }

        impl Serialize for $t {
            fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
                serializer.serialize_str(self.name())
            }
        }

        impl<'de> Deserialize<'de> for $t {
            fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
                String::deserialize(deserializer)?
                    .parse()
                    .map_err(serde::de::Error::custom)
            }
        }
    };
}

name_impls!(ModelId);
name_impls!(AxiomId);

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown {kind} `{token}`")]
pub struct UnknownName {
    pub kind: &'static str,
    pub token: String,
}

impl FromStr for ModelId {
    type Err = UnknownName;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ModelId::ALL
            .into_iter()
            .find(|m| m.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| UnknownName {
                kind: "model",
                token: s.to_string(),
            })
    }
}

impl FromStr for AxiomId {
    type Err = UnknownName;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "B4*" {
            return Ok(AxiomId::B4star);
        }
        AxiomId::ALL
            .into_iter()
            .find(|a| a.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| UnknownName {
                kind: "axiom",
                token: s.to_string(),
            })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Capabilities {
    pub finite_points: bool,
    pub finite_lines: bool,
    pub enumerable: bool,
    pub samplable: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct StructureHandle {
    pub model: ModelId,
    pub capabilities: Capabilities,
}

impl StructureHandle {
    pub fn new(model: ModelId) -> Self {
        let finite = matches!(
            model,
            ModelId::Pentaline | ModelId::Gf5Mid | ModelId::Gf5Comp
        );
        Self {
            model,
            capabilities: Capabilities {
                finite_points: finite,
                finite_lines: finite,
                enumerable: finite,
                samplable: true,
            },
        }
    }

    /// The axioms this model can be checked against, in canonical order.
    pub fn supported_axioms(&self) -> Vec<AxiomId> {
        AxiomId::ALL
            .into_iter()
            .filter(|a| self.unsupported_reason(*a).is_none())
            .collect()
    }

    pub fn unsupported_reason(&self, axiom: AxiomId) -> Option<&'static str> {
        match self.model {
            ModelId::Pentaline if !axiom.is_linear() => {
                Some("the five-point line is a single line; planar statements need a plane")
            }
            ModelId::Prism if axiom.is_continuity() => Some(
                "continuity is checked on the five-point line only; the vertical lines carry \
                 real heights and are not checked",
            ),
            ModelId::Pentaline => None,
            _ if axiom.is_continuity() => Some("continuity is checked on the five-point line only"),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EngineError {
    #[error("{axiom} is not supported on {model}: {reason}")]
    UnsupportedAxiom {
        model: ModelId,
        axiom: AxiomId,
        reason: String,
    },
    #[error("exhaustive checking needs a finite model; {model} is infinite")]
    IncompatibleStrategy { model: ModelId },
    #[error("the sample count must be at least 1")]
    NoSamples,
    #[error(transparent)]
    Witness(#[from] WitnessError),
}

/// Outcome of a check before timing and bookkeeping are attached.
struct Outcome {
    status: Status,
    witness: Option<Witness>,
}

fn settle<G: Geometry>(
    g: &G,
    strategy: Strategy,
    found: Option<Violation<G::Point, G::Line>>,
) -> Outcome {
    match found {
        Some(v) => {
            debug_assert!(v.verify(g), "witness does not re-verify: {v:?}");
            Outcome {
                status: Status::Fails,
                witness: Some(v.to_witness()),
            }
        }
        None => Outcome {
            status: match strategy {
                Strategy::Exhaustive => Status::Holds,
                Strategy::Sampled { .. } => Status::HoldsOnSample,
            },
            witness: None,
        },
    }
}

fn stream_for(seed: u64, axiom: AxiomId) -> Stream {
    Stream::new(seed, axiom.ordinal() as u64, SampleBounds::default())
}

fn evaluate_finite<G: FiniteGeometry + SampledGeometry>(
    g: &G,
    axiom: AxiomId,
    strategy: Strategy,
) -> Outcome {
    let found = g.known_counterexample(axiom).or_else(|| match strategy {
        Strategy::Exhaustive => checks::exhaustive(g, axiom),
        Strategy::Sampled { seed, samples } => {
            checks::sampled(g, axiom, &mut stream_for(seed, axiom), samples)
        }
    });
    settle(g, strategy, found)
}

fn evaluate_sampled<G: SampledGeometry>(
    g: &G,
    axiom: AxiomId,
    strategy: Strategy,
) -> Result<Outcome, EngineError> {
    let Strategy::Sampled { seed, samples } = strategy else {
        return Err(EngineError::IncompatibleStrategy { model: g.model() });
    };
    let found = g
        .known_counterexample(axiom)
        .or_else(|| checks::sampled(g, axiom, &mut stream_for(seed, axiom), samples));
    Ok(settle(g, strategy, found))
}

fn evaluate_pentaline(axiom: AxiomId, strategy: Strategy) -> Outcome {
    let g = PentalineGeometry;
    if axiom.is_continuity() {
        return settle(&g, strategy, checks::continuity(axiom));
    }
    evaluate_finite(&g, axiom, strategy)
}

/// Runs one check.
pub fn check_axiom(
    handle: &StructureHandle,
    axiom: AxiomId,
    strategy: Strategy,
) -> Result<AxiomReport, EngineError> {
    if let Some(reason) = handle.unsupported_reason(axiom) {
        return Err(EngineError::UnsupportedAxiom {
            model: handle.model,
            axiom,
            reason: reason.to_string(),
        });
    }
    match strategy {
        Strategy::Exhaustive if !handle.capabilities.enumerable => {
            return Err(EngineError::IncompatibleStrategy {
                model: handle.model,
            })
        }
        Strategy::Sampled { samples: 0, .. } => return Err(EngineError::NoSamples),
        _ => {}
    }
    let start = Instant::now();
    let outcome = match handle.model {
        ModelId::Pentaline => evaluate_pentaline(axiom, strategy),
        ModelId::Gf5Mid => evaluate_finite(&Gf5Geometry::new(Relation::Midpoint), axiom, strategy),
        ModelId::Gf5Comp => {
            evaluate_finite(&Gf5Geometry::new(Relation::Complement), axiom, strategy)
        }
        ModelId::Prism => evaluate_sampled(&PrismGeometry, axiom, strategy)?,
        ModelId::Punctured => evaluate_sampled(&PuncturedGeometry, axiom, strategy)?,
    };
    Ok(AxiomReport {
        model: handle.model,
        axiom,
        strategy,
        status: outcome.status,
        witness: outcome.witness,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

/// Runs the checks concurrently; reports come back in input order. A check
/// that cannot run is reported as `Unsupported` and the suite continues.
pub fn run_suite(
    handle: &StructureHandle,
    axioms: &[AxiomId],
    strategy: Strategy,
) -> Vec<AxiomReport> {
    axioms
        .par_iter()
        .map(|&axiom| {
            check_axiom(handle, axiom, strategy).unwrap_or_else(|e| AxiomReport {
                model: handle.model,
                axiom,
                strategy,
                status: Status::Unsupported,
                witness: Some(Witness::reason(unsupported_text(&e))),
                elapsed_ms: 0,
            })
        })
        .collect()
}

fn unsupported_text(e: &EngineError) -> String {
    match e {
        EngineError::UnsupportedAxiom { reason, .. } => reason.clone(),
        other => other.to_string(),
    }
}

/// Replays a reported witness against the model's primitive predicates.
pub fn verify_witness(
    model: ModelId,
    axiom: AxiomId,
    witness: &Witness,
) -> Result<bool, EngineError> {
    fn replay<G: Geometry>(g: &G, axiom: AxiomId, w: &Witness) -> Result<bool, EngineError>
    where
        <G::Point as FromStr>::Err: fmt::Display,
        <G::Line as FromStr>::Err: fmt::Display,
    {
        Ok(Violation::<G::Point, G::Line>::from_witness(axiom, w)?.verify(g))
    }
    match model {
        ModelId::Pentaline => replay(&PentalineGeometry, axiom, witness),
        ModelId::Gf5Mid => replay(&Gf5Geometry::new(Relation::Midpoint), axiom, witness),
        ModelId::Gf5Comp => replay(&Gf5Geometry::new(Relation::Complement), axiom, witness),
        ModelId::Prism => replay(&PrismGeometry, axiom, witness),
        ModelId::Punctured => replay(&PuncturedGeometry, axiom, witness),
    }
}
