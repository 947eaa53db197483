//! Exact models of ordered planes in which Pasch's axiom fails, and a
//! checker that runs the incidence and betweenness axioms against them.
//!
//! The core geometry is generic over its scalar type. The aliases below
//! fix the exact instantiations used by the checker and the CLI.

pub mod angles;
pub mod engine;
pub mod gf5plane;
pub mod literal;
pub mod pentaline;
pub mod prism;
pub mod punctured;
pub mod qfield;
pub mod sampling;
pub mod scalar;

/// Arbitrary-precision rational.
pub type Rational = num_rational::BigRational;
/// Exact `a + b√5` over arbitrary-precision rationals.
pub type Qs5 = qfield::QuadSqrt5<Rational>;
pub type PrismPoint = prism::Point<Qs5>;
pub type PrismLine = prism::Line<Qs5>;
pub type QPoint = punctured::QPoint<Rational>;
pub type QLine = punctured::QLine<Rational>;
/// Angle computations in double precision.
pub type AnglePair = angles::AnglePair<f64>;
pub type Triangle = angles::Triangle<Qs5>;

pub use engine::{AxiomId, AxiomReport, ModelId, Status, Strategy};
pub use pentaline::Vertex;
pub use scalar::{OrderedField, PentagonScalar, RationalScalar};
