//! Quantum logic on finite-dimensional complex Hilbert spaces.
//!
//! Propositions are closed subspaces of `C^d`; the connectives are
//! intersection, closed span and orthogonal complement. The crate also builds
//! EPR-like correlation states for compatible pairs and models a classical
//! system (connected vessels of water) with the same correlation pattern.
//!
//! All numerics are generic over [`Real`] (`f32` or `f64`); the aliases below
//! fix the scalar for common use.

pub mod error;
pub mod generate;
pub mod hilbert;
pub mod invariants;
pub mod logic;
pub mod measurement;
pub mod scalar;
pub mod vessels;

pub use error::{EprSide, Error, Result};
pub use logic::TruthStatus;
pub use measurement::{ConnectiveTruth, JointOutcome, OutcomeCounts, SampleRun};
pub use scalar::Real;

pub type ComplexVector = hilbert::ComplexVector<f64>;
pub type ComplexMatrix = hilbert::ComplexMatrix<f64>;
pub type Subspace = hilbert::Subspace<f64>;
pub type Tolerance = hilbert::Tolerance<f64>;
pub type Proposition = logic::Proposition<f64>;
pub type State = logic::State<f64>;
pub type JointMeasurement = measurement::JointMeasurement<f64>;
pub type OutcomeDistribution = measurement::OutcomeDistribution<f64>;
pub type VesselState = vessels::VesselState<f64>;
pub type VesselReport = vessels::VesselReport<f64>;

pub type Subspace32 = hilbert::Subspace<f32>;
pub type Tolerance32 = hilbert::Tolerance<f32>;
pub type Proposition32 = logic::Proposition<f32>;
pub type State32 = logic::State<f32>;
pub type JointMeasurement32 = measurement::JointMeasurement<f32>;
