//! Dimensional squeezing of few-boson systems.
//!
//! Two equivalent descriptions of confining an interacting N-boson system
//! into lower dimensions are implemented side by side:
//!
//! * the **dimension-parameter method**: the hyperradial bound-state
//!   equation with the spatial dimension `d` as a continuous parameter and
//!   no external field ([`hyperradial`]);
//! * the **deformed-trap method**: ordinary 3D relative motion inside an
//!   external anisotropic oscillator whose frequencies squeeze selected
//!   directions, with the trap zero-point energy removed ([`external`]).
//!
//! For oscillator pair interactions both have closed-form solutions; the
//! [`oscillator`] module carries those along with the exact translation
//! `d ↔ ω_ho/ω_pp ↔ b_ho ↔ rms size`.  The [`equivalence`] module matches
//! the two solvers for genuine short-range interactions by ground-state
//! energy and wave-function overlap, producing translation curves.
//!
//! Units: `ħ = 1`, boson mass `m = 1`, lengths in the interaction range
//! `b_pot`, energies in `ħ²/(m b_pot²)`.
//!
//! All numerics are generic over the floating-point scalar through
//! [`Scalar`]; `f64` is the default type parameter everywhere and the only
//! one the quoted tolerances apply to.

pub mod equivalence;
pub mod error;
pub mod external;
pub mod hyperradial;
pub mod numerics;
pub mod oscillator;
pub mod potentials;
pub mod scalar;
pub mod transition;
pub mod units;

pub use error::{Error, Result, SolverWarning};
pub use potentials::PairPotential;
pub use scalar::Scalar;
pub use transition::{OccupationSet, Omega, OmegaTriple, SqueezeScenario, Transition};
pub use units::UnitSystem;

/// Default concrete scalar; the aliases below pin the main domain types
/// to it for callers that do not care about genericity.
pub type Real = f64;

pub type PairPotential64 = potentials::PairPotential<Real>;
pub type SqueezeScenario64 = transition::SqueezeScenario<Real>;
pub type HyperradialProblem64 = hyperradial::HyperradialProblem<Real>;
pub type HyperradialSolution64 = hyperradial::HyperradialSolution<Real>;
pub type ExternalSolution64 = external::ExternalSolution<Real>;
pub type TranslationPoint64 = equivalence::TranslationPoint<Real>;
pub type TranslationCurve64 = equivalence::TranslationCurve<Real>;
