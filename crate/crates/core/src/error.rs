//! Error type shared by all modules.

use thiserror::Error;

/// Crate-wide error enumeration.
///
/// The first four variants are validation failures (bad arguments or
/// configuration); the remaining ones are numerical outcomes of a solve.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// An argument lies outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The requested combination is valid physics but outside this crate's scope.
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// Inconsistent or unusable solver/CLI configuration.
    #[error("configuration error: {0}")]
    Config(String),

    /// Malformed numerical input (e.g. unnormalized wave functions).
    #[error("input error: {0}")]
    Input(String),

    /// A converged solve whose accuracy guarantees could not be met.
    #[error("accuracy error: {0}")]
    Accuracy(String),

    /// Root bracketing failed; both endpoint values are reported.
    #[error("bracket error: {0}")]
    Bracket(String),

    /// The spectrum has no state below the continuum threshold.
    /// Distinguishes a physically unbound system from a solver failure.
    #[error("no bound state: lowest energy {lowest_energy} is at or above threshold")]
    Unbound { lowest_energy: f64 },

    /// An iterative scheme failed to reach its tolerance.
    #[error("convergence failure: {0}")]
    Unconverged(String),
}

impl Error {
    /// True for errors caused by invalid requests rather than numerics.
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Error::Domain(_) | Error::Unsupported(_) | Error::Config(_) | Error::Input(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;

/// Non-fatal diagnostics attached to solver outputs.
#[derive(Debug, Clone, PartialEq)]
pub enum SolverWarning {
    /// Energy shift between channel cutoffs `k_max` and `k_max + 2` exceeded
    /// the requested tolerance; both energies are reported.
    ChannelTruncation { e_kmax: f64, e_next: f64 },
    /// The scale search ended on a boundary of its interval.
    ScaleAtBoundary { s: f64 },
    /// The solution box had to be enlarged this many times before the
    /// boundary-amplitude criterion held.
    BoxExpanded { times: u32 },
}
