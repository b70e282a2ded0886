//! Bound-state eigensolver at real dimension `d`: a single hyperradial
//! channel for two bosons, a coupled hypermomentum-channel system for three.

mod basis;
mod coupling;
mod solve;

pub use basis::{build_channel_basis, ChannelBasis};
pub use coupling::{potential_coupling_matrix, CouplingEngine};
pub use solve::{
    rms_observables, solve_ground, ChannelFunction, GridSpec, HyperradialProblem,
    HyperradialSolution, RmsObservables, SolveOptions, Spacing,
};

use crate::error::{Error, Result};
use crate::scalar::{fl, half, Scalar};

/// Generalized angular momentum `ℓ = ((N−1) d − 3)/2` entering the
/// hyperradial centrifugal term.
pub fn generalized_angular_momentum<S: Scalar>(n_particles: usize, d: S) -> Result<S> {
    if n_particles < 2 {
        return Err(Error::Domain("need at least two particles".into()));
    }
    if !(d > S::zero()) {
        return Err(Error::Domain("d must be > 0".into()));
    }
    let modes = fl::<S>((n_particles - 1) as f64);
    Ok((modes * d - fl::<S>(3.0)) * half())
}
