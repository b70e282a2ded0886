//! Working unit system.
//!
//! Everything in this crate is expressed in units where `ħ = 1`, the boson
//! mass is `m = 1`, lengths are measured in the potential range `b_pot`, and
//! energies in `ħ²/(m b_pot²)`.  The hyperradius normalization mass equals
//! the boson mass, so oscillator lengths obey `b² = ħ/(m ω) = 1/ω`.

use crate::scalar::Scalar;

/// Marker for the fixed unit system (`ħ = m = 1`, lengths in `b_pot`).
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct UnitSystem;

impl UnitSystem {
    /// Reduced Planck constant in working units.
    pub fn hbar<S: Scalar>() -> S {
        S::one()
    }

    /// Boson mass in working units (also the hyperradius normalization mass).
    pub fn boson_mass<S: Scalar>() -> S {
        S::one()
    }

    /// Oscillator length from a frequency: `b² = ħ/(m ω)`.
    pub fn osc_length<S: Scalar>(omega: S) -> S {
        (Self::hbar::<S>() / (Self::boson_mass::<S>() * omega)).sqrt()
    }

    /// Frequency from an oscillator length: `ω = ħ/(m b²)`.
    pub fn osc_frequency<S: Scalar>(b: S) -> S {
        Self::hbar::<S>() / (Self::boson_mass::<S>() * b * b)
    }
}
