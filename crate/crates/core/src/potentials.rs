//! Particle-particle interactions used by both solvers.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::numerov;
use crate::scalar::{fl, half, Scalar};
use crate::units::UnitSystem;

/// A central two-body potential.
///
/// The harmonic kind is the collective oscillator interaction: for equal
/// masses `m` in an `N`-body system of total mass `M = N m` each pair
/// contributes `½ ω_pp² (m²/M) r²`, so the pair sum equals `½ m ω_pp² ρ²`
/// in terms of the hyperradius.  The mass factor is deliberately `m²/M`,
/// not the reduced mass.
///
/// Sign conventions: the Gaussian strength `v0` is negative for attraction;
/// the Morse `depth` is positive, with `V(r0) = -depth`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum PairPotential<S = f64> {
    Harmonic { omega_pp: S },
    Gaussian { v0: S, b_pot: S },
    Morse { depth: S, b_pot: S, r0: S },
}

impl<S: Scalar> PairPotential<S> {
    pub fn harmonic(omega_pp: S) -> Result<Self> {
        let p = PairPotential::Harmonic { omega_pp };
        p.validate()?;
        Ok(p)
    }

    pub fn gaussian(v0: S, b_pot: S) -> Result<Self> {
        let p = PairPotential::Gaussian { v0, b_pot };
        p.validate()?;
        Ok(p)
    }

    pub fn morse(depth: S, b_pot: S, r0: S) -> Result<Self> {
        let p = PairPotential::Morse { depth, b_pot, r0 };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            PairPotential::Harmonic { omega_pp } => {
                if !(*omega_pp > S::zero()) {
                    return Err(Error::Domain("harmonic kind needs omega_pp > 0".into()));
                }
            }
            PairPotential::Gaussian { b_pot, .. } => {
                if !(*b_pot > S::zero()) {
                    return Err(Error::Domain("gaussian range b_pot must be > 0".into()));
                }
            }
            PairPotential::Morse { depth, b_pot, r0 } => {
                if !(*b_pot > S::zero()) {
                    return Err(Error::Domain("morse range b_pot must be > 0".into()));
                }
                if !(*depth >= S::zero()) {
                    return Err(Error::Domain(
                        "morse depth is positive by convention (V(r0) = -depth)".into(),
                    ));
                }
                if !(*r0 >= S::zero()) {
                    return Err(Error::Domain("morse minimum r0 must be >= 0".into()));
                }
            }
        }
        Ok(())
    }

    /// Characteristic range: the width/decay length, or the oscillator
    /// length `b_pp` for the harmonic kind.
    pub fn range(&self) -> S {
        match self {
            PairPotential::Harmonic { omega_pp } => UnitSystem::osc_length(*omega_pp),
            PairPotential::Gaussian { b_pot, .. } => *b_pot,
            PairPotential::Morse { b_pot, .. } => *b_pot,
        }
    }

    /// Outer extent of the attractive region: where the potential has
    /// decayed to negligible size (short-range kinds only).
    pub(crate) fn tail_radius(&self) -> Option<S> {
        match self {
            PairPotential::Harmonic { .. } => None,
            PairPotential::Gaussian { b_pot, .. } => Some(*b_pot * fl(10.0)),
            PairPotential::Morse { b_pot, r0, .. } => Some(*r0 + *b_pot * fl(40.0)),
        }
    }

    pub fn is_short_range(&self) -> bool {
        !matches!(self, PairPotential::Harmonic { .. })
    }

    /// The oscillator frequency, for the harmonic kind.
    pub fn omega_pp(&self) -> Option<S> {
        match self {
            PairPotential::Harmonic { omega_pp } => Some(*omega_pp),
            _ => None,
        }
    }

    /// Pair interaction energy at separation `r` for one pair in an
    /// `N`-particle system of equal masses `m`.
    pub fn evaluate(&self, r: S, n_particles: usize, mass: S) -> Result<S> {
        if r < S::zero() {
            return Err(Error::Domain("pair separation must be >= 0".into()));
        }
        if n_particles < 2 {
            return Err(Error::Domain("need at least two particles".into()));
        }
        Ok(self.eval_unchecked(r, n_particles, mass))
    }

    #[inline]
    pub(crate) fn eval_unchecked(&self, r: S, n_particles: usize, mass: S) -> S {
        match self {
            PairPotential::Harmonic { omega_pp } => {
                // ½ ω² (m²/M) r² with M = N m
                let mass_factor = mass / fl::<S>(n_particles as f64);
                half::<S>() * *omega_pp * *omega_pp * mass_factor * r * r
            }
            PairPotential::Gaussian { v0, b_pot } => {
                let q = r / *b_pot;
                *v0 * (-q * q).exp()
            }
            PairPotential::Morse { depth, b_pot, r0 } => {
                let q = (r - *r0) / *b_pot;
                let e = (-q).exp();
                *depth * (e * e - fl::<S>(2.0) * e)
            }
        }
    }

    /// Names accepted by [`PairPotential::preset`].
    pub const PRESET_NAMES: [&'static str; 5] =
        ["harmonic", "G-small", "G-large", "M-small", "M-large"];

    /// Shipped presets.  The Gaussian/Morse parameters are tuned so the
    /// computed 3D scattering lengths fall into two regimes:
    /// "small" ≈ 1 b_pot (comparable to the range) and "large" ≳ 10 b_pot
    /// (a weakly bound two-body state).  Each short-range preset supports
    /// exactly one two-body bound state in 3D.
    pub fn preset(name: &str) -> Result<Self> {
        match name.to_ascii_lowercase().as_str() {
            "harmonic" => PairPotential::harmonic(S::one()),
            "g-small" => PairPotential::gaussian(fl(GAUSS_SMALL_V0), S::one()),
            "g-large" => PairPotential::gaussian(fl(GAUSS_LARGE_V0), S::one()),
            "m-small" => PairPotential::morse(fl(MORSE_SMALL_DEPTH), S::one(), S::one()),
            "m-large" => PairPotential::morse(fl(MORSE_LARGE_DEPTH), S::one(), S::one()),
            other => Err(Error::Unsupported(format!(
                "unknown potential preset '{other}' (available: {})",
                Self::PRESET_NAMES.join(", ")
            ))),
        }
    }

    /// Identifier used in CSV output for a preset-equivalent potential.
    pub fn describe(&self) -> String {
        match self {
            PairPotential::Harmonic { omega_pp } => format!("harmonic(omega_pp={omega_pp})"),
            PairPotential::Gaussian { v0, b_pot } => format!("gaussian(v0={v0},b={b_pot})"),
            PairPotential::Morse { depth, b_pot, r0 } => {
                format!("morse(depth={depth},b={b_pot},r0={r0})")
            }
        }
    }

    /// Scaled copy with the strength multiplied by `factor` (shape intact).
    pub fn scaled_strength(&self, factor: S) -> Self {
        match self {
            PairPotential::Harmonic { omega_pp } => PairPotential::Harmonic {
                omega_pp: *omega_pp * factor.sqrt(),
            },
            PairPotential::Gaussian { v0, b_pot } => PairPotential::Gaussian {
                v0: *v0 * factor,
                b_pot: *b_pot,
            },
            PairPotential::Morse { depth, b_pot, r0 } => PairPotential::Morse {
                depth: *depth * factor,
                b_pot: *b_pot,
                r0: *r0,
            },
        }
    }
}

// Preset strengths, calibrated against the computed 3D scattering lengths
// (reduced mass 1/2, ranges b_pot = 1):
//   G-small: a ≈ 1.00   G-large: a ≈ 20.3
//   M-small: a ≈ 1.04   M-large: a ≈ 15.2   (both Morse with r0 = b_pot)
// Each supports exactly one two-body bound state in 3D.
const GAUSS_SMALL_V0: f64 = -10.14;
const GAUSS_LARGE_V0: f64 = -2.84;
const MORSE_SMALL_DEPTH: f64 = 1.62;
const MORSE_LARGE_DEPTH: f64 = 0.46;

/// 3D s-wave scattering length of a short-range potential from the
/// zero-energy radial solution: `u(r) ∝ (r - a)` outside the interaction.
///
/// Integrates `u'' = (2μ/ħ²) V(r) u` with Numerov on a fine uniform grid and
/// fits the free-region asymptote through the last two sampled radii.
pub fn scattering_length_3d<S: Scalar>(
    potential: &PairPotential<S>,
    reduced_mass: S,
) -> Result<S> {
    potential.validate()?;
    if !potential.is_short_range() {
        return Err(Error::Unsupported(
            "scattering length is only defined for short-range kinds".into(),
        ));
    }
    if !(reduced_mass > S::zero()) {
        return Err(Error::Domain("reduced mass must be > 0".into()));
    }
    let b = potential.range();
    let r_match = b * fl::<S>(25.0);
    let n_steps = 60_000usize;
    let h = r_match / fl::<S>(n_steps as f64);
    let two_mu = fl::<S>(2.0) * reduced_mass / UnitSystem::hbar::<S>();
    let g = |r: S| two_mu * potential.eval_unchecked(r, 2, UnitSystem::boson_mass());
    let u = numerov::propagate(g, S::zero(), h, n_steps + 1, S::zero(), h);
    // asymptote through r_match and an interior free-region point
    let i2 = n_steps;
    let i1 = n_steps * 4 / 5;
    let r1 = h * fl::<S>(i1 as f64);
    let r2 = h * fl::<S>(i2 as f64);
    let (u1, u2) = (u[i1], u[i2]);
    let denom = u2 - u1;
    if denom == S::zero() {
        // exactly at a binding threshold the asymptote is flat: |a| = ∞
        let numer = u2 * r1 - u1 * r2;
        return Ok(if numer >= S::zero() {
            S::infinity()
        } else {
            S::neg_infinity()
        });
    }
    Ok((u2 * r1 - u1 * r2) / denom)
}

/// Number of 3D s-wave two-body bound states (nodes of the zero-energy
/// solution inside the matching radius).
pub fn bound_state_count_3d<S: Scalar>(
    potential: &PairPotential<S>,
    reduced_mass: S,
) -> Result<usize> {
    potential.validate()?;
    if !potential.is_short_range() {
        return Err(Error::Unsupported(
            "bound-state count by node theorem needs a short-range kind".into(),
        ));
    }
    let b = potential.range();
    let r_match = b * fl::<S>(25.0);
    let n_steps = 60_000usize;
    let h = r_match / fl::<S>(n_steps as f64);
    let two_mu = fl::<S>(2.0) * reduced_mass / UnitSystem::hbar::<S>();
    let g = |r: S| two_mu * potential.eval_unchecked(r, 2, UnitSystem::boson_mass());
    let u = numerov::propagate(g, S::zero(), h, n_steps + 1, S::zero(), h);
    let mut nodes = 0;
    let mut prev = u[1];
    for &v in &u[2..] {
        if v != S::zero() && prev != S::zero() && (v > S::zero()) != (prev > S::zero()) {
            nodes += 1;
        }
        if v != S::zero() {
            prev = v;
        }
    }
    Ok(nodes)
}

/// Closed-form rms radii of the oscillator-bound system at integer
/// dimensions, used as normalizing lengths: for `N = 2`,
/// `(r_2D, r_1D) = (b_pp, b_pp/√2)`; for `N = 3`,
/// `(b_pp √(2/3), b_pp √(1/3))`.
pub fn ho_rms_radii<S: Scalar>(n_particles: usize, b_pp: S) -> Result<(S, S)> {
    if !(b_pp > S::zero()) {
        return Err(Error::Domain("b_pp must be > 0".into()));
    }
    match n_particles {
        2 => Ok((b_pp, b_pp / fl::<S>(2.0).sqrt())),
        3 => Ok((
            b_pp * (fl::<S>(2.0) / fl::<S>(3.0)).sqrt(),
            b_pp / fl::<S>(3.0).sqrt(),
        )),
        _ => Err(Error::Unsupported(format!(
            "oscillator rms radii are provided for N in {{2, 3}}, got {n_particles}"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn harmonic_pair_energy_at_oscillator_length() {
        // N=2, m=1, ω_pp=1, r=b_pp → ħω/4
        let p = PairPotential::harmonic(1.0f64).unwrap();
        let b_pp = 1.0;
        let v = p.evaluate(b_pp, 2, 1.0).unwrap();
        assert!((v - 0.25).abs() < 1e-15);
    }

    #[test]
    fn gaussian_at_origin_is_strength() {
        let p = PairPotential::gaussian(-1.0f64, 1.0).unwrap();
        assert_eq!(p.evaluate(0.0, 2, 1.0).unwrap(), -1.0);
    }

    #[test]
    fn morse_minimum_location_by_finite_differences() {
        let p = PairPotential::morse(2.0f64, 0.7, 1.3).unwrap();
        let v_min = p.evaluate(1.3, 2, 1.0).unwrap();
        assert!((v_min + 2.0).abs() < 1e-14);
        let h = 1e-6;
        let d1 = (p.evaluate(1.3 + h, 2, 1.0).unwrap() - p.evaluate(1.3 - h, 2, 1.0).unwrap())
            / (2.0 * h);
        assert!(d1.abs() < 1e-8, "dV/dr at r0 should vanish, got {d1}");
    }

    #[test]
    fn negative_separation_is_domain_error() {
        let p = PairPotential::gaussian(-1.0f64, 1.0).unwrap();
        assert!(matches!(
            p.evaluate(-0.1, 2, 1.0),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn scattering_length_vanishes_for_zero_strength() {
        let p = PairPotential::gaussian(0.0f64, 1.0).unwrap();
        let a = scattering_length_3d(&p, 0.5).unwrap();
        assert!(a.abs() < 1e-9, "a = {a}");
    }

    #[test]
    fn scattering_length_rejects_harmonic() {
        let p = PairPotential::harmonic(1.0f64).unwrap();
        assert!(matches!(
            scattering_length_3d(&p, 0.5),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn rms_radii_match_closed_forms() {
        let (r2, r1) = ho_rms_radii(2, 1.0f64).unwrap();
        assert!((r2 - 1.0).abs() < 1e-15);
        assert!((r1 - 1.0 / 2.0f64.sqrt()).abs() < 1e-15);
        let (r2, r1) = ho_rms_radii(3, 1.0f64).unwrap();
        assert!((r2 - (2.0f64 / 3.0).sqrt()).abs() < 1e-15);
        assert!((r1 - (1.0f64 / 3.0).sqrt()).abs() < 1e-15);
        // linear scaling in b_pp
        let (r2b, r1b) = ho_rms_radii(3, 2.0f64).unwrap();
        assert!((r2b - 2.0 * r2).abs() < 1e-15);
        assert!((r1b - 2.0 * r1).abs() < 1e-15);
        assert!(matches!(ho_rms_radii(4, 1.0f64), Err(Error::Unsupported(_))));
    }

    #[test]
    fn presets_load_by_name() {
        for name in PairPotential::<f64>::PRESET_NAMES {
            PairPotential::<f64>::preset(name).unwrap();
        }
        assert!(PairPotential::<f64>::preset("nope").is_err());
    }

    #[test]
    fn preset_scattering_length_regimes() {
        let mu = 0.5f64;
        let a_gs = scattering_length_3d(&PairPotential::preset("G-small").unwrap(), mu).unwrap();
        let a_gl = scattering_length_3d(&PairPotential::preset("G-large").unwrap(), mu).unwrap();
        let a_ms = scattering_length_3d(&PairPotential::preset("M-small").unwrap(), mu).unwrap();
        let a_ml = scattering_length_3d(&PairPotential::preset("M-large").unwrap(), mu).unwrap();
        for (name, a) in [("G-small", a_gs), ("M-small", a_ms)] {
            assert!(
                a > 0.8 && a < 1.3,
                "{name} should have a scattering length near the range, got {a}"
            );
        }
        for (name, a) in [("G-large", a_gl), ("M-large", a_ml)] {
            assert!(a > 10.0, "{name} should have a large scattering length, got {a}");
        }
        // each supports exactly one 3D two-body bound state
        for name in ["G-small", "G-large", "M-small", "M-large"] {
            let p = PairPotential::<f64>::preset(name).unwrap();
            assert_eq!(bound_state_count_3d(&p, mu).unwrap(), 1, "{name}");
        }
    }
}

