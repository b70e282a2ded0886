//! Squeezing transitions, trap frequencies and squeeze scenarios.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{fl, Scalar};
use crate::units::UnitSystem;

/// A confinement transition between integer dimensions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum Transition {
    ThreeToTwo,
    ThreeToOne,
    ThreeToZero,
    TwoToOne,
    TwoToZero,
    OneToZero,
}

impl Transition {
    pub const ALL: [Transition; 6] = [
        Transition::ThreeToTwo,
        Transition::ThreeToOne,
        Transition::ThreeToZero,
        Transition::TwoToOne,
        Transition::TwoToZero,
        Transition::OneToZero,
    ];

    pub fn d_ini(self) -> u32 {
        match self {
            Transition::ThreeToTwo | Transition::ThreeToOne | Transition::ThreeToZero => 3,
            Transition::TwoToOne | Transition::TwoToZero => 2,
            Transition::OneToZero => 1,
        }
    }

    pub fn d_fin(self) -> u32 {
        match self {
            Transition::ThreeToTwo => 2,
            Transition::ThreeToOne | Transition::TwoToOne => 1,
            Transition::ThreeToZero | Transition::TwoToZero | Transition::OneToZero => 0,
        }
    }

    pub fn from_dims(d_ini: u32, d_fin: u32) -> Result<Self> {
        Transition::ALL
            .into_iter()
            .find(|t| t.d_ini() == d_ini && t.d_fin() == d_fin)
            .ok_or_else(|| Error::Domain(format!("no transition {d_ini}D -> {d_fin}D")))
    }

    /// Number of directions being squeezed.
    pub fn squeezed_count(self) -> u32 {
        self.d_ini() - self.d_fin()
    }

    /// The two-body deformed-trap solver handles these transitions.
    pub fn numeric_external_supported(self) -> bool {
        matches!(
            self,
            Transition::ThreeToTwo | Transition::ThreeToOne | Transition::TwoToOne
        )
    }
}

impl fmt::Display for Transition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}to{}", self.d_ini(), self.d_fin())
    }
}

impl FromStr for Transition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_lowercase().replace("d", "");
        let parts: Vec<&str> = norm.split("to").collect();
        if parts.len() == 2 {
            if let (Ok(a), Ok(b)) = (parts[0].parse::<u32>(), parts[1].parse::<u32>()) {
                return Transition::from_dims(a, b);
            }
        }
        Err(Error::Domain(format!(
            "cannot parse transition '{s}' (expected e.g. '3to2')"
        )))
    }
}

impl TryFrom<String> for Transition {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Transition> for String {
    fn from(t: Transition) -> String {
        t.to_string()
    }
}

/// One trap frequency.  Infinite frequencies (directions removed from the
/// available space) are a distinct marker, not a floating-point infinity,
/// so that the `ω = ∞` limits of the squeeze and scale factors are exact
/// and zero-point bookkeeping can skip excluded directions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Omega<S> {
    Finite(S),
    Excluded,
}

impl<S: Scalar> Omega<S> {
    pub fn zero() -> Self {
        Omega::Finite(S::zero())
    }

    pub fn is_excluded(&self) -> bool {
        matches!(self, Omega::Excluded)
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Omega::Finite(v) if v.is_zero())
    }

    /// Finite value, if any.
    pub fn finite(&self) -> Option<S> {
        match self {
            Omega::Finite(v) => Some(*v),
            Omega::Excluded => None,
        }
    }

    pub(crate) fn validate(&self) -> Result<()> {
        match self {
            Omega::Finite(v) if *v < S::zero() => {
                Err(Error::Domain("trap frequency must be >= 0".into()))
            }
            Omega::Finite(v) if !v.is_finite() => Err(Error::Domain(
                "use Omega::Excluded for infinite trap frequencies".into(),
            )),
            _ => Ok(()),
        }
    }
}

/// Frequencies along x, y, z.
pub type OmegaTriple<S> = [Omega<S>; 3];

pub(crate) fn validate_triple<S: Scalar>(omega: &OmegaTriple<S>) -> Result<()> {
    for w in omega {
        w.validate()?;
    }
    Ok(())
}

/// A symmetric squeezing scenario: which transition runs, along which axes,
/// and at what trap frequency.
///
/// Conventions for the canonical axis assignment:
/// 3D→2D squeezes z; 3D→1D squeezes x,y; 2D→1D excludes z, squeezes y and
/// leaves x free; transitions ending at 0D squeeze every remaining axis.
#[derive(Debug, Clone, PartialEq)]
pub struct SqueezeScenario<S> {
    transition: Transition,
    omega: OmegaTriple<S>,
    omega_ho: S,
}

impl<S: Scalar> SqueezeScenario<S> {
    /// Symmetric scenario with all squeezed directions at `omega_ho`.
    pub fn symmetric(transition: Transition, omega_ho: S) -> Result<Self> {
        if !(omega_ho >= S::zero()) || !omega_ho.is_finite() {
            return Err(Error::Domain(
                "squeezing frequency must be finite and >= 0".into(),
            ));
        }
        let z = S::zero();
        let w = omega_ho;
        let omega = match transition {
            Transition::ThreeToTwo => [Omega::Finite(z), Omega::Finite(z), Omega::Finite(w)],
            Transition::ThreeToOne => [Omega::Finite(w), Omega::Finite(w), Omega::Finite(z)],
            Transition::ThreeToZero => [Omega::Finite(w), Omega::Finite(w), Omega::Finite(w)],
            Transition::TwoToOne => [Omega::Finite(z), Omega::Finite(w), Omega::Excluded],
            Transition::TwoToZero => [Omega::Finite(w), Omega::Finite(w), Omega::Excluded],
            Transition::OneToZero => [Omega::Finite(w), Omega::Excluded, Omega::Excluded],
        };
        Ok(Self {
            transition,
            omega,
            omega_ho,
        })
    }

    /// Symmetric scenario specified by the trap oscillator length `b_ho`.
    pub fn from_b_ho(transition: Transition, b_ho: S) -> Result<Self> {
        if !(b_ho > S::zero()) {
            return Err(Error::Domain("b_ho must be > 0".into()));
        }
        Self::symmetric(transition, UnitSystem::osc_frequency(b_ho))
    }

    pub fn transition(&self) -> Transition {
        self.transition
    }

    pub fn omega(&self) -> &OmegaTriple<S> {
        &self.omega
    }

    /// The common frequency of the squeezed directions.
    pub fn omega_ho(&self) -> S {
        self.omega_ho
    }

    /// Trap oscillator length, `None` when the trap is off (`ω_ho = 0`).
    pub fn b_ho(&self) -> Option<S> {
        (self.omega_ho > S::zero()).then(|| UnitSystem::osc_length(self.omega_ho))
    }

    /// Checks the structural invariants of the frequency triple:
    /// `3 − d_ini` excluded entries, `d_ini − d_fin` squeezed entries,
    /// `d_fin` untouched (zero) entries.
    pub fn check_invariants(&self) -> Result<()> {
        validate_triple(&self.omega)?;
        let excluded = self.omega.iter().filter(|w| w.is_excluded()).count() as u32;
        let zeros = self.omega.iter().filter(|w| w.is_zero()).count() as u32;
        let t = self.transition;
        let want_excluded = 3 - t.d_ini();
        let squeezed = 3 - excluded - zeros;
        if excluded != want_excluded || squeezed != t.squeezed_count() || zeros != t.d_fin() {
            return Err(Error::Domain(format!(
                "frequency triple inconsistent with {t}: {excluded} excluded, {squeezed} squeezed, {zeros} untouched"
            )));
        }
        Ok(())
    }
}

/// Oscillator occupation bookkeeping for the relative degrees of freedom.
///
/// `n_av` are the average occupation numbers per direction; the optional
/// `per_mode` list stores the occupations of each of the `N − 1` relative
/// modes explicitly.
#[derive(Debug, Clone, PartialEq)]
pub struct OccupationSet<S> {
    pub n_r_d: u32,
    pub n_av: [S; 3],
    pub per_mode: Option<Vec<[u32; 3]>>,
}

impl<S: Scalar> OccupationSet<S> {
    /// Every quantum number zero.
    pub fn ground() -> Self {
        Self {
            n_r_d: 0,
            n_av: [S::zero(); 3],
            per_mode: None,
        }
    }

    /// From explicit per-mode occupations; averages are derived.
    pub fn from_modes(n_r_d: u32, per_mode: Vec<[u32; 3]>) -> Result<Self> {
        if per_mode.is_empty() {
            return Err(Error::Domain("per_mode list must not be empty".into()));
        }
        let m = fl::<S>(per_mode.len() as f64);
        let mut n_av = [S::zero(); 3];
        for mode in &per_mode {
            for q in 0..3 {
                n_av[q] = n_av[q] + fl::<S>(mode[q] as f64);
            }
        }
        for q in 0..3 {
            n_av[q] = n_av[q] / m;
        }
        Ok(Self {
            n_r_d,
            n_av,
            per_mode: Some(per_mode),
        })
    }

    pub fn is_ground(&self) -> bool {
        self.n_r_d == 0 && self.n_av.iter().all(|n| n.is_zero())
    }

    pub(crate) fn validate(&self, n_particles: usize) -> Result<()> {
        if self.n_av.iter().any(|n| *n < S::zero()) {
            return Err(Error::Domain("occupation numbers must be >= 0".into()));
        }
        if let Some(modes) = &self.per_mode {
            if modes.len() != n_particles - 1 {
                return Err(Error::Domain(format!(
                    "per_mode must list the {} relative modes",
                    n_particles - 1
                )));
            }
            let m = fl::<S>(modes.len() as f64);
            for q in 0..3 {
                let mean = modes
                    .iter()
                    .map(|mode| fl::<S>(mode[q] as f64))
                    .sum::<S>()
                    / m;
                if (mean - self.n_av[q]).abs() > fl(1e-12) {
                    return Err(Error::Domain(
                        "n_av is not the mean of the per_mode occupations".into(),
                    ));
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transition_parsing_roundtrip() {
        for t in Transition::ALL {
            assert_eq!(t.to_string().parse::<Transition>().unwrap(), t);
        }
        assert!("3to3".parse::<Transition>().is_err());
        assert!("0to1".parse::<Transition>().is_err());
        assert_eq!("3Dto1D".parse::<Transition>().unwrap(), Transition::ThreeToOne);
    }

    #[test]
    fn scenario_invariants_hold_for_all_transitions() {
        for t in Transition::ALL {
            let sc = SqueezeScenario::<f64>::symmetric(t, 0.7).unwrap();
            sc.check_invariants().unwrap();
        }
    }

    #[test]
    fn scenario_b_ho_matches_frequency() {
        let sc = SqueezeScenario::<f64>::from_b_ho(Transition::ThreeToTwo, 2.0).unwrap();
        assert!((sc.omega_ho() - 0.25).abs() < 1e-15);
        assert!((sc.b_ho().unwrap() - 2.0).abs() < 1e-15);
    }

    #[test]
    fn occupations_average_derivation() {
        let occ = OccupationSet::<f64>::from_modes(0, vec![[1, 0, 2], [0, 0, 0]]).unwrap();
        assert_eq!(occ.n_av, [0.5, 0.0, 1.0]);
        occ.validate(3).unwrap();
        assert!(occ.validate(2).is_err());
        assert!(!occ.is_ground());
        assert!(OccupationSet::<f64>::ground().is_ground());
    }
}
