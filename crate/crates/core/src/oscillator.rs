//! Closed-form oscillator results: energies, wave functions, the
//! dimension ↔ squeezing-frequency translation, scale factors, and the
//! trap-length/rms-size relations.
//!
//! Everything here works with the ratio `x = ω_ho/ω_pp = b_pp²/b_ho²`.
//! The squeeze factor `f(x) = √(1+x²) − x` is evaluated as
//! `1/(√(1+x²) + x)` to stay accurate at large `x`.

use crate::error::{Error, Result};
use crate::numerics::special::{laguerre, ln_gamma};
use crate::potentials::ho_rms_radii;
use crate::scalar::{fl, half, Scalar};
use crate::transition::{validate_triple, OccupationSet, Omega, OmegaTriple, Transition};
use crate::units::UnitSystem;

/// Per-direction squeeze factor `f(x) = √(1+x²) − x`, strictly decreasing
/// from `f(0) = 1` to `f(∞) = 0`.
pub fn squeeze_factor<S: Scalar>(x: S) -> Result<S> {
    if x < S::zero() || x.is_nan() {
        return Err(Error::Domain("frequency ratio must be >= 0".into()));
    }
    if x.is_infinite() {
        return Ok(S::zero());
    }
    Ok(((S::one() + x * x).sqrt() + x).recip())
}

fn squeeze_factor_omega<S: Scalar>(w: &Omega<S>, omega_pp: S) -> Result<S> {
    match w {
        Omega::Excluded => Ok(S::zero()),
        Omega::Finite(v) => squeeze_factor(*v / omega_pp),
    }
}

fn check_omega_pp<S: Scalar>(omega_pp: S) -> Result<()> {
    if !(omega_pp > S::zero()) || !omega_pp.is_finite() {
        return Err(Error::Domain("omega_pp must be finite and > 0".into()));
    }
    Ok(())
}

/// Ground-state effective dimension from the three trap frequencies,
/// `d = Σ_q f(ω_q/ω_pp)`.  Independent of the particle number.
pub fn dimension_from_frequencies<S: Scalar>(
    omega: &OmegaTriple<S>,
    omega_pp: S,
) -> Result<S> {
    validate_triple(omega)?;
    check_omega_pp(omega_pp)?;
    let mut d = S::zero();
    for w in omega {
        d = d + squeeze_factor_omega(w, omega_pp)?;
    }
    Ok(d)
}

/// Effective dimension for general occupations:
/// `d = −4 n_r/(N−1) + Σ_q (2 n_q^av + 1) f(ω_q/ω_pp)`.
///
/// Excited occupations may push `d` above 3; solvers clamp, this layer
/// does not.
pub fn dimension_general<S: Scalar>(
    occ: &OccupationSet<S>,
    omega: &OmegaTriple<S>,
    omega_pp: S,
    n_particles: usize,
) -> Result<S> {
    validate_triple(omega)?;
    check_omega_pp(omega_pp)?;
    if n_particles < 2 {
        return Err(Error::Domain("need at least two particles".into()));
    }
    occ.validate(n_particles)?;
    let two = fl::<S>(2.0);
    let mut d = -fl::<S>(4.0) * fl::<S>(occ.n_r_d as f64) / fl::<S>((n_particles - 1) as f64);
    for (w, n_av) in omega.iter().zip(&occ.n_av) {
        d = d + (two * *n_av + S::one()) * squeeze_factor_omega(w, omega_pp)?;
    }
    Ok(d)
}

/// Symmetric squeezing: `d = d_fin + (d_ini − d_fin) f(x)`.
pub fn symmetric_dimension<S: Scalar>(transition: Transition, x: S) -> Result<S> {
    let f = squeeze_factor(x)?;
    let d_fin = fl::<S>(transition.d_fin() as f64);
    let d_ini = fl::<S>(transition.d_ini() as f64);
    Ok(d_fin + (d_ini - d_fin) * f)
}

/// Inverse of [`symmetric_dimension`]:
/// `x = (d_ini − d)(d_ini + d − 2 d_fin) / (2 (d − d_fin)(d_ini − d_fin))`.
///
/// The closed endpoints are honored exactly (`x = 0` at `d = d_ini`,
/// `x = ∞` at `d = d_fin`); outside `[d_fin, d_ini]` is a domain error.
pub fn frequency_ratio_from_dimension<S: Scalar>(transition: Transition, d: S) -> Result<S> {
    let d_fin = fl::<S>(transition.d_fin() as f64);
    let d_ini = fl::<S>(transition.d_ini() as f64);
    if d == d_ini {
        return Ok(S::zero());
    }
    if d == d_fin {
        return Ok(S::infinity());
    }
    if !(d > d_fin && d < d_ini) {
        return Err(Error::Domain(format!(
            "d = {d} outside [{d_fin}, {d_ini}] for {transition}"
        )));
    }
    let two = fl::<S>(2.0);
    Ok((d_ini - d) * (d_ini + d - two * d_fin) / (two * (d - d_fin) * (d_ini - d_fin)))
}

/// Relative-motion oscillator energy after zero-point subtraction:
/// `E_ext = ħω_pp Σ_q f(ω_q/ω_pp) (N−1)(n_q^av + ½)`.
/// Excluded directions contribute nothing.
pub fn energy_ext_ho<S: Scalar>(
    omega: &OmegaTriple<S>,
    omega_pp: S,
    occ: &OccupationSet<S>,
    n_particles: usize,
) -> Result<S> {
    validate_triple(omega)?;
    check_omega_pp(omega_pp)?;
    if n_particles < 2 {
        return Err(Error::Domain("need at least two particles".into()));
    }
    occ.validate(n_particles)?;
    let modes = fl::<S>((n_particles - 1) as f64);
    let mut e = S::zero();
    for (w, n_av) in omega.iter().zip(&occ.n_av) {
        let f = squeeze_factor_omega(w, omega_pp)?;
        e = e + f * modes * (*n_av + half());
    }
    Ok(UnitSystem::hbar::<S>() * omega_pp * e)
}

/// Zero-point energy of the active (finite-frequency) squeezed directions:
/// `E_0 = ħ Σ_q ω_q (N−1)(n_q^av + ½)`.  Excluded directions never enter.
pub fn zero_point_energy<S: Scalar>(
    omega: &OmegaTriple<S>,
    n_particles: usize,
    occ: &OccupationSet<S>,
) -> Result<S> {
    validate_triple(omega)?;
    if n_particles < 2 {
        return Err(Error::Domain("need at least two particles".into()));
    }
    occ.validate(n_particles)?;
    let modes = fl::<S>((n_particles - 1) as f64);
    let mut e = S::zero();
    for (w, n_av) in omega.iter().zip(&occ.n_av) {
        if let Omega::Finite(v) = w {
            e = e + *v * modes * (*n_av + half());
        }
    }
    Ok(UnitSystem::hbar::<S>() * e)
}

/// Oscillator energy of the dimension-parameter method:
/// `E_d = ħω_pp (2 n_r + (N−1) d / 2)`.
pub fn energy_d_ho<S: Scalar>(n_particles: usize, d: S, n_r: u32, omega_pp: S) -> Result<S> {
    check_omega_pp(omega_pp)?;
    if n_particles < 2 {
        return Err(Error::Domain("need at least two particles".into()));
    }
    if !(d > S::zero()) {
        return Err(Error::Domain("d must be > 0".into()));
    }
    let modes = fl::<S>((n_particles - 1) as f64);
    Ok(UnitSystem::hbar::<S>()
        * omega_pp
        * (fl::<S>(2.0 * n_r as f64) + modes * d * half()))
}

/// Per-direction deformation scale factors, `1/s_q² = √(1 + ω_q²/ω_pp²)`:
/// 1 for untouched directions, 0 for excluded ones.
pub fn scale_factors<S: Scalar>(omega: &OmegaTriple<S>, omega_pp: S) -> Result<[S; 3]> {
    validate_triple(omega)?;
    check_omega_pp(omega_pp)?;
    let mut s = [S::zero(); 3];
    for (sq, w) in s.iter_mut().zip(omega) {
        *sq = match w {
            Omega::Excluded => S::zero(),
            Omega::Finite(v) => {
                let x = *v / omega_pp;
                (S::one() + x * x).sqrt().recip().sqrt()
            }
        };
    }
    Ok(s)
}

/// Scale factor on the squeezed directions as a function of `x = ω_ho/ω_pp`.
pub fn scale_factor_from_ratio<S: Scalar>(x: S) -> Result<S> {
    if x < S::zero() || x.is_nan() {
        return Err(Error::Domain("frequency ratio must be >= 0".into()));
    }
    if x.is_infinite() {
        return Ok(S::zero());
    }
    Ok((S::one() + x * x).sqrt().recip().sqrt())
}

/// Trap-length to rms-size ratios of a transition at dimension `d`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BhoOverRms<S> {
    pub over_r2d: S,
    /// Only quoted for transitions ending in 1D.
    pub over_r1d: Option<S>,
}

/// Supported `(transition, N)` pairs for the closed-form ratio relations.
fn rms_relation_supported(transition: Transition, n_particles: usize) -> bool {
    matches!(
        (transition, n_particles),
        (Transition::ThreeToTwo, 2)
            | (Transition::ThreeToOne, 2)
            | (Transition::TwoToOne, 2)
            | (Transition::ThreeToTwo, 3)
            | (Transition::ThreeToOne, 3)
    )
}

/// `b_pp` in units of the 2D rms radius: `r_2D = b_pp` for N=2 and
/// `b_pp √(2/3)` for N=3.
pub fn b_pp_over_r2d<S: Scalar>(n_particles: usize) -> Result<S> {
    let (r2d, _) = ho_rms_radii(n_particles, S::one())?;
    Ok(r2d.recip())
}

/// Closed-form `b_ho/r_2D` (and `b_ho/r_1D` where quoted) at dimension `d`
/// inside the open transition interval.  Consistent with
/// [`frequency_ratio_from_dimension`] through `b_ho² = b_pp²/x`.
pub fn bho_over_rms<S: Scalar>(
    transition: Transition,
    d: S,
    n_particles: usize,
) -> Result<BhoOverRms<S>> {
    if !rms_relation_supported(transition, n_particles) {
        return Err(Error::Unsupported(format!(
            "no closed-form b_ho/rms relation for {transition} with N = {n_particles}"
        )));
    }
    let d_fin = fl::<S>(transition.d_fin() as f64);
    let d_ini = fl::<S>(transition.d_ini() as f64);
    if !(d > d_fin && d < d_ini) {
        return Err(Error::Domain(format!(
            "d = {d} outside the open interval ({d_fin}, {d_ini})"
        )));
    }
    let x = frequency_ratio_from_dimension(transition, d)?;
    // b_ho/b_pp = 1/√x, and r_2D, r_1D are fixed multiples of b_pp
    let bho_over_bpp = x.sqrt().recip();
    let (r2d, r1d) = ho_rms_radii(n_particles, S::one())?;
    let over_r2d = bho_over_bpp / r2d;
    let over_r1d = (transition.d_fin() == 1).then(|| bho_over_bpp / r1d);
    Ok(BhoOverRms { over_r2d, over_r1d })
}

/// Which rms normalizer a ratio refers to.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BhoRatio<S> {
    OverR2d(S),
    OverR1d(S),
}

/// Deformation scale from the trap-to-rms ratio:
/// `1/s² = √(1 + (r_2D/b_ho)⁴)` for N=2 and
/// `1/s² = √(1 + (9/4)(r_2D/b_ho)⁴)` for N=3 (equivalently via `r_1D`).
pub fn scale_from_bho<S: Scalar>(
    transition: Transition,
    n_particles: usize,
    ratio: BhoRatio<S>,
) -> Result<S> {
    if !rms_relation_supported(transition, n_particles) {
        return Err(Error::Unsupported(format!(
            "no closed-form s(b_ho) relation for {transition} with N = {n_particles}"
        )));
    }
    let value = match ratio {
        BhoRatio::OverR2d(v) | BhoRatio::OverR1d(v) => v,
    };
    if !(value > S::zero()) {
        return Err(Error::Domain("b_ho/rms ratio must be > 0".into()));
    }
    if matches!(ratio, BhoRatio::OverR1d(_)) && transition.d_fin() != 1 {
        return Err(Error::Unsupported(format!(
            "r_1D-normalized ratios are quoted only for transitions ending in 1D, not {transition}"
        )));
    }
    // x = (b_pp/b_ho)², expressed through the requested normalizer
    let (r2d, r1d) = ho_rms_radii(n_particles, S::one())?;
    let norm = match ratio {
        BhoRatio::OverR2d(_) => r2d,
        BhoRatio::OverR1d(_) => r1d,
    };
    let bho_over_bpp = value * norm;
    let x = (bho_over_bpp * bho_over_bpp).recip();
    scale_factor_from_ratio(x)
}

/// Normalized external-method oscillator ground-state profile over one
/// mass-normalized relative (Jacobi) coordinate; a Gaussian with
/// per-direction lengths `b_q² = ħ/(m √(ω_q² + ω_pp²))`.
/// For `N = 2` the coordinate is `r/√2` with `r` the pair separation.
#[derive(Debug, Clone)]
pub struct ExtHoProfile<S> {
    lengths: [S; 3],
    active: [bool; 3],
    norm: S,
}

impl<S: Scalar> ExtHoProfile<S> {
    pub fn new(omega: &OmegaTriple<S>, omega_pp: S) -> Result<Self> {
        validate_triple(omega)?;
        check_omega_pp(omega_pp)?;
        let mut lengths = [S::zero(); 3];
        let mut active = [true; 3];
        let mut norm = S::one();
        let pi = fl::<S>(std::f64::consts::PI);
        for q in 0..3 {
            match &omega[q] {
                Omega::Excluded => {
                    active[q] = false;
                }
                Omega::Finite(v) => {
                    let eff = (*v * *v + omega_pp * omega_pp).sqrt();
                    let b2 = UnitSystem::hbar::<S>() / (UnitSystem::boson_mass::<S>() * eff);
                    lengths[q] = b2.sqrt();
                    // 1D normalization (π b²)^{-1/4} per active direction
                    norm = norm * (pi * b2).sqrt().sqrt().recip();
                }
            }
        }
        Ok(Self {
            lengths,
            active,
            norm,
        })
    }

    /// Oscillator lengths per direction (zero on excluded directions).
    pub fn lengths(&self) -> [S; 3] {
        self.lengths
    }

    /// Evaluate at a mass-normalized relative coordinate; excluded
    /// directions must be passed as zero.
    pub fn eval(&self, q: [S; 3]) -> S {
        let mut arg = S::zero();
        for k in 0..3 {
            if self.active[k] {
                let t = q[k] / self.lengths[k];
                arg = arg + t * t;
            }
        }
        self.norm * (-arg * half::<S>()).exp()
    }
}

/// Normalized radial profile of the dimension-parameter oscillator:
/// `F(ρ) = N ρ^{ℓ+1} e^{−ρ²/2b²} L_n^{ℓ+1/2}(ρ²/b²)` with
/// `ℓ = ((N−1)d − 3)/2`, normalized as `∫ F² dρ = 1`.
#[derive(Debug, Clone)]
pub struct DHoRadialProfile<S> {
    ell: S,
    n_r: u32,
    b_pp: S,
    norm: S,
}

impl<S: Scalar> DHoRadialProfile<S> {
    pub fn new(n_particles: usize, d: S, n_r: u32, omega_pp: S) -> Result<Self> {
        check_omega_pp(omega_pp)?;
        if n_particles < 2 {
            return Err(Error::Domain("need at least two particles".into()));
        }
        let ell = crate::hyperradial::generalized_angular_momentum(n_particles, d)?;
        let three_half = fl::<S>(1.5);
        if !(ell + three_half > S::zero()) {
            return Err(Error::Domain(
                "non-normalizable parameters: ℓ + 3/2 must be > 0".into(),
            ));
        }
        let b_pp = UnitSystem::osc_length(omega_pp);
        // ∫ ρ^{2ℓ+2} e^{-ρ²/b²} [L_n^{ℓ+1/2}]² dρ = (b^{2ℓ+3}/2) Γ(n+ℓ+3/2)/n!
        let nf = fl::<S>(n_r as f64);
        let ln_norm2 = (fl::<S>(2.0) * ell + fl::<S>(3.0)) * b_pp.ln() - fl::<S>(2.0).ln()
            + ln_gamma(nf + ell + three_half)
            - ln_gamma(nf + S::one());
        let norm = (-ln_norm2 * half::<S>()).exp();
        Ok(Self {
            ell,
            n_r,
            b_pp,
            norm,
        })
    }

    pub fn eval(&self, rho: S) -> S {
        if rho < S::zero() {
            return S::zero();
        }
        if rho == S::zero() {
            // ρ^{ℓ+1} with ℓ+1 possibly zero (d = 1, N = 2)
            return if self.ell + S::one() == S::zero() {
                self.norm * laguerre(self.n_r, self.ell + half::<S>(), S::zero())
            } else {
                S::zero()
            };
        }
        let t = rho / self.b_pp;
        let t2 = t * t;
        self.norm
            * rho.powf(self.ell + S::one())
            * (-t2 * half::<S>()).exp()
            * laguerre(self.n_r, self.ell + half::<S>(), t2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SQRT2: f64 = std::f64::consts::SQRT_2;

    fn sym3<S: Scalar>(t: Transition, x: f64) -> SymScenario<S> {
        SymScenario { t, x: fl(x) }
    }

    struct SymScenario<S> {
        t: Transition,
        x: S,
    }

    impl<S: Scalar> SymScenario<S> {
        fn omega(&self) -> OmegaTriple<S> {
            crate::transition::SqueezeScenario::symmetric(self.t, self.x)
                .unwrap()
                .omega()
                .clone()
        }
    }

    #[test]
    fn squeeze_factor_limits_and_value() {
        assert_eq!(squeeze_factor(0.0f64).unwrap(), 1.0);
        assert_eq!(squeeze_factor(f64::INFINITY).unwrap(), 0.0);
        assert!((squeeze_factor(1.0f64).unwrap() - (SQRT2 - 1.0)).abs() < 1e-15);
        assert!(squeeze_factor(-0.1f64).is_err());
    }

    #[test]
    fn dimension_from_frequencies_examples() {
        let wpp = 1.0f64;
        let free = [Omega::zero(), Omega::zero(), Omega::zero()];
        assert!((dimension_from_frequencies(&free, wpp).unwrap() - 3.0).abs() < 1e-15);
        let plane = [Omega::zero(), Omega::zero(), Omega::Excluded];
        assert!((dimension_from_frequencies(&plane, wpp).unwrap() - 2.0).abs() < 1e-15);
        let mid = [Omega::zero(), Omega::zero(), Omega::Finite(1.0)];
        let d = dimension_from_frequencies(&mid, wpp).unwrap();
        assert!((d - (2.0 + SQRT2 - 1.0)).abs() < 1e-12);
    }

    #[test]
    fn dimension_general_reduces_and_counts_nodes() {
        let wpp = 1.0f64;
        let free = [Omega::zero(), Omega::zero(), Omega::zero()];
        let ground = OccupationSet::ground();
        let d0 = dimension_general(&ground, &free, wpp, 3).unwrap();
        assert!((d0 - dimension_from_frequencies(&free, wpp).unwrap()).abs() < 1e-15);
        // one radial node, N=3, free space: d = 3 - 2
        let occ = OccupationSet {
            n_r_d: 1,
            n_av: [0.0; 3],
            per_mode: None,
        };
        assert!((dimension_general(&occ, &free, wpp, 3).unwrap() - 1.0).abs() < 1e-15);
        // N=2, n_z = 1 at ω_z = ω_pp: d = 2 + 3(√2−1)
        let occ_z = OccupationSet {
            n_r_d: 0,
            n_av: [0.0, 0.0, 1.0],
            per_mode: None,
        };
        let w = [Omega::zero(), Omega::zero(), Omega::Finite(1.0)];
        let d = dimension_general(&occ_z, &w, wpp, 2).unwrap();
        assert!((d - (2.0 + 3.0 * (SQRT2 - 1.0))).abs() < 1e-12);
    }

    #[test]
    fn symmetric_dimension_examples() {
        let d = symmetric_dimension(Transition::ThreeToOne, 0.75f64).unwrap();
        assert!((d - 2.0).abs() < 1e-15);
        let d = symmetric_dimension(Transition::TwoToOne, 0.75f64).unwrap();
        assert!((d - 1.5).abs() < 1e-15);
        for t in Transition::ALL {
            let d = symmetric_dimension(t, 0.0f64).unwrap();
            assert_eq!(d, t.d_ini() as f64);
        }
    }

    #[test]
    fn frequency_ratio_examples_and_endpoints() {
        let x = frequency_ratio_from_dimension(Transition::ThreeToTwo, 2.0 + SQRT2 - 1.0).unwrap();
        assert!((x - 1.0).abs() < 1e-12);
        let x = frequency_ratio_from_dimension(Transition::ThreeToOne, 2.0f64).unwrap();
        assert!((x - 0.75).abs() < 1e-15);
        let x = frequency_ratio_from_dimension(Transition::TwoToOne, 1.5f64).unwrap();
        assert!((x - 0.75).abs() < 1e-15);
        assert_eq!(
            frequency_ratio_from_dimension(Transition::ThreeToOne, 3.0f64).unwrap(),
            0.0
        );
        assert!(frequency_ratio_from_dimension(Transition::ThreeToOne, 1.0f64)
            .unwrap()
            .is_infinite());
        assert!(frequency_ratio_from_dimension(Transition::ThreeToOne, 0.5f64).is_err());
        assert!(frequency_ratio_from_dimension(Transition::ThreeToOne, 3.2f64).is_err());
    }

    #[test]
    fn external_energy_examples() {
        let wpp = 1.0f64;
        let ground = OccupationSet::ground();
        let w = sym3::<f64>(Transition::ThreeToTwo, 1.0).omega();
        let e = energy_ext_ho(&w, wpp, &ground, 2).unwrap();
        assert!((e - (1.0 + SQRT2) / 2.0).abs() < 1e-12);
        let free = [Omega::zero(), Omega::zero(), Omega::zero()];
        let e = energy_ext_ho(&free, wpp, &ground, 2).unwrap();
        assert!((e - 1.5).abs() < 1e-15);
        let w = sym3::<f64>(Transition::ThreeToOne, 1.0).omega();
        let e = energy_ext_ho(&w, wpp, &ground, 3).unwrap();
        assert!((e - (2.0 * SQRT2 - 1.0)).abs() < 1e-12);
    }

    #[test]
    fn zero_point_energy_examples() {
        let ground = OccupationSet::ground();
        let w = [Omega::zero(), Omega::zero(), Omega::Finite(1.0f64)];
        assert!((zero_point_energy(&w, 2, &ground).unwrap() - 0.5).abs() < 1e-15);
        let w = [Omega::Finite(0.7f64), Omega::Finite(0.7), Omega::zero()];
        assert!((zero_point_energy(&w, 3, &ground).unwrap() - 2.0 * 0.7).abs() < 1e-15);
        // one excited relative mode along z
        let occ = OccupationSet::from_modes(0, vec![[0, 0, 1]]).unwrap();
        let w = [Omega::zero(), Omega::zero(), Omega::Finite(1.0f64)];
        assert!((zero_point_energy(&w, 2, &occ).unwrap() - 1.5).abs() < 1e-15);
    }

    #[test]
    fn d_method_energy_examples() {
        assert!((energy_d_ho(2, 3.0f64, 0, 1.0).unwrap() - 1.5).abs() < 1e-15);
        assert!((energy_d_ho(3, 1.0f64, 0, 1.0).unwrap() - 1.0).abs() < 1e-15);
        let d = 2.0 + SQRT2 - 1.0;
        let e = energy_d_ho(2, d, 0, 1.0f64).unwrap();
        let w = sym3::<f64>(Transition::ThreeToTwo, 1.0).omega();
        let e_ext = energy_ext_ho(&w, 1.0, &OccupationSet::ground(), 2).unwrap();
        assert!((e - e_ext).abs() < 1e-12);
    }

    #[test]
    fn scale_factor_examples() {
        let w = [
            Omega::zero(),
            Omega::Finite(1.0f64),
            Omega::Excluded,
        ];
        let s = scale_factors(&w, 1.0).unwrap();
        assert_eq!(s[0], 1.0);
        assert!((s[1] - 2.0f64.powf(-0.25)).abs() < 1e-15);
        assert_eq!(s[2], 0.0);
    }

    #[test]
    fn bho_over_rms_examples() {
        let r = bho_over_rms(Transition::ThreeToTwo, 2.5f64, 2).unwrap();
        assert!((r.over_r2d - (4.0f64 / 3.0).sqrt()).abs() < 1e-12);
        assert!(r.over_r1d.is_none());
        let r = bho_over_rms(Transition::ThreeToOne, 2.0f64, 2).unwrap();
        assert!((r.over_r1d.unwrap() - (8.0f64 / 3.0).sqrt()).abs() < 1e-12);
        let r = bho_over_rms(Transition::ThreeToOne, 2.0f64, 3).unwrap();
        assert!((r.over_r2d - SQRT2).abs() < 1e-12);
        assert!(matches!(
            bho_over_rms(Transition::TwoToOne, 1.5f64, 3),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn scale_from_bho_examples() {
        // N=2, b_ho = r_2D → s = 2^{-1/4}
        let s = scale_from_bho(Transition::ThreeToTwo, 2, BhoRatio::OverR2d(1.0f64)).unwrap();
        assert!((s - 2.0f64.powf(-0.25)).abs() < 1e-15);
        // very wide trap → no deformation
        let s = scale_from_bho(Transition::ThreeToOne, 2, BhoRatio::OverR2d(1.0e6f64)).unwrap();
        assert!((s - 1.0).abs() < 1e-12);
        // N=3, b_ho = r_2D → 1/s² = √13/2
        let s = scale_from_bho(Transition::ThreeToOne, 3, BhoRatio::OverR2d(1.0f64)).unwrap();
        let expect = (13.0f64.sqrt() / 2.0).powf(-0.5);
        assert!((s - expect).abs() < 1e-15);
    }

    #[test]
    fn ext_profile_normalization_and_isotropic_limit() {
        // all frequencies zero: isotropic Gaussian of length b_pp
        let w = [Omega::zero(), Omega::zero(), Omega::zero()];
        let p = ExtHoProfile::new(&w, 1.0f64).unwrap();
        assert_eq!(p.lengths(), [1.0, 1.0, 1.0]);
        // quadrature check of ∫|ψ|² d³q = 1 on a product Simpson grid
        let n = 161;
        let l = 6.0;
        let h = 2.0 * l / (n - 1) as f64;
        let w1 = |i: usize| {
            if i == 0 || i == n - 1 {
                1.0
            } else if i % 2 == 1 {
                4.0
            } else {
                2.0
            }
        };
        let mut total = 0.0;
        for i in 0..n {
            let x = -l + i as f64 * h;
            let gx = p.eval([x, 0.0, 0.0]) / p.eval([0.0, 0.0, 0.0]);
            total += w1(i) * gx * gx;
        }
        total *= h / 3.0;
        // 1D marginal of the isotropic Gaussian: √(π) b
        assert!((total - std::f64::consts::PI.sqrt()).abs() < 1e-10);
    }

    #[test]
    fn d_radial_profile_shape_and_normalization() {
        let p = DHoRadialProfile::new(2, 2.5f64, 0, 1.0).unwrap();
        // n_r = 0: pure Gaussian times ρ^{ℓ+1}; Laguerre factor is 1
        let ell = (2.5 - 3.0) / 2.0;
        let rho = 0.8;
        let ratio = p.eval(rho) / (rho.powf(ell + 1.0) * (-rho * rho / 2.0).exp());
        let rho2 = 1.7;
        let ratio2 = p.eval(rho2) / (rho2.powf(ell + 1.0) * (-rho2 * rho2 / 2.0).exp());
        assert!((ratio - ratio2).abs() < 1e-12 * ratio.abs());
        // normalization ∫ F² dρ = 1 by fine Simpson quadrature
        for (n_part, d, n_r) in [(2usize, 2.5f64, 0u32), (2, 1.4, 2), (3, 2.2, 1)] {
            let p = DHoRadialProfile::new(n_part, d, n_r, 1.0).unwrap();
            // substitute rho = u³ so the fractional power at the origin
            // becomes smooth for the quadrature
            let n = 40_001;
            let u_max = 12.0f64.cbrt();
            let h = u_max / (n - 1) as f64;
            let mut acc = 0.0;
            for i in 0..n {
                let w = if i == 0 || i == n - 1 {
                    1.0
                } else if i % 2 == 1 {
                    4.0
                } else {
                    2.0
                };
                let u = i as f64 * h;
                let f = p.eval(u * u * u);
                acc += w * f * f * 3.0 * u * u;
            }
            acc *= h / 3.0;
            assert!(
                (acc - 1.0).abs() < 1e-10,
                "norm {acc} for N={n_part}, d={d}, n_r={n_r}"
            );
        }
        // non-normalizable request
        assert!(DHoRadialProfile::new(2, -1.0f64, 0, 1.0).is_err());
    }
}
