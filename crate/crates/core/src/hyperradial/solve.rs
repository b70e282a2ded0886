//! Weighted finite-volume discretization of the hyperradial system and the
//! ground-state eigensolve.
//!
//! The radial functions are represented through their regular envelope
//! `G_K(ρ) = F_K(ρ) / ρ^{ℓ+1}`, which turns the centrifugal term
//! `ℓ(ℓ+1)/ρ²` into the measure weight `w(ρ) = ρ^{2ℓ+2}` and selects the
//! analytic-continuation branch `F ~ ρ^{ℓ+1}` at the origin for every `d`
//! (a plain Dirichlet grid would pick the wrong self-adjoint extension for
//! `ℓ < -1/2`, i.e. two bosons below d = 2).  Channel barriers
//! `K(K + d(N-1) - 2)/ρ²` stay as explicit potential terms.

use super::coupling::CouplingEngine;
use super::{build_channel_basis, generalized_angular_momentum};
use crate::error::{Error, Result, SolverWarning};
use crate::numerics::blocktri::BlockTridiag;
use crate::numerics::mat::DMat;
use crate::potentials::PairPotential;
use crate::scalar::{fl, half, Scalar};
use crate::units::UnitSystem;

/// Node layout of the radial grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Spacing {
    Uniform,
    /// Quadratic clustering toward the origin (with a small linear floor so
    /// the first spacing stays usable).
    Quadratic,
}

/// Radial grid: `n_points` intervals from 0 to `rho_max`, Dirichlet at the
/// outer end.
#[derive(Debug, Clone, PartialEq)]
pub struct GridSpec<S> {
    pub rho_max: S,
    pub n_points: usize,
    pub spacing: Spacing,
}

impl<S: Scalar> GridSpec<S> {
    pub fn new(rho_max: S, n_points: usize, spacing: Spacing) -> Self {
        Self {
            rho_max,
            n_points,
            spacing,
        }
    }

    /// All nodes including the origin and the Dirichlet end.
    pub fn nodes(&self) -> Vec<S> {
        let n = self.n_points;
        let mut nodes = Vec::with_capacity(n + 1);
        match self.spacing {
            Spacing::Uniform => {
                let h = self.rho_max / fl::<S>(n as f64);
                for i in 0..=n {
                    nodes.push(h * fl::<S>(i as f64));
                }
            }
            Spacing::Quadratic => {
                let eps = fl::<S>(0.15);
                let denom = S::one() + eps;
                for i in 0..=n {
                    let xi = fl::<S>(i as f64) / fl::<S>(n as f64);
                    nodes.push(self.rho_max * xi * (xi + eps) / denom);
                }
            }
        }
        nodes
    }
}

/// Solver knobs; the defaults match the advertised tolerances.
#[derive(Debug, Clone, PartialEq)]
pub struct SolveOptions {
    /// Absolute bisection window for the eigenvalue (the Rayleigh quotient
    /// refines beyond it).
    pub energy_bisect_tol: f64,
    /// Outer-boundary amplitude threshold relative to the peak.
    pub tail_tol: f64,
    pub auto_expand: bool,
    pub max_expansions: u32,
    /// Remove the leading quadratic grid error with a second solve on the
    /// every-other-node grid (requires an even point count).
    pub richardson: bool,
    /// Re-solve with two more channels and compare (three bosons only).
    pub check_channel_convergence: bool,
    /// Energy shift above which the channel-truncation warning fires.
    pub channel_tol: f64,
}

impl Default for SolveOptions {
    fn default() -> Self {
        Self {
            energy_bisect_tol: 1e-10,
            tail_tol: 1e-8,
            auto_expand: true,
            max_expansions: 6,
            richardson: true,
            check_channel_convergence: true,
            channel_tol: 1e-6,
        }
    }
}

/// A ground-state problem for the hyperradial system.
#[derive(Debug, Clone)]
pub struct HyperradialProblem<S = f64> {
    pub n_particles: usize,
    pub d: S,
    pub potential: PairPotential<S>,
    /// Even hypermomentum cutoff (three bosons; ignored for two).
    pub k_max: u32,
    /// Explicit grid; `None` chooses one from the potential scales.
    pub grid: Option<GridSpec<S>>,
    pub options: SolveOptions,
}

impl<S: Scalar> HyperradialProblem<S> {
    pub fn new(n_particles: usize, d: S, potential: PairPotential<S>) -> Self {
        Self {
            n_particles,
            d,
            potential,
            k_max: 8,
            grid: None,
            options: SolveOptions::default(),
        }
    }

    pub fn with_k_max(mut self, k_max: u32) -> Self {
        self.k_max = k_max;
        self
    }

    pub fn with_grid(mut self, grid: GridSpec<S>) -> Self {
        self.grid = Some(grid);
        self
    }

    pub fn with_options(mut self, options: SolveOptions) -> Self {
        self.options = options;
        self
    }

    fn default_grid(&self) -> GridSpec<S> {
        let range = self.potential.range();
        let rho_max = match &self.potential {
            PairPotential::Harmonic { .. } => range * fl(9.0),
            _ => range * fl(18.0),
        };
        let n_points = if self.n_particles == 2 { 6000 } else { 2400 };
        GridSpec::new(rho_max, n_points, Spacing::Quadratic)
    }
}

/// One radial channel of a solution.
#[derive(Debug, Clone)]
pub struct ChannelFunction<S> {
    pub k: u32,
    /// Reduced radial function `F_K` on the grid nodes (zero at both ends
    /// for d > 1).
    pub f: Vec<S>,
    /// Regular envelope `G_K = F_K / ρ^{ℓ+1}`, finite at the origin.
    pub envelope: Vec<S>,
    /// Probability carried by this channel.
    pub weight: S,
}

/// Ground-state solution of the coupled hyperradial system.
#[derive(Debug, Clone)]
pub struct HyperradialSolution<S = f64> {
    pub n_particles: usize,
    pub d: S,
    pub ell: S,
    pub energy: S,
    /// Grid nodes including origin and Dirichlet end.
    pub rho: Vec<S>,
    pub channels: Vec<ChannelFunction<S>>,
    /// Radial node count of the dominant channel.
    pub n_r: u32,
    pub warnings: Vec<SolverWarning>,
    /// Finite-volume cell masses ∫_cell ρ^{2ℓ+2} dρ (one per interior node).
    pub(crate) cell_mass: Vec<S>,
}

impl<S: Scalar> HyperradialSolution<S> {
    /// `⟨ρ²⟩` under the solution's own measure.
    pub fn mean_square_radius(&self) -> S {
        let mut acc = S::zero();
        for ch in &self.channels {
            for (i, m) in self.cell_mass.iter().enumerate() {
                let g = ch.envelope[i];
                acc = acc + *m * g * g * self.rho[i] * self.rho[i];
            }
        }
        acc
    }

    /// Dominant-channel index.
    pub fn dominant_channel(&self) -> usize {
        let mut best = 0;
        for (i, ch) in self.channels.iter().enumerate() {
            if ch.weight > self.channels[best].weight {
                best = i;
            }
        }
        best
    }
}

/// Size observables of a solution.
///
/// `rho_rms` is the hyperradial rms; `per_particle_rms = rho_rms/√N` is the
/// rms distance from the center of mass.  The conventional radius used for
/// normalizing translation curves is the hyperradial one for two bosons and
/// the per-particle one for three.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RmsObservables<S> {
    pub rho_rms: S,
    pub per_particle_rms: S,
    pub paper_radius: S,
}

pub fn rms_observables<S: Scalar>(solution: &HyperradialSolution<S>) -> RmsObservables<S> {
    let rho_rms = solution.mean_square_radius().sqrt();
    let per_particle_rms = rho_rms / fl::<S>(solution.n_particles as f64).sqrt();
    let paper_radius = if solution.n_particles == 2 {
        rho_rms
    } else {
        per_particle_rms
    };
    RmsObservables {
        rho_rms,
        per_particle_rms,
        paper_radius,
    }
}

/// `∫ ρ^p dρ` over `[a, b]` with `p > -1`.
fn power_integral<S: Scalar>(p: S, a: S, b: S) -> S {
    let q = p + S::one();
    (b.powf(q) - a.powf(q)) / q
}

/// `∫ ρ^{p-2} dρ` over `[a, b]`, with a logarithmic floor when the exponent
/// reaches −1 (three bosons at d = 1); the floor only ever multiplies
/// channel components that vanish at the origin.
fn centrifugal_integral<S: Scalar>(p: S, a: S, b: S) -> S {
    let q = p - S::one();
    if q.abs() < fl(1e-9) {
        let a_eff = if a > S::zero() { a } else { b * fl(1e-12) };
        (b / a_eff).ln()
    } else {
        (b.powf(q) - a.powf(q)) / q
    }
}

struct Assembled<S> {
    matrix: BlockTridiag<S>,
    cell_mass: Vec<S>,
}

fn assemble<S: Scalar>(
    nodes: &[S],
    ell: S,
    channel_eigs: &[S],
    w_at: &mut dyn FnMut(S) -> Result<DMat<S>>,
) -> Result<Assembled<S>> {
    let n_tot = nodes.len() - 1; // unknowns 0..n_tot-1, Dirichlet at n_tot
    let nch = channel_eigs.len();
    let p = fl::<S>(2.0) * ell + fl::<S>(2.0);
    let kin = half::<S>() * UnitSystem::hbar::<S>() * UnitSystem::hbar::<S>()
        / UnitSystem::boson_mass::<S>();

    // faces: f[i] = midpoint(nodes[i], nodes[i+1]) for i in 0..n_tot
    let mut faces = Vec::with_capacity(n_tot + 1);
    faces.push(S::zero());
    for i in 0..n_tot {
        faces.push((nodes[i] + nodes[i + 1]) * half::<S>());
    }

    let mut cell_mass = Vec::with_capacity(n_tot);
    for i in 0..n_tot {
        cell_mass.push(power_integral(p, faces[i], faces[i + 1]));
    }
    // interval stiffness coefficients: (1/h²)∫ w over the interval
    let mut a_face = Vec::with_capacity(n_tot);
    for i in 0..n_tot {
        let h = nodes[i + 1] - nodes[i];
        a_face.push(kin * power_integral(p, nodes[i], nodes[i + 1]) / (h * h));
    }

    let mut diag_blocks = Vec::with_capacity(n_tot);
    let mut off_blocks = Vec::with_capacity(n_tot - 1);
    for i in 0..n_tot {
        let rho_i = nodes[i];
        let m_i = cell_mass[i];
        let mut block = if rho_i > S::zero() {
            let w = w_at(rho_i)?;
            let mut b = DMat::zeros(nch, nch);
            for c in 0..nch {
                for cp in 0..nch {
                    *b.at_mut(c, cp) = w.at(c, cp);
                }
            }
            b
        } else {
            // at the origin every finite pair separation vanishes
            let w0 = w_at(nodes[1] * fl(1e-9))?;
            let mut b = DMat::zeros(nch, nch);
            for c in 0..nch {
                for cp in 0..nch {
                    *b.at_mut(c, cp) = w0.at(c, cp);
                }
            }
            b
        };
        let t_left = if i > 0 { a_face[i - 1] } else { S::zero() };
        let t_right = a_face[i];
        // only channels with a barrier need the (possibly origin-singular)
        // 1/ρ² cell integral
        let needs_i2 = channel_eigs.iter().any(|c| *c != S::zero());
        let i2 = if needs_i2 {
            centrifugal_integral(p, faces[i], faces[i + 1])
        } else {
            S::zero()
        };
        for c in 0..nch {
            let centrifugal = if channel_eigs[c] == S::zero() {
                S::zero()
            } else {
                kin * channel_eigs[c] * i2
            };
            *block.at_mut(c, c) = block.at(c, c) + (t_left + t_right + centrifugal) / m_i;
        }
        diag_blocks.push(block);
        if i + 1 < n_tot {
            let coupling = -a_face[i] / (m_i * cell_mass[i + 1]).sqrt();
            let mut off = DMat::zeros(nch, nch);
            for c in 0..nch {
                *off.at_mut(c, c) = coupling;
            }
            off_blocks.push(off);
        }
    }
    Ok(Assembled {
        matrix: BlockTridiag::new(diag_blocks, off_blocks),
        cell_mass,
    })
}

fn start_vector<S: Scalar>(nodes: &[S], cell_mass: &[S], nch: usize, width: S) -> Vec<S> {
    let n = cell_mass.len();
    let mut x = vec![S::zero(); n * nch];
    for i in 0..n {
        let r = nodes[i] / width;
        x[i * nch] = cell_mass[i].sqrt() * (-r * r * half::<S>()).exp();
    }
    x
}

struct EigenOutcome<S> {
    energy: S,
    /// per-node, per-channel envelope values G (un-normalized mass-scaled)
    x: Vec<S>,
}

fn solve_assembled<S: Scalar>(
    assembled: &Assembled<S>,
    nodes: &[S],
    nch: usize,
    width: S,
    bisect_tol: f64,
) -> Result<EigenOutcome<S>> {
    let start = start_vector(nodes, &assembled.cell_mass, nch, width);
    let (energy, x) = assembled
        .matrix
        .lowest_eigenpair(&start, fl(bisect_tol))?;
    Ok(EigenOutcome { energy, x })
}

/// Restriction of an assembled system to the first `nch_keep` channels.
fn restrict<S: Scalar>(assembled: &Assembled<S>, nch_keep: usize) -> Assembled<S> {
    let n = assembled.cell_mass.len();
    let nch = assembled.matrix.block_size();
    assert!(nch_keep <= nch);
    let mut diag = Vec::with_capacity(n);
    let mut off = Vec::with_capacity(n - 1);
    for i in 0..n {
        let mut b = DMat::zeros(nch_keep, nch_keep);
        for c in 0..nch_keep {
            for cp in 0..nch_keep {
                *b.at_mut(c, cp) = blocktri_block(assembled, i, i, c, cp);
            }
        }
        diag.push(b);
        if i + 1 < n {
            let mut o = DMat::zeros(nch_keep, nch_keep);
            for c in 0..nch_keep {
                *o.at_mut(c, c) = blocktri_block(assembled, i, i + 1, c, c);
            }
            off.push(o);
        }
    }
    Assembled {
        matrix: BlockTridiag::new(diag, off),
        cell_mass: assembled.cell_mass.clone(),
    }
}

fn blocktri_block<S: Scalar>(a: &Assembled<S>, i: usize, j: usize, c: usize, cp: usize) -> S {
    // helper over the BlockTridiag internals via matvec-free access
    a.matrix.block_entry(i, j, c, cp)
}

/// Ground state of the hyperradial problem.
pub fn solve_ground<S: Scalar>(problem: &HyperradialProblem<S>) -> Result<HyperradialSolution<S>> {
    problem.potential.validate()?;
    let n_part = problem.n_particles;
    if !(n_part == 2 || n_part == 3) {
        return Err(Error::Unsupported(format!(
            "hyperradial solver handles N in {{2, 3}}, got {n_part}"
        )));
    }
    let d = problem.d;
    if !(d > S::zero() && d <= fl(3.0)) {
        return Err(Error::Domain("d must lie in (0, 3]".into()));
    }
    if n_part == 3 && !(d >= S::one()) {
        return Err(Error::Unsupported(
            "three-boson solves are provided for d in [1, 3]".into(),
        ));
    }
    if problem.k_max % 2 != 0 {
        return Err(Error::Domain("k_max must be even".into()));
    }
    let ell = generalized_angular_momentum(n_part, d)?;
    let opts = &problem.options;
    let mut grid = problem.grid.clone().unwrap_or_else(|| problem.default_grid());

    // the grid must resolve the interaction range
    let range = problem.potential.range();
    let min_inside = 8usize;
    let inside = grid.nodes().iter().filter(|&&r| r < range).count();
    if inside < min_inside {
        return Err(Error::Config(format!(
            "grid resolves the potential range with only {inside} nodes (need >= {min_inside})"
        )));
    }

    // channel setup
    let (channel_ks, mut engine) = if n_part == 2 {
        (vec![0u32], None)
    } else {
        let k_build = if opts.check_channel_convergence {
            problem.k_max + 2
        } else {
            problem.k_max
        };
        let basis = build_channel_basis(3, d, k_build)?;
        let ks: Vec<u32> = basis.k_list().to_vec();
        let engine = CouplingEngine::new(&basis, &problem.potential)?;
        (ks, Some(engine))
    };
    let nch_full = channel_ks.len();
    let nch_primary = if n_part == 2 {
        1
    } else {
        (problem.k_max / 2 + 1) as usize
    };
    let two_d = fl::<S>(2.0) * d;
    let channel_eigs: Vec<S> = channel_ks
        .iter()
        .map(|&k| {
            let kf = fl::<S>(k as f64);
            kf * (kf + two_d - fl::<S>(2.0))
        })
        .collect();

    let sqrt2 = fl::<S>(2.0).sqrt();
    let potential = problem.potential.clone();
    let width = match &problem.potential {
        PairPotential::Harmonic { omega_pp } => UnitSystem::osc_length(*omega_pp),
        p => p.range(),
    };

    let mut warnings: Vec<SolverWarning> = Vec::new();
    let mut expansions = 0u32;
    loop {
        let nodes = grid.nodes();
        let mut memo: std::collections::HashMap<u64, DMat<S>> = std::collections::HashMap::new();
        let mut w_at = |rho: S| -> Result<DMat<S>> {
            let key = rho.to_f64().unwrap_or(f64::NAN).to_bits();
            if let Some(w) = memo.get(&key) {
                return Ok(w.clone());
            }
            let w = if let Some(engine) = engine.as_mut() {
                engine.w_matrix(rho)?
            } else {
                let mut m = DMat::zeros(1, 1);
                *m.at_mut(0, 0) =
                    potential.eval_unchecked(sqrt2 * rho, 2, UnitSystem::boson_mass());
                m
            };
            memo.insert(key, w.clone());
            Ok(w)
        };
        let assembled_full = assemble(&nodes, ell, &channel_eigs, &mut w_at)?;
        let assembled_primary = if nch_full == nch_primary {
            None
        } else {
            Some(restrict(&assembled_full, nch_primary))
        };
        let primary_ref = assembled_primary.as_ref().unwrap_or(&assembled_full);
        let outcome = solve_assembled(primary_ref, &nodes, nch_primary, width, opts.energy_bisect_tol)?;

        // outer-boundary amplitude check on F
        let n_unknown = assembled_full.cell_mass.len();
        let lp1 = ell + S::one();
        let f_of = |i: usize, c: usize, x: &[S], mass: &[S]| -> S {
            let g = x[i * nch_primary + c] / mass[i].sqrt();
            let rho = nodes[i];
            if rho > S::zero() {
                rho.powf(lp1) * g
            } else if lp1 == S::zero() {
                g
            } else {
                S::zero()
            }
        };
        let mut peak = S::zero();
        let mut edge = S::zero();
        for c in 0..nch_primary {
            for i in 0..n_unknown {
                let v = f_of(i, c, &outcome.x, &assembled_full.cell_mass).abs();
                peak = peak.max(v);
                if i == n_unknown - 1 {
                    edge = edge.max(v);
                }
            }
        }
        let tail_ok = edge <= fl::<S>(opts.tail_tol) * peak;
        if !tail_ok {
            if opts.auto_expand && expansions < opts.max_expansions {
                expansions += 1;
                grid = GridSpec::new(
                    grid.rho_max * fl(1.7),
                    (((grid.n_points as f64) * 1.35) as usize + 1) / 2 * 2,
                    grid.spacing,
                );
                continue;
            }
            // a discrete level at or above threshold that refuses to decay
            // is a continuum remnant, not a solver failure
            if problem.potential.is_short_range() && outcome.energy >= S::zero() {
                return Err(Error::Unbound {
                    lowest_energy: outcome.energy.to_f64().unwrap_or(f64::NAN),
                });
            }
            return Err(Error::Accuracy(format!(
                "radial tail does not decay below {:e} of the peak at rho_max = {} \
                 (edge/peak = {:e})",
                opts.tail_tol,
                grid.rho_max,
                (edge / peak).to_f64().unwrap_or(f64::NAN)
            )));
        }
        if expansions > 0 {
            warnings.push(SolverWarning::BoxExpanded { times: expansions });
        }

        // eliminate the leading quadratic discretization error by a
        // second solve on the every-other-node grid
        let extrapolate = |e_fine: S, e_coarse: S| (fl::<S>(4.0) * e_fine - e_coarse) / fl(3.0);
        let coarse_nodes: Option<Vec<S>> = (opts.richardson && grid.n_points % 2 == 0)
            .then(|| nodes.iter().copied().step_by(2).collect());
        let mut energy = outcome.energy;
        let mut coarse_full: Option<Assembled<S>> = None;
        if let Some(cn) = &coarse_nodes {
            let assembled_c = assemble(cn, ell, &channel_eigs, &mut w_at)?;
            let primary_c = if nch_full == nch_primary {
                None
            } else {
                Some(restrict(&assembled_c, nch_primary))
            };
            let out_c = solve_assembled(
                primary_c.as_ref().unwrap_or(&assembled_c),
                cn,
                nch_primary,
                width,
                opts.energy_bisect_tol,
            )?;
            energy = extrapolate(outcome.energy, out_c.energy);
            coarse_full = Some(assembled_c);
        }

        // unbound detection for short-range interactions
        if problem.potential.is_short_range() && energy >= S::zero() {
            return Err(Error::Unbound {
                lowest_energy: energy.to_f64().unwrap_or(f64::NAN),
            });
        }

        // channel-truncation check (three bosons)
        if n_part == 3 && opts.check_channel_convergence && nch_full > nch_primary {
            let full =
                solve_assembled(&assembled_full, &nodes, nch_full, width, opts.energy_bisect_tol)?;
            let mut e_next_val = full.energy;
            if let (Some(cn), Some(ac)) = (&coarse_nodes, &coarse_full) {
                let full_c =
                    solve_assembled(ac, cn, nch_full, width, opts.energy_bisect_tol)?;
                e_next_val = extrapolate(full.energy, full_c.energy);
            }
            let e_kmax = energy.to_f64().unwrap_or(f64::NAN);
            let e_next = e_next_val.to_f64().unwrap_or(f64::NAN);
            if (e_kmax - e_next).abs() > opts.channel_tol {
                warnings.push(SolverWarning::ChannelTruncation { e_kmax, e_next });
            }
        }

        // package the solution
        let mass = &assembled_full.cell_mass;
        let mut channels = Vec::with_capacity(nch_primary);
        for c in 0..nch_primary {
            let mut f = Vec::with_capacity(nodes.len());
            let mut envelope = Vec::with_capacity(nodes.len());
            let mut weight = S::zero();
            for i in 0..n_unknown {
                let xi = outcome.x[i * nch_primary + c];
                weight = weight + xi * xi;
                let g = xi / mass[i].sqrt();
                envelope.push(g);
                f.push(f_of(i, c, &outcome.x, mass));
            }
            // Dirichlet end
            envelope.push(S::zero());
            f.push(S::zero());
            channels.push(ChannelFunction {
                k: channel_ks[c],
                f,
                envelope,
                weight,
            });
        }

        // radial node count of the dominant channel
        let dom = {
            let mut best = 0;
            for c in 0..nch_primary {
                if channels[c].weight > channels[best].weight {
                    best = c;
                }
            }
            best
        };
        let thresh = peak * fl::<S>(1e-8);
        let mut n_r = 0u32;
        let mut prev: Option<S> = None;
        for i in 0..n_unknown {
            let v = channels[dom].envelope[i];
            if v.abs() > thresh {
                if let Some(p) = prev {
                    if (v > S::zero()) != (p > S::zero()) {
                        n_r += 1;
                    }
                }
                prev = Some(v);
            }
        }

        return Ok(HyperradialSolution {
            n_particles: n_part,
            d,
            ell,
            energy,
            rho: nodes,
            channels,
            n_r,
            warnings,
            cell_mass: assembled_full.cell_mass,
        });
    }
}
