//! Oscillator-interaction checks of the hyperradial solver: the exact
//! energies, profiles, virial sizes, and grid invariance.

use dsqueeze_core::hyperradial::{
    rms_observables, solve_ground, GridSpec, HyperradialProblem, SolveOptions, Spacing,
};
use dsqueeze_core::oscillator::DHoRadialProfile;
use dsqueeze_core::potentials::PairPotential;

fn d_grid() -> Vec<f64> {
    let mut v: Vec<f64> = (0..7).map(|k| 1.0 + 0.3 * k as f64).collect();
    v.push(3.0);
    v
}

fn ho_problem(n: usize, d: f64) -> HyperradialProblem<f64> {
    let pot = PairPotential::harmonic(1.0).unwrap();
    let mut opts = SolveOptions::default();
    opts.check_channel_convergence = false; // channels decouple exactly here
    HyperradialProblem::new(n, d, pot).with_options(opts)
}

#[test]
fn two_boson_energies_match_oscillator_formula() {
    for d in d_grid() {
        let sol = solve_ground(&ho_problem(2, d)).unwrap();
        let exact = 0.5 * d;
        let rel = ((sol.energy - exact) / exact).abs();
        assert!(
            rel < 1e-6,
            "N=2, d={d}: E = {}, exact {exact}, rel {rel:e}",
            sol.energy
        );
        assert_eq!(sol.n_r, 0);
    }
}

#[test]
fn three_boson_energies_match_oscillator_formula() {
    for d in d_grid() {
        let sol = solve_ground(&ho_problem(3, d)).unwrap();
        let exact = d;
        let rel = ((sol.energy - exact) / exact).abs();
        assert!(
            rel < 1e-6,
            "N=3, d={d}: E = {}, exact {exact}, rel {rel:e}",
            sol.energy
        );
        // the oscillator ground state lives entirely in the K = 0 channel
        assert!(
            sol.channels[0].weight >= 1.0 - 1e-8,
            "K=0 weight {} at d={d}",
            sol.channels[0].weight
        );
    }
}

#[test]
fn two_boson_profile_matches_analytic_radial_function() {
    let d = 2.2;
    let sol = solve_ground(&ho_problem(2, d)).unwrap();
    let profile = DHoRadialProfile::new(2, d, 0, 1.0).unwrap();
    let fmax = sol
        .channels[0]
        .f
        .iter()
        .fold(0.0f64, |m, v| m.max(v.abs()));
    for (i, &rho) in sol.rho.iter().enumerate() {
        let f_num = sol.channels[0].f[i];
        let f_exact = profile.eval(rho);
        if f_exact.abs() > 1e-3 * fmax {
            assert!(
                (f_num - f_exact).abs() < 1e-5 * fmax,
                "at rho={rho}: {f_num} vs {f_exact}"
            );
        }
    }
}

#[test]
fn virial_sizes_follow_oscillator_relations() {
    // ⟨ρ²⟩ = (E/ħω) b² for the oscillator pair interaction
    for (n, d) in [(2usize, 2.0f64), (2, 1.0), (3, 2.0)] {
        let sol = solve_ground(&ho_problem(n, d)).unwrap();
        let obs = rms_observables(&sol);
        let msr = sol.energy; // b = ω = 1
        assert!(
            (obs.rho_rms - msr.sqrt()).abs() < 2e-6,
            "N={n}, d={d}: rho_rms {} vs virial {}",
            obs.rho_rms,
            msr.sqrt()
        );
    }
    // conventional radii: hyperradial for two bosons (r_2D = b at d = 2,
    // r_1D = b/√2 at d = 1), per-particle for three (√(2/3) b at d = 2)
    let sol = solve_ground(&ho_problem(2, 2.0)).unwrap();
    assert!((rms_observables(&sol).paper_radius - 1.0).abs() < 2e-6);
    let sol = solve_ground(&ho_problem(2, 1.0)).unwrap();
    assert!((rms_observables(&sol).paper_radius - 0.5f64.sqrt()).abs() < 2e-6);
    let sol = solve_ground(&ho_problem(3, 2.0)).unwrap();
    assert!((rms_observables(&sol).paper_radius - (2.0f64 / 3.0).sqrt()).abs() < 2e-6);
}

#[test]
fn grid_refinement_and_spacing_invariance() {
    let pot: PairPotential<f64> = PairPotential::harmonic(1.0).unwrap();
    let mut opts = SolveOptions::default();
    opts.check_channel_convergence = false;
    let base = HyperradialProblem::new(2, 2.5, pot).with_options(opts);

    // halving the default spacing moves the energy by less than the
    // advertised tolerance
    let coarse = base
        .clone()
        .with_grid(GridSpec::new(9.0, 3000, Spacing::Quadratic));
    let fine = base
        .clone()
        .with_grid(GridSpec::new(9.0, 6000, Spacing::Quadratic));
    let e_coarse = solve_ground(&coarse).unwrap().energy;
    let e_fine = solve_ground(&fine).unwrap().energy;
    assert!((e_coarse - e_fine).abs() < 1e-6, "{e_coarse} vs {e_fine}");

    let uniform = base
        .clone()
        .with_grid(GridSpec::new(9.0, 6000, Spacing::Uniform));
    let e_uniform = solve_ground(&uniform).unwrap().energy;
    assert!(
        (e_uniform - 1.25).abs() < 2e-6,
        "uniform-grid energy {e_uniform}"
    );
}
