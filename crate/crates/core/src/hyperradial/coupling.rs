//! Pair-potential matrix elements between hyperangular channels for three
//! identical bosons.
//!
//! Kinematics in one Jacobi set with normalization mass equal to the boson
//! mass: `r_12 = √2 ρ sin α`, and the rotated pairs sit at
//! `r² = ρ² (A ± B cos u)` with `A = (3/2)cos²α + (1/2)sin²α`,
//! `B = √3 sin α cos α`, where `u` is the angle between the Jacobi vectors.
//! Its measure carries the weight `(sin u)^{d-2} du`, i.e.
//! `(1 - t²)^{(d-3)/2} dt` in `t = cos u`, which collapses to the two-point
//! average `t = ±1` as `d → 1`.  Both identical rotated pairs contribute
//! equally, so the channel matrix is
//! `W_{KK'}(ρ) = ⟨Y_K | V(r_12) + 2 ⟨V(r_13)⟩_u | Y_K'⟩_α`.

use std::collections::HashMap;

use super::basis::ChannelBasis;
use crate::error::{Error, Result};
use crate::numerics::mat::DMat;
use crate::numerics::quadrature::GaussRule;
use crate::potentials::PairPotential;
use crate::scalar::{fl, half, Scalar};
use crate::units::UnitSystem;

const BASE_ORDER: usize = 48;
const MAX_ORDER: usize = 320;

struct AlphaTable<S> {
    weights: Vec<S>,
    /// `√2 sin α` at each node (pair-12 distance per unit ρ).
    r12_per_rho: Vec<S>,
    a_geom: Vec<S>,
    b_geom: Vec<S>,
    /// basis values, `basis_vals[c][node]`
    basis_vals: Vec<Vec<S>>,
}

/// Reusable evaluator of `W_{KK'}(ρ)` for one basis/potential pair.
pub struct CouplingEngine<S> {
    basis: ChannelBasis<S>,
    potential: PairPotential<S>,
    range: S,
    d_is_one: bool,
    alpha_tables: HashMap<usize, AlphaTable<S>>,
    u_rules: HashMap<usize, GaussRule<S>>,
}

impl<S: Scalar> CouplingEngine<S> {
    pub fn new(basis: &ChannelBasis<S>, potential: &PairPotential<S>) -> Result<Self> {
        potential.validate()?;
        let d = basis.d();
        if !(d >= S::one()) {
            return Err(Error::Unsupported(
                "three-body channel coupling is defined for d >= 1".into(),
            ));
        }
        Ok(Self {
            basis: basis.clone(),
            potential: potential.clone(),
            range: potential.range(),
            d_is_one: (d - S::one()).abs() < fl(1e-12),
            alpha_tables: HashMap::new(),
            u_rules: HashMap::new(),
        })
    }

    pub fn channels(&self) -> usize {
        self.basis.len()
    }

    fn order_for(&self, rho: S) -> usize {
        if !self.potential.is_short_range() {
            return BASE_ORDER;
        }
        let scale = (rho / self.range).to_f64().unwrap_or(0.0).max(0.0);
        let extra = (2.0 * scale).ceil() as usize;
        (BASE_ORDER + extra).min(MAX_ORDER)
    }

    fn alpha_table(&mut self, order: usize) -> Result<&AlphaTable<S>> {
        if !self.alpha_tables.contains_key(&order) {
            let d = self.basis.d();
            let expo = (d - fl::<S>(2.0)) * half::<S>();
            let rule = GaussRule::jacobi(order, expo, expo)?;
            let two = fl::<S>(2.0);
            let three = fl::<S>(3.0);
            let mut r12 = Vec::with_capacity(order);
            let mut a_geom = Vec::with_capacity(order);
            let mut b_geom = Vec::with_capacity(order);
            for &t in &rule.nodes {
                let sin2 = (S::one() - t) * half::<S>();
                let cos2 = (S::one() + t) * half::<S>();
                r12.push((two * sin2).sqrt());
                a_geom.push(fl::<S>(1.5) * cos2 + half::<S>() * sin2);
                b_geom.push(three.sqrt() * (sin2 * cos2).sqrt());
            }
            let basis_vals = (0..self.basis.len())
                .map(|c| rule.nodes.iter().map(|&t| self.basis.eval_t(c, t)).collect())
                .collect();
            self.alpha_tables.insert(
                order,
                AlphaTable {
                    weights: rule.weights,
                    r12_per_rho: r12,
                    a_geom,
                    b_geom,
                    basis_vals,
                },
            );
        }
        Ok(self.alpha_tables.get(&order).unwrap())
    }

    fn u_rule(&mut self, order: usize) -> Result<&GaussRule<S>> {
        if !self.u_rules.contains_key(&order) {
            let d = self.basis.d();
            let expo = (d - fl::<S>(3.0)) * half::<S>();
            self.u_rules.insert(order, GaussRule::jacobi(order, expo, expo)?);
        }
        Ok(self.u_rules.get(&order).unwrap())
    }

    /// Average of `V(ρ √(A + B t))` over the relative-angle measure.
    fn rotated_pair_average(&mut self, order: usize, rho: S, a: S, b: S) -> Result<S> {
        let pot = self.potential.clone();
        if self.d_is_one {
            let rp = rho * (a + b).max(S::zero()).sqrt();
            let rm = rho * (a - b).max(S::zero()).sqrt();
            return Ok((pot.eval_unchecked(rp, 3, UnitSystem::boson_mass())
                + pot.eval_unchecked(rm, 3, UnitSystem::boson_mass()))
                * half::<S>());
        }
        let rule = self.u_rule(order)?;
        let mut acc = S::zero();
        let mut mass = S::zero();
        for (&t, &w) in rule.nodes.iter().zip(&rule.weights) {
            let r = rho * (a + b * t).max(S::zero()).sqrt();
            acc = acc + w * pot.eval_unchecked(r, 3, UnitSystem::boson_mass());
            mass = mass + w;
        }
        Ok(acc / mass)
    }

    /// Channel matrix `W_{KK'}(ρ)` at one hyperradius.
    pub fn w_matrix(&mut self, rho: S) -> Result<DMat<S>> {
        self.w_matrix_with_order(rho, self.order_for(rho))
    }

    fn w_matrix_with_order(&mut self, rho: S, order: usize) -> Result<DMat<S>> {
        if !(rho > S::zero()) {
            return Err(Error::Domain("hyperradius must be > 0".into()));
        }
        let nch = self.basis.len();
        let n_nodes = order;
        // u-averaged potential at each hyperangle node
        let mut u_vals = vec![S::zero(); n_nodes];
        {
            self.alpha_table(order)?;
            let (r12, a_g, b_g): (Vec<S>, Vec<S>, Vec<S>) = {
                let tab = self.alpha_tables.get(&order).unwrap();
                (
                    tab.r12_per_rho.clone(),
                    tab.a_geom.clone(),
                    tab.b_geom.clone(),
                )
            };
            let pot = self.potential.clone();
            for j in 0..n_nodes {
                let direct = pot.eval_unchecked(rho * r12[j], 3, UnitSystem::boson_mass());
                let rotated = self.rotated_pair_average(order, rho, a_g[j], b_g[j])?;
                u_vals[j] = direct + fl::<S>(2.0) * rotated;
            }
        }
        let tab = self.alpha_tables.get(&order).unwrap();
        let mut w = DMat::zeros(nch, nch);
        for j in 0..n_nodes {
            let wj = tab.weights[j] * u_vals[j];
            for c in 0..nch {
                let yc = tab.basis_vals[c][j];
                for cp in 0..=c {
                    *w.at_mut(c, cp) = w.at(c, cp) + wj * yc * tab.basis_vals[cp][j];
                }
            }
        }
        for c in 0..nch {
            for cp in (c + 1)..nch {
                *w.at_mut(c, cp) = w.at(cp, c);
            }
        }
        Ok(w)
    }
}

/// One-shot channel matrix with a quadrature self-check: the result is
/// recomputed at a higher order and must agree.
pub fn potential_coupling_matrix<S: Scalar>(
    basis: &ChannelBasis<S>,
    potential: &PairPotential<S>,
    rho: S,
) -> Result<DMat<S>> {
    let mut engine = CouplingEngine::new(basis, potential)?;
    let order = engine.order_for(rho);
    let w = engine.w_matrix_with_order(rho, order)?;
    let w_check = engine.w_matrix_with_order(rho, order + 24)?;
    let mut scale = S::zero();
    for c in 0..basis.len() {
        scale = scale.max(w.at(c, c).abs());
    }
    let tol = scale.max(fl(1e-30)) * fl::<S>(1e-9);
    for c in 0..basis.len() {
        for cp in 0..basis.len() {
            let diff = (w.at(c, cp) - w_check.at(c, cp)).abs();
            if diff > tol {
                return Err(Error::Accuracy(format!(
                    "hyperangular quadrature unconverged for (K, K') = ({}, {}) at rho = {rho}: \
                     order {order} vs {} differ by {}",
                    basis.k_list()[c],
                    basis.k_list()[cp],
                    order + 24,
                    diff.to_f64().unwrap_or(f64::NAN)
                )));
            }
        }
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyperradial::build_channel_basis;

    #[test]
    fn harmonic_sum_rule_diagonal() {
        // the harmonic pair sum is ½ m ω² ρ² exactly, so the matrix is
        // that constant times the identity
        let basis = build_channel_basis(3, 2.4f64, 8).unwrap();
        let pot = PairPotential::harmonic(1.0f64).unwrap();
        for &rho in &[0.3f64, 1.0, 2.5, 7.0] {
            let w = potential_coupling_matrix(&basis, &pot, rho).unwrap();
            let expect = 0.5 * rho * rho;
            for c in 0..basis.len() {
                for cp in 0..basis.len() {
                    if c == cp {
                        assert!(
                            (w.at(c, c) - expect).abs() < 1e-10 * expect,
                            "diag at rho={rho}: {} vs {expect}",
                            w.at(c, c)
                        );
                    } else {
                        assert!(
                            w.at(c, cp).abs() < 1e-10 * expect,
                            "offdiag ({c},{cp}) at rho={rho}: {}",
                            w.at(c, cp)
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn zero_strength_gives_zero_matrix() {
        let basis = build_channel_basis(3, 2.0f64, 4).unwrap();
        let pot = PairPotential::gaussian(0.0f64, 1.0).unwrap();
        let w = potential_coupling_matrix(&basis, &pot, 1.3).unwrap();
        for c in 0..basis.len() {
            for cp in 0..basis.len() {
                assert_eq!(w.at(c, cp), 0.0);
            }
        }
    }

    #[test]
    fn gaussian_small_rho_limit_is_three_v0_identity() {
        let basis = build_channel_basis(3, 2.7f64, 6).unwrap();
        let pot = PairPotential::gaussian(-1.7f64, 1.0).unwrap();
        let w = potential_coupling_matrix(&basis, &pot, 1e-5).unwrap();
        for c in 0..basis.len() {
            for cp in 0..basis.len() {
                let expect = if c == cp { 3.0 * (-1.7) } else { 0.0 };
                assert!(
                    (w.at(c, cp) - expect).abs() < 1e-7,
                    "({c},{cp}): {}",
                    w.at(c, cp)
                );
            }
        }
    }

    #[test]
    fn d_one_limit_matches_interior_trend() {
        // W at d = 1 (two-point angle measure) should continue the d → 1
        // trend of the quadrature-based evaluation
        let pot = PairPotential::gaussian(-2.0f64, 1.0).unwrap();
        let rho = 1.1;
        let w_at = |d: f64| {
            let basis = build_channel_basis(3, d, 4).unwrap();
            potential_coupling_matrix(&basis, &pot, rho).unwrap().at(0, 0)
        };
        let w1 = w_at(1.0);
        let w1p = w_at(1.0 + 1e-4);
        assert!((w1 - w1p).abs() < 1e-2 * w1.abs(), "{w1} vs {w1p}");
    }
}
