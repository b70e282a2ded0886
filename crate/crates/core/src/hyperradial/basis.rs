//! s-wave hyperangular basis for three identical bosons at real dimension d.
//!
//! The basis functions are polynomials of degree `K/2` in `t = cos 2α`,
//! orthonormalized under the hyperangular volume weight
//! `(sin α cos α)^{d-1} dα ∝ (1 - t²)^{(d-2)/2} dt`.  They are eigenfunctions
//! of the hyperangular operator with eigenvalue `K (K + 2d - 2)`.

use crate::error::{Error, Result};
use crate::numerics::mat::DMat;
use crate::numerics::quadrature::GaussRule;
use crate::numerics::special::legendre_all;
use crate::scalar::{fl, half, Scalar};

#[derive(Debug, Clone)]
pub struct ChannelBasis<S> {
    d: S,
    k_list: Vec<u32>,
    /// Legendre-basis coefficients of each orthonormal polynomial in `t`.
    coeffs: Vec<Vec<S>>,
    /// Gauss–Jacobi rule in `t` under the hyperangular weight, exact for
    /// the Gram matrix of the basis.
    rule: GaussRule<S>,
}

/// Orthonormal basis with hypermomenta `K = 0, 2, …, k_max`.
///
/// Orthonormalization is numerical (repeated Gram–Schmidt against a
/// Gauss–Jacobi rule that is exact for polynomials of the occurring
/// degrees), so the Gram-identity invariant is checkable independently.
pub fn build_channel_basis<S: Scalar>(
    n_particles: usize,
    d: S,
    k_max: u32,
) -> Result<ChannelBasis<S>> {
    if n_particles != 3 {
        return Err(Error::Unsupported(
            "the hyperangular channel basis is built for three bosons".into(),
        ));
    }
    if !(d > S::zero() && d <= fl(3.0)) {
        return Err(Error::Domain("d must lie in (0, 3]".into()));
    }
    if k_max % 2 != 0 {
        return Err(Error::Domain("k_max must be even".into()));
    }
    let degree = (k_max / 2) as usize;
    let n_quad = 2 * degree + 12;
    let expo = (d - fl(2.0)) * half::<S>();
    let rule = GaussRule::jacobi(n_quad, expo, expo)?;

    // Legendre values at the quadrature nodes.
    let p_at = |t: S| legendre_all(degree, t);
    let mut vals: Vec<Vec<S>> = Vec::with_capacity(degree + 1);
    for j in 0..=degree {
        vals.push(
            rule.nodes
                .iter()
                .map(|&t| p_at(t)[j])
                .collect::<Vec<S>>(),
        );
    }
    let inner = |a: &[S], b: &[S]| -> S {
        rule.weights
            .iter()
            .zip(a.iter().zip(b))
            .map(|(&w, (&x, &y))| w * x * y)
            .sum()
    };

    // Twice-through modified Gram–Schmidt in coefficient space, tracking
    // nodal values alongside.
    let mut coeffs: Vec<Vec<S>> = Vec::with_capacity(degree + 1);
    let mut ortho_vals: Vec<Vec<S>> = Vec::with_capacity(degree + 1);
    for j in 0..=degree {
        let mut c = vec![S::zero(); degree + 1];
        c[j] = S::one();
        let mut v = vals[j].clone();
        for _ in 0..2 {
            for (cp, vp) in coeffs.iter().zip(&ortho_vals) {
                let proj = inner(&v, vp);
                for (ck, cpk) in c.iter_mut().zip(cp) {
                    *ck = *ck - proj * *cpk;
                }
                for (vk, vpk) in v.iter_mut().zip(vp) {
                    *vk = *vk - proj * *vpk;
                }
            }
        }
        let norm = inner(&v, &v).sqrt();
        if !(norm > fl(1e-140)) {
            return Err(Error::Config(
                "hyperangular basis degenerated during orthonormalization; \
                 raise the quadrature order"
                    .into(),
            ));
        }
        for ck in c.iter_mut() {
            *ck = *ck / norm;
        }
        for vk in v.iter_mut() {
            *vk = *vk / norm;
        }
        coeffs.push(c);
        ortho_vals.push(v);
    }

    let basis = ChannelBasis {
        d,
        k_list: (0..=degree as u32).map(|j| 2 * j).collect(),
        coeffs,
        rule,
    };
    // Validate orthonormality on an independent, higher-order rule.
    let gram = basis.gram_matrix(n_quad + 17)?;
    let tol = fl::<S>(1e-10);
    for i in 0..basis.len() {
        for j in 0..basis.len() {
            let expect = if i == j { S::one() } else { S::zero() };
            if (gram.at(i, j) - expect).abs() > tol {
                return Err(Error::Config(format!(
                    "hyperangular basis failed the orthonormality check at ({i}, {j}); \
                     raise the quadrature order"
                )));
            }
        }
    }
    Ok(basis)
}

impl<S: Scalar> ChannelBasis<S> {
    pub fn d(&self) -> S {
        self.d
    }

    pub fn k_list(&self) -> &[u32] {
        &self.k_list
    }

    pub fn len(&self) -> usize {
        self.k_list.len()
    }

    pub fn is_empty(&self) -> bool {
        self.k_list.is_empty()
    }

    /// Hyperangular eigenvalue `K (K + 2d - 2)` of channel `c`.
    pub fn eigenvalue(&self, c: usize) -> S {
        let k = fl::<S>(self.k_list[c] as f64);
        k * (k + fl::<S>(2.0) * self.d - fl::<S>(2.0))
    }

    /// Evaluate channel `c` at `t = cos 2α`.
    pub fn eval_t(&self, c: usize, t: S) -> S {
        let p = legendre_all(self.coeffs[c].len() - 1, t);
        self.coeffs[c]
            .iter()
            .zip(&p)
            .map(|(&a, &pv)| a * pv)
            .sum()
    }

    /// Evaluate channel `c` at hyperangle `α ∈ [0, π/2]`.
    pub fn eval_alpha(&self, c: usize, alpha: S) -> S {
        self.eval_t(c, (fl::<S>(2.0) * alpha).cos())
    }

    /// Quadrature rule in `t` matched to the basis weight.
    pub fn rule(&self) -> &GaussRule<S> {
        &self.rule
    }

    /// Gram matrix under the hyperangular weight, evaluated with a fresh
    /// Gauss–Jacobi rule of the given order.
    pub fn gram_matrix(&self, order: usize) -> Result<DMat<S>> {
        let expo = (self.d - fl(2.0)) * half::<S>();
        let rule = GaussRule::jacobi(order, expo, expo)?;
        let n = self.len();
        let mut g = DMat::zeros(n, n);
        for (idx, &t) in rule.nodes.iter().enumerate() {
            let w = rule.weights[idx];
            let vals: Vec<S> = (0..n).map(|c| self.eval_t(c, t)).collect();
            for i in 0..n {
                for j in 0..n {
                    *g.at_mut(i, j) = g.at(i, j) + w * vals[i] * vals[j];
                }
            }
        }
        Ok(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_channel_basis_is_constant() {
        let basis = build_channel_basis(3, 2.3f64, 0).unwrap();
        assert_eq!(basis.len(), 1);
        let g = basis.gram_matrix(30).unwrap();
        assert!((g.at(0, 0) - 1.0).abs() < 1e-12);
        // constant in α
        let v1 = basis.eval_alpha(0, 0.3);
        let v2 = basis.eval_alpha(0, 1.2);
        assert!((v1 - v2).abs() < 1e-14);
    }

    #[test]
    fn gram_identity_at_integer_dimension() {
        let basis = build_channel_basis(3, 3.0f64, 8).unwrap();
        let g = basis.gram_matrix(60).unwrap();
        for i in 0..basis.len() {
            for j in 0..basis.len() {
                let expect = if i == j { 1.0 } else { 0.0 };
                assert!((g.at(i, j) - expect).abs() < 1e-10, "({i},{j})");
            }
        }
    }

    #[test]
    fn gram_identity_at_non_integer_dimension() {
        for d in [1.0f64, 1.4, 2.5, 2.9] {
            let basis = build_channel_basis(3, d, 10).unwrap();
            let g = basis.gram_matrix(64).unwrap();
            for i in 0..basis.len() {
                for j in 0..basis.len() {
                    let expect = if i == j { 1.0 } else { 0.0 };
                    assert!((g.at(i, j) - expect).abs() < 1e-10, "d={d} ({i},{j})");
                }
            }
        }
    }

    /// The hyperangular operator on s-wave functions of α is
    /// `D² φ = -φ'' - (d-1)(cot α - tan α) φ'`; its eigenvalue on channel K
    /// must be `K (K + 2d - 2)`.  Checked by central finite differences.
    #[test]
    fn hyperangular_eigenvalue_by_finite_differences() {
        let d = 2.5f64;
        let basis = build_channel_basis(3, d, 8).unwrap();
        let h = 1e-4;
        for c in 0..basis.len() {
            let expect = basis.eigenvalue(c);
            // sample interior hyperangles away from the coordinate ends
            for &alpha in &[0.4f64, 0.7, 1.0] {
                let f = |a: f64| basis.eval_alpha(c, a);
                let d1 = (f(alpha + h) - f(alpha - h)) / (2.0 * h);
                let d2 = (f(alpha + h) - 2.0 * f(alpha) + f(alpha - h)) / (h * h);
                let applied = -d2 - (d - 1.0) * (1.0 / alpha.tan() - alpha.tan()) * d1;
                let phi = f(alpha);
                if phi.abs() > 1e-3 {
                    assert!(
                        (applied - expect * phi).abs() < 1e-5 * (1.0 + expect * phi.abs()),
                        "channel {c} at α={alpha}: {applied} vs {}",
                        expect * phi
                    );
                }
            }
        }
        // spot value: K = 4 at d = 2.5 has eigenvalue 4 (4 + 3) = 28
        assert!((basis.eigenvalue(2) - 28.0).abs() < 1e-14);
    }
}
