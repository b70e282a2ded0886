//! Gaussian quadrature rules via the Golub–Welsch eigenvalue method.

use super::special::ln_gamma;
use super::symeig::tridiag_eigen;
use crate::error::{Error, Result};
use crate::scalar::{fl, Scalar};

/// Nodes and weights of a Gaussian rule on `[-1, 1]`.
#[derive(Debug, Clone)]
pub struct GaussRule<S> {
    pub nodes: Vec<S>,
    pub weights: Vec<S>,
}

impl<S: Scalar> GaussRule<S> {
    /// Gauss–Jacobi rule for the weight `(1-x)^alpha (1+x)^beta`.
    ///
    /// Recurrence coefficients follow Gautschi's `r_jacobi`, which is valid
    /// for all `alpha, beta > -1` including `alpha + beta = -1`.
    pub fn jacobi(n: usize, alpha: S, beta: S) -> Result<Self> {
        if n == 0 {
            return Err(Error::Config("quadrature order must be >= 1".into()));
        }
        let neg_one = -S::one();
        if alpha <= neg_one || beta <= neg_one {
            return Err(Error::Domain(
                "Jacobi weight exponents must be > -1".into(),
            ));
        }
        let one = S::one();
        let two = fl::<S>(2.0);
        let four = fl::<S>(4.0);
        let ab = alpha + beta;

        // total mass of the weight: 2^{α+β+1} B(α+1, β+1)
        let mu0 = ((ab + one) * two.ln() + ln_gamma(alpha + one) + ln_gamma(beta + one)
            - ln_gamma(ab + two))
        .exp();

        let mut diag = Vec::with_capacity(n);
        let mut off = Vec::with_capacity(n.saturating_sub(1));
        diag.push((beta - alpha) / (ab + two));
        for k in 1..n {
            let kf = fl::<S>(k as f64);
            let denom = (two * kf + ab) * (two * kf + ab + two);
            diag.push((beta * beta - alpha * alpha) / denom);
        }
        for k in 1..n {
            let kf = fl::<S>(k as f64);
            let b = if k == 1 {
                four * (alpha + one) * (beta + one) / ((ab + two) * (ab + two) * (ab + fl(3.0)))
            } else {
                four * kf * (kf + alpha) * (kf + beta) * (kf + ab)
                    / ((two * kf + ab) * (two * kf + ab) * (two * kf + ab + one)
                        * (two * kf + ab - one))
            };
            off.push(b.sqrt());
        }

        let (nodes, vecs) = tridiag_eigen(&diag, &off)?;
        let weights = (0..n)
            .map(|j| {
                let v0 = vecs.at(0, j);
                mu0 * v0 * v0
            })
            .collect();
        Ok(Self { nodes, weights })
    }

    /// Gauss–Legendre rule (Jacobi with zero exponents).
    pub fn legendre(n: usize) -> Result<Self> {
        Self::jacobi(n, S::zero(), S::zero())
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Integrate `f` against this rule's weight on `[-1, 1]`.
    pub fn integrate<F: FnMut(S) -> S>(&self, mut f: F) -> S {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }

    /// Nodes and weights of a Legendre-type rule mapped to `[a, b]`.
    pub fn mapped_to(&self, a: S, b: S) -> (Vec<S>, Vec<S>) {
        let half_len = (b - a) * fl::<S>(0.5);
        let mid = (b + a) * fl::<S>(0.5);
        let nodes = self.nodes.iter().map(|&x| mid + half_len * x).collect();
        let weights = self.weights.iter().map(|&w| w * half_len).collect();
        (nodes, weights)
    }
}
