//! Natural cubic spline interpolation.

use crate::error::{Error, Result};
use crate::scalar::{fl, Scalar};

/// Natural cubic spline through `(x_i, y_i)` with strictly increasing `x`.
#[derive(Debug, Clone)]
pub struct CubicSpline<S> {
    x: Vec<S>,
    y: Vec<S>,
    y2: Vec<S>,
}

impl<S: Scalar> CubicSpline<S> {
    pub fn new(x: Vec<S>, y: Vec<S>) -> Result<Self> {
        let n = x.len();
        if n < 3 || y.len() != n {
            return Err(Error::Input("spline needs >= 3 matching nodes".into()));
        }
        if x.windows(2).any(|w| !(w[1] > w[0])) {
            return Err(Error::Input("spline abscissae must strictly increase".into()));
        }
        // Tridiagonal solve for the second derivatives, natural end conditions.
        let mut y2 = vec![S::zero(); n];
        let mut u = vec![S::zero(); n];
        let two = fl::<S>(2.0);
        let six = fl::<S>(6.0);
        for i in 1..n - 1 {
            let sig = (x[i] - x[i - 1]) / (x[i + 1] - x[i - 1]);
            let p = sig * y2[i - 1] + two;
            y2[i] = (sig - S::one()) / p;
            let du = (y[i + 1] - y[i]) / (x[i + 1] - x[i]) - (y[i] - y[i - 1]) / (x[i] - x[i - 1]);
            u[i] = (six * du / (x[i + 1] - x[i - 1]) - sig * u[i - 1]) / p;
        }
        for i in (0..n - 1).rev() {
            y2[i] = y2[i] * y2[i + 1] + u[i];
        }
        Ok(Self { x, y, y2 })
    }

    pub fn domain(&self) -> (S, S) {
        (self.x[0], *self.x.last().unwrap())
    }

    /// Evaluate inside the domain; ends are clamped to the boundary values.
    pub fn eval(&self, xq: S) -> S {
        let n = self.x.len();
        if xq <= self.x[0] {
            return self.y[0];
        }
        if xq >= self.x[n - 1] {
            return self.y[n - 1];
        }
        let mut lo = 0usize;
        let mut hi = n - 1;
        while hi - lo > 1 {
            let mid = (lo + hi) / 2;
            if self.x[mid] > xq {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        let h = self.x[hi] - self.x[lo];
        let a = (self.x[hi] - xq) / h;
        let b = (xq - self.x[lo]) / h;
        let six = fl::<S>(6.0);
        a * self.y[lo]
            + b * self.y[hi]
            + ((a * a * a - a) * self.y2[lo] + (b * b * b - b) * self.y2[hi]) * (h * h) / six
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproduces_smooth_function() {
        let n = 60;
        let x: Vec<f64> = (0..n).map(|i| i as f64 * 0.1).collect();
        let y: Vec<f64> = x.iter().map(|&v| (-0.5 * v * v).exp()).collect();
        let sp = CubicSpline::new(x, y).unwrap();
        for k in 0..170 {
            let xq = 0.45 + k as f64 * 0.028;
            let exact = (-0.5f64 * xq * xq).exp();
            assert!((sp.eval(xq) - exact).abs() < 5e-6, "at {xq}");
        }
        // natural end conditions cost accuracy near the first node only
        assert!((sp.eval(0.05) - (-0.5f64 * 0.05 * 0.05).exp()).abs() < 5e-3);
    }

    #[test]
    fn rejects_unsorted_nodes() {
        let err = CubicSpline::new(vec![0.0, 1.0, 0.5], vec![0.0; 3]).unwrap_err();
        assert!(matches!(err, Error::Input(_)));
    }
}
