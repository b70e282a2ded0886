//! Deformed-trap relative-motion solver for two bosons (skeleton).

use crate::scalar::Scalar;

#[derive(Debug, Clone)]
pub struct ExternalSolution<S = f64> {
    pub e_rel: S,
    pub e_zero_point: S,
    pub e_ext: S,
}

impl<S: Scalar> ExternalSolution<S> {}
