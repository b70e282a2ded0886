//! Method-matching engine (skeleton).

use crate::scalar::Scalar;

#[derive(Debug, Clone)]
pub struct TranslationPoint<S = f64> {
    pub b_ho: S,
}

#[derive(Debug, Clone)]
pub struct TranslationCurve<S = f64> {
    pub points: Vec<TranslationPoint<S>>,
}

impl<S: Scalar> TranslationPoint<S> {}
