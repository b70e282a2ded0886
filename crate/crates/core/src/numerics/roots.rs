//! Bracketed scalar root finding and maximization.

use crate::error::{Error, Result};
use crate::scalar::{fl, Scalar};

/// Bisection on a bracketing interval.
///
/// `f(lo)` and `f(hi)` must have opposite signs; iterates until the interval
/// shrinks below `tol_x` or `f` hits zero exactly.
pub fn bisect_root<S: Scalar, F: FnMut(S) -> Result<S>>(
    mut f: F,
    lo: S,
    hi: S,
    tol_x: S,
    max_iter: usize,
) -> Result<S> {
    let mut a = lo;
    let mut b = hi;
    let mut fa = f(a)?;
    let fb = f(b)?;
    if fa == S::zero() {
        return Ok(a);
    }
    if fb == S::zero() {
        return Ok(b);
    }
    if (fa > S::zero()) == (fb > S::zero()) {
        return Err(Error::Bracket(format!(
            "no sign change on [{a}, {b}]: f(lo) = {fa}, f(hi) = {fb}"
        )));
    }
    for _ in 0..max_iter {
        let mid = (a + b) * fl::<S>(0.5);
        if (b - a).abs() <= tol_x || mid == a || mid == b {
            return Ok(mid);
        }
        let fm = f(mid)?;
        if fm == S::zero() {
            return Ok(mid);
        }
        if (fm > S::zero()) == (fa > S::zero()) {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
    Ok((a + b) * fl::<S>(0.5))
}

/// Result of a bracketed maximization.
#[derive(Debug, Clone, Copy)]
pub struct MaxResult<S> {
    pub x: S,
    pub value: S,
    /// The maximum sits at (or hugs) an end of the search interval.
    pub at_boundary: bool,
}

/// Golden-section maximization of a unimodal function on `[lo, hi]`.
pub fn golden_max<S: Scalar, F: FnMut(S) -> Result<S>>(
    mut f: F,
    lo: S,
    hi: S,
    tol_x: S,
    max_iter: usize,
) -> Result<MaxResult<S>> {
    if !(hi > lo) {
        return Err(Error::Domain("maximization interval is empty".into()));
    }
    let inv_phi = fl::<S>(0.618_033_988_749_894_9);
    let mut a = lo;
    let mut b = hi;
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let mut fc = f(c)?;
    let mut fd = f(d)?;
    for _ in 0..max_iter {
        if (b - a).abs() <= tol_x {
            break;
        }
        if fc > fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c)?;
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d)?;
        }
    }
    let (x, value) = if fc > fd { (c, fc) } else { (d, fd) };
    let edge = tol_x * fl::<S>(4.0);
    let at_boundary = (x - lo).abs() <= edge || (hi - x).abs() <= edge;
    Ok(MaxResult { x, value, at_boundary })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bisection_finds_root() {
        let r = bisect_root(|x: f64| Ok(x * x - 2.0), 0.0, 2.0, 1e-14, 200).unwrap();
        assert!((r - 2.0f64.sqrt()).abs() < 1e-13);
    }

    #[test]
    fn bisection_rejects_bad_bracket() {
        let err = bisect_root(|x: f64| Ok(x * x + 1.0), 0.0, 1.0, 1e-12, 100).unwrap_err();
        assert!(matches!(err, Error::Bracket(_)));
    }

    #[test]
    fn golden_section_finds_interior_maximum() {
        let res = golden_max(|x: f64| Ok(-(x - 0.3).powi(2)), 0.0, 1.0, 1e-10, 200).unwrap();
        assert!((res.x - 0.3).abs() < 1e-8);
        assert!(!res.at_boundary);
    }

    #[test]
    fn golden_section_flags_boundary_maximum() {
        let res = golden_max(|x: f64| Ok(x), 0.0, 1.0, 1e-10, 200).unwrap();
        assert!(res.at_boundary);
        assert!((res.x - 1.0).abs() < 1e-6);
    }
}
