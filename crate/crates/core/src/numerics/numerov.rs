//! Numerov propagation for equations of the form `u''(r) = g(r) u(r)`.

use crate::scalar::{fl, Scalar};

/// Propagates `u'' = g(r) u` on the uniform grid `r_i = r0 + i h`,
/// given the first two values; returns all `n` values.
pub fn propagate<S: Scalar, G: FnMut(S) -> S>(
    mut g: G,
    r0: S,
    h: S,
    n: usize,
    u0: S,
    u1: S,
) -> Vec<S> {
    assert!(n >= 2);
    let h2_12 = h * h / fl::<S>(12.0);
    let mut u = Vec::with_capacity(n);
    u.push(u0);
    u.push(u1);
    let mut g_prev = g(r0);
    let mut g_cur = g(r0 + h);
    for i in 1..n - 1 {
        let r_next = r0 + h * fl::<S>((i + 1) as f64);
        let g_next = g(r_next);
        let c_prev = S::one() - h2_12 * g_prev;
        let c_cur = fl::<S>(2.0) + fl::<S>(10.0) * h2_12 * g_cur;
        let c_next = S::one() - h2_12 * g_next;
        let next = (c_cur * u[i] - c_prev * u[i - 1]) / c_next;
        u.push(next);
        g_prev = g_cur;
        g_cur = g_next;
    }
    u
}
