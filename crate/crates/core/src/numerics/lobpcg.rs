//! Single-vector LOBPCG for the generalized symmetric problem `A x = θ B x`.

use super::mat::DMat;
use super::symeig::sym_eigen;
use crate::error::{Error, Result};
use crate::scalar::{fl, Scalar};

pub struct LobpcgOutcome<S> {
    pub theta: S,
    pub x: Vec<S>,
    pub iterations: usize,
    pub residual: S,
}

/// Finds the smallest eigenpair of `A x = θ B x` with `B` positive definite.
///
/// `apply_t` is a preconditioner approximating `(A - σB)^{-1}` for a shift σ
/// below the target eigenvalue; pass the identity if nothing better exists.
/// Deterministic for a fixed starting vector.
pub fn lobpcg_smallest<S, FA, FB, FT>(
    dim: usize,
    apply_a: FA,
    apply_b: FB,
    apply_t: FT,
    x0: &[S],
    tol: S,
    max_iter: usize,
) -> Result<LobpcgOutcome<S>>
where
    S: Scalar,
    FA: Fn(&[S], &mut [S]),
    FB: Fn(&[S], &mut [S]),
    FT: Fn(&[S], &mut [S]),
{
    assert_eq!(x0.len(), dim);
    let mut x = x0.to_vec();
    let mut bx = vec![S::zero(); dim];
    let mut ax = vec![S::zero(); dim];
    apply_b(&x, &mut bx);
    let nx = dot(&x, &bx).sqrt();
    if !(nx > S::zero()) {
        return Err(Error::Input("starting vector has zero B-norm".into()));
    }
    scale(&mut x, nx.recip());
    apply_b(&x, &mut bx);
    apply_a(&x, &mut ax);
    let mut theta = dot(&x, &ax);

    let mut p: Option<Vec<S>> = None;
    let mut r = vec![S::zero(); dim];
    let mut w = vec![S::zero(); dim];
    let mut last_residual = S::infinity();

    for iter in 0..max_iter {
        for k in 0..dim {
            r[k] = ax[k] - theta * bx[k];
        }
        let res = dot(&r, &r).sqrt();
        last_residual = res;
        if res <= tol * theta.abs().max(S::one()) {
            return Ok(LobpcgOutcome {
                theta,
                x,
                iterations: iter,
                residual: res,
            });
        }
        apply_t(&r, &mut w);

        // Assemble the trial basis [x, w, p] and B-orthonormalize it.
        let mut basis: Vec<Vec<S>> = vec![x.clone(), w.clone()];
        if let Some(pv) = &p {
            basis.push(pv.clone());
        }
        let mut b_basis: Vec<Vec<S>> = Vec::with_capacity(basis.len());
        let mut kept: Vec<usize> = Vec::with_capacity(basis.len());
        let mut ortho: Vec<Vec<S>> = Vec::with_capacity(basis.len());
        for (idx, v) in basis.iter_mut().enumerate() {
            // twice-is-enough modified Gram-Schmidt in the B inner product
            for _ in 0..2 {
                for (u, bu) in ortho.iter().zip(&b_basis) {
                    let c = dot(v, bu);
                    for k in 0..dim {
                        v[k] = v[k] - c * u[k];
                    }
                    let _ = u;
                }
            }
            let mut bv = vec![S::zero(); dim];
            apply_b(v, &mut bv);
            let nv = dot(v, &bv).sqrt();
            if nv > fl::<S>(1e-10) {
                scale(v, nv.recip());
                scale(&mut bv, nv.recip());
                ortho.push(v.clone());
                b_basis.push(bv);
                kept.push(idx);
            }
        }
        if ortho.len() < 2 {
            // search space collapsed onto x: accept current pair
            return Ok(LobpcgOutcome {
                theta,
                x,
                iterations: iter,
                residual: res,
            });
        }

        let nb = ortho.len();
        let mut a_basis: Vec<Vec<S>> = Vec::with_capacity(nb);
        for v in &ortho {
            let mut av = vec![S::zero(); dim];
            apply_a(v, &mut av);
            a_basis.push(av);
        }
        let mut small = DMat::zeros(nb, nb);
        for i in 0..nb {
            for j in 0..=i {
                let v = dot(&ortho[i], &a_basis[j]);
                *small.at_mut(i, j) = v;
                *small.at_mut(j, i) = v;
            }
        }
        let (vals, vecs) = sym_eigen(&small)?;
        let _ = vals;
        let c: Vec<S> = (0..nb).map(|i| vecs.at(i, 0)).collect();

        // new iterate and the locally-optimal direction (w/p components only)
        let mut x_new = vec![S::zero(); dim];
        let mut p_new = vec![S::zero(); dim];
        for (i, v) in ortho.iter().enumerate() {
            for k in 0..dim {
                x_new[k] = x_new[k] + c[i] * v[k];
                if kept[i] != 0 {
                    p_new[k] = p_new[k] + c[i] * v[k];
                }
            }
        }
        x = x_new;
        apply_b(&x, &mut bx);
        let nx = dot(&x, &bx).sqrt();
        scale(&mut x, nx.recip());
        scale(&mut bx, nx.recip());
        apply_a(&x, &mut ax);
        theta = dot(&x, &ax);
        p = Some(p_new);
    }
    Err(Error::Unconverged(format!(
        "LOBPCG did not reach tolerance in {max_iter} iterations (residual {})",
        last_residual.to_f64().unwrap_or(f64::NAN)
    )))
}

fn dot<S: Scalar>(a: &[S], b: &[S]) -> S {
    a.iter().zip(b).map(|(x, y)| *x * *y).sum()
}

fn scale<S: Scalar>(v: &mut [S], s: S) {
    for x in v.iter_mut() {
        *x = *x * s;
    }
}
