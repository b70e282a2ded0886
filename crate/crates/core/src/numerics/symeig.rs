//! Dense symmetric eigendecomposition: Householder tridiagonalization
//! followed by implicit-shift QL, with eigenvector accumulation.

use super::mat::DMat;
use crate::error::{Error, Result};
use crate::scalar::{fl, Scalar};

/// Full eigendecomposition of a symmetric matrix.
///
/// Returns eigenvalues in ascending order and the orthogonal matrix whose
/// columns are the matching eigenvectors.
pub fn sym_eigen<S: Scalar>(a: &DMat<S>) -> Result<(Vec<S>, DMat<S>)> {
    let n = a.rows();
    assert_eq!(n, a.cols(), "matrix must be square");
    let mut q = a.clone();
    let mut d = vec![S::zero(); n];
    let mut e = vec![S::zero(); n];
    tred2(&mut q, &mut d, &mut e);
    shift_subdiagonal(&mut e);
    tqli(&mut d, &mut e, Some(&mut q))?;
    sort_pairs(&mut d, Some(&mut q));
    Ok((d, q))
}

/// Eigenvalues and eigenvectors of a symmetric tridiagonal matrix
/// (`off[i]` couples `i` and `i+1`).
pub fn tridiag_eigen<S: Scalar>(diag: &[S], off: &[S]) -> Result<(Vec<S>, DMat<S>)> {
    let n = diag.len();
    assert_eq!(off.len() + 1, n);
    let mut d = diag.to_vec();
    let mut e = vec![S::zero(); n];
    e[..n - 1].copy_from_slice(off);
    let mut z = DMat::identity(n);
    tqli(&mut d, &mut e, Some(&mut z))?;
    sort_pairs(&mut d, Some(&mut z));
    Ok((d, z))
}

/// Eigenvalues only, for inertia counts of small blocks.
pub fn sym_eigenvalues<S: Scalar>(a: &DMat<S>) -> Result<Vec<S>> {
    let n = a.rows();
    let mut q = a.clone();
    let mut d = vec![S::zero(); n];
    let mut e = vec![S::zero(); n];
    tred2(&mut q, &mut d, &mut e);
    shift_subdiagonal(&mut e);
    tqli(&mut d, &mut e, None)?;
    sort_pairs(&mut d, None);
    Ok(d)
}

/// tred2 stores the coupling of `i` and `i-1` at `e[i]`; tqli wants it at `e[i-1]`.
fn shift_subdiagonal<S: Scalar>(e: &mut [S]) {
    let n = e.len();
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = S::zero();
}

fn sort_pairs<S: Scalar>(d: &mut [S], z: Option<&mut DMat<S>>) {
    let n = d.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| d[i].partial_cmp(&d[j]).expect("non-finite eigenvalue"));
    let sorted: Vec<S> = order.iter().map(|&i| d[i]).collect();
    d.copy_from_slice(&sorted);
    if let Some(z) = z {
        let zc = z.clone();
        for (new_col, &old_col) in order.iter().enumerate() {
            for r in 0..zc.rows() {
                *z.at_mut(r, new_col) = zc.at(r, old_col);
            }
        }
    }
}

/// Householder reduction of a symmetric matrix to tridiagonal form.
/// On exit `q` holds the accumulated orthogonal transformation, `d` the
/// diagonal, and `e[i]` the coupling of rows `i` and `i-1` (`e[0] = 0`).
fn tred2<S: Scalar>(q: &mut DMat<S>, d: &mut [S], e: &mut [S]) {
    let n = q.rows();
    for i in (1..n).rev() {
        let l = i - 1;
        let mut h = S::zero();
        let mut scale = S::zero();
        if l > 0 {
            for k in 0..=l {
                scale = scale + q.at(i, k).abs();
            }
            if scale == S::zero() {
                e[i] = q.at(i, l);
            } else {
                for k in 0..=l {
                    let v = q.at(i, k) / scale;
                    *q.at_mut(i, k) = v;
                    h = h + v * v;
                }
                let mut f = q.at(i, l);
                let g = if f >= S::zero() { -h.sqrt() } else { h.sqrt() };
                e[i] = scale * g;
                h = h - f * g;
                *q.at_mut(i, l) = f - g;
                f = S::zero();
                for j in 0..=l {
                    *q.at_mut(j, i) = q.at(i, j) / h;
                    let mut g = S::zero();
                    for k in 0..=j {
                        g = g + q.at(j, k) * q.at(i, k);
                    }
                    for k in (j + 1)..=l {
                        g = g + q.at(k, j) * q.at(i, k);
                    }
                    e[j] = g / h;
                    f = f + e[j] * q.at(i, j);
                }
                let hh = f / (h + h);
                for j in 0..=l {
                    let fj = q.at(i, j);
                    let gj = e[j] - hh * fj;
                    e[j] = gj;
                    for k in 0..=j {
                        let upd = fj * e[k] + gj * q.at(i, k);
                        *q.at_mut(j, k) = q.at(j, k) - upd;
                    }
                }
            }
        } else {
            e[i] = q.at(i, l);
        }
        d[i] = h;
    }
    d[0] = S::zero();
    e[0] = S::zero();
    for i in 0..n {
        if d[i] != S::zero() {
            for j in 0..i {
                let mut g = S::zero();
                for k in 0..i {
                    g = g + q.at(i, k) * q.at(k, j);
                }
                for k in 0..i {
                    let upd = g * q.at(k, i);
                    *q.at_mut(k, j) = q.at(k, j) - upd;
                }
            }
        }
        d[i] = q.at(i, i);
        *q.at_mut(i, i) = S::one();
        for k in 0..i {
            *q.at_mut(i, k) = S::zero();
            *q.at_mut(k, i) = S::zero();
        }
    }
}

/// Implicit-shift QL on a tridiagonal matrix; `e[i]` couples `i` and `i+1`
/// (`e[n-1]` unused).  If `z` is given, rotations are accumulated into its
/// columns.
fn tqli<S: Scalar>(d: &mut [S], e: &mut [S], mut z: Option<&mut DMat<S>>) -> Result<()> {
    let n = d.len();
    if n == 1 {
        return Ok(());
    }
    let eps = fl::<S>(f64::EPSILON);
    let two = fl::<S>(2.0);
    for l in 0..n {
        let mut iter = 0usize;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= eps * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > 60 {
                return Err(Error::Unconverged("QL iteration failed to converge".into()));
            }
            let mut g = (d[l + 1] - d[l]) / (two * e[l]);
            let mut r = g.hypot(S::one());
            let denom = g + if g >= S::zero() { r.abs() } else { -r.abs() };
            g = d[m] - d[l] + e[l] / denom;
            let mut s = S::one();
            let mut c = S::one();
            let mut p = S::zero();
            let mut underflow = false;
            for i in (l..m).rev() {
                let mut f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == S::zero() {
                    d[i + 1] = d[i + 1] - p;
                    e[m] = S::zero();
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + two * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                if let Some(z) = z.as_deref_mut() {
                    for k in 0..z.rows() {
                        f = z.at(k, i + 1);
                        let zk = z.at(k, i);
                        *z.at_mut(k, i + 1) = s * zk + c * f;
                        *z.at_mut(k, i) = c * zk - s * f;
                    }
                }
            }
            if underflow {
                continue;
            }
            d[l] = d[l] - p;
            e[l] = g;
            e[m] = S::zero();
        }
    }
    Ok(())
}
