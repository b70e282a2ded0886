//! Symmetric block-tridiagonal matrices: inertia counts via block LDLᵀ,
//! shifted solves, and a bisection + inverse-iteration ground-state driver.

use super::mat::DMat;
use super::symeig::sym_eigen;
use crate::error::Result;
use crate::scalar::{fl, Scalar};

/// Symmetric block-tridiagonal matrix with `n` block rows of size `m`.
/// `diag[i]` is the symmetric diagonal block, `off[i]` the block coupling
/// rows `i` and `i+1` (upper block; the lower one is its transpose).
#[derive(Debug, Clone)]
pub struct BlockTridiag<S> {
    m: usize,
    n: usize,
    diag: Vec<DMat<S>>,
    off: Vec<DMat<S>>,
}

impl<S: Scalar> BlockTridiag<S> {
    pub fn new(diag: Vec<DMat<S>>, off: Vec<DMat<S>>) -> Self {
        let n = diag.len();
        assert!(n >= 1);
        assert_eq!(off.len(), n - 1);
        let m = diag[0].rows();
        for d in &diag {
            assert_eq!((d.rows(), d.cols()), (m, m));
        }
        for b in &off {
            assert_eq!((b.rows(), b.cols()), (m, m));
        }
        Self { m, n, diag, off }
    }

    pub fn block_size(&self) -> usize {
        self.m
    }

    pub fn block_rows(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.n * self.m
    }

    /// Entry `(c, cp)` of block `(i, j)`; `j` must be `i` or `i + 1`.
    pub fn block_entry(&self, i: usize, j: usize, c: usize, cp: usize) -> S {
        if i == j {
            self.diag[i].at(c, cp)
        } else if j == i + 1 {
            self.off[i].at(c, cp)
        } else {
            panic!("block ({i}, {j}) is outside the tridiagonal band");
        }
    }

    /// `y = H x`.
    pub fn matvec(&self, x: &[S], y: &mut [S]) {
        let m = self.m;
        assert_eq!(x.len(), self.dim());
        assert_eq!(y.len(), self.dim());
        for i in 0..self.n {
            let xi = &x[i * m..(i + 1) * m];
            let yi = &mut y[i * m..(i + 1) * m];
            self.diag[i].matvec(xi, yi);
        }
        let mut tmp = vec![S::zero(); m];
        for i in 0..self.n - 1 {
            // upper block: y_i += B_i x_{i+1}
            self.off[i].matvec(&x[(i + 1) * m..(i + 2) * m], &mut tmp);
            for (yv, tv) in y[i * m..(i + 1) * m].iter_mut().zip(&tmp) {
                *yv = *yv + *tv;
            }
            // lower block: y_{i+1} += B_iᵀ x_i
            self.off[i].matvec_t(&x[i * m..(i + 1) * m], &mut tmp);
            for (yv, tv) in y[(i + 1) * m..(i + 2) * m].iter_mut().zip(&tmp) {
                *yv = *yv + *tv;
            }
        }
    }

    /// Gershgorin bounds on the spectrum.
    pub fn gershgorin(&self) -> (S, S) {
        let m = self.m;
        let mut lo = S::infinity();
        let mut hi = S::neg_infinity();
        for i in 0..self.n {
            for r in 0..m {
                let a = self.diag[i].at(r, r);
                let mut radius = S::zero();
                for c in 0..m {
                    if c != r {
                        radius = radius + self.diag[i].at(r, c).abs();
                    }
                }
                if i + 1 < self.n {
                    for c in 0..m {
                        radius = radius + self.off[i].at(r, c).abs();
                    }
                }
                if i > 0 {
                    for c in 0..m {
                        radius = radius + self.off[i - 1].at(c, r).abs();
                    }
                }
                lo = lo.min(a - radius);
                hi = hi.max(a + radius);
            }
        }
        (lo, hi)
    }

    /// Block LDLᵀ factorization of `H - σ`.
    ///
    /// Pivot blocks are eigendecomposed, which yields the inertia (number of
    /// eigenvalues of `H` below `σ`) and a robust inverse for the solves.
    pub fn factorize(&self, sigma: S) -> Result<BlockFactors<S>> {
        let m = self.m;
        let mut factors = BlockFactors {
            m,
            n: self.n,
            pivots: Vec::with_capacity(self.n),
            w: Vec::with_capacity(self.n.saturating_sub(1)),
            negatives: 0,
        };
        let mut d = shift_block(&self.diag[0], sigma);
        for i in 0..self.n {
            let (vals, vecs) = sym_eigen(&d)?;
            factors.negatives += vals.iter().filter(|v| **v < S::zero()).count();
            let scale = vals
                .iter()
                .fold(S::zero(), |acc, v| acc.max(v.abs()))
                .max(S::one());
            let pivmin = scale * fl::<S>(f64::EPSILON * 1e-2);
            let inv_vals: Vec<S> = vals
                .iter()
                .map(|&v| {
                    let guarded = if v.abs() < pivmin {
                        if v < S::zero() {
                            -pivmin
                        } else {
                            pivmin
                        }
                    } else {
                        v
                    };
                    guarded.recip()
                })
                .collect();
            let pivot = PivotBlock {
                vecs,
                inv_vals,
            };
            if i + 1 < self.n {
                // W_i = D_i^{-1} B_i, column by column
                let mut w = DMat::zeros(m, m);
                let mut col = vec![S::zero(); m];
                let mut sol = vec![S::zero(); m];
                for c in 0..m {
                    for r in 0..m {
                        col[r] = self.off[i].at(r, c);
                    }
                    pivot.apply_inverse(&col, &mut sol);
                    for r in 0..m {
                        *w.at_mut(r, c) = sol[r];
                    }
                }
                // D_{i+1} = A_{i+1} - σ - B_iᵀ W_i
                let mut next = shift_block(&self.diag[i + 1], sigma);
                for r in 0..m {
                    for c in 0..m {
                        let mut acc = S::zero();
                        for k in 0..m {
                            acc = acc + self.off[i].at(k, r) * w.at(k, c);
                        }
                        *next.at_mut(r, c) = next.at(r, c) - acc;
                    }
                }
                // keep exact symmetry against roundoff drift
                for r in 0..m {
                    for c in 0..r {
                        let avg = (next.at(r, c) + next.at(c, r)) * fl::<S>(0.5);
                        *next.at_mut(r, c) = avg;
                        *next.at_mut(c, r) = avg;
                    }
                }
                factors.w.push(w);
                d = next;
            }
            factors.pivots.push(pivot);
        }
        Ok(factors)
    }

    /// Number of eigenvalues strictly below `sigma`.
    pub fn count_below(&self, sigma: S) -> Result<usize> {
        Ok(self.factorize(sigma)?.negatives)
    }

    /// Lowest eigenpair by Sturm bisection plus inverse iteration.
    ///
    /// `start` seeds the inverse iteration (a roughly physical guess speeds
    /// nothing but keeps the solve deterministic); `tol_abs` bounds the
    /// bisection interval around the eigenvalue.
    pub fn lowest_eigenpair(&self, start: &[S], tol_abs: S) -> Result<(S, Vec<S>)> {
        let (glo, ghi) = self.gershgorin();
        let margin = (ghi - glo).abs() * fl::<S>(1e-12) + fl::<S>(1e-300);
        let mut lo = glo - margin;
        let mut hi = ghi + margin;
        if self.count_below(hi)? == 0 {
            hi = hi + margin + (ghi.abs() + S::one()) * fl::<S>(1e-9);
        }
        // bisect until the bracket is tight; count(lo) stays 0
        for _ in 0..200 {
            if (hi - lo) <= tol_abs {
                break;
            }
            let mid = (lo + hi) * fl::<S>(0.5);
            if mid <= lo || mid >= hi {
                break;
            }
            if self.count_below(mid)? >= 1 {
                hi = mid;
            } else {
                lo = mid;
            }
        }

        let factors = self.factorize(lo)?;
        let dim = self.dim();
        assert_eq!(start.len(), dim);
        let mut x = start.to_vec();
        normalize(&mut x);
        let mut y = vec![S::zero(); dim];
        let mut theta = lo;
        for _ in 0..12 {
            factors.solve(&x, &mut y);
            normalize(&mut y);
            std::mem::swap(&mut x, &mut y);
            // Rayleigh quotient and residual
            self.matvec(&x, &mut y);
            theta = dot(&x, &y);
            let mut res = S::zero();
            for k in 0..dim {
                let r = y[k] - theta * x[k];
                res = res + r * r;
            }
            let res = res.sqrt();
            let scale = theta.abs().max(S::one());
            if res <= scale * fl::<S>(1e-12) {
                break;
            }
        }
        // canonical sign: make the largest-magnitude component positive
        let mut imax = 0;
        for k in 0..dim {
            if x[k].abs() > x[imax].abs() {
                imax = k;
            }
        }
        if x[imax] < S::zero() {
            for v in x.iter_mut() {
                *v = -*v;
            }
        }
        Ok((theta, x))
    }
}

fn shift_block<S: Scalar>(a: &DMat<S>, sigma: S) -> DMat<S> {
    let mut d = a.clone();
    for i in 0..d.rows() {
        *d.at_mut(i, i) = d.at(i, i) - sigma;
    }
    d
}

fn dot<S: Scalar>(a: &[S], b: &[S]) -> S {
    a.iter().zip(b).map(|(x, y)| *x * *y).sum()
}

fn normalize<S: Scalar>(x: &mut [S]) {
    let norm = dot(x, x).sqrt();
    if norm > S::zero() {
        for v in x.iter_mut() {
            *v = *v / norm;
        }
    }
}

struct PivotBlock<S> {
    vecs: DMat<S>,
    inv_vals: Vec<S>,
}

impl<S: Scalar> PivotBlock<S> {
    /// `out = D^{-1} rhs` through the eigendecomposition.
    fn apply_inverse(&self, rhs: &[S], out: &mut [S]) {
        let m = rhs.len();
        let mut coeff = vec![S::zero(); m];
        self.vecs.matvec_t(rhs, &mut coeff);
        for (c, inv) in coeff.iter_mut().zip(&self.inv_vals) {
            *c = *c * *inv;
        }
        self.vecs.matvec(&coeff, out);
    }
}

/// Factorization of `H - σ` for solves and inertia.
pub struct BlockFactors<S> {
    m: usize,
    n: usize,
    pivots: Vec<PivotBlock<S>>,
    w: Vec<DMat<S>>,
    negatives: usize,
}

impl<S: Scalar> BlockFactors<S> {
    pub fn negatives(&self) -> usize {
        self.negatives
    }

    /// Solves `(H - σ) x = b`.
    pub fn solve(&self, b: &[S], x: &mut [S]) {
        let m = self.m;
        let n = self.n;
        assert_eq!(b.len(), n * m);
        assert_eq!(x.len(), n * m);
        // forward: L z = b, stored in x
        let mut tmp = vec![S::zero(); m];
        x[..m].copy_from_slice(&b[..m]);
        for i in 1..n {
            self.w[i - 1].matvec_t(&x[(i - 1) * m..i * m], &mut tmp);
            for r in 0..m {
                x[i * m + r] = b[i * m + r] - tmp[r];
            }
        }
        // diagonal: y = D^{-1} z, in place
        let mut sol = vec![S::zero(); m];
        for i in 0..n {
            tmp.copy_from_slice(&x[i * m..(i + 1) * m]);
            self.pivots[i].apply_inverse(&tmp, &mut sol);
            x[i * m..(i + 1) * m].copy_from_slice(&sol);
        }
        // backward: Lᵀ x = y
        for i in (0..n - 1).rev() {
            let (head, tail) = x.split_at_mut((i + 1) * m);
            self.w[i].matvec(&tail[..m], &mut tmp);
            for r in 0..m {
                head[i * m + r] = head[i * m + r] - tmp[r];
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn laplacian_1d(n: usize, h: f64) -> BlockTridiag<f64> {
        let inv = 1.0 / (h * h);
        let diag = (0..n)
            .map(|_| DMat::from_rows(1, 1, vec![2.0 * inv]))
            .collect();
        let off = (0..n - 1)
            .map(|_| DMat::from_rows(1, 1, vec![-inv]))
            .collect();
        BlockTridiag::new(diag, off)
    }

    #[test]
    fn counts_match_known_spectrum() {
        let n = 40;
        let h = 1.0 / (n as f64 + 1.0);
        let a = laplacian_1d(n, h);
        let eig = |k: usize| {
            let s = (std::f64::consts::PI * k as f64 * h / 2.0).sin();
            4.0 / (h * h) * s * s
        };
        assert_eq!(a.count_below(eig(1) - 1e-9).unwrap(), 0);
        assert_eq!(a.count_below(eig(1) + 1e-9).unwrap(), 1);
        assert_eq!(a.count_below(eig(3) + 1e-9).unwrap(), 3);
    }

    #[test]
    fn lowest_pair_of_discrete_laplacian() {
        let n = 120;
        let h = 1.0 / (n as f64 + 1.0);
        let a = laplacian_1d(n, h);
        let start = vec![1.0; n];
        let (val, vec) = a.lowest_eigenpair(&start, 1e-12).unwrap();
        let s = (std::f64::consts::PI * h / 2.0).sin();
        let expect = 4.0 / (h * h) * s * s;
        assert!((val - expect).abs() < 1e-8 * expect);
        // eigenvector is the first sine mode
        let norm = (2.0 * h).sqrt();
        for i in 0..n {
            let exact = norm * (std::f64::consts::PI * (i + 1) as f64 * h).sin();
            assert!((vec[i] - exact).abs() < 1e-7);
        }
    }

    #[test]
    fn block_case_matches_dense_eigensolver() {
        // 2x2 blocks with coupling; compare against the dense path
        let n = 12;
        let m = 2;
        let mut diag = Vec::new();
        let mut off = Vec::new();
        for i in 0..n {
            let v = i as f64 * 0.3;
            diag.push(DMat::from_rows(
                2,
                2,
                vec![2.0 + v, 0.4, 0.4, 3.0 - 0.1 * v],
            ));
            if i + 1 < n {
                off.push(DMat::from_rows(2, 2, vec![-1.0, 0.2, 0.1, -0.8]));
            }
        }
        let a = BlockTridiag::new(diag.clone(), off.clone());
        let dim = n * m;
        let mut dense = DMat::zeros(dim, dim);
        for i in 0..n {
            for r in 0..m {
                for c in 0..m {
                    *dense.at_mut(i * m + r, i * m + c) = diag[i].at(r, c);
                }
            }
            if i + 1 < n {
                for r in 0..m {
                    for c in 0..m {
                        *dense.at_mut(i * m + r, (i + 1) * m + c) = off[i].at(r, c);
                        *dense.at_mut((i + 1) * m + c, i * m + r) = off[i].at(r, c);
                    }
                }
            }
        }
        let (dense_vals, _) = sym_eigen(&dense).unwrap();
        let start = vec![1.0; dim];
        let (val, _) = a.lowest_eigenpair(&start, 1e-13).unwrap();
        assert!((val - dense_vals[0]).abs() < 1e-10);
        assert_eq!(a.count_below(dense_vals[2] + 1e-10).unwrap(), 3);
    }
}
