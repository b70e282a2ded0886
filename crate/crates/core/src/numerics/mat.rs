//! Minimal dense row-major matrix used by the numerical kernels.

use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq)]
pub struct DMat<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> DMat<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![S::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = S::one();
        }
        m
    }

    pub fn from_rows(rows: usize, cols: usize, data: Vec<S>) -> Self {
        assert_eq!(data.len(), rows * cols);
        Self { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> S {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut S {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn data(&self) -> &[S] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [S] {
        &mut self.data
    }

    /// `y = A x`.
    pub fn matvec(&self, x: &[S], y: &mut [S]) {
        assert_eq!(x.len(), self.cols);
        assert_eq!(y.len(), self.rows);
        for i in 0..self.rows {
            let row = self.row(i);
            let mut acc = S::zero();
            for (a, b) in row.iter().zip(x.iter()) {
                acc = acc + *a * *b;
            }
            y[i] = acc;
        }
    }

    /// `y = Aᵀ x`.
    pub fn matvec_t(&self, x: &[S], y: &mut [S]) {
        assert_eq!(x.len(), self.rows);
        assert_eq!(y.len(), self.cols);
        for v in y.iter_mut() {
            *v = S::zero();
        }
        for i in 0..self.rows {
            let xi = x[i];
            let row = self.row(i);
            for (j, a) in row.iter().enumerate() {
                y[j] = y[j] + *a * xi;
            }
        }
    }
}
