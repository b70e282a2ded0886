//! Self-contained numerical kernels used by the solvers.

pub mod blocktri;
pub mod lobpcg;
pub mod mat;
pub mod numerov;
pub mod quadrature;
pub mod roots;
pub mod special;
pub mod spline;
pub mod symeig;
