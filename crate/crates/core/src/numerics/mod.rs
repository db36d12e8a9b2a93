//! Numerical kernels: `erf`, adaptive quadrature, bracketed root finding and
//! small dense Hermitian eigenproblems.

mod erf;
mod linalg;
mod quadrature;
mod roots;

pub use erf::erf;
pub use linalg::{eig_hermitian, expm_hermitian, CMatrix, Eigen, HermitianMatrix};
pub use quadrature::{integrate, Quadrature, QuadratureSpec};
pub use roots::{find_root, minimize_golden};
