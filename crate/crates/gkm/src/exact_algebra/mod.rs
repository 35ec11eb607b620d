//! Exact integer linear algebra and graded polynomial arithmetic over Z.

mod echelon;
mod hnf;
mod lattice;
mod matrix;
mod poly;

pub use echelon::{rational_rank, Echelon};
pub use hnf::{
    bareiss_rank, determinant, hermite_kernel, hnf_basis, lattice_contains, lattice_rank, row_hnf, row_hnf_with_transform,
    solve_integral, Hnf,
};
pub use lattice::{LatticeVector, MAX_COORD};
pub use matrix::IntMatrix;
pub use poly::{basis_index, graded_piece_basis, vars, Exponent, IntPolynomial, Vars};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("polynomials over different variable tables {left:?} and {right:?}")]
    VariableMismatch { left: Vec<String>, right: Vec<String> },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("polynomial parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
}

/// Binomial coefficient `C(n, k)` as `u128`.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}
