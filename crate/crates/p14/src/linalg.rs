//! Small dense complex-matrix helpers used by the algebra and irreps modules.

use ndarray::Array2;
use num_complex::Complex64;

use crate::error::{Error, Result};

pub type CMatrix = Array2<Complex64>;

pub const ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub const ONE: Complex64 = Complex64::new(1.0, 0.0);
pub const I: Complex64 = Complex64::new(0.0, 1.0);

pub fn zeros(dim: usize) -> CMatrix {
    CMatrix::zeros((dim, dim))
}

pub fn identity(dim: usize) -> CMatrix {
    let mut m = zeros(dim);
    for k in 0..dim {
        m[(k, k)] = ONE;
    }
    m
}

/// Max absolute entry (entry modulus). All deviation reports use this norm.
pub fn inf_norm(m: &CMatrix) -> f64 {
    m.iter().fold(0.0_f64, |acc, z| acc.max(z.norm()))
}

pub fn require_square(m: &CMatrix) -> Result<usize> {
    let (rows, cols) = m.dim();
    if rows != cols {
        return Err(Error::NotSquare { rows, cols });
    }
    Ok(rows)
}

/// AB - BA.
pub fn commutator(a: &CMatrix, b: &CMatrix) -> Result<CMatrix> {
    let da = require_square(a)?;
    let db = require_square(b)?;
    if da != db {
        return Err(Error::DimensionMismatch { left: da, right: db });
    }
    Ok(a.dot(b) - b.dot(a))
}

/// Checks that `m` is lambda * identity for a real lambda; returns lambda.
pub fn scalar_part(m: &CMatrix, tol: f64) -> Option<f64> {
    let dim = m.nrows();
    if dim != m.ncols() || dim == 0 {
        return None;
    }
    let lambda = m[(0, 0)].re;
    for ((r, c), z) in m.indexed_iter() {
        let expect = if r == c { Complex64::new(lambda, 0.0) } else { ZERO };
        if (z - expect).norm() > tol {
            return None;
        }
    }
    Some(lambda)
}

/// Kronecker product.
pub fn kron_product(a: &CMatrix, b: &CMatrix) -> CMatrix {
    ndarray::linalg::kron(a, b)
}

/// Sum of squares of a triple of matrices.
pub fn sum_of_squares(triple: &[CMatrix; 3]) -> CMatrix {
    let mut acc = triple[0].dot(&triple[0]);
    acc = acc + triple[1].dot(&triple[1]);
    acc + triple[2].dot(&triple[2])
}
