//! The invariants P^2, V, W built from the frozen Pauli-Lubanski tensor
//! w^{mu nu} = -1/2 eps^{mu nu a b c} M_{ab} p_c.

use num_complex::Complex64;

use crate::algebra::generator::{GeneratorId, GeneratorKind};
use crate::algebra::metric::{epsilon5, g, DIM};
use crate::algebra::momentum::FiveMomentum;
use crate::algebra::realization::MatrixRealization;
use crate::error::Result;
use crate::linalg::{zeros, CMatrix};

/// Antisymmetric 5x5 array of matrices frozen at a numeric momentum.
///
/// Stored with both indices raised; the lowered components follow from the
/// diagonal metric.
#[derive(Debug, Clone)]
pub struct FrozenWTensor {
    dim: usize,
    momentum: FiveMomentum,
    // upper-triangle components w^{mu nu} with mu < nu
    upper: Vec<CMatrix>,
}

fn triangle_index(mu: usize, nu: usize) -> usize {
    debug_assert!(mu < nu && nu < DIM);
    // row-major upper triangle of a 5x5 array
    mu * (2 * DIM - mu - 1) / 2 + (nu - mu - 1)
}

impl FrozenWTensor {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn momentum(&self) -> &FiveMomentum {
        &self.momentum
    }

    /// w^{mu nu}, antisymmetric in (mu, nu); zero matrix on the diagonal.
    pub fn upper(&self, mu: usize, nu: usize) -> CMatrix {
        if mu == nu {
            zeros(self.dim)
        } else if mu < nu {
            self.upper[triangle_index(mu, nu)].clone()
        } else {
            -self.upper[triangle_index(nu, mu)].clone()
        }
    }

    /// w_{mu nu} = g_{mu mu} g_{nu nu} w^{mu nu}.
    pub fn lower(&self, mu: usize, nu: usize) -> CMatrix {
        self.upper(mu, nu) * Complex64::new(g(mu) * g(nu), 0.0)
    }
}

/// w^{mu nu} = -1/2 eps^{mu nu a b c} M_{ab} p_c with the momentum frozen to
/// numbers. Index raising happens on the epsilon symbol, which for this
/// signature leaves its values unchanged (det g = +1).
pub fn frozen_w(r: &MatrixRealization, p: &FiveMomentum) -> FrozenWTensor {
    let dim = r.dim();
    let mut upper = vec![zeros(dim); DIM * (DIM - 1) / 2];
    for mu in 0..DIM {
        for nu in (mu + 1)..DIM {
            let mut acc = zeros(dim);
            for a in 0..DIM {
                for b in 0..DIM {
                    if a == b {
                        continue;
                    }
                    for c in 0..DIM {
                        let eps = epsilon5([mu, nu, a, b, c]).expect("indices in range");
                        if eps == 0 || p[c] == 0.0 {
                            continue;
                        }
                        let coeff = Complex64::new(-0.5 * eps as f64 * p[c], 0.0);
                        acc = acc + r.rotation(a, b).expect("indices in range") * coeff;
                    }
                }
            }
            upper[triangle_index(mu, nu)] = acc;
        }
    }
    FrozenWTensor { dim, momentum: *p, upper }
}

/// P^2 = p_0^2 - p_1^2 - p_2^2 - p_3^2 - p_4^2.
pub fn casimir_p2(p: &FiveMomentum) -> f64 {
    p.invariant_square()
}

/// V = -1/4 sum_{mu nu} M_{mu nu} w^{mu nu} at the frozen momentum.
pub fn casimir_v(r: &MatrixRealization, p: &FiveMomentum) -> CMatrix {
    let w = frozen_w(r, p);
    let mut acc = zeros(r.dim());
    for mu in 0..DIM {
        for nu in 0..DIM {
            if mu == nu {
                continue;
            }
            let m = r.rotation(mu, nu).expect("indices in range");
            acc = acc + m.dot(&w.upper(mu, nu));
        }
    }
    acc * Complex64::new(-0.25, 0.0)
}

/// W = 1/2 sum_{mu nu} w_{mu nu} w^{mu nu} at the frozen momentum.
pub fn casimir_w(r: &MatrixRealization, p: &FiveMomentum) -> CMatrix {
    let w = frozen_w(r, p);
    let mut acc = zeros(r.dim());
    for mu in 0..DIM {
        for nu in 0..DIM {
            if mu == nu {
                continue;
            }
            acc = acc + w.lower(mu, nu).dot(&w.upper(mu, nu));
        }
    }
    acc * Complex64::new(0.5, 0.0)
}

/// Rotation generators stabilizing `p`: M_{mu nu} belongs to the little
/// algebra iff its bracket with every P_rho annihilates the momentum, which
/// for the diagonal metric reduces to |p_mu| and |p_nu| below `tol`.
///
/// Translations are excluded: their brackets vanish identically, but the
/// frozen V and W matrices do not commute with translation matrices.
pub fn little_algebra(p: &FiveMomentum, tol: f64) -> Vec<GeneratorId> {
    GeneratorId::rotations()
        .into_iter()
        .filter(|id| match id.kind() {
            GeneratorKind::Rotation(mu, nu) => p[mu].abs() < tol && p[nu].abs() < tol,
            GeneratorKind::Translation(_) => false,
        })
        .collect()
}

/// Max commutation residual of V and W against every little-algebra
/// generator of `p`.
pub fn centrality_residual(r: &MatrixRealization, p: &FiveMomentum, tol: f64) -> Result<f64> {
    let v = casimir_v(r, p);
    let w = casimir_w(r, p);
    let mut max = 0.0_f64;
    for id in little_algebra(p, tol) {
        let x = r.get(id);
        max = max.max(crate::linalg::inf_norm(&crate::linalg::commutator(&v, x)?));
        max = max.max(crate::linalg::inf_norm(&crate::linalg::commutator(&w, x)?));
    }
    Ok(max)
}
