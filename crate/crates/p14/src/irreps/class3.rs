//! Class III (P^2 = -eta^2 < 0): Lorentz little-group identities.
//!
//! At p = (0, 0, 0, 0, sign * eta) the stabilizer is the O(1,3) spanned by
//! the rotations M and boosts N = (M01, M02, M03), whose invariants satisfy
//! V = sign * eta * M.N and W = eta^2 (N^2 - M^2).

use num_complex::Complex64;

use crate::algebra::{casimir_v, casimir_w, FiveMomentum, MatrixRealization};
use crate::error::{Error, Result};
use crate::irreps::class1::rotation_triple;
use crate::irreps::su2::epsilon3;
use crate::linalg::{commutator, inf_norm, sum_of_squares, zeros, CMatrix};

/// Rotation triple M and boost triple N extracted from a realization.
#[derive(Debug, Clone)]
pub struct LorentzBlock {
    pub m: [CMatrix; 3],
    pub n: [CMatrix; 3],
}

impl LorentzBlock {
    pub fn from_realization(r: &MatrixRealization) -> Self {
        LorentzBlock {
            m: rotation_triple(r),
            n: [
                r.rotation(0, 1).expect("in range"),
                r.rotation(0, 2).expect("in range"),
                r.rotation(0, 3).expect("in range"),
            ],
        }
    }

    /// Max residual of the o(1,3) relations
    /// [M_i, M_j] = i eps M_k, [M_i, N_j] = i eps N_k, [N_i, N_j] = -i eps M_k.
    pub fn bracket_residual(&self) -> Result<f64> {
        let dim = self.m[0].nrows();
        let mut max = 0.0_f64;
        for a in 0..3 {
            for b in 0..3 {
                let mut mm = zeros(dim);
                let mut mn = zeros(dim);
                let mut nn = zeros(dim);
                for c in 0..3 {
                    let eps = Complex64::new(0.0, epsilon3(a, b, c) as f64);
                    mm = mm + &self.m[c] * eps;
                    mn = mn + &self.n[c] * eps;
                    nn = nn - &self.m[c] * eps;
                }
                max = max.max(inf_norm(&(commutator(&self.m[a], &self.m[b])? - mm)));
                max = max.max(inf_norm(&(commutator(&self.m[a], &self.n[b])? - mn)));
                max = max.max(inf_norm(&(commutator(&self.n[a], &self.n[b])? - nn)));
            }
        }
        Ok(max)
    }
}

/// The Lorentz-block invariants V = sign * eta * sum_i M_i N_i and
/// W = eta^2 (sum_i N_i^2 - sum_i M_i^2).
pub fn class3_invariants(block: &LorentzBlock, eta: f64, sign: i8) -> Result<(CMatrix, CMatrix)> {
    if !(eta.is_finite() && eta > 0.0) {
        return Err(Error::Config(format!("eta must be positive, got {eta}")));
    }
    if sign != 1 && sign != -1 {
        return Err(Error::Config(format!("sign must be +1 or -1, got {sign}")));
    }
    let dim = block.m[0].nrows();
    let mut mn = zeros(dim);
    for i in 0..3 {
        mn = mn + block.m[i].dot(&block.n[i]);
    }
    let v = mn * Complex64::new(sign as f64 * eta, 0.0);
    let w = (sum_of_squares(&block.n) - sum_of_squares(&block.m)) * Complex64::new(eta * eta, 0.0);
    Ok((v, w))
}

/// Deviations of the block formulas against the frozen Casimirs at
/// p = (0, 0, 0, 0, sign * eta) on the realization the block came from.
#[derive(Debug, Clone, Copy)]
pub struct Class3Report {
    pub eta: f64,
    pub sign: i8,
    pub v_residual: f64,
    pub w_residual: f64,
}

pub fn class3_identity_report(
    block: &LorentzBlock,
    r: &MatrixRealization,
    eta: f64,
    sign: i8,
) -> Result<Class3Report> {
    let (v_formula, w_formula) = class3_invariants(block, eta, sign)?;
    let p = FiveMomentum::new([0.0, 0.0, 0.0, 0.0, sign as f64 * eta])?;
    let v = casimir_v(r, &p);
    let w = casimir_w(r, &p);
    Ok(Class3Report {
        eta,
        sign,
        v_residual: inf_norm(&(v - v_formula)),
        w_residual: inf_norm(&(w - w_formula)),
    })
}
