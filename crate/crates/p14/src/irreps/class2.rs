//! Class II (P^2 = 0): Euclidean little-group structure.
//!
//! At the standard null momentum (w, 0, 0, 0, w) the combinations
//! P'_i = M_{0i} + lambda M_{i4} with lambda = p_0/p_4 = 1 commute among
//! themselves and, together with the rotations, generate the algebra P(3).
//! The closure law [P'_i, P'_j] = i (lambda^2 - 1) M_ij documents why only
//! |lambda| = 1 yields the abelian translations.

use num_complex::Complex64;

use crate::algebra::MatrixRealization;
use crate::error::{Error, Result};
use crate::irreps::label::HalfSpin;
use crate::irreps::su2::{epsilon3, su2_bracket_residual};
use crate::linalg::{commutator, inf_norm, scalar_part, sum_of_squares, zeros, CMatrix};

/// The would-be Euclidean translations P'_i = M_{0i} + lambda M_{i4}
/// together with the rotation triple.
#[derive(Debug, Clone)]
pub struct LittleGroupP3 {
    pub lambda: f64,
    pub p_prime: [CMatrix; 3],
    pub rotations: [CMatrix; 3],
}

/// Residuals of the class II closure relations.
#[derive(Debug, Clone, Copy)]
pub struct ClosureReport {
    /// max || [P'_i, P'_j] - i (lambda^2 - 1) M_ij ||_inf; should vanish for
    /// every lambda under the bracket convention.
    pub identity_residual: f64,
    /// max || [P'_i, P'_j] ||_inf; vanishes iff lambda = +-1.
    pub abelian_residual: f64,
    /// max || [M_i, P'_j] - i eps_ijk P'_k ||_inf.
    pub rotation_residual: f64,
}

pub fn class2_little_group(r: &MatrixRealization, lambda: f64) -> Result<(LittleGroupP3, ClosureReport)> {
    if !lambda.is_finite() {
        return Err(Error::Config(format!("lambda must be finite, got {lambda}")));
    }
    let lc = Complex64::new(lambda, 0.0);
    let p_prime = [
        r.rotation(0, 1)? + r.rotation(1, 4)? * lc,
        r.rotation(0, 2)? + r.rotation(2, 4)? * lc,
        r.rotation(0, 3)? + r.rotation(3, 4)? * lc,
    ];
    let rotations = crate::irreps::class1::rotation_triple(r);

    let factor = Complex64::new(0.0, lambda * lambda - 1.0);
    let mut identity_residual = 0.0_f64;
    let mut abelian_residual = 0.0_f64;
    for i in 1..=3usize {
        for j in (i + 1)..=3usize {
            let direct = commutator(&p_prime[i - 1], &p_prime[j - 1])?;
            abelian_residual = abelian_residual.max(inf_norm(&direct));
            let expected = r.rotation(i, j)? * factor;
            identity_residual = identity_residual.max(inf_norm(&(direct - expected)));
        }
    }

    let mut rotation_residual = 0.0_f64;
    for a in 0..3 {
        for b in 0..3 {
            let mut expected = zeros(r.dim());
            for c in 0..3 {
                let eps = epsilon3(a, b, c);
                if eps != 0 {
                    expected = expected + &p_prime[c] * Complex64::new(0.0, eps as f64);
                }
            }
            let direct = commutator(&rotations[a], &p_prime[b])?;
            rotation_residual = rotation_residual.max(inf_norm(&(direct - expected)));
        }
    }

    Ok((
        LittleGroupP3 { lambda, p_prime, rotations },
        ClosureReport { identity_residual, abelian_residual, rotation_residual },
    ))
}

/// The additional invariant W' = M^2 = s(s+1): recovers s from any rotation
/// triple with su(2) brackets and a scalar Casimir.
pub fn class2_spin_invariant(m: &[CMatrix; 3]) -> Result<HalfSpin> {
    let residual = su2_bracket_residual(m)?;
    if residual > 1e-10 {
        return Err(Error::BracketClosure { residual });
    }
    let casimir = sum_of_squares(m);
    scalar_part(&casimir, 1e-10).ok_or(Error::ReducibleInput)?;
    crate::irreps::class1::spin_from_casimir(&casimir)
}
