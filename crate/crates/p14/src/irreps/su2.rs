//! Standard su(2) ladder construction.

use num_complex::Complex64;

use crate::error::Result;
use crate::irreps::label::HalfSpin;
use crate::linalg::{zeros, CMatrix};

/// Spin-j matrices (J1, J2, J3) of dimension 2j+1 built from the ladder
/// operators. J3 is diagonal with entries j, j-1, ..., -j in basis order;
/// the brackets [J_a, J_b] = i eps_abc J_c hold exactly up to rounding.
pub fn build_su2(j: HalfSpin) -> [CMatrix; 3] {
    let n = j.dimension();
    let jv = j.value();

    // (J+)_{k-1,k} = sqrt(j(j+1) - m(m+1)) with m = j - k
    let mut plus = zeros(n);
    for k in 1..n {
        let m = jv - k as f64;
        plus[(k - 1, k)] = Complex64::new((jv * (jv + 1.0) - m * (m + 1.0)).sqrt(), 0.0);
    }
    let minus = plus.t().map(|z| z.conj());

    let half = Complex64::new(0.5, 0.0);
    let j1 = (&plus + &minus) * half;
    let j2 = (&plus - &minus) * Complex64::new(0.0, -0.5);
    let mut j3 = zeros(n);
    for k in 0..n {
        j3[(k, k)] = Complex64::new(jv - k as f64, 0.0);
    }
    [j1, j2, j3]
}

/// su(2) bracket residual max_ab ||[J_a, J_b] - i eps_abc J_c||_inf.
pub fn su2_bracket_residual(j: &[CMatrix; 3]) -> Result<f64> {
    let mut max = 0.0_f64;
    for a in 0..3 {
        for b in 0..3 {
            let mut expected = zeros(j[a].nrows());
            for c in 0..3 {
                let eps = epsilon3(a, b, c);
                if eps != 0 {
                    expected = expected + &j[c] * Complex64::new(0.0, eps as f64);
                }
            }
            let direct = crate::linalg::commutator(&j[a], &j[b])?;
            max = max.max(crate::linalg::inf_norm(&(direct - expected)));
        }
    }
    Ok(max)
}

pub(crate) fn epsilon3(a: usize, b: usize, c: usize) -> i32 {
    match (a, b, c) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1,
        _ => 0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{identity, inf_norm, sum_of_squares};

    #[test]
    fn spin_zero_is_trivial() {
        let j = build_su2(HalfSpin::ZERO);
        for m in &j {
            assert_eq!(m.nrows(), 1);
            assert_eq!(inf_norm(m), 0.0);
        }
    }

    #[test]
    fn spin_half_matches_pauli_halves() {
        let j = build_su2(HalfSpin::HALF);
        assert_eq!(j[2][(0, 0)], Complex64::new(0.5, 0.0));
        assert_eq!(j[2][(1, 1)], Complex64::new(-0.5, 0.0));
        let sq = sum_of_squares(&j);
        let expected = identity(2) * Complex64::new(0.75, 0.0);
        assert!(inf_norm(&(sq - expected)) < 1e-15);
    }

    #[test]
    fn spin_one_casimir() {
        let j = build_su2(HalfSpin::ONE);
        let sq = sum_of_squares(&j);
        let expected = identity(3) * Complex64::new(2.0, 0.0);
        assert!(inf_norm(&(sq - expected)) < 1e-14);
    }

    #[test]
    fn brackets_close_up_to_spin_5_2() {
        for twice in 0..=5 {
            let j = build_su2(HalfSpin::from_twice(twice));
            let residual = su2_bracket_residual(&j).unwrap();
            assert!(residual < 1e-13, "2j = {twice}: residual {residual}");
        }
    }

    #[test]
    fn j3_descends_from_j() {
        let j = build_su2(HalfSpin::from_twice(3));
        let diag: Vec<f64> = (0..4).map(|k| j[2][(k, k)].re).collect();
        assert_eq!(diag, vec![1.5, 0.5, -0.5, -1.5]);
    }
}
