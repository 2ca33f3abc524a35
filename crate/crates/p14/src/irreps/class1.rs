//! Class I (P^2 = kappa^2 > 0): spin-isospin little-group content.
//!
//! In the frame where only P_0 survives, the stabilizer is the so(4) spanned
//! by M = (M23, M31, M12) and R = (M14, M24, M34), which splits into the two
//! commuting su(2) triples (M+R)/2 and (M-R)/2 with spins s and I.

use std::collections::BTreeMap;

use num_complex::Complex64;

use crate::algebra::{casimir_v, casimir_w, FiveMomentum, GeneratorId, MatrixRealization};
use crate::error::{Error, Result};
use crate::irreps::label::HalfSpin;
use crate::irreps::su2::{build_su2, epsilon3};
use crate::linalg::{commutator, identity, inf_norm, kron_product, scalar_part, sum_of_squares, zeros, CMatrix};

/// The rotation triple M = (M23, M31, M12) of a realization, full dimension.
pub fn rotation_triple(r: &MatrixRealization) -> [CMatrix; 3] {
    [
        r.rotation(2, 3).expect("in range"),
        r.rotation(3, 1).expect("in range"),
        r.rotation(1, 2).expect("in range"),
    ]
}

/// The triple R = (M14, M24, M34) of a realization, full dimension.
pub fn mass_rotation_triple(r: &MatrixRealization) -> [CMatrix; 3] {
    [
        r.rotation(1, 4).expect("in range"),
        r.rotation(2, 4).expect("in range"),
        r.rotation(3, 4).expect("in range"),
    ]
}

/// A spin-isospin carrier: commuting su(2) pairs packaged as M = A + B and
/// R = A - B with A of spin s and B of spin I.
#[derive(Debug, Clone)]
pub struct SpinIsospinRep {
    s: HalfSpin,
    isospin: HalfSpin,
    m: [CMatrix; 3],
    r: [CMatrix; 3],
}

impl SpinIsospinRep {
    pub fn s(&self) -> HalfSpin {
        self.s
    }

    pub fn isospin(&self) -> HalfSpin {
        self.isospin
    }

    pub fn dim(&self) -> usize {
        self.s.dimension() * self.isospin.dimension()
    }

    pub fn m(&self) -> &[CMatrix; 3] {
        &self.m
    }

    pub fn r(&self) -> &[CMatrix; 3] {
        &self.r
    }

    /// Builds a carrier from raw (M, R) triples: validates the bracket
    /// relations and recovers (s, I) from the Casimir spectra.
    pub fn from_blocks(m: [CMatrix; 3], r: [CMatrix; 3]) -> Result<Self> {
        let residual = bracket_residual(&m, &r)?;
        if residual > 1e-10 {
            return Err(Error::BracketClosure { residual });
        }
        let (s, isospin) = spin_isospin_from_blocks(&m, &r)?;
        Ok(SpinIsospinRep { s, isospin, m, r })
    }

    /// The six so(4) generator matrices keyed by GeneratorId, for bracket
    /// verification against the shared structure-constant table.
    pub fn generator_subset(&self) -> BTreeMap<GeneratorId, CMatrix> {
        let mut map = BTreeMap::new();
        map.insert(GeneratorId::rotation(2, 3).expect("in range"), self.m[0].clone());
        // M31 = -M13
        map.insert(GeneratorId::rotation(1, 3).expect("in range"), -self.m[1].clone());
        map.insert(GeneratorId::rotation(1, 2).expect("in range"), self.m[2].clone());
        map.insert(GeneratorId::rotation(1, 4).expect("in range"), self.r[0].clone());
        map.insert(GeneratorId::rotation(2, 4).expect("in range"), self.r[1].clone());
        map.insert(GeneratorId::rotation(3, 4).expect("in range"), self.r[2].clone());
        map
    }
}

/// A = J(s) x 1, B = 1 x J(I); M = A + B, R = A - B. Basis order is
/// (s3, I3) with s3 outermost, both descending.
pub fn build_class1_rep(s: HalfSpin, isospin: HalfSpin) -> SpinIsospinRep {
    let a = build_su2(s);
    let b = build_su2(isospin);
    let ds = s.dimension();
    let di = isospin.dimension();
    let ids = identity(ds);
    let idi = identity(di);
    let mut m = [zeros(ds * di), zeros(ds * di), zeros(ds * di)];
    let mut r = m.clone();
    for k in 0..3 {
        let ak = kron_product(&a[k], &idi);
        let bk = kron_product(&ids, &b[k]);
        m[k] = &ak + &bk;
        r[k] = &ak - &bk;
    }
    SpinIsospinRep { s, isospin, m, r }
}

/// Max residual of the so(4) relations
/// [M_i, M_j] = i eps_ijk M_k, [M_i, R_j] = i eps_ijk R_k,
/// [R_i, R_j] = i eps_ijk M_k.
pub fn bracket_residual(m: &[CMatrix; 3], r: &[CMatrix; 3]) -> Result<f64> {
    let dim = m[0].nrows();
    let mut max = 0.0_f64;
    for a in 0..3 {
        for b in 0..3 {
            let mut mm = zeros(dim);
            let mut mr = zeros(dim);
            let mut rr = zeros(dim);
            for c in 0..3 {
                let eps = Complex64::new(0.0, epsilon3(a, b, c) as f64);
                mm = mm + &m[c] * eps;
                mr = mr + &r[c] * eps;
                rr = rr + &m[c] * eps;
            }
            max = max.max(inf_norm(&(commutator(&m[a], &m[b])? - mm)));
            max = max.max(inf_norm(&(commutator(&m[a], &r[b])? - mr)));
            max = max.max(inf_norm(&(commutator(&r[a], &r[b])? - rr)));
        }
    }
    Ok(max)
}

/// Recovers (s, I) from ((M+R)/2)^2 and ((M-R)/2)^2. Both Casimirs must be
/// scalar matrices within 1e-10; otherwise the input is reducible.
pub fn spin_isospin_from_blocks(m: &[CMatrix; 3], r: &[CMatrix; 3]) -> Result<(HalfSpin, HalfSpin)> {
    let s = spin_from_casimir(&half_sum_squares(m, r, 1.0))?;
    let isospin = spin_from_casimir(&half_sum_squares(m, r, -1.0))?;
    Ok((s, isospin))
}

/// Round trip: recovers the (s, I) labels of a built representation.
pub fn spin_isospin_eigen(rep: &SpinIsospinRep) -> Result<(HalfSpin, HalfSpin)> {
    spin_isospin_from_blocks(&rep.m, &rep.r)
}

fn half_sum_squares(m: &[CMatrix; 3], r: &[CMatrix; 3], sign: f64) -> CMatrix {
    let half = Complex64::new(0.5, 0.0);
    let s = Complex64::new(sign, 0.0);
    let triple = [
        (&m[0] + &r[0] * s) * half,
        (&m[1] + &r[1] * s) * half,
        (&m[2] + &r[2] * s) * half,
    ];
    sum_of_squares(&triple)
}

/// Solves x(x+1) = lambda for the half-integer x of a scalar Casimir matrix.
pub(crate) fn spin_from_casimir(casimir: &CMatrix) -> Result<HalfSpin> {
    let lambda = scalar_part(casimir, 1e-10).ok_or(Error::ReducibleInput)?;
    if lambda < -1e-10 {
        return Err(Error::ReducibleInput);
    }
    let x = 0.5 * ((1.0 + 4.0 * lambda.max(0.0)).sqrt() - 1.0);
    HalfSpin::from_value(x).map_err(|_| Error::ReducibleInput)
}

/// Deviation report of the frozen-frame Casimir identity at
/// p = (kappa, 0, 0, 0, 0).
///
/// LHS_S = W/kappa^2 + 2V/kappa and LHS_I = W/kappa^2 - 2V/kappa are formed
/// from the algebra module; the candidate right-hand sides are
/// ((M+R)/2)^2 and ((M-R)/2)^2 from the realization's spatial block. The
/// report records ||LHS - f * RHS||_inf for f in {1, 4} and which factor
/// closes the identity.
#[derive(Debug, Clone)]
pub struct Class1CasimirReport {
    pub kappa: f64,
    pub deviation_f1: f64,
    pub deviation_f4: f64,
    /// The f in {1, 4} with deviation below 1e-10, if any.
    pub selected_f: Option<u8>,
}

pub fn check_class1_casimir_identity(r: &MatrixRealization, kappa: f64) -> Result<Class1CasimirReport> {
    if !(kappa.is_finite() && kappa > 0.0) {
        return Err(Error::Config(format!("kappa must be positive, got {kappa}")));
    }
    let p = FiveMomentum::new([kappa, 0.0, 0.0, 0.0, 0.0])?;
    let v = casimir_v(r, &p);
    let w = casimir_w(r, &p);
    let inv_k = Complex64::new(1.0 / kappa, 0.0);
    let inv_k2 = Complex64::new(1.0 / (kappa * kappa), 0.0);
    let two = Complex64::new(2.0, 0.0);
    let lhs_s = &w * inv_k2 + &v * (two * inv_k);
    let lhs_i = &w * inv_k2 - &v * (two * inv_k);

    let m = rotation_triple(r);
    let rr = mass_rotation_triple(r);
    let rhs_s = half_sum_squares(&m, &rr, 1.0);
    let rhs_i = half_sum_squares(&m, &rr, -1.0);

    let deviation = |f: f64| -> f64 {
        let fc = Complex64::new(f, 0.0);
        inf_norm(&(&lhs_s - &rhs_s * fc)).max(inf_norm(&(&lhs_i - &rhs_i * fc)))
    };
    let deviation_f1 = deviation(1.0);
    let deviation_f4 = deviation(4.0);
    let selected_f = if deviation_f1 < 1e-10 {
        Some(1)
    } else if deviation_f4 < 1e-10 {
        Some(4)
    } else {
        None
    };
    Ok(Class1CasimirReport { kappa, deviation_f1, deviation_f4, selected_f })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{build_affine_realization, verify_bracket_subset};

    #[test]
    fn trivial_rep_is_one_dimensional_and_zero() {
        let rep = build_class1_rep(HalfSpin::ZERO, HalfSpin::ZERO);
        assert_eq!(rep.dim(), 1);
        for k in 0..3 {
            assert_eq!(inf_norm(&rep.m()[k]), 0.0);
            assert_eq!(inf_norm(&rep.r()[k]), 0.0);
        }
    }

    #[test]
    fn half_half_has_dim_four() {
        let rep = build_class1_rep(HalfSpin::HALF, HalfSpin::HALF);
        assert_eq!(rep.dim(), 4);
    }

    #[test]
    fn half_zero_casimir_split() {
        // ((M+R)/2)^2 = 3/4, ((M-R)/2)^2 = 0
        let rep = build_class1_rep(HalfSpin::HALF, HalfSpin::ZERO);
        let s_sq = half_sum_squares(rep.m(), rep.r(), 1.0);
        let i_sq = half_sum_squares(rep.m(), rep.r(), -1.0);
        assert!(inf_norm(&(s_sq - identity(2) * Complex64::new(0.75, 0.0))) < 1e-14);
        assert!(inf_norm(&i_sq) < 1e-14);
    }

    #[test]
    fn eigen_round_trips_and_brackets_close() {
        for twice_s in 0..=4u32 {
            for twice_i in 0..=4u32 {
                let s = HalfSpin::from_twice(twice_s);
                let i = HalfSpin::from_twice(twice_i);
                let rep = build_class1_rep(s, i);
                assert_eq!(rep.dim(), s.dimension() * i.dimension());
                let residual = bracket_residual(rep.m(), rep.r()).unwrap();
                assert!(residual < 1e-12, "({s},{i}): residual {residual}");
                assert_eq!(spin_isospin_eigen(&rep).unwrap(), (s, i));
            }
        }
    }

    #[test]
    fn reducible_input_is_rejected() {
        // direct sum of (0,0) and (1/2,0): brackets close, Casimirs non-scalar
        let a = build_class1_rep(HalfSpin::ZERO, HalfSpin::ZERO);
        let b = build_class1_rep(HalfSpin::HALF, HalfSpin::ZERO);
        let mut m = [zeros(3), zeros(3), zeros(3)];
        let mut r = m.clone();
        for k in 0..3 {
            for row in 0..2 {
                for col in 0..2 {
                    m[k][(1 + row, 1 + col)] = b.m()[k][(row, col)];
                    r[k][(1 + row, 1 + col)] = b.r()[k][(row, col)];
                }
            }
            m[k][(0, 0)] = a.m()[k][(0, 0)];
            r[k][(0, 0)] = a.r()[k][(0, 0)];
        }
        assert!(bracket_residual(&m, &r).unwrap() < 1e-12);
        assert!(matches!(spin_isospin_from_blocks(&m, &r), Err(Error::ReducibleInput)));
    }

    #[test]
    fn so4_block_of_affine_realization_is_half_half() {
        // restrict the six so(4) generators to the four spatial coordinates
        let r = build_affine_realization();
        let restrict = |m: &CMatrix| {
            let mut out = zeros(4);
            for row in 0..4 {
                for col in 0..4 {
                    out[(row, col)] = m[(row + 1, col + 1)];
                }
            }
            out
        };
        let m = rotation_triple(&r).map(|m| restrict(&m));
        let rr = mass_rotation_triple(&r).map(|m| restrict(&m));
        let rep = SpinIsospinRep::from_blocks(m, rr).unwrap();
        assert_eq!((rep.s(), rep.isospin()), (HalfSpin::HALF, HalfSpin::HALF));

        // cross-module consistency: the subset closes against the table
        let report = verify_bracket_subset(&rep.generator_subset()).unwrap();
        assert!(report.max_residual < 1e-12);
    }

    #[test]
    fn casimir_identity_selects_factor_four() {
        let r = build_affine_realization();
        let report1 = check_class1_casimir_identity(&r, 1.0).unwrap();
        assert_eq!(report1.selected_f, Some(4), "f=1 dev {} f=4 dev {}", report1.deviation_f1, report1.deviation_f4);
        // kappa scales out jointly
        let report2 = check_class1_casimir_identity(&r, 2.0).unwrap();
        assert_eq!(report2.selected_f, report1.selected_f);
    }

    #[test]
    fn zeroed_r_realization_degenerates() {
        // with R zeroed the V term vanishes and the two sides coincide
        let mut r = build_affine_realization();
        for (mu, nu) in [(1usize, 4usize), (2, 4), (3, 4)] {
            r = r.with_zeroed(GeneratorId::rotation(mu, nu).unwrap());
        }
        let p = FiveMomentum::new([1.0, 0.0, 0.0, 0.0, 0.0]).unwrap();
        let v = casimir_v(&r, &p);
        assert!(inf_norm(&v) < 1e-14);
        let w = casimir_w(&r, &p);
        let lhs_s = &w + &v * Complex64::new(2.0, 0.0);
        let lhs_i = &w - &v * Complex64::new(2.0, 0.0);
        assert!(inf_norm(&(lhs_s - lhs_i)) < 1e-14);
        // and the selected factor is still 4
        let report = check_class1_casimir_identity(&r, 1.0).unwrap();
        assert_eq!(report.selected_f, Some(4));
    }
}
