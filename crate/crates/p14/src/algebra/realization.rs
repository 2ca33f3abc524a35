//! Concrete matrix realizations of P(1,4) and their verification against the
//! structure-constant table.

use std::collections::BTreeMap;

use num_complex::Complex64;

use crate::algebra::bracket::{structure_constants, GeneratorCombo};
use crate::algebra::generator::{GeneratorId, GeneratorKind};
use crate::algebra::metric::{g, DIM};
use crate::error::{Error, Result};
use crate::linalg::{commutator, inf_norm, require_square, zeros, CMatrix, I, ONE};

/// A complete map GeneratorId -> dim x dim complex matrix.
#[derive(Debug, Clone)]
pub struct MatrixRealization {
    dim: usize,
    entries: BTreeMap<GeneratorId, CMatrix>,
}

impl MatrixRealization {
    /// Validates completeness and a common square dimension.
    pub fn new(entries: BTreeMap<GeneratorId, CMatrix>) -> Result<Self> {
        let mut dim = None;
        for id in GeneratorId::all() {
            let m = entries.get(&id).ok_or_else(|| Error::MissingGenerator(id.to_string()))?;
            let d = require_square(m)?;
            match dim {
                None => dim = Some(d),
                Some(expected) if expected != d => {
                    return Err(Error::DimensionMismatch { left: expected, right: d })
                }
                _ => {}
            }
        }
        Ok(MatrixRealization { dim: dim.expect("fifteen generators checked"), entries })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, id: GeneratorId) -> &CMatrix {
        &self.entries[&id]
    }

    pub fn translation(&self, mu: usize) -> Result<&CMatrix> {
        Ok(self.get(GeneratorId::translation(mu)?))
    }

    /// M_{mu nu} for any mu != nu; antisymmetry M_{nu mu} = -M_{mu nu} is
    /// applied here.
    pub fn rotation(&self, mu: usize, nu: usize) -> Result<CMatrix> {
        if mu < nu {
            Ok(self.get(GeneratorId::rotation(mu, nu)?).clone())
        } else {
            Ok(-self.get(GeneratorId::rotation(nu, mu)?).clone())
        }
    }

    /// The matrix of a bracket value: i * sum_k c_k r[G_k].
    pub fn combo_matrix(&self, combo: &GeneratorCombo) -> CMatrix {
        let mut acc = zeros(self.dim);
        for (id, c) in combo.terms() {
            acc = acc + self.get(id) * Complex64::new(c as f64, 0.0);
        }
        acc * I
    }

    /// Returns a copy with one generator matrix zeroed (fault-injection hook
    /// for verification reports).
    pub fn with_zeroed(&self, id: GeneratorId) -> Self {
        let mut entries = self.entries.clone();
        entries.insert(id, zeros(self.dim));
        MatrixRealization { dim: self.dim, entries }
    }
}

/// The faithful 6x6 affine realization: M_{mu nu} acts on the five-vector
/// block as the metric-compatible rotation generator
/// (M_{mu nu})^a_b = i (delta^a_mu g_{nu b} - delta^a_nu g_{mu b}),
/// and P_mu populates only the sixth (translation) column.
pub fn build_affine_realization() -> MatrixRealization {
    let dim = DIM + 1;
    let mut entries = BTreeMap::new();
    for id in GeneratorId::all() {
        let mut m = zeros(dim);
        match id.kind() {
            GeneratorKind::Translation(mu) => {
                m[(mu, DIM)] = ONE;
            }
            GeneratorKind::Rotation(mu, nu) => {
                m[(mu, nu)] = I * g(nu);
                m[(nu, mu)] = -I * g(mu);
            }
        }
        entries.insert(id, m);
    }
    MatrixRealization::new(entries).expect("construction is complete by construction")
}

/// The 15x15 adjoint realization (ad X) G_Y = [X, G_Y], with matrix entries
/// straight from the structure-constant table. P(1,4) has trivial center, so
/// this realization is also faithful; unlike the affine one its Lorentz
/// block carries both chiralities, which makes the class III pseudoscalar
/// invariant M.N nonzero.
pub fn build_adjoint_realization() -> MatrixRealization {
    let all = GeneratorId::all();
    let index: BTreeMap<GeneratorId, usize> =
        all.iter().enumerate().map(|(k, &id)| (id, k)).collect();
    let table = structure_constants();
    let mut entries = BTreeMap::new();
    for &x in &all {
        let mut m = zeros(all.len());
        for (col, &y) in all.iter().enumerate() {
            for (z, c) in table.bracket(x, y).terms() {
                m[(index[&z], col)] = I * Complex64::new(c as f64, 0.0);
            }
        }
        entries.insert(x, m);
    }
    MatrixRealization::new(entries).expect("complete by construction")
}

/// Residual of one generator pair against the bracket table.
#[derive(Debug, Clone)]
pub struct PairResidual {
    pub a: GeneratorId,
    pub b: GeneratorId,
    pub residual: f64,
}

/// Per-pair deviations ||[r(A), r(B)] - r([A, B])||_inf over all 105
/// unordered pairs, in canonical (sorted) order.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub pairs: Vec<PairResidual>,
    pub max_residual: f64,
}

impl VerificationReport {
    pub fn worst(&self) -> Option<&PairResidual> {
        self.pairs.iter().max_by(|x, y| x.residual.total_cmp(&y.residual))
    }

    /// Pairs with residual above `threshold`, ordered worst-first.
    pub fn offenders(&self, threshold: f64) -> Vec<&PairResidual> {
        let mut out: Vec<&PairResidual> =
            self.pairs.iter().filter(|p| p.residual > threshold).collect();
        out.sort_by(|x, y| y.residual.total_cmp(&x.residual));
        out
    }
}

pub fn verify_realization(r: &MatrixRealization) -> VerificationReport {
    let table = structure_constants();
    let mut pairs = Vec::with_capacity(105);
    let mut max_residual = 0.0_f64;
    for (a, b) in table.unordered_pairs() {
        let direct = commutator(r.get(a), r.get(b)).expect("realization dims agree");
        let tabulated = r.combo_matrix(table.bracket(a, b));
        let residual = inf_norm(&(direct - tabulated));
        max_residual = max_residual.max(residual);
        pairs.push(PairResidual { a, b, residual });
    }
    VerificationReport { pairs, max_residual }
}

/// Bracket-closure check for a partial realization (for example the six
/// so(4) generators carried by a spin-isospin block). Every pair whose
/// bracket stays inside the subset is checked; a bracket that leaves the
/// subset is an error.
pub fn verify_bracket_subset(entries: &BTreeMap<GeneratorId, CMatrix>) -> Result<VerificationReport> {
    let ids: Vec<GeneratorId> = entries.keys().copied().collect();
    let mut pairs = Vec::new();
    let mut max_residual = 0.0_f64;
    for i in 0..ids.len() {
        for j in (i + 1)..ids.len() {
            let (a, b) = (ids[i], ids[j]);
            let combo = structure_constants().bracket(a, b);
            let mut tabulated = zeros(require_square(&entries[&a])?);
            for (id, c) in combo.terms() {
                let m = entries
                    .get(&id)
                    .ok_or_else(|| Error::MissingGenerator(id.to_string()))?;
                tabulated = tabulated + m * Complex64::new(c as f64, 0.0);
            }
            tabulated = tabulated * I;
            let direct = commutator(&entries[&a], &entries[&b])?;
            let residual = inf_norm(&(direct - tabulated));
            max_residual = max_residual.max(residual);
            pairs.push(PairResidual { a, b, residual });
        }
    }
    Ok(VerificationReport { pairs, max_residual })
}

/// Max over all 455 unordered triples of the matrix Jacobi residual
/// ||[A,[B,C]] + [B,[C,A]] + [C,[A,B]]||_inf.
pub fn jacobi_matrix_residual(r: &MatrixRealization) -> f64 {
    let all = GeneratorId::all();
    let mut max = 0.0_f64;
    for i in 0..all.len() {
        for j in (i + 1)..all.len() {
            for k in (j + 1)..all.len() {
                let (a, b, c) = (r.get(all[i]), r.get(all[j]), r.get(all[k]));
                let sum = commutator(a, &commutator(b, c).expect("same dim")).expect("same dim")
                    + commutator(b, &commutator(c, a).expect("same dim")).expect("same dim")
                    + commutator(c, &commutator(a, b).expect("same dim")).expect("same dim");
                max = max.max(inf_norm(&sum));
            }
        }
    }
    max
}
