//! The structure-constant table of P(1,4).
//!
//! Every bracket in the crate is taken from this single source, under the
//! convention
//!
//! ```text
//! [M_uv, M_rs] = i (g_vr M_us - g_ur M_vs - g_vs M_ur + g_us M_vr)
//! [M_uv, P_r]  = i (g_vr P_u - g_ur P_v)
//! [P_u,  P_v]  = 0
//! ```
//!
//! A bracket value is stored as the real integer coefficients c_k of
//! i * sum_k c_k G_k, so the table is exact.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use crate::algebra::generator::{GeneratorId, GeneratorKind};
use crate::algebra::metric::metric;

/// Integer-coefficient combination of generators carrying an implicit
/// overall factor i: the value represented is `i * sum_k coeff_k * G_k`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GeneratorCombo {
    terms: BTreeMap<GeneratorId, i64>,
}

impl GeneratorCombo {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, id: GeneratorId) -> i64 {
        self.terms.get(&id).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (GeneratorId, i64)> + '_ {
        self.terms.iter().map(|(&id, &c)| (id, c))
    }

    pub fn add_translation(&mut self, coeff: i64, mu: usize) {
        if coeff == 0 {
            return;
        }
        let id = GeneratorId::translation(mu).expect("index in range");
        self.add_term(id, coeff);
    }

    /// Adds coeff * M_{mu nu}; canonicalizes M_{nu mu} = -M_{mu nu} and
    /// drops mu = nu.
    pub fn add_rotation(&mut self, coeff: i64, mu: usize, nu: usize) {
        if coeff == 0 || mu == nu {
            return;
        }
        let (id, c) = if mu < nu {
            (GeneratorId::rotation(mu, nu).expect("index in range"), coeff)
        } else {
            (GeneratorId::rotation(nu, mu).expect("index in range"), -coeff)
        };
        self.add_term(id, c);
    }

    fn add_term(&mut self, id: GeneratorId, coeff: i64) {
        let entry = self.terms.entry(id).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.terms.remove(&id);
        }
    }

    pub fn add_assign(&mut self, other: &GeneratorCombo) {
        for (id, c) in other.terms() {
            self.add_term(id, c);
        }
    }

    pub fn negated(&self) -> GeneratorCombo {
        let mut out = GeneratorCombo::zero();
        for (id, c) in self.terms() {
            out.add_term(id, -c);
        }
        out
    }
}

impl fmt::Display for GeneratorCombo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        write!(f, "i(")?;
        for (k, (id, c)) in self.terms().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            match (k, c) {
                (0, 1) => write!(f, "{id}")?,
                (0, -1) => write!(f, "-{id}")?,
                (0, c) => write!(f, "{c}*{id}")?,
                (_, 1) => write!(f, "+ {id}")?,
                (_, -1) => write!(f, "- {id}")?,
                (_, c) if c > 0 => write!(f, "+ {c}*{id}")?,
                (_, c) => write!(f, "- {}*{id}", -c)?,
            }
        }
        write!(f, ")")
    }
}

/// [a, b] as an exact generator combination.
pub fn bracket(a: GeneratorId, b: GeneratorId) -> GeneratorCombo {
    let mut out = GeneratorCombo::zero();
    match (a.kind(), b.kind()) {
        (GeneratorKind::Translation(_), GeneratorKind::Translation(_)) => {}
        (GeneratorKind::Rotation(mu, nu), GeneratorKind::Translation(rho)) => {
            let g = |a, b| metric(a, b).expect("index in range") as i64;
            out.add_translation(g(nu, rho), mu);
            out.add_translation(-g(mu, rho), nu);
        }
        (GeneratorKind::Translation(_), GeneratorKind::Rotation(_, _)) => {
            out = bracket(b, a).negated();
        }
        (GeneratorKind::Rotation(mu, nu), GeneratorKind::Rotation(rho, sigma)) => {
            let g = |a, b| metric(a, b).expect("index in range") as i64;
            out.add_rotation(g(nu, rho), mu, sigma);
            out.add_rotation(-g(mu, rho), nu, sigma);
            out.add_rotation(-g(nu, sigma), mu, rho);
            out.add_rotation(g(mu, sigma), nu, rho);
        }
    }
    out
}

/// Linear extension: [a, i sum_k c_k G_k] viewed as a real combination.
///
/// The implicit i of the input and the implicit i of each inner bracket
/// combine to a real factor common to every cyclic term, so the Jacobi sum
/// closes exactly when the returned combinations cancel.
pub fn bracket_with_combo(a: GeneratorId, combo: &GeneratorCombo) -> GeneratorCombo {
    let mut out = GeneratorCombo::zero();
    for (id, c) in combo.terms() {
        for (inner, d) in bracket(a, id).terms() {
            out.add_term_scaled(inner, c * d);
        }
    }
    out
}

impl GeneratorCombo {
    fn add_term_scaled(&mut self, id: GeneratorId, coeff: i64) {
        self.add_term(id, coeff);
    }
}

/// Cyclic Jacobi sum [a,[b,c]] + [b,[c,a]] + [c,[a,b]]; must be zero.
pub fn jacobi_combo(a: GeneratorId, b: GeneratorId, c: GeneratorId) -> GeneratorCombo {
    let mut out = bracket_with_combo(a, &bracket(b, c));
    out.add_assign(&bracket_with_combo(b, &bracket(c, a)));
    out.add_assign(&bracket_with_combo(c, &bracket(a, b)));
    out
}

/// The full cached 15x15 bracket table.
#[derive(Debug)]
pub struct StructureTable {
    entries: BTreeMap<(GeneratorId, GeneratorId), GeneratorCombo>,
}

impl StructureTable {
    fn build() -> Self {
        let all = GeneratorId::all();
        let mut entries = BTreeMap::new();
        for &a in &all {
            for &b in &all {
                entries.insert((a, b), bracket(a, b));
            }
        }
        StructureTable { entries }
    }

    pub fn bracket(&self, a: GeneratorId, b: GeneratorId) -> &GeneratorCombo {
        &self.entries[&(a, b)]
    }

    /// All ordered pairs with their bracket, in canonical order.
    pub fn entries(&self) -> impl Iterator<Item = (GeneratorId, GeneratorId, &GeneratorCombo)> {
        self.entries.iter().map(|(&(a, b), combo)| (a, b, combo))
    }

    /// The 105 unordered pairs (a < b) in canonical order.
    pub fn unordered_pairs(&self) -> Vec<(GeneratorId, GeneratorId)> {
        let all = GeneratorId::all();
        let mut out = Vec::with_capacity(105);
        for i in 0..all.len() {
            for j in (i + 1)..all.len() {
                out.push((all[i], all[j]));
            }
        }
        out
    }
}

/// The shared structure-constant table every module imports.
pub fn structure_constants() -> &'static StructureTable {
    static TABLE: OnceLock<StructureTable> = OnceLock::new();
    TABLE.get_or_init(StructureTable::build)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(mu: usize) -> GeneratorId {
        GeneratorId::translation(mu).unwrap()
    }

    fn m(mu: usize, nu: usize) -> GeneratorId {
        GeneratorId::rotation(mu, nu).unwrap()
    }

    #[test]
    fn translations_commute() {
        assert!(bracket(p(0), p(4)).is_zero());
        for a in 0..5 {
            for b in 0..5 {
                assert!(bracket(p(a), p(b)).is_zero());
            }
        }
    }

    #[test]
    fn pinned_brackets() {
        // [M01, P0] = -i P1
        let b = bracket(m(0, 1), p(0));
        assert_eq!(b.coefficient(p(1)), -1);
        assert_eq!(b.terms().count(), 1);

        // [M12, P1] = +i P2
        let b = bracket(m(1, 2), p(1));
        assert_eq!(b.coefficient(p(2)), 1);
        assert_eq!(b.terms().count(), 1);

        // [M14, M24] = +i M12
        let b = bracket(m(1, 4), m(2, 4));
        assert_eq!(b.coefficient(m(1, 2)), 1);
        assert_eq!(b.terms().count(), 1);
    }

    #[test]
    fn antisymmetry_exact() {
        let all = GeneratorId::all();
        for &a in &all {
            for &b in &all {
                assert_eq!(bracket(a, b), bracket(b, a).negated(), "[{a},{b}]");
            }
        }
    }

    #[test]
    fn jacobi_closes_exactly_on_all_455_triples() {
        let all = GeneratorId::all();
        let mut count = 0;
        for i in 0..all.len() {
            for j in (i + 1)..all.len() {
                for k in (j + 1)..all.len() {
                    let residue = jacobi_combo(all[i], all[j], all[k]);
                    assert!(
                        residue.is_zero(),
                        "Jacobi failed on ({}, {}, {}): {residue}",
                        all[i],
                        all[j],
                        all[k]
                    );
                    count += 1;
                }
            }
        }
        assert_eq!(count, 455);
    }

    #[test]
    fn table_is_cached_and_complete() {
        let table = structure_constants();
        assert_eq!(table.entries().count(), 225);
        assert_eq!(table.unordered_pairs().len(), 105);
        assert_eq!(table.bracket(m(1, 2), p(1)).coefficient(p(2)), 1);
    }
}
