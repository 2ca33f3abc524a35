//! Names for the 15 generators of P(1,4): five translations P_mu and ten
//! rotations/boosts M_{mu nu} with mu < nu.

use std::fmt;
use std::str::FromStr;

use crate::algebra::metric::DIM;
use crate::error::{Error, Result};

/// Public view of a generator's kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeneratorKind {
    /// P_mu.
    Translation(usize),
    /// M_{mu nu} with mu < nu; M_{nu mu} = -M_{mu nu} is handled at lookup.
    Rotation(usize, usize),
}

/// One of the 15 generators. `Rotation(mu, nu)` with mu >= nu is
/// unrepresentable; construction goes through the checked constructors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GeneratorId {
    kind: Kind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
enum Kind {
    Translation(u8),
    Rotation(u8, u8),
}

impl GeneratorId {
    pub fn translation(mu: usize) -> Result<Self> {
        if mu >= DIM {
            return Err(Error::IndexOutOfRange { index: mu, dim: DIM });
        }
        Ok(GeneratorId { kind: Kind::Translation(mu as u8) })
    }

    pub fn rotation(mu: usize, nu: usize) -> Result<Self> {
        if mu >= DIM {
            return Err(Error::IndexOutOfRange { index: mu, dim: DIM });
        }
        if nu >= DIM {
            return Err(Error::IndexOutOfRange { index: nu, dim: DIM });
        }
        if mu >= nu {
            return Err(Error::InvalidRotationPair { mu, nu });
        }
        Ok(GeneratorId { kind: Kind::Rotation(mu as u8, nu as u8) })
    }

    pub fn kind(&self) -> GeneratorKind {
        match self.kind {
            Kind::Translation(mu) => GeneratorKind::Translation(mu as usize),
            Kind::Rotation(mu, nu) => GeneratorKind::Rotation(mu as usize, nu as usize),
        }
    }

    pub fn is_translation(&self) -> bool {
        matches!(self.kind, Kind::Translation(_))
    }

    pub fn is_rotation(&self) -> bool {
        matches!(self.kind, Kind::Rotation(_, _))
    }

    /// All 15 generators in canonical order: P0..P4, then M01, M02, ..., M34.
    pub fn all() -> Vec<GeneratorId> {
        let mut out = Vec::with_capacity(15);
        for mu in 0..DIM {
            out.push(GeneratorId::translation(mu).expect("in range"));
        }
        for mu in 0..DIM {
            for nu in (mu + 1)..DIM {
                out.push(GeneratorId::rotation(mu, nu).expect("in range"));
            }
        }
        out
    }

    /// The ten rotation generators in canonical order.
    pub fn rotations() -> Vec<GeneratorId> {
        GeneratorId::all().into_iter().filter(GeneratorId::is_rotation).collect()
    }
}

impl fmt::Display for GeneratorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            Kind::Translation(mu) => write!(f, "P{mu}"),
            Kind::Rotation(mu, nu) => write!(f, "M{mu}{nu}"),
        }
    }
}

impl FromStr for GeneratorId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Config(format!("unknown generator name `{s}`"));
        let mut chars = s.chars();
        match chars.next() {
            Some('P') | Some('p') => {
                let mu: usize = chars.as_str().parse().map_err(|_| bad())?;
                GeneratorId::translation(mu)
            }
            Some('M') | Some('m') => {
                let rest = chars.as_str();
                if rest.len() != 2 {
                    return Err(bad());
                }
                let digits: Vec<usize> = rest
                    .chars()
                    .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
                    .collect::<Result<_>>()?;
                GeneratorId::rotation(digits[0], digits[1])
            }
            _ => Err(bad()),
        }
    }
}
