//! Representation labels, momentum classification and class III label
//! validation.

use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::algebra::FiveMomentum;
use crate::error::{Error, Result};

/// Nonnegative half-integer (0, 1/2, 1, 3/2, ...), stored as twice its value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfSpin {
    twice: u32,
}

impl HalfSpin {
    pub const ZERO: HalfSpin = HalfSpin { twice: 0 };
    pub const HALF: HalfSpin = HalfSpin { twice: 1 };
    pub const ONE: HalfSpin = HalfSpin { twice: 2 };

    pub fn from_twice(twice: u32) -> Self {
        HalfSpin { twice }
    }

    /// Accepts values within 1e-9 of a nonnegative half-integer.
    pub fn from_value(value: f64) -> Result<Self> {
        if !value.is_finite() || value < -1e-9 {
            return Err(Error::InvalidSpin(value));
        }
        let twice = (2.0 * value).round();
        if (2.0 * value - twice).abs() > 1e-9 {
            return Err(Error::InvalidSpin(value));
        }
        Ok(HalfSpin { twice: twice as u32 })
    }

    pub fn twice(&self) -> u32 {
        self.twice
    }

    pub fn value(&self) -> f64 {
        self.twice as f64 / 2.0
    }

    /// Multiplet dimension 2j + 1.
    pub fn dimension(&self) -> usize {
        self.twice as usize + 1
    }

    /// Casimir eigenvalue j(j + 1).
    pub fn casimir(&self) -> f64 {
        self.value() * (self.value() + 1.0)
    }

    pub fn is_integer(&self) -> bool {
        self.twice % 2 == 0
    }
}

impl fmt::Display for HalfSpin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

impl Serialize for HalfSpin {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_f64(self.value())
    }
}

impl<'de> Deserialize<'de> for HalfSpin {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let value = f64::deserialize(deserializer)?;
        HalfSpin::from_value(value).map_err(serde::de::Error::custom)
    }
}

/// The four momentum classes, keyed by the sign of P^2 (class IV when the
/// whole momentum vanishes).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum MomentumClass {
    I,
    II,
    III,
    IV,
}

impl fmt::Display for MomentumClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MomentumClass::I => write!(f, "I"),
            MomentumClass::II => write!(f, "II"),
            MomentumClass::III => write!(f, "III"),
            MomentumClass::IV => write!(f, "IV"),
        }
    }
}

/// Tagged label for an irreducible-representation class.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "class")]
pub enum IrrepLabel {
    /// P^2 = kappa^2 > 0: spin s and isospin I.
    #[serde(rename = "I")]
    ClassI { kappa: f64, s: HalfSpin, isospin: HalfSpin },
    /// P^2 = 0: spin s.
    #[serde(rename = "II")]
    ClassII { s: HalfSpin },
    /// P^2 = -eta^2 < 0: Lorentz labels (eta, l0, l1).
    #[serde(rename = "III")]
    ClassIII { eta: f64, l0: HalfSpin, l1: Complex64 },
    /// Zero momentum.
    #[serde(rename = "IV")]
    ClassIV,
}

impl IrrepLabel {
    pub fn class_i(kappa: f64, s: HalfSpin, isospin: HalfSpin) -> Result<Self> {
        if !(kappa.is_finite() && kappa > 0.0) {
            return Err(Error::Config(format!("kappa must be positive, got {kappa}")));
        }
        Ok(IrrepLabel::ClassI { kappa, s, isospin })
    }

    pub fn class_ii(s: HalfSpin) -> Self {
        IrrepLabel::ClassII { s }
    }

    pub fn class_iii(eta: f64, l0: HalfSpin, l1: Complex64) -> Result<Self> {
        if !(eta.is_finite() && eta > 0.0) {
            return Err(Error::Config(format!("eta must be positive, got {eta}")));
        }
        match validate_class3_label(eta, l0, l1) {
            LabelVerdict::Valid => Ok(IrrepLabel::ClassIII { eta, l0, l1 }),
            LabelVerdict::Invalid { reason } => Err(Error::InvalidLabel { reason }),
        }
    }

    pub fn momentum_class(&self) -> MomentumClass {
        match self {
            IrrepLabel::ClassI { .. } => MomentumClass::I,
            IrrepLabel::ClassII { .. } => MomentumClass::II,
            IrrepLabel::ClassIII { .. } => MomentumClass::III,
            IrrepLabel::ClassIV => MomentumClass::IV,
        }
    }

    /// Internal multiplicity carried by a wavefunction with this label.
    pub fn component_count(&self) -> usize {
        match self {
            IrrepLabel::ClassI { s, isospin, .. } => s.dimension() * isospin.dimension(),
            IrrepLabel::ClassII { s } => s.dimension(),
            IrrepLabel::ClassIII { .. } | IrrepLabel::ClassIV => 1,
        }
    }

    /// Checks the invariants that a deserialized label may have bypassed.
    pub fn validate(&self) -> Result<()> {
        match *self {
            IrrepLabel::ClassI { kappa, s, isospin } => {
                IrrepLabel::class_i(kappa, s, isospin).map(|_| ())
            }
            IrrepLabel::ClassII { .. } | IrrepLabel::ClassIV => Ok(()),
            IrrepLabel::ClassIII { eta, l0, l1 } => IrrepLabel::class_iii(eta, l0, l1).map(|_| ()),
        }
    }
}

/// Classifies a momentum by the sign of its invariant square.
///
/// Class IV wins when every component is below `tol`; otherwise the sign of
/// `p2` against `tol` picks class I (positive), III (negative) or II (null).
pub fn classify(p2: f64, p: &FiveMomentum, tol: f64) -> MomentumClass {
    if p.components().iter().all(|c| c.abs() < tol) {
        MomentumClass::IV
    } else if p2 > tol {
        MomentumClass::I
    } else if p2 < -tol {
        MomentumClass::III
    } else {
        MomentumClass::II
    }
}

/// Scale-aware default tolerance: 1e-9 in units of max(1, |p|_inf^2).
pub fn default_classify_tol(p: &FiveMomentum) -> f64 {
    1e-9 * 1.0_f64.max(p.max_abs() * p.max_abs())
}

/// `classify` with the invariant square and tolerance derived from `p`.
pub fn classify_momentum(p: &FiveMomentum) -> MomentumClass {
    classify(p.invariant_square(), p, default_classify_tol(p))
}

/// Verdict of the class III label rules; invalid verdicts carry a reason.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LabelVerdict {
    Valid,
    Invalid { reason: String },
}

impl LabelVerdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, LabelVerdict::Valid)
    }
}

/// Valid iff eta is real and nonzero, and either l0 = 0 with real l1 in
/// [-1, 1], or l0 in {1/2, 1, ...} with purely imaginary l1.
pub fn validate_class3_label(eta: f64, l0: HalfSpin, l1: Complex64) -> LabelVerdict {
    if !eta.is_finite() || eta == 0.0 {
        return LabelVerdict::Invalid { reason: "eta must be a nonzero real".into() };
    }
    if l0 == HalfSpin::ZERO {
        if l1.im != 0.0 {
            return LabelVerdict::Invalid { reason: "l1 must be real for l0 = 0".into() };
        }
        if !(-1.0..=1.0).contains(&l1.re) {
            return LabelVerdict::Invalid { reason: "l1 must lie in [-1, 1] for l0 = 0".into() };
        }
        LabelVerdict::Valid
    } else {
        if l1.re != 0.0 {
            return LabelVerdict::Invalid { reason: "l1 must be imaginary for l0 >= 1/2".into() };
        }
        LabelVerdict::Valid
    }
}
