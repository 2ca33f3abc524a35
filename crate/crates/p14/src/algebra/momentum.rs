//! Five-momentum eigenvalue vectors.

use std::ops::Index;

use crate::algebra::metric::{g, DIM};
use crate::error::{Error, Result};

/// Numeric eigenvalue vector (p_0, ..., p_4) in natural units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FiveMomentum {
    components: [f64; DIM],
}

impl FiveMomentum {
    pub fn new(components: [f64; DIM]) -> Result<Self> {
        if components.iter().any(|c| !c.is_finite()) {
            return Err(Error::NonFiniteMomentum);
        }
        Ok(FiveMomentum { components })
    }

    pub fn zero() -> Self {
        FiveMomentum { components: [0.0; DIM] }
    }

    pub fn components(&self) -> &[f64; DIM] {
        &self.components
    }

    /// Invariant square p_0^2 - p_1^2 - p_2^2 - p_3^2 - p_4^2,
    /// computed through the metric signature.
    pub fn invariant_square(&self) -> f64 {
        (0..DIM).map(|mu| g(mu) * self.components[mu] * self.components[mu]).sum()
    }

    pub fn max_abs(&self) -> f64 {
        self.components.iter().fold(0.0_f64, |acc, c| acc.max(c.abs()))
    }
}

impl Index<usize> for FiveMomentum {
    type Output = f64;

    fn index(&self, mu: usize) -> &f64 {
        &self.components[mu]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn invariant_square_signature() {
        let p = FiveMomentum::new([2.0, 0.0, 0.0, 0.0, 0.0]).unwrap();
        assert_eq!(p.invariant_square(), 4.0);

        let p = FiveMomentum::new([0.0, 0.0, 0.0, 0.0, 1.0]).unwrap();
        assert_eq!(p.invariant_square(), -1.0);

        let w = 3.5;
        let p = FiveMomentum::new([w, 0.0, 0.0, w, 0.0]).unwrap();
        assert_eq!(p.invariant_square(), 0.0);
    }

    #[test]
    fn rejects_non_finite() {
        assert!(FiveMomentum::new([f64::NAN, 0.0, 0.0, 0.0, 0.0]).is_err());
        assert!(FiveMomentum::new([f64::INFINITY, 0.0, 0.0, 0.0, 0.0]).is_err());
    }
}
