//! The fixed (+,-,-,-,-) metric on indices 0..4 and the five-index epsilon symbol.
//!
//! Index 0 is time, indices 1..3 are space, index 4 is the mass direction
//! conjugate to the extra coordinate. The invariant quadratic form is
//! t^2 - x^2 - tau^2.

use crate::error::{Error, Result};

/// Number of vector indices.
pub const DIM: usize = 5;

/// The diagonal signature (+1, -1, -1, -1, -1). Fixed; `g^2 = identity`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MetricSignature;

impl MetricSignature {
    pub const DIAG: [i32; DIM] = [1, -1, -1, -1, -1];

    pub fn diag() -> [i32; DIM] {
        Self::DIAG
    }
}

fn check_index(index: usize) -> Result<()> {
    if index >= DIM {
        return Err(Error::IndexOutOfRange { index, dim: DIM });
    }
    Ok(())
}

/// g_{mu nu}: +1 iff mu=nu=0, -1 iff mu=nu!=0, 0 otherwise.
pub fn metric(mu: usize, nu: usize) -> Result<i32> {
    check_index(mu)?;
    check_index(nu)?;
    Ok(if mu != nu {
        0
    } else {
        MetricSignature::DIAG[mu]
    })
}

/// Diagonal metric entry without the range check (internal hot path).
pub(crate) fn g(mu: usize) -> f64 {
    MetricSignature::DIAG[mu] as f64
}

/// Totally antisymmetric symbol with epsilon(0,1,2,3,4) = +1; 0 on any repeat.
///
/// With this signature det g = +1, so raising all five indices leaves the
/// numeric values unchanged.
pub fn epsilon5(indices: [usize; 5]) -> Result<i32> {
    for &index in &indices {
        check_index(index)?;
    }
    let mut sign = 1;
    for a in 0..5 {
        for b in (a + 1)..5 {
            if indices[a] == indices[b] {
                return Ok(0);
            }
            if indices[a] > indices[b] {
                sign = -sign;
            }
        }
    }
    Ok(sign)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn metric_entries() {
        assert_eq!(metric(0, 0).unwrap(), 1);
        assert_eq!(metric(3, 3).unwrap(), -1);
        assert_eq!(metric(4, 4).unwrap(), -1);
        assert_eq!(metric(0, 1).unwrap(), 0);
        assert!(metric(5, 0).is_err());
    }

    #[test]
    fn metric_squares_to_identity() {
        for mu in 0..DIM {
            let e = metric(mu, mu).unwrap();
            assert_eq!(e * e, 1);
        }
    }

    #[test]
    fn epsilon_convention_anchor() {
        assert_eq!(epsilon5([0, 1, 2, 3, 4]).unwrap(), 1);
        assert_eq!(epsilon5([1, 0, 2, 3, 4]).unwrap(), -1);
        assert_eq!(epsilon5([0, 0, 2, 3, 4]).unwrap(), 0);
    }

    #[test]
    fn epsilon_totality() {
        // Sum of |epsilon| over all 3125 tuples equals 5! = 120.
        let mut total = 0;
        for a in 0..5 {
            for b in 0..5 {
                for c in 0..5 {
                    for d in 0..5 {
                        for e in 0..5 {
                            total += epsilon5([a, b, c, d, e]).unwrap().abs();
                        }
                    }
                }
            }
        }
        assert_eq!(total, 120);
    }

    #[test]
    fn epsilon_antisymmetry_under_swaps() {
        // Swapping any two distinct slots flips the sign.
        let base = [2, 0, 3, 1, 4];
        let s = epsilon5(base).unwrap();
        for a in 0..5 {
            for b in (a + 1)..5 {
                let mut swapped = base;
                swapped.swap(a, b);
                assert_eq!(epsilon5(swapped).unwrap(), -s);
            }
        }
    }
}
