//! Diagonal-in-momentum propagation under the three invariant wave
//! equations.
//!
//! The Hamiltonian is beta * E(p, p4) with the two beta blocks carrying
//! conjugate phases; the internal (s3, I3) components are propagation-inert.

use ndarray::{ArrayD, Dimension, IxDyn, Zip};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::evolution::grid::MomentumGrid;
use crate::evolution::wavefunction::{pairwise_sum, Representation, WaveFunction};
use crate::irreps::IrrepLabel;

/// What to do with class III modes whose dispersion radicand is negative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SubthresholdPolicy {
    /// Zero the modes and report the removed probability.
    ProjectOut,
    /// Refuse to propagate when such modes carry amplitude.
    Reject,
}

/// A propagatable equation: class label plus the class III policy.
/// Class IV has no invariant equation and is rejected at construction.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PropagatorSpec {
    label: IrrepLabel,
    policy: SubthresholdPolicy,
}

impl PropagatorSpec {
    pub fn new(label: IrrepLabel, policy: SubthresholdPolicy) -> Result<Self> {
        if matches!(label, IrrepLabel::ClassIV) {
            return Err(Error::UnsupportedEquation);
        }
        label.validate().map_err(|e| Error::Config(e.to_string()))?;
        Ok(PropagatorSpec { label, policy })
    }

    pub fn label(&self) -> &IrrepLabel {
        &self.label
    }

    pub fn policy(&self) -> SubthresholdPolicy {
        self.policy
    }
}

/// Per-mode dispersion value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Dispersion {
    /// Real oscillation frequency E >= 0.
    Propagating { energy: f64 },
    /// Negative radicand (class III only): no unitary phase exists.
    Evanescent { decay_rate: f64 },
}

impl Dispersion {
    pub fn energy(&self) -> Option<f64> {
        match self {
            Dispersion::Propagating { energy } => Some(*energy),
            Dispersion::Evanescent { .. } => None,
        }
    }
}

/// E(p, p4) per class: sqrt(|p|^2 + p4^2 + kappa^2) for class I,
/// sqrt(|p|^2 + p4^2) for class II, sqrt(|p|^2 + p4^2 - eta^2) for class III
/// with the evanescent branch when the radicand turns negative.
pub fn dispersion(p_spatial: &[f64], p4: f64, spec: &PropagatorSpec) -> Dispersion {
    let p_sq: f64 = p_spatial.iter().map(|p| p * p).sum::<f64>() + p4 * p4;
    match spec.label() {
        IrrepLabel::ClassI { kappa, .. } => {
            Dispersion::Propagating { energy: (p_sq + kappa * kappa).sqrt() }
        }
        IrrepLabel::ClassII { .. } => Dispersion::Propagating { energy: p_sq.sqrt() },
        IrrepLabel::ClassIII { eta, .. } => {
            let radicand = p_sq - eta * eta;
            if radicand >= 0.0 {
                Dispersion::Propagating { energy: radicand.sqrt() }
            } else {
                Dispersion::Evanescent { decay_rate: (-radicand).sqrt() }
            }
        }
        IrrepLabel::ClassIV => unreachable!("rejected at construction"),
    }
}

/// The momentum vector (p1..pk, p4) at a grid index.
pub(crate) fn momentum_at(grid: &MomentumGrid, index: &[usize]) -> (Vec<f64>, f64) {
    let axes = grid.axes();
    let spatial: Vec<f64> = (0..axes.len() - 1).map(|a| axes[a].momentum(index[a])).collect();
    let p4 = axes[axes.len() - 1].momentum(index[axes.len() - 1]);
    (spatial, p4)
}

/// Per-mode dispersion table over the grid.
pub(crate) fn dispersion_table(grid: &MomentumGrid, spec: &PropagatorSpec) -> ArrayD<Dispersion> {
    let shape = grid.shape();
    let mut table = ArrayD::from_elem(IxDyn(&shape), Dispersion::Propagating { energy: 0.0 });
    for (idx, slot) in table.indexed_iter_mut() {
        let (p, p4) = momentum_at(grid, idx.slice());
        *slot = dispersion(&p, p4, spec);
    }
    table
}

/// Multiplies each momentum mode by exp(-i beta E t) with beta = +1 on the
/// first block and -1 on the second. Class III evanescent modes are zeroed
/// under the project-out policy and are an error under reject when they
/// carry amplitude.
pub fn propagate(psi: &WaveFunction, t: f64, spec: &PropagatorSpec) -> Result<WaveFunction> {
    if psi.representation() != Representation::Momentum {
        return Err(Error::WrongRepresentation { expected: Representation::Momentum });
    }
    let table = dispersion_table(psi.grid(), spec);

    if spec.policy() == SubthresholdPolicy::Reject {
        if let IrrepLabel::ClassIII { eta, .. } = spec.label() {
            let (_, removed) = subthreshold_filter(psi, *eta)?;
            if removed > 0.0 {
                return Err(Error::EvanescentModes { removed });
            }
        }
    }

    let phases = table.map(|d| match d {
        Dispersion::Propagating { energy } => Complex64::new(0.0, -energy * t).exp(),
        Dispersion::Evanescent { .. } => Complex64::new(0.0, 0.0),
    });

    let mut out = psi.clone();
    let blocks = out.amplitudes().shape()[0];
    let components = out.amplitudes().shape()[1];
    for block in 0..blocks {
        for comp in 0..components {
            let mut lane = out.amplitudes_mut().index_axis_mut(ndarray::Axis(0), block);
            let mut lane = lane.index_axis_mut(ndarray::Axis(0), comp);
            Zip::from(&mut lane).and(&phases).for_each(|a, &ph| {
                // the beta = -1 block carries the conjugate phase
                *a *= if block == 0 { ph } else { ph.conj() };
            });
        }
    }
    Ok(out)
}

/// Zeroes modes with |p|^2 + p4^2 < eta^2 and returns the removed
/// probability mass. The returned state is left unnormalized.
pub fn subthreshold_filter(psi: &WaveFunction, eta: f64) -> Result<(WaveFunction, f64)> {
    if psi.representation() != Representation::Momentum {
        return Err(Error::WrongRepresentation { expected: Representation::Momentum });
    }
    if !(eta.is_finite() && eta > 0.0) {
        return Err(Error::Config(format!("eta must be positive, got {eta}")));
    }
    let grid = psi.grid().clone();
    let shape = grid.shape();
    let mut below = ArrayD::from_elem(IxDyn(&shape), false);
    for (idx, slot) in below.indexed_iter_mut() {
        let (p, p4) = momentum_at(&grid, idx.slice());
        let p_sq: f64 = p.iter().map(|q| q * q).sum::<f64>() + p4 * p4;
        *slot = p_sq < eta * eta;
    }

    let mut out = psi.clone();
    let mut removed_squares = Vec::new();
    let blocks = out.amplitudes().shape()[0];
    let components = out.amplitudes().shape()[1];
    for block in 0..blocks {
        for comp in 0..components {
            let mut lane = out.amplitudes_mut().index_axis_mut(ndarray::Axis(0), block);
            let mut lane = lane.index_axis_mut(ndarray::Axis(0), comp);
            Zip::from(&mut lane).and(&below).for_each(|a, &cut| {
                if cut {
                    removed_squares.push(a.norm_sqr());
                    *a = Complex64::new(0.0, 0.0);
                }
            });
        }
    }
    let removed = pairwise_sum(&removed_squares) * grid.cell_volume_momentum();
    Ok((out, removed))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::evolution::grid::{make_grid, AxisSpec};
    use crate::irreps::HalfSpin;

    fn class_i(kappa: f64) -> PropagatorSpec {
        let label = IrrepLabel::class_i(kappa, HalfSpin::ZERO, HalfSpin::ZERO).unwrap();
        PropagatorSpec::new(label, SubthresholdPolicy::ProjectOut).unwrap()
    }

    fn class_ii() -> PropagatorSpec {
        PropagatorSpec::new(IrrepLabel::class_ii(HalfSpin::ZERO), SubthresholdPolicy::ProjectOut)
            .unwrap()
    }

    fn class_iii(eta: f64, policy: SubthresholdPolicy) -> PropagatorSpec {
        let label = IrrepLabel::class_iii(eta, HalfSpin::ZERO, Complex64::new(0.0, 0.0)).unwrap();
        PropagatorSpec::new(label, policy).unwrap()
    }

    #[test]
    fn dispersion_examples() {
        let d = dispersion(&[0.0, 0.0, 0.0], 0.0, &class_i(1.0));
        assert_eq!(d, Dispersion::Propagating { energy: 1.0 });

        let d = dispersion(&[0.0, 0.0, 3.0], 4.0, &class_ii());
        assert_eq!(d, Dispersion::Propagating { energy: 5.0 });

        let d = dispersion(&[0.0], 0.5, &class_iii(1.0, SubthresholdPolicy::ProjectOut));
        match d {
            Dispersion::Evanescent { decay_rate } => {
                assert!((decay_rate - 0.75_f64.sqrt()).abs() < 1e-15)
            }
            _ => panic!("expected evanescent"),
        }
    }

    #[test]
    fn class_iv_is_unsupported() {
        let err = PropagatorSpec::new(IrrepLabel::ClassIV, SubthresholdPolicy::ProjectOut);
        assert!(matches!(err, Err(Error::UnsupportedEquation)));
    }

    fn test_grid() -> MomentumGrid {
        make_grid(&[AxisSpec { points: 8, extent: 8.0 }], AxisSpec { points: 8, extent: 8.0 })
            .unwrap()
    }

    fn random_momentum_state(seed: u64) -> WaveFunction {
        WaveFunction::random(
            test_grid(),
            HalfSpin::ZERO,
            HalfSpin::ZERO,
            Representation::Momentum,
            seed,
        )
        .unwrap()
    }

    #[test]
    fn zero_time_is_identity() {
        let psi = random_momentum_state(1);
        let out = propagate(&psi, 0.0, &class_i(1.0)).unwrap();
        for (a, b) in psi.amplitudes().iter().zip(out.amplitudes().iter()) {
            assert_eq!(a, b);
        }
    }

    #[test]
    fn plane_wave_picks_up_the_advertised_phase() {
        // single class II mode with E = 5 at t = pi/5: the beta = +1 block is
        // multiplied by exp(-i pi) = -1, the beta = -1 block by exp(+i pi) = -1
        let grid = make_grid(
            &[AxisSpec { points: 8, extent: 8.0 * std::f64::consts::PI / 4.0 }],
            AxisSpec { points: 8, extent: 8.0 * std::f64::consts::PI / 4.0 },
        )
        .unwrap();
        // dp = 2 pi / (2 pi) = 1; put the mode at p = 3, p4 = 4
        let mut psi = WaveFunction::zeros(
            grid,
            HalfSpin::ZERO,
            HalfSpin::ZERO,
            Representation::Momentum,
        );
        psi.amplitudes_mut()[IxDyn(&[0, 0, 3, 4])] = Complex64::new(1.0, 0.0);
        psi.amplitudes_mut()[IxDyn(&[1, 0, 3, 4])] = Complex64::new(0.5, 0.0);

        let out = propagate(&psi, std::f64::consts::PI / 5.0, &class_ii()).unwrap();
        let plus = out.amplitudes()[IxDyn(&[0, 0, 3, 4])];
        let minus = out.amplitudes()[IxDyn(&[1, 0, 3, 4])];
        assert!((plus - Complex64::new(-1.0, 0.0)).norm() < 1e-12);
        assert!((minus - Complex64::new(-0.5, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn norm_is_conserved_for_long_times() {
        let psi = random_momentum_state(2);
        let spec = class_i(1.0);
        for t in [0.5, 10.0, 1000.0] {
            let out = propagate(&psi, t, &spec).unwrap();
            assert!((out.norm() - psi.norm()).abs() < 1e-12, "t = {t}");
        }
    }

    #[test]
    fn composition_and_time_reversal() {
        let psi = random_momentum_state(3);
        let spec = class_ii();
        let one = propagate(&propagate(&psi, 0.7, &spec).unwrap(), 1.6, &spec).unwrap();
        let two = propagate(&psi, 2.3, &spec).unwrap();
        let mut max = 0.0_f64;
        for (a, b) in one.amplitudes().iter().zip(two.amplitudes().iter()) {
            max = max.max((a - b).norm());
        }
        assert!(max < 1e-10, "composition deviation {max}");

        let back = propagate(&propagate(&psi, 5.0, &spec).unwrap(), -5.0, &spec).unwrap();
        let mut max = 0.0_f64;
        for (a, b) in back.amplitudes().iter().zip(psi.amplitudes().iter()) {
            max = max.max((a - b).norm());
        }
        assert!(max < 1e-10, "time reversal deviation {max}");
    }

    #[test]
    fn conjugate_blocks_stay_conjugate() {
        let mut psi = random_momentum_state(4);
        // make the beta = -1 block the conjugate of the beta = +1 block
        let shape = psi.amplitudes().shape().to_vec();
        for i2 in 0..shape[2] {
            for i3 in 0..shape[3] {
                let v = psi.amplitudes()[IxDyn(&[0, 0, i2, i3])];
                psi.amplitudes_mut()[IxDyn(&[1, 0, i2, i3])] = v.conj();
            }
        }
        let out = propagate(&psi, 3.7, &class_i(2.0)).unwrap();
        for i2 in 0..shape[2] {
            for i3 in 0..shape[3] {
                let plus = out.amplitudes()[IxDyn(&[0, 0, i2, i3])];
                let minus = out.amplitudes()[IxDyn(&[1, 0, i2, i3])];
                assert!((plus.conj() - minus).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn position_representation_is_rejected() {
        let psi = WaveFunction::random(
            test_grid(),
            HalfSpin::ZERO,
            HalfSpin::ZERO,
            Representation::Position,
            5,
        )
        .unwrap();
        assert!(propagate(&psi, 1.0, &class_i(1.0)).is_err());
        assert!(subthreshold_filter(&psi, 1.0).is_err());
    }

    #[test]
    fn filter_splits_norm_exactly() {
        let psi = random_momentum_state(6);
        let eta = 2.0;
        let (filtered, removed) = subthreshold_filter(&psi, eta).unwrap();

        // direct-sum oracle over sub-threshold modes
        let grid = psi.grid();
        let mut direct = 0.0;
        for (idx, z) in psi.amplitudes().indexed_iter() {
            let (p, p4) = momentum_at(grid, &idx.slice()[2..]);
            let p_sq: f64 = p.iter().map(|q| q * q).sum::<f64>() + p4 * p4;
            if p_sq < eta * eta {
                direct += z.norm_sqr() * grid.cell_volume_momentum();
            }
        }
        assert!((removed - direct).abs() < 1e-12);
        assert!((filtered.norm_squared() + removed - psi.norm_squared()).abs() < 1e-12);

        // all modes above threshold: state unchanged, nothing removed
        // (the zero mode is below any positive eta, so empty it first)
        let mut hollow = psi.clone();
        for block in 0..2 {
            hollow.amplitudes_mut()[IxDyn(&[block, 0, 0, 0])] = Complex64::new(0.0, 0.0);
        }
        let (same, none) = subthreshold_filter(&hollow, 1e-6).unwrap();
        assert_eq!(none, 0.0);
        for (a, b) in same.amplitudes().iter().zip(hollow.amplitudes().iter()) {
            assert_eq!(a, b);
        }
    }

    #[test]
    fn reject_policy_errors_on_evanescent_amplitude() {
        let psi = random_momentum_state(7);
        let spec = class_iii(2.0, SubthresholdPolicy::Reject);
        assert!(matches!(propagate(&psi, 1.0, &spec), Err(Error::EvanescentModes { .. })));

        // project-out zeroes them instead and conserves the retained norm
        let spec = class_iii(2.0, SubthresholdPolicy::ProjectOut);
        let out = propagate(&psi, 1.0, &spec).unwrap();
        let (filtered, _) = subthreshold_filter(&psi, 2.0).unwrap();
        assert!((out.norm_squared() - filtered.norm_squared()).abs() < 1e-12);

        // a pre-filtered state propagates under reject
        let mut filtered = filtered;
        filtered.normalize().unwrap();
        let spec = class_iii(2.0, SubthresholdPolicy::Reject);
        let out = propagate(&filtered, 1.0, &spec).unwrap();
        assert!((out.norm() - 1.0).abs() < 1e-12);
    }
}
