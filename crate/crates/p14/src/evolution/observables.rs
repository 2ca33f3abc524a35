//! Expectation values, computed in the natural representation of each
//! operator.

use ndarray::Dimension;

use crate::error::{Error, Result};
use crate::evolution::propagator::{dispersion_table, Dispersion, PropagatorSpec};
use crate::evolution::wavefunction::{pairwise_sum, Representation, WaveFunction};

/// Basic observables of a state.
#[derive(Debug, Clone, serde::Serialize)]
pub struct Observables {
    pub norm: f64,
    /// <x_a> per axis in layout order x1..xk, x4.
    pub mean_position: Vec<f64>,
    /// <E> over propagating modes (evanescent modes contribute zero).
    pub mean_energy: f64,
    pub mean_p4: f64,
}

/// Computes norm, per-axis <x_a>, <E> and <p4>. Transforms an internal copy
/// where an operator needs the other representation.
pub fn observables(psi: &WaveFunction, spec: &PropagatorSpec) -> Result<Observables> {
    let norm_squared = psi.norm_squared();
    if norm_squared == 0.0 {
        return Err(Error::ZeroNorm);
    }

    let position = match psi.representation() {
        Representation::Position => psi.clone(),
        Representation::Momentum => psi.to_position()?,
    };
    let momentum = match psi.representation() {
        Representation::Momentum => psi.clone(),
        Representation::Position => psi.to_momentum()?,
    };

    let axes = psi.grid().axis_count();
    let mut mean_position = Vec::with_capacity(axes);
    for a in 0..axes {
        mean_position.push(axis_expectation(&position, a, |axis, k| axis.position(k)));
    }
    let mean_p4 = axis_expectation(&momentum, axes - 1, |axis, k| axis.momentum(k));

    let table = dispersion_table(momentum.grid(), spec);
    let cell = momentum.cell_volume();
    let mut weighted = Vec::new();
    for (idx, z) in momentum.amplitudes().indexed_iter() {
        let grid_idx = &idx.slice()[2..];
        if let Dispersion::Propagating { energy } = table[grid_idx] {
            weighted.push(z.norm_sqr() * cell * energy);
        }
    }
    let mean_energy = pairwise_sum(&weighted) / norm_squared;

    Ok(Observables {
        norm: norm_squared.sqrt(),
        mean_position,
        mean_energy,
        mean_p4,
    })
}

fn axis_expectation(
    psi: &WaveFunction,
    axis_index: usize,
    coordinate: impl Fn(&crate::evolution::grid::Axis, usize) -> f64,
) -> f64 {
    let axis = psi.grid().axes()[axis_index];
    let cell = psi.cell_volume();
    let mut weighted = Vec::new();
    for (idx, z) in psi.amplitudes().indexed_iter() {
        let k = idx.slice()[2 + axis_index];
        weighted.push(z.norm_sqr() * cell * coordinate(axis, k));
    }
    pairwise_sum(&weighted) / psi.norm_squared()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::evolution::grid::{make_grid, AxisSpec};
    use crate::evolution::propagator::{propagate, SubthresholdPolicy};
    use crate::evolution::wavefunction::GaussianSpec;
    use crate::irreps::{HalfSpin, IrrepLabel};

    fn class_i_spec(kappa: f64) -> PropagatorSpec {
        PropagatorSpec::new(
            IrrepLabel::class_i(kappa, HalfSpin::ZERO, HalfSpin::ZERO).unwrap(),
            SubthresholdPolicy::ProjectOut,
        )
        .unwrap()
    }

    #[test]
    fn symmetric_gaussian_sits_at_the_center() {
        let grid = make_grid(
            &[AxisSpec { points: 32, extent: 32.0 }],
            AxisSpec { points: 32, extent: 32.0 },
        )
        .unwrap();
        let spec = GaussianSpec::at_rest(vec![16.0, 16.0], vec![2.0, 2.0]);
        let psi =
            WaveFunction::gaussian_position(grid, HalfSpin::ZERO, HalfSpin::ZERO, &spec).unwrap();
        let obs = observables(&psi, &class_i_spec(1.0)).unwrap();
        assert!((obs.norm - 1.0).abs() < 1e-12);
        assert!((obs.mean_position[0] - 16.0).abs() < 1e-9);
        assert!((obs.mean_position[1] - 16.0).abs() < 1e-9);
        assert!(obs.mean_p4.abs() < 1e-9);
    }

    #[test]
    fn narrow_momentum_packet_approaches_rest_energy() {
        // a packet concentrated near p = 0 has <E> -> kappa as it narrows
        let grid = make_grid(
            &[AxisSpec { points: 64, extent: 64.0 }],
            AxisSpec { points: 64, extent: 64.0 },
        )
        .unwrap();
        let spec = class_i_spec(1.0);
        let mut previous_gap = f64::INFINITY;
        for width in [0.4, 0.2, 0.1] {
            let packet = GaussianSpec {
                centers: vec![0.0, 0.0],
                widths: vec![width, width],
                boosts: vec![32.0, 32.0],
                block_weights: [1.0, 0.0],
            };
            let psi = WaveFunction::gaussian_momentum(
                grid.clone(),
                HalfSpin::ZERO,
                HalfSpin::ZERO,
                &packet,
            )
            .unwrap();
            let obs = observables(&psi, &spec).unwrap();
            // the gap above the floor scales like the momentum variance
            let gap = obs.mean_energy - 1.0;
            assert!(gap >= -1e-12, "energy below the kappa floor: {gap}");
            assert!(gap < previous_gap, "narrowing must tighten the gap");
            previous_gap = gap;
        }
        assert!(previous_gap < 1.5e-2);
    }

    #[test]
    fn drift_matches_group_velocity() {
        // finite-difference group-velocity oracle at the packet center
        let grid = make_grid(
            &[AxisSpec { points: 128, extent: 128.0 }],
            AxisSpec { points: 32, extent: 32.0 },
        )
        .unwrap();
        let boost = 1.0;
        let packet = GaussianSpec {
            centers: vec![boost, 0.0],
            widths: vec![0.08, 0.08],
            boosts: vec![64.0, 16.0],
            block_weights: [1.0, 0.0],
        };
        let psi =
            WaveFunction::gaussian_momentum(grid, HalfSpin::ZERO, HalfSpin::ZERO, &packet).unwrap();
        let spec = class_i_spec(1.0);

        let t = 4.0;
        let x0 = observables(&psi, &spec).unwrap().mean_position[0];
        let moved = propagate(&psi, t, &spec).unwrap();
        let x1 = observables(&moved, &spec).unwrap().mean_position[0];
        let drift_velocity = (x1 - x0) / t;

        let delta = 1e-6;
        let energy = |p: f64| (p * p + 1.0_f64).sqrt();
        let oracle = (energy(boost + delta) - energy(boost - delta)) / (2.0 * delta);
        let relative = (drift_velocity - oracle).abs() / oracle.abs();
        assert!(relative < 0.01, "drift {drift_velocity} vs oracle {oracle} ({relative:.4})");
    }

    #[test]
    fn zero_norm_is_degenerate() {
        let grid = make_grid(
            &[AxisSpec { points: 4, extent: 4.0 }],
            AxisSpec { points: 4, extent: 4.0 },
        )
        .unwrap();
        let psi = WaveFunction::zeros(grid, HalfSpin::ZERO, HalfSpin::ZERO, Representation::Position);
        assert!(matches!(observables(&psi, &class_i_spec(1.0)), Err(Error::ZeroNorm)));
    }
}
