//! Complex amplitudes over (beta block, internal component, grid point) and
//! the unitary transforms between the position and momentum lattices.

use ndarray::{ArrayD, Axis as NdAxis, IxDyn};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;
use rustfft::FftPlanner;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::evolution::grid::MomentumGrid;
use crate::irreps::HalfSpin;

/// Which lattice the amplitudes currently live on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Representation {
    Position,
    Momentum,
}

/// A variable-mass wavefunction.
///
/// Layout order is fixed for file I/O: the two beta blocks outermost
/// (+1 particle, -1 antiparticle), then the (2s+1)(2I+1) internal
/// components indexed by (s3, I3) with s3 outermost, then the grid axes
/// x1..xk, x4 in standard transform frequency order.
///
/// The squared norm is sum |psi|^2 times the cell volume of the active
/// representation; the transforms preserve it exactly (Parseval).
#[derive(Debug, Clone)]
pub struct WaveFunction {
    grid: MomentumGrid,
    s: HalfSpin,
    isospin: HalfSpin,
    rep: Representation,
    amplitudes: ArrayD<Complex64>,
}

/// Gaussian packet parameters, one entry per grid axis (x1..xk then x4).
///
/// In position space the packet is
/// prod_a exp(-(x - center)^2 / (4 width^2) + i boost x); in momentum space
/// prod_a exp(-(p - center)^2 / (4 width^2) - i p phase_center), where a
/// zero width collapses the factor to an indicator of the nearest lattice
/// mode. `block_weights` splits the amplitude between the two beta blocks.
#[derive(Debug, Clone)]
pub struct GaussianSpec {
    pub centers: Vec<f64>,
    pub widths: Vec<f64>,
    pub boosts: Vec<f64>,
    pub block_weights: [f64; 2],
}

impl GaussianSpec {
    pub fn at_rest(centers: Vec<f64>, widths: Vec<f64>) -> Self {
        let boosts = vec![0.0; centers.len()];
        GaussianSpec { centers, widths, boosts, block_weights: [1.0, 0.0] }
    }
}

impl WaveFunction {
    fn full_shape(grid: &MomentumGrid, s: HalfSpin, isospin: HalfSpin) -> Vec<usize> {
        let mut shape = vec![2, s.dimension() * isospin.dimension()];
        shape.extend(grid.shape());
        shape
    }

    pub fn zeros(grid: MomentumGrid, s: HalfSpin, isospin: HalfSpin, rep: Representation) -> Self {
        let shape = Self::full_shape(&grid, s, isospin);
        WaveFunction { grid, s, isospin, rep, amplitudes: ArrayD::zeros(IxDyn(&shape)) }
    }

    /// Wraps raw amplitudes; the shape must match the documented layout.
    pub fn from_amplitudes(
        grid: MomentumGrid,
        s: HalfSpin,
        isospin: HalfSpin,
        rep: Representation,
        amplitudes: ArrayD<Complex64>,
    ) -> Result<Self> {
        let expected = Self::full_shape(&grid, s, isospin);
        if amplitudes.shape() != expected.as_slice() {
            return Err(Error::Config(format!(
                "amplitude shape {:?} does not match layout {:?}",
                amplitudes.shape(),
                expected
            )));
        }
        if amplitudes.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFiniteAmplitude);
        }
        Ok(WaveFunction { grid, s, isospin, rep, amplitudes })
    }

    /// Normalized Gaussian packet on the position lattice, all amplitude in
    /// internal component 0.
    pub fn gaussian_position(
        grid: MomentumGrid,
        s: HalfSpin,
        isospin: HalfSpin,
        spec: &GaussianSpec,
    ) -> Result<Self> {
        let mut psi = Self::gaussian(grid, s, isospin, spec, Representation::Position)?;
        psi.normalize()?;
        Ok(psi)
    }

    /// Normalized Gaussian packet on the momentum lattice. `spec.boosts` are
    /// read as position phase centers, so the packet sits at that position.
    pub fn gaussian_momentum(
        grid: MomentumGrid,
        s: HalfSpin,
        isospin: HalfSpin,
        spec: &GaussianSpec,
    ) -> Result<Self> {
        let mut psi = Self::gaussian(grid, s, isospin, spec, Representation::Momentum)?;
        psi.normalize()?;
        Ok(psi)
    }

    fn gaussian(
        grid: MomentumGrid,
        s: HalfSpin,
        isospin: HalfSpin,
        spec: &GaussianSpec,
        rep: Representation,
    ) -> Result<Self> {
        let axes = grid.axis_count();
        for (name, list) in
            [("centers", &spec.centers), ("widths", &spec.widths), ("boosts", &spec.boosts)]
        {
            if list.len() != axes {
                return Err(Error::Config(format!(
                    "packet {name} must have one entry per axis ({axes}), got {}",
                    list.len()
                )));
            }
            if list.iter().any(|v| !v.is_finite()) {
                return Err(Error::Config(format!("packet {name} must be finite")));
            }
        }
        if spec.widths.iter().any(|w| *w < 0.0) {
            return Err(Error::Config("packet widths must be nonnegative".into()));
        }

        // per-axis amplitude tables
        let mut tables: Vec<Vec<Complex64>> = Vec::with_capacity(axes);
        for (a, axis) in grid.axes().iter().enumerate() {
            let (center, width, boost) = (spec.centers[a], spec.widths[a], spec.boosts[a]);
            let coordinate = |k: usize| match rep {
                Representation::Position => axis.position(k),
                Representation::Momentum => axis.momentum(k),
            };
            let table: Vec<Complex64> = if width == 0.0 {
                // delta packet: indicator of the lattice point nearest the center
                let nearest = (0..axis.points())
                    .min_by(|&a, &b| {
                        (coordinate(a) - center)
                            .abs()
                            .total_cmp(&(coordinate(b) - center).abs())
                    })
                    .expect("axis has points");
                (0..axis.points())
                    .map(|k| {
                        if k == nearest {
                            phase_factor(rep, coordinate(k), boost)
                        } else {
                            Complex64::new(0.0, 0.0)
                        }
                    })
                    .collect()
            } else {
                (0..axis.points())
                    .map(|k| {
                        let q = coordinate(k);
                        let envelope = (-(q - center) * (q - center) / (4.0 * width * width)).exp();
                        phase_factor(rep, q, boost) * envelope
                    })
                    .collect()
            };
            tables.push(table);
        }

        let mut psi = Self::zeros(grid, s, isospin, rep);
        let shape: Vec<usize> = psi.grid.shape();
        let weights = spec.block_weights;
        for (idx, value) in psi.amplitudes.indexed_iter_mut() {
            let block = idx[0];
            let comp = idx[1];
            if comp != 0 {
                continue;
            }
            let w = weights[block];
            if w == 0.0 {
                continue;
            }
            let mut amp = Complex64::new(w, 0.0);
            for a in 0..shape.len() {
                amp *= tables[a][idx[2 + a]];
            }
            *value = amp;
        }
        Ok(psi)
    }

    /// Uniformly random test packet from a portable seeded generator,
    /// normalized.
    pub fn random(
        grid: MomentumGrid,
        s: HalfSpin,
        isospin: HalfSpin,
        rep: Representation,
        seed: u64,
    ) -> Result<Self> {
        let mut rng = ChaCha12Rng::seed_from_u64(seed);
        let mut psi = Self::zeros(grid, s, isospin, rep);
        for value in psi.amplitudes.iter_mut() {
            *value = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        }
        psi.normalize()?;
        Ok(psi)
    }

    pub fn grid(&self) -> &MomentumGrid {
        &self.grid
    }

    pub fn s(&self) -> HalfSpin {
        self.s
    }

    pub fn isospin(&self) -> HalfSpin {
        self.isospin
    }

    pub fn representation(&self) -> Representation {
        self.rep
    }

    pub fn component_count(&self) -> usize {
        self.s.dimension() * self.isospin.dimension()
    }

    pub fn amplitudes(&self) -> &ArrayD<Complex64> {
        &self.amplitudes
    }

    pub fn amplitudes_mut(&mut self) -> &mut ArrayD<Complex64> {
        &mut self.amplitudes
    }

    /// Cell volume of the active representation.
    pub fn cell_volume(&self) -> f64 {
        match self.rep {
            Representation::Position => self.grid.cell_volume_position(),
            Representation::Momentum => self.grid.cell_volume_momentum(),
        }
    }

    /// Norm squared: sum |psi|^2 * cell volume, accumulated pairwise so the
    /// reduction order is fixed.
    pub fn norm_squared(&self) -> f64 {
        let squares: Vec<f64> = self.amplitudes.iter().map(|z| z.norm_sqr()).collect();
        pairwise_sum(&squares) * self.cell_volume()
    }

    pub fn norm(&self) -> f64 {
        self.norm_squared().sqrt()
    }

    pub fn normalize(&mut self) -> Result<()> {
        let norm = self.norm();
        if norm == 0.0 {
            return Err(Error::ZeroNorm);
        }
        let scale = Complex64::new(1.0 / norm, 0.0);
        self.amplitudes.mapv_inplace(|z| z * scale);
        Ok(())
    }

    /// Unitary transform to the momentum lattice. Per axis the map is
    /// psi_hat_j = dx / sqrt(2 pi) * sum_k psi_k exp(-i p_j x_k), the
    /// measure-aware symmetric normalization under which the cell-volume
    /// norm is exactly preserved and the round trip is the identity.
    pub fn to_momentum(&self) -> Result<WaveFunction> {
        if self.rep != Representation::Position {
            return Err(Error::WrongRepresentation { expected: Representation::Position });
        }
        let mut out = self.clone();
        out.transform_axes(true)?;
        out.rep = Representation::Momentum;
        Ok(out)
    }

    /// Inverse transform, psi_k = dp / sqrt(2 pi) * sum_j psi_hat_j
    /// exp(+i p_j x_k).
    pub fn to_position(&self) -> Result<WaveFunction> {
        if self.rep != Representation::Momentum {
            return Err(Error::WrongRepresentation { expected: Representation::Momentum });
        }
        let mut out = self.clone();
        out.transform_axes(false)?;
        out.rep = Representation::Position;
        Ok(out)
    }

    fn transform_axes(&mut self, forward: bool) -> Result<()> {
        let mut planner = FftPlanner::<f64>::new();
        let sqrt_2pi = (2.0 * std::f64::consts::PI).sqrt();
        let axes: Vec<(usize, usize, f64)> = self
            .grid
            .axes()
            .iter()
            .enumerate()
            .map(|(a, axis)| {
                let scale = if forward { axis.dx() } else { axis.dp() } / sqrt_2pi;
                (2 + a, axis.points(), scale)
            })
            .collect();
        for (nd_axis, points, scale) in axes {
            let fft = if forward {
                planner.plan_fft_forward(points)
            } else {
                planner.plan_fft_inverse(points)
            };
            let scale = Complex64::new(scale, 0.0);
            let mut buffer = vec![Complex64::new(0.0, 0.0); points];
            for mut lane in self.amplitudes.lanes_mut(NdAxis(nd_axis)) {
                for (slot, value) in buffer.iter_mut().zip(lane.iter()) {
                    *slot = *value;
                }
                fft.process(&mut buffer);
                for (value, slot) in lane.iter_mut().zip(buffer.iter()) {
                    *value = slot * scale;
                }
            }
        }
        Ok(())
    }
}

fn phase_factor(rep: Representation, coordinate: f64, boost: f64) -> Complex64 {
    match rep {
        // exp(+i b x): boosts the packet to momentum b
        Representation::Position => Complex64::new(0.0, boost * coordinate).exp(),
        // exp(-i p x0): centers the packet at position x0
        Representation::Momentum => Complex64::new(0.0, -coordinate * boost).exp(),
    }
}

/// Deterministic pairwise (cascade) summation.
pub fn pairwise_sum(values: &[f64]) -> f64 {
    match values.len() {
        0 => 0.0,
        1 => values[0],
        2 => values[0] + values[1],
        n => {
            let mid = n / 2;
            pairwise_sum(&values[..mid]) + pairwise_sum(&values[mid..])
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::evolution::grid::{make_grid, AxisSpec};

    fn small_grid() -> MomentumGrid {
        make_grid(&[AxisSpec { points: 8, extent: 8.0 }], AxisSpec { points: 4, extent: 4.0 })
            .unwrap()
    }

    fn random_state(rep: Representation) -> WaveFunction {
        WaveFunction::random(small_grid(), HalfSpin::HALF, HalfSpin::ZERO, rep, 7).unwrap()
    }

    #[test]
    fn shape_follows_layout() {
        let psi = WaveFunction::zeros(
            small_grid(),
            HalfSpin::HALF,
            HalfSpin::HALF,
            Representation::Position,
        );
        assert_eq!(psi.amplitudes().shape(), &[2, 4, 8, 4]);
        assert_eq!(psi.component_count(), 4);
    }

    #[test]
    fn round_trip_is_identity() {
        let psi = random_state(Representation::Position);
        let back = psi.to_momentum().unwrap().to_position().unwrap();
        let mut max = 0.0_f64;
        for (a, b) in psi.amplitudes().iter().zip(back.amplitudes().iter()) {
            max = max.max((a - b).norm());
        }
        assert!(max < 1e-12, "round trip deviation {max}");
    }

    #[test]
    fn parseval_across_representations() {
        let psi = random_state(Representation::Position);
        let hat = psi.to_momentum().unwrap();
        assert!((psi.norm() - 1.0).abs() < 1e-12);
        assert!((psi.norm() - hat.norm()).abs() < 1e-12);
    }

    #[test]
    fn wrong_representation_is_rejected() {
        let psi = random_state(Representation::Position);
        assert!(psi.to_position().is_err());
        let hat = psi.to_momentum().unwrap();
        assert!(hat.to_momentum().is_err());
    }

    #[test]
    fn shift_theorem_on_eight_point_axis() {
        // translating by one site multiplies mode j by exp(-i p_j dx)
        let grid =
            make_grid(&[AxisSpec { points: 8, extent: 8.0 }], AxisSpec { points: 2, extent: 2.0 })
                .unwrap();
        let psi = WaveFunction::random(
            grid.clone(),
            HalfSpin::ZERO,
            HalfSpin::ZERO,
            Representation::Position,
            3,
        )
        .unwrap();

        let mut shifted = psi.clone();
        let n = 8;
        for block in 0..2 {
            for m in 0..2 {
                for k in 0..n {
                    let src = [block, 0, (k + n - 1) % n, m];
                    let dst = [block, 0, k, m];
                    shifted.amplitudes_mut()[IxDyn(&dst)] = psi.amplitudes()[IxDyn(&src)];
                }
            }
        }

        let hat = psi.to_momentum().unwrap();
        let hat_shifted = shifted.to_momentum().unwrap();
        let dx = grid.spatial_axes()[0].dx();
        let mut max = 0.0_f64;
        for block in 0..2 {
            for m in 0..2 {
                for j in 0..n {
                    let p = grid.spatial_axes()[0].momentum(j);
                    let expected = hat.amplitudes()[IxDyn(&[block, 0, j, m])]
                        * Complex64::new(0.0, -p * dx).exp();
                    let got = hat_shifted.amplitudes()[IxDyn(&[block, 0, j, m])];
                    max = max.max((expected - got).norm());
                }
            }
        }
        assert!(max < 1e-12, "shift theorem deviation {max}");
    }

    #[test]
    fn gaussian_is_normalized_and_centered() {
        let grid =
            make_grid(&[AxisSpec { points: 32, extent: 16.0 }], AxisSpec { points: 16, extent: 8.0 })
                .unwrap();
        let spec = GaussianSpec::at_rest(vec![8.0, 4.0], vec![1.0, 0.5]);
        let psi =
            WaveFunction::gaussian_position(grid, HalfSpin::ZERO, HalfSpin::ZERO, &spec).unwrap();
        assert!((psi.norm() - 1.0).abs() < 1e-12);
        // amplitude is largest at the center cell
        let peak = psi.amplitudes()[IxDyn(&[0, 0, 16, 8])].norm();
        for (idx, z) in psi.amplitudes().indexed_iter() {
            if idx[0] == 0 && (idx[2] != 16 || idx[3] != 8) {
                assert!(z.norm() <= peak + 1e-15);
            }
        }
    }

    #[test]
    fn zero_width_collapses_to_single_mode() {
        let grid =
            make_grid(&[AxisSpec { points: 8, extent: 8.0 }], AxisSpec { points: 8, extent: 8.0 })
                .unwrap();
        let dp = grid.spatial_axes()[0].dp();
        let spec = GaussianSpec {
            centers: vec![2.0 * dp, 0.0],
            widths: vec![0.0, 0.0],
            boosts: vec![0.0, 0.0],
            block_weights: [1.0, 0.0],
        };
        let psi =
            WaveFunction::gaussian_momentum(grid, HalfSpin::ZERO, HalfSpin::ZERO, &spec).unwrap();
        let occupied: Vec<_> = psi
            .amplitudes()
            .indexed_iter()
            .filter(|(_, z)| z.norm() > 0.0)
            .map(|(idx, _)| idx)
            .collect();
        assert_eq!(occupied.len(), 1);
        assert_eq!(occupied[0][2], 2);
        assert_eq!(occupied[0][3], 0);
    }

    #[test]
    fn zero_state_cannot_be_normalized() {
        let mut psi = WaveFunction::zeros(
            small_grid(),
            HalfSpin::ZERO,
            HalfSpin::ZERO,
            Representation::Position,
        );
        assert!(matches!(psi.normalize(), Err(Error::ZeroNorm)));
    }

    #[test]
    fn pairwise_sum_matches_naive_on_well_conditioned_input() {
        let values: Vec<f64> = (0..1000).map(|k| (k as f64).sin().abs()).collect();
        let naive: f64 = values.iter().sum();
        assert!((pairwise_sum(&values) - naive).abs() < 1e-9);
        assert_eq!(pairwise_sum(&[]), 0.0);
    }
}
