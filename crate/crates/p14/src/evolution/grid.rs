//! Tensor-product lattice over up to three spatial momentum axes plus the
//! mandatory mass axis p4.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// User-facing axis specification: point count (power of two >= 2) and
/// positive extent L. Positions run over [0, L) with spacing L/n; the dual
/// momentum lattice has spacing 2 pi / L in standard transform frequency
/// order (0, 1, ..., n/2 - 1, -n/2, ..., -1 times the spacing).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AxisSpec {
    pub points: usize,
    pub extent: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Axis {
    points: usize,
    extent: f64,
    dx: f64,
    dp: f64,
}

impl Axis {
    fn new(spec: AxisSpec) -> Result<Self> {
        if spec.points < 2 || !spec.points.is_power_of_two() {
            return Err(Error::BadPointCount(spec.points));
        }
        if !(spec.extent.is_finite() && spec.extent > 0.0) {
            return Err(Error::BadExtent(spec.extent));
        }
        Ok(Axis {
            points: spec.points,
            extent: spec.extent,
            dx: spec.extent / spec.points as f64,
            dp: 2.0 * std::f64::consts::PI / spec.extent,
        })
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn extent(&self) -> f64 {
        self.extent
    }

    pub fn dx(&self) -> f64 {
        self.dx
    }

    pub fn dp(&self) -> f64 {
        self.dp
    }

    pub fn spec(&self) -> AxisSpec {
        AxisSpec { points: self.points, extent: self.extent }
    }

    /// Position of lattice site k.
    pub fn position(&self, k: usize) -> f64 {
        k as f64 * self.dx
    }

    /// Momentum of transform-layout index k (frequencies symmetric about 0).
    pub fn momentum(&self, k: usize) -> f64 {
        let n = self.points as i64;
        let k = k as i64;
        let freq = if k < n / 2 { k } else { k - n };
        freq as f64 * self.dp
    }
}

/// The full lattice: 1..3 spatial axes followed by the mass axis.
#[derive(Debug, Clone, PartialEq)]
pub struct MomentumGrid {
    spatial: Vec<Axis>,
    mass: Axis,
}

impl MomentumGrid {
    pub fn new(spatial: &[AxisSpec], mass: AxisSpec) -> Result<Self> {
        if spatial.is_empty() || spatial.len() > 3 {
            return Err(Error::BadAxisCount(spatial.len()));
        }
        Ok(MomentumGrid {
            spatial: spatial.iter().map(|&s| Axis::new(s)).collect::<Result<_>>()?,
            mass: Axis::new(mass)?,
        })
    }

    pub fn spatial_axes(&self) -> &[Axis] {
        &self.spatial
    }

    pub fn mass_axis(&self) -> &Axis {
        &self.mass
    }

    /// All axes in layout order x1..xk then x4.
    pub fn axes(&self) -> Vec<&Axis> {
        self.spatial.iter().chain(std::iter::once(&self.mass)).collect()
    }

    pub fn axis_count(&self) -> usize {
        self.spatial.len() + 1
    }

    /// Point counts per axis in layout order.
    pub fn shape(&self) -> Vec<usize> {
        self.axes().iter().map(|a| a.points()).collect()
    }

    pub fn total_points(&self) -> usize {
        self.shape().iter().product()
    }

    pub fn cell_volume_position(&self) -> f64 {
        self.axes().iter().map(|a| a.dx()).product()
    }

    pub fn cell_volume_momentum(&self) -> f64 {
        self.axes().iter().map(|a| a.dp()).product()
    }

    pub fn specs(&self) -> (Vec<AxisSpec>, AxisSpec) {
        (self.spatial.iter().map(Axis::spec).collect(), self.mass.spec())
    }
}

/// Convenience constructor matching the axis-list interface.
pub fn make_grid(spatial: &[AxisSpec], mass: AxisSpec) -> Result<MomentumGrid> {
    MomentumGrid::new(spatial, mass)
}
