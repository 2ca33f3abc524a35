//! JSON run configurations. Unknown keys are rejected so a config is either
//! fully understood or refused.

use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::evolution::{
    AxisSpec, BinSpec, GaussianSpec, MomentumGrid, PropagatorSpec, Representation,
    SubthresholdPolicy, WaveFunction,
};
use crate::irreps::{HalfSpin, IrrepLabel, MomentumClass};

#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct GridConfig {
    pub spatial: Vec<AxisSpec>,
    pub mass: AxisSpec,
}

#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(tag = "type", rename_all = "kebab-case", deny_unknown_fields)]
pub enum PacketConfig {
    /// Gaussian packet, entries per axis in layout order x1..xk, x4.
    ///
    /// In position space `boosts` are momentum boosts; in momentum space
    /// they are position phase centers (defaulting to the grid midpoints so
    /// the packet sits mid-box).
    Gaussian {
        #[serde(default = "default_space")]
        space: PacketSpace,
        centers: Vec<f64>,
        widths: Vec<f64>,
        #[serde(default)]
        boosts: Option<Vec<f64>>,
        #[serde(default)]
        block_weights: Option<[f64; 2]>,
    },
    /// Uniformly random amplitudes from the run seed.
    Random,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PacketSpace {
    Position,
    Momentum,
}

fn default_space() -> PacketSpace {
    PacketSpace::Position
}

fn default_policy() -> SubthresholdPolicy {
    SubthresholdPolicy::ProjectOut
}

fn default_seed() -> u64 {
    0
}

/// Configuration for `evolve` and `spectrum` runs.
#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    /// "I", "II" or "III".
    pub class: MomentumClass,
    #[serde(default)]
    pub kappa: Option<f64>,
    #[serde(default)]
    pub eta: Option<f64>,
    /// Class III label metadata (validated, stored in state files).
    #[serde(default)]
    pub l0: Option<HalfSpin>,
    #[serde(default)]
    pub l1: Option<[f64; 2]>,
    #[serde(default)]
    pub s: Option<HalfSpin>,
    #[serde(default)]
    pub isospin: Option<HalfSpin>,
    pub grid: GridConfig,
    pub packet: PacketConfig,
    #[serde(default)]
    pub times: Vec<f64>,
    #[serde(default = "default_policy")]
    pub policy: SubthresholdPolicy,
    #[serde(default = "default_seed")]
    pub seed: u64,
    /// Required by `spectrum`, ignored by `evolve`.
    #[serde(default)]
    pub bins: Option<BinSpec>,
}

impl RunConfig {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
        serde_json::from_str(&text).map_err(|e| Error::Config(format!("invalid config: {e}")))
    }

    pub fn label(&self) -> Result<IrrepLabel> {
        let s = self.s.unwrap_or(HalfSpin::ZERO);
        let isospin = self.isospin.unwrap_or(HalfSpin::ZERO);
        match self.class {
            MomentumClass::I => {
                let kappa = self
                    .kappa
                    .ok_or_else(|| Error::Config("class I requires `kappa`".into()))?;
                IrrepLabel::class_i(kappa, s, isospin)
            }
            MomentumClass::II => Ok(IrrepLabel::class_ii(s)),
            MomentumClass::III => {
                let eta =
                    self.eta.ok_or_else(|| Error::Config("class III requires `eta`".into()))?;
                let l0 = self.l0.unwrap_or(HalfSpin::ZERO);
                let l1 = self.l1.map(|[re, im]| Complex64::new(re, im)).unwrap_or_default();
                IrrepLabel::class_iii(eta, l0, l1)
            }
            MomentumClass::IV => Err(Error::Config("class IV is not propagatable".into())),
        }
    }

    pub fn propagator_spec(&self) -> Result<PropagatorSpec> {
        PropagatorSpec::new(self.label()?, self.policy)
    }

    pub fn grid(&self) -> Result<MomentumGrid> {
        MomentumGrid::new(&self.grid.spatial, self.grid.mass)
    }

    /// Builds the initial momentum-representation state.
    pub fn initial_state(&self, seed_override: Option<u64>) -> Result<WaveFunction> {
        let grid = self.grid()?;
        let s = self.s.unwrap_or(HalfSpin::ZERO);
        let isospin = self.isospin.unwrap_or(HalfSpin::ZERO);
        match &self.packet {
            PacketConfig::Random => {
                let seed = seed_override.unwrap_or(self.seed);
                WaveFunction::random(grid, s, isospin, Representation::Momentum, seed)
            }
            PacketConfig::Gaussian { space, centers, widths, boosts, block_weights } => {
                let axes = grid.axis_count();
                let default_boosts = match space {
                    PacketSpace::Position => vec![0.0; axes],
                    // mid-box phase centers keep the packet away from the
                    // periodic seam
                    PacketSpace::Momentum => {
                        grid.axes().iter().map(|a| a.extent() / 2.0).collect()
                    }
                };
                let spec = GaussianSpec {
                    centers: centers.clone(),
                    widths: widths.clone(),
                    boosts: boosts.clone().unwrap_or(default_boosts),
                    block_weights: block_weights.unwrap_or([1.0, 0.0]),
                };
                match space {
                    PacketSpace::Position => {
                        WaveFunction::gaussian_position(grid, s, isospin, &spec)?.to_momentum()
                    }
                    PacketSpace::Momentum => {
                        WaveFunction::gaussian_momentum(grid, s, isospin, &spec)
                    }
                }
            }
        }
    }
}
