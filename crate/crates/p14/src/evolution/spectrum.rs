//! Mass-spectrum extraction: the p4 marginal pushed through the per-class
//! mass observable m(p4).
//!
//! Class I: m = sqrt(p4^2 + kappa^2), bounded below by the bare rest mass.
//! Class II: m = |p4|.
//! Class III: m = sqrt(p4^2 - eta^2) where real; modes with p4^2 < eta^2
//! carry no real mass and their probability is reported as truncated_norm.
//! (This mass threshold is per-p4; the propagation threshold of
//! `subthreshold_filter` also involves the spatial momentum.)

use std::io::Write;

use ndarray::Dimension;

use crate::error::{Error, Result};
use crate::evolution::propagator::PropagatorSpec;
use crate::evolution::wavefunction::{pairwise_sum, Representation, WaveFunction};
use crate::irreps::IrrepLabel;

/// Histogram request: bin count plus optional explicit range. When the range
/// is omitted it spans from the class mass floor to the largest mass present
/// on the lattice.
#[derive(Debug, Clone, Copy, serde::Serialize, serde::Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BinSpec {
    pub count: usize,
    #[serde(default)]
    pub min: Option<f64>,
    #[serde(default)]
    pub max: Option<f64>,
}

/// Binned mass densities; integral plus truncated norm equals the state's
/// squared norm.
#[derive(Debug, Clone, serde::Serialize)]
pub struct MassSpectrum {
    /// count + 1 ascending bin edges over m.
    pub edges: Vec<f64>,
    /// Probability density per bin: rho(m) >= 0, integral rho dm = retained
    /// probability.
    pub densities: Vec<f64>,
    /// Probability of modes with no real mass (class III only; zero
    /// otherwise).
    pub truncated_norm: f64,
}

impl MassSpectrum {
    pub fn bin_count(&self) -> usize {
        self.densities.len()
    }

    pub fn bin_width(&self) -> f64 {
        self.edges[1] - self.edges[0]
    }

    pub fn bin_center(&self, b: usize) -> f64 {
        0.5 * (self.edges[b] + self.edges[b + 1])
    }

    /// sum rho * dm.
    pub fn integral(&self) -> f64 {
        let dm = self.bin_width();
        let terms: Vec<f64> = self.densities.iter().map(|d| d * dm).collect();
        pairwise_sum(&terms)
    }

    /// CSV with header `m,density`, one row per bin (m = bin center), floats
    /// at 17 significant digits. Class III spectra carry a trailing comment
    /// line with the truncated norm.
    pub fn write_csv<W: Write>(&self, mut out: W, class_iii: bool) -> Result<()> {
        writeln!(out, "m,density")?;
        for b in 0..self.bin_count() {
            writeln!(out, "{:.16e},{:.16e}", self.bin_center(b), self.densities[b])?;
        }
        if class_iii {
            writeln!(out, "# truncated_norm={:.16e}", self.truncated_norm)?;
        }
        Ok(())
    }
}

/// The per-class mass observable; None when no real mass exists.
fn mass_of(p4: f64, label: &IrrepLabel) -> Option<f64> {
    match label {
        IrrepLabel::ClassI { kappa, .. } => Some((p4 * p4 + kappa * kappa).sqrt()),
        IrrepLabel::ClassII { .. } => Some(p4.abs()),
        IrrepLabel::ClassIII { eta, .. } => {
            let m_sq = p4 * p4 - eta * eta;
            if m_sq >= 0.0 {
                Some(m_sq.sqrt())
            } else {
                None
            }
        }
        IrrepLabel::ClassIV => None,
    }
}

/// Marginal probability over p4 (blocks, components and spatial modes summed
/// out) pushed through m(p4) and binned.
pub fn mass_spectrum(
    psi: &WaveFunction,
    spec: &PropagatorSpec,
    bins: &BinSpec,
) -> Result<MassSpectrum> {
    if psi.representation() != Representation::Momentum {
        return Err(Error::WrongRepresentation { expected: Representation::Momentum });
    }
    if bins.count == 0 {
        return Err(Error::InvalidBins("bin count must be positive".into()));
    }

    // marginal probability per mass-axis index
    let mass_axis_len = psi.grid().mass_axis().points();
    let cell = psi.grid().cell_volume_momentum();
    let mut slices: Vec<Vec<f64>> = vec![Vec::new(); mass_axis_len];
    let last = psi.amplitudes().ndim() - 1;
    for (idx, z) in psi.amplitudes().indexed_iter() {
        slices[idx.slice()[last]].push(z.norm_sqr() * cell);
    }
    let marginal: Vec<f64> = slices.iter().map(|s| pairwise_sum(s)).collect();

    // masses present on the lattice
    let label = spec.label();
    let masses: Vec<Option<f64>> =
        (0..mass_axis_len).map(|k| mass_of(psi.grid().mass_axis().momentum(k), label)).collect();

    let floor = match label {
        IrrepLabel::ClassI { kappa, .. } => *kappa,
        _ => 0.0,
    };
    let lo = bins.min.unwrap_or(floor);
    let hi = match bins.max {
        Some(hi) => hi,
        None => masses
            .iter()
            .flatten()
            .fold(lo, |acc, &m| acc.max(m)),
    };
    if !(hi > lo) {
        return Err(Error::InvalidBins(format!("empty mass range [{lo}, {hi}]")));
    }

    let dm = (hi - lo) / bins.count as f64;
    let mut weights = vec![0.0_f64; bins.count];
    let mut truncated = 0.0_f64;
    for (k, probability) in marginal.iter().enumerate() {
        match masses[k] {
            Some(m) => {
                let b = ((m - lo) / dm).floor();
                let b = (b.max(0.0) as usize).min(bins.count - 1);
                weights[b] += probability;
            }
            None => truncated += probability,
        }
    }

    let edges: Vec<f64> = (0..=bins.count).map(|b| lo + b as f64 * dm).collect();
    let densities: Vec<f64> = weights.iter().map(|w| w / dm).collect();
    Ok(MassSpectrum { edges, densities, truncated_norm: truncated })
}
