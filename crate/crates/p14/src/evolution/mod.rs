//! Pseudo-spectral propagation of variable-mass wavefunctions under the
//! three invariant wave equations, plus observables, mass spectra and state
//! files.
//!
//! All operations take their inputs by reference and return fresh values;
//! reductions use pairwise summation so results do not depend on evaluation
//! order.

pub mod grid;
pub mod observables;
pub mod propagator;
pub mod spectrum;
pub mod statefile;
pub mod wavefunction;

pub use grid::{make_grid, Axis, AxisSpec, MomentumGrid};
pub use observables::{observables, Observables};
pub use propagator::{
    dispersion, propagate, subthreshold_filter, Dispersion, PropagatorSpec, SubthresholdPolicy,
};
pub use spectrum::{mass_spectrum, BinSpec, MassSpectrum};
pub use statefile::{load_state, save_state};
pub use wavefunction::{GaussianSpec, Representation, WaveFunction};
