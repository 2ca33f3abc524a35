//! Numerics for the inhomogeneous De Sitter algebra P(1,4): the symmetry
//! behind treating rest mass as a dynamical variable conjugate to a fifth
//! coordinate.
//!
//! The crate has three layers plus a thin command-line front end:
//!
//! * [`algebra`] — the (+,-,-,-,-) metric, the 15 generators, the exact
//!   structure-constant table, a faithful 6x6 affine realization, and the
//!   invariants P^2, V, W built from the five-dimensional Pauli-Lubanski
//!   tensor.
//! * [`irreps`] — classification of momenta into the four representation
//!   classes and the little-group content of each: spin-isospin (s, I)
//!   blocks, the Euclidean P(3) closure, Lorentz-block identities and
//!   (eta, l0, l1) label validation.
//! * [`evolution`] — pseudo-spectral propagation of variable-mass
//!   wavefunctions under the three invariant wave equations, with mass
//!   spectra, observables and a versioned binary state-file format.
//!
//! # Examples
//!
//! Each major capability has a runnable example:
//!
//! ```bash
//! cargo run -p p14 --example verify_algebra      # brackets, Jacobi, faithfulness
//! cargo run -p p14 --example classify_momenta    # the four classes
//! cargo run -p p14 --example spin_isospin_reps   # class I tables and Casimir identity
//! cargo run -p p14 --example little_groups       # class II closure, class III identities
//! cargo run -p p14 --example propagate_packet    # norm conservation and group velocity
//! cargo run -p p14 --example mass_spectrum       # spectra for classes I, II, III
//! cargo run -p p14 --example state_files         # binary state-file round trip
//! ```
//!
//! The same functionality is reachable through the `p14` binary
//! (`verify`, `classify`, `rep-table`, `evolve`, `spectrum`); see the README.

pub mod algebra;
pub mod cli;
pub mod error;
pub mod evolution;
pub mod irreps;
pub mod linalg;

pub use error::{Error, Result};
