//! Classification of momenta into the four representation classes and the
//! little-group content of each class.
//!
//! Class I carries finite spin-isospin multiplets, class II the Euclidean
//! P(3) structure with the spin invariant W', class III the Lorentz-block
//! identities and (eta, l0, l1) label rules, and class IV is the degenerate
//! zero-momentum branch. Construction of the infinite-dimensional class III
//! carrier spaces is out of scope; only the invariant identities and label
//! validation are provided.

pub mod class1;
pub mod class2;
pub mod class3;
pub mod label;
pub mod su2;

pub use class1::{
    build_class1_rep, check_class1_casimir_identity, spin_isospin_eigen, spin_isospin_from_blocks,
    Class1CasimirReport, SpinIsospinRep,
};
pub use class2::{class2_little_group, class2_spin_invariant, ClosureReport, LittleGroupP3};
pub use class3::{class3_identity_report, class3_invariants, Class3Report, LorentzBlock};
pub use label::{
    classify, classify_momentum, default_classify_tol, validate_class3_label, HalfSpin,
    IrrepLabel, LabelVerdict, MomentumClass,
};
pub use su2::{build_su2, su2_bracket_residual};
