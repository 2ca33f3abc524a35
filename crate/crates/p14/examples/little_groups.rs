//! Little-group structure of the null and pure-mass momenta: the Euclidean
//! closure law for class II and the Lorentz-block identities for class III,
//! plus the (eta, l0, l1) label rules.
//!
//! ```bash
//! cargo run -p p14 --example little_groups
//! ```

use num_complex::Complex64;

use p14::algebra::{build_adjoint_realization, build_affine_realization};
use p14::irreps::{
    class2_little_group, class2_spin_invariant, class3_identity_report, build_su2,
    validate_class3_label, HalfSpin, LorentzBlock,
};

fn main() {
    // Class II: P'_i = M_0i + lambda M_i4 commute only when |lambda| = 1,
    // and [P'_i, P'_j] = i (lambda^2 - 1) M_ij holds for every lambda.
    let affine = build_affine_realization();
    println!("class II closure, P'_i = M_0i + lambda M_i4:");
    for lambda in [-2.0, -1.0, 0.0, 1.0, 2.0] {
        let (_, report) = class2_little_group(&affine, lambda).unwrap();
        println!(
            "  lambda {lambda:>4}: abelian residual {:.3e}, identity residual {:.3e}",
            report.abelian_residual, report.identity_residual
        );
    }
    for twice in [0u32, 1, 2] {
        let s = HalfSpin::from_twice(twice);
        let recovered = class2_spin_invariant(&build_su2(s)).unwrap();
        println!("  W' = M^2 recovers s = {recovered}");
    }

    // Class III: V = +-eta M.N and W = eta^2 (N^2 - M^2) against the frozen
    // invariants; the adjoint realization separates the two signs.
    println!("class III identities at p = (0,0,0,0, sign * eta):");
    for (name, realization) in [("affine", affine), ("adjoint", build_adjoint_realization())] {
        let block = LorentzBlock::from_realization(&realization);
        for sign in [1i8, -1] {
            let report = class3_identity_report(&block, &realization, 1.0, sign).unwrap();
            println!(
                "  {name:>7}, sign {sign:+}: V residual {:.3e}, W residual {:.3e}",
                report.v_residual, report.w_residual
            );
        }
    }

    // label rules: l1 real in [-1, 1] when l0 = 0, purely imaginary otherwise
    println!("class III labels:");
    for (eta, l0, l1) in [
        (1.0, HalfSpin::ZERO, Complex64::new(0.5, 0.0)),
        (1.0, HalfSpin::ONE, Complex64::new(0.0, 2.0)),
        (1.0, HalfSpin::HALF, Complex64::new(0.3, 0.0)),
    ] {
        let verdict = validate_class3_label(eta, l0, l1);
        println!("  (eta {eta}, l0 {l0}, l1 {l1}): {verdict:?}");
    }
}
