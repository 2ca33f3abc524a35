//! Checks matrix realizations against the exact structure-constant table:
//! all 105 commutator pairs, the 455 Jacobi triples, and what happens when a
//! generator is deliberately corrupted.
//!
//! ```bash
//! cargo run -p p14 --example verify_algebra
//! ```

use p14::algebra::{
    build_adjoint_realization, build_affine_realization, jacobi_combo, jacobi_matrix_residual,
    verify_realization, GeneratorId,
};

fn main() {
    for (name, realization) in [
        ("affine 6x6", build_affine_realization()),
        ("adjoint 15x15", build_adjoint_realization()),
    ] {
        let report = verify_realization(&realization);
        println!(
            "{name}: {} pairs, max residual {:.3e}",
            report.pairs.len(),
            report.max_residual
        );
        println!("  matrix Jacobi residual: {:.3e}", jacobi_matrix_residual(&realization));
    }

    let all = GeneratorId::all();
    let mut failures = 0;
    for i in 0..all.len() {
        for j in (i + 1)..all.len() {
            for k in (j + 1)..all.len() {
                if !jacobi_combo(all[i], all[j], all[k]).is_zero() {
                    failures += 1;
                }
            }
        }
    }
    println!("symbolic Jacobi: {failures} failing triples out of 455");

    // fault injection: zeroing M12 breaks every bracket that produces it
    let broken = build_affine_realization().with_zeroed(GeneratorId::rotation(1, 2).unwrap());
    let report = verify_realization(&broken);
    println!(
        "corrupted M12: max residual {:.3e}, {} offending pairs, worst [{}, {}]",
        report.max_residual,
        report.offenders(1e-12).len(),
        report.worst().unwrap().a,
        report.worst().unwrap().b,
    );
}
