//! Sorts five-momenta into the four representation classes by the sign of
//! the invariant square P^2 = p0^2 - |p|^2 - p4^2.
//!
//! ```bash
//! cargo run -p p14 --example classify_momenta
//! ```

use p14::algebra::{casimir_p2, FiveMomentum};
use p14::irreps::{classify_momentum, MomentumClass};

fn main() {
    let samples: [([f64; 5], &str); 6] = [
        ([2.0, 0.0, 0.0, 0.0, 0.0], "rest frame, bare mass 2"),
        ([1.3, 0.4, -0.2, 0.1, 0.5], "generic timelike"),
        ([1.0, 0.0, 0.0, 0.0, 1.0], "null along the mass axis"),
        ([5.0, 3.0, 0.0, 4.0, 0.0], "null in space"),
        ([0.0, 0.0, 0.0, 0.0, 1.5], "pure mass direction"),
        ([0.0, 0.0, 0.0, 0.0, 0.0], "zero momentum"),
    ];

    println!("{:>28}  {:>10}  class  parameter", "p", "P^2");
    for (components, what) in samples {
        let p = FiveMomentum::new(components).unwrap();
        let p2 = casimir_p2(&p);
        let class = classify_momentum(&p);
        let parameter = match class {
            MomentumClass::I => format!("kappa = {:.4}", p2.sqrt()),
            MomentumClass::III => format!("eta = {:.4}", (-p2).sqrt()),
            MomentumClass::II | MomentumClass::IV => String::new(),
        };
        println!("{components:>28?}  {p2:>10.4}  {class:<5}  {parameter}  ({what})");
    }
}
