//! Conformal-weight audit of the Lagrangian pieces, balanced and mis-scaled.

use ewgeom::ewsector::audit::{full_audit, FieldScales};
use ewgeom::scales::ScaleDim;

fn main() {
    let balanced = FieldScales::default();
    print!("{}", full_audit(&balanced));

    println!("\nwith psi at L^-1:");
    let skewed = FieldScales { psi: ScaleDim::length_int(-1), ..balanced };
    for e in full_audit(&skewed).failures() {
        println!("  {} is {}", e.term, e.dim);
    }
}
