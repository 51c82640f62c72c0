//! Integer points on Q_{a,b}: the dense trivial pair (0, ±1) for b = 4 and
//! one of the parameters with a full set of ten points.

use intpoints::arith::int;
use intpoints::curves::{quartic_ab_solve, SolveOptions};

fn main() {
    let opts = SolveOptions::default();

    let sols = quartic_ab_solve(&int(1000), &int(4), &opts).unwrap();
    println!("Q_(1000,4)  ({} points)", sols.len());
    for (p, class) in sols.classified() {
        println!("  {p}  [{class}]");
    }

    // a general (a, b) away from the b = 4 family
    let sols = quartic_ab_solve(&int(5), &int(-4), &opts).unwrap();
    println!("\nQ_(5,-4)  ({} points)", sols.len());
    for (p, class) in sols.classified() {
        println!("  {p}  [{class}]");
    }

    // the excluded degenerate case
    let err = quartic_ab_solve(&int(8), &int(4), &opts).unwrap_err();
    println!("\n(a, b) = (8, 4) -> {err}");
}
