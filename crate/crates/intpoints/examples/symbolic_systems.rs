//! Generate the coefficient systems S(m,n) / R(m,n), compare them with the
//! bundled reference tables, and evaluate one at a known solution.

use intpoints::arith::rat;
use intpoints::congruence::{raw, Family};
use intpoints::systems::build_system;

fn main() {
    let sys = build_system(Family::Cubic, 2, 2).unwrap();
    print!("{}", sys.dump());

    println!("reference comparison:");
    for cmp in sys.check_reference().unwrap() {
        println!(
            "  {}: {}",
            cmp.name,
            if cmp.matches { "matches" } else { "MISMATCH" }
        );
    }

    // the degree-(2,2) family solves S(2,2) for every b1
    let assignment = raw::sol22(&rat(5, 1));
    let (all_zero, residuals) = sys.evaluate(&assignment).unwrap();
    println!("known solution residuals zero: {all_zero} ({} values)", residuals.len());

    // the quartic (3,2) system from the degree-3 solution branch
    let sys = build_system(Family::Quartic, 3, 2).unwrap();
    let (all_zero, _) = sys
        .evaluate(&raw::thm31(1, &rat(1, 1), true))
        .unwrap();
    println!("R(3,2) branch-1 solution residuals zero: {all_zero}");
}
