//! Walk the catalog of known polynomial solutions of the two congruences,
//! re-verify each one, and check the leading-coefficient normalization
//! condition.

use intpoints::congruence::{catalog, leading_coeff_normalized, verify_cubic, verify_quartic, Family};

fn main() {
    for sol in catalog() {
        let quotient = match sol.family() {
            Family::Cubic => verify_cubic(sol.f(), sol.g()).unwrap(),
            Family::Quartic => verify_quartic(sol.f(), sol.g()).unwrap(),
        };
        assert_eq!(&quotient, sol.quotient());
        let name = match sol.family() {
            Family::Cubic => "lambda",
            Family::Quartic => "L",
        };
        println!("[{}] ({})", sol.label(), sol.family());
        println!("  f = {}", sol.f());
        println!("  g = {}", sol.g());
        println!("  {name} = {quotient}");
        match leading_coeff_normalized(sol.f()) {
            Ok(ok) => println!("  leading coefficient m-th-power free: {ok}"),
            Err(e) => println!("  leading coefficient check: {e}"),
        }
        println!();
    }
}
