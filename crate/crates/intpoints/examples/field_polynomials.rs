//! Build the cyclic cubic and quartic field polynomials: the cubic family
//! X^3 + a(n) X^2 + lambda(n) X - 1 from a congruence solution, and the
//! quartic X^4 + ... + 2L X + 1 attached to an integer point of X_{4L}.

use intpoints::arith::{format_rational, int, rat};
use intpoints::congruence::{catalog_entry, cubic_field_poly, quartic_field_poly};

fn main() {
    let sol = catalog_entry("sol22").unwrap();
    println!("cubic family from [{}]:", sol.label());
    for n in [-2i64, -1, 0, 1, 2, 5] {
        let fp = cubic_field_poly(&sol, &rat(n, 1));
        println!("  n = {n:>2}: {fp}");
    }

    println!("\nquartic polynomials from integer points:");
    for (x, y) in [(-1i64, -5i64), (-5, 37), (-5, 629)] {
        let q = quartic_field_poly(&int(x), &int(y)).unwrap();
        println!(
            "  (x, y) = ({x}, {y}): L = {}  (L integral: {}, 2L integral: {})",
            format_rational(&q.l),
            q.l_integral,
            q.twice_l_integral
        );
        println!("    {}", q.poly);
    }
}
