//! Search for integer pairs satisfying y | x^4+4, x | y^4+4 and
//! (x+y) | 4-4x^2y^2, and split them by whether T(x, y) is an integer —
//! the non-integral ones satisfy the congruences without lying on any X_T.

use intpoints::arith::format_rational;
use intpoints::curves::simcong_search;

fn main() {
    let rows = simcong_search(200).unwrap();
    println!("{} representatives with 0 < |x| <= 200, y >= |x|\n", rows.len());
    println!("{:>6} {:>10} {:>12}  integral", "x", "y", "T(x,y)");
    for r in &rows {
        println!(
            "{:>6} {:>10} {:>12}  {}",
            r.point.x.to_string(),
            r.point.y.to_string(),
            format_rational(&r.t),
            r.integral
        );
    }
}
