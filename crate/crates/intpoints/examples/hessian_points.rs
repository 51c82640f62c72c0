//! Find every integer point on a few Hessian cubics H_d and show how they
//! classify: the two points shared by all curves, the four extra ones on
//! square parameters, and the sporadic rest.

use intpoints::arith::int;
use intpoints::curves::{hessian_solve, SolveOptions};

fn main() {
    let opts = SolveOptions::default();
    for d in [0i64, 25, 49, 1609, -1056] {
        let sols = hessian_solve(&int(d), &opts).expect("d != -3");
        println!("H_{d}: x^3 + y^3 + {d}*x*y + 1 = 0  ({} points)", sols.len());
        for (p, class) in sols.classified() {
            println!("  {p}  [{class}]");
        }
        println!();
    }

    // d = -3 is the one parameter the solver refuses
    let err = hessian_solve(&int(-3), &opts).unwrap_err();
    println!("d = -3 -> {err}");
}
