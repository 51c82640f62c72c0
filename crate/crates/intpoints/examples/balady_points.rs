//! Integer points on the genus-3 quartics X_T, including the three known
//! parameters with points beyond (±1, ∓1), and the projection of those
//! points onto Q_T.

use intpoints::arith::int;
use intpoints::curves::{balady_solve, phi_project, CurveParams, PointClass, SolveOptions};

fn main() {
    let opts = SolveOptions::default();
    for t in [2i64, 40, 154, 77236] {
        let sols = balady_solve(&int(t), &opts).expect("even T != 8");
        println!("X_{t}  ({} points)", sols.len());
        for (p, class) in sols.classified() {
            print!("  {p}  [{class}]");
            if *class == PointClass::Nontrivial {
                // nontrivial points project to points of Q_{T,4}
                let image = phi_project(p);
                let q = CurveParams::QuarticAb {
                    a: int(t),
                    b: int(4),
                };
                assert!(q.is_on_curve(&image));
                print!("  -> phi {image} on Q_{t}");
            }
            println!();
        }
        println!();
    }
}
