//! Long-running randomized cross-validation, excluded from the default run:
//!
//! ```sh
//! cargo test -p intpoints --test extended -- --ignored --nocapture
//! ```
//!
//! Each test samples parameters across a wide range and checks the divisor
//! solvers against the independent brute-force oracles on an overlap box.

use intpoints::arith::int;
use intpoints::curves::{
    balady_solve, box_oracle, hessian_solve, quartic_ab_solve, CurveParams, HessianOracle,
    IntegerPoint, SolveOptions,
};
use num_traits::Signed;

fn splitmix(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

fn sample(state: &mut u64, bound: i64) -> i64 {
    (splitmix(state) % (2 * bound as u64 + 1)) as i64 - bound
}

#[test]
#[ignore = "long-running randomized validation"]
fn hessian_solver_agrees_with_oracle_on_random_parameters() {
    let opts = SolveOptions::default();
    let mut oracle = HessianOracle::new();
    let mut state = 0xface_feed_u64;
    let xbound = 100_000u64;
    for trial in 0..300 {
        let d = sample(&mut state, 50_000);
        if d == -3 {
            continue;
        }
        let sols = hessian_solve(&int(d), &opts).unwrap();
        let in_range: Vec<IntegerPoint> = sols
            .points()
            .filter(|p| p.x.abs() <= int(xbound as i64))
            .cloned()
            .collect();
        let from_oracle = oracle.points(&int(d), xbound).unwrap();
        assert_eq!(in_range, from_oracle, "trial {trial}, d = {d}");
    }
    println!("[extended] 300 random H_d parameters agree with the oracle");
}

#[test]
#[ignore = "long-running randomized validation"]
fn balady_solver_agrees_with_box_oracle_on_random_parameters() {
    let opts = SolveOptions::default();
    let mut state = 0xdead_beef_u64;
    let bound = 2_000u64;
    for trial in 0..200 {
        let t = 2 * sample(&mut state, 10_000);
        if t.abs() == 8 {
            continue;
        }
        let sols = balady_solve(&int(t), &opts).unwrap();
        let in_box: Vec<IntegerPoint> = sols
            .points()
            .filter(|p| p.x.abs() <= int(bound as i64) && p.y.abs() <= int(bound as i64))
            .cloned()
            .collect();
        let boxed = box_oracle(&CurveParams::Balady { t: int(t) }, bound).unwrap();
        assert_eq!(in_box, boxed, "trial {trial}, T = {t}");
    }
    println!("[extended] 200 random X_T parameters agree with the box oracle");
}

#[test]
#[ignore = "long-running randomized validation"]
fn quartic_ab_solver_agrees_with_box_oracle_on_random_parameters() {
    let opts = SolveOptions::default();
    let mut state = 0x0dd_ba11_u64;
    let bound = 1_000u64;
    for trial in 0..200 {
        let a = sample(&mut state, 20_000);
        let b = sample(&mut state, 50);
        if i128::from(a).pow(4) == 1024 * i128::from(b) {
            continue;
        }
        let sols = quartic_ab_solve(&int(a), &int(b), &opts).unwrap();
        let in_box: Vec<IntegerPoint> = sols
            .points()
            .filter(|p| p.x.abs() <= int(bound as i64) && p.y.abs() <= int(bound as i64))
            .cloned()
            .collect();
        let boxed = box_oracle(
            &CurveParams::QuarticAb { a: int(a), b: int(b) },
            bound,
        )
        .unwrap();
        assert_eq!(in_box, boxed, "trial {trial}, (a, b) = ({a}, {b})");
    }
    println!("[extended] 200 random Q_(a,b) parameters agree with the box oracle");
}
