//! Extend cubic congruence solutions along the chain
//! f_n = g_{n-1}, g_n = (g_{n-1}^3 + 1)/f_{n-1}; degrees triple per step
//! and every emitted pair re-verifies.

use intpoints::congruence::{catalog_entry, orbit};

fn main() {
    let seed = catalog_entry("m1.1").unwrap();
    println!("orbit of [{}]:", seed.label());
    for (k, sol) in orbit(&seed, 4).unwrap().iter().enumerate() {
        println!("  step {k}: f = {}", sol.f());
        println!("          g = {}", sol.g());
        println!("          lambda = {}", sol.quotient());
    }

    let seed = catalog_entry("sol23").unwrap();
    println!("\ndegree growth from [{}]:", seed.label());
    for (k, sol) in orbit(&seed, 5).unwrap().iter().enumerate() {
        println!(
            "  step {k}: (deg f, deg g) = ({}, {})",
            sol.f().degree().unwrap(),
            sol.g().degree().unwrap()
        );
    }
}
