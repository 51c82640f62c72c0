//! The factorization layer underneath the solvers: complete factorizations,
//! streaming signed divisors, piecewise resolvent factoring and the
//! explicit work budget.

use intpoints::arith::int;
use intpoints::factor::{factorize, factorize_product, FactorError, FactorOptions};

fn main() {
    let opts = FactorOptions::default();

    // the resolvent of H_25
    let f = factorize(&int(25i64.pow(3) + 27), &opts).unwrap();
    println!("25^3 + 27 factors as {:?}", f.prime_powers());
    println!("{} signed divisors, first ten:", f.signed_divisor_count());
    let first: Vec<String> = f.signed_divisors().take(10).map(|d| d.to_string()).collect();
    println!("  {}", first.join(", "));

    // resolvents that split algebraically factor piecewise
    let d = int(455_625);
    let parts = [&d + 3, &d * &d - int(3) * &d + 9];
    let f = factorize_product(&parts, &opts).unwrap();
    println!("\n455625^3 + 27 = {:?} (sign {})", f.prime_powers(), f.sign());

    // a deliberately starved budget surfaces as an explicit error carrying
    // the partial factorization
    let hard = int(1_000_003) * int(1_000_033) * int(12);
    let starved = FactorOptions {
        rho_budget: 0,
        ..opts
    };
    match factorize(&hard, &starved) {
        Err(FactorError::Incomplete {
            factored,
            remaining,
            ..
        }) => {
            println!("\nbudget exhausted: factored {factored:?}, remaining {remaining:?}");
        }
        other => println!("\nunexpected: {other:?}"),
    }
}
