//! All integer points on `Q_{a,b}: x^4 - 4y^2 + a*x*y + b = 0` with
//! `a^4 != 1024 b`.
//!
//! With `g = gcd(32, 8a, a^2)`, the two factors
//! `(32x^2 ∓ 8ax ± 64y + a^2)/g` multiply to `M = (a^4 - 1024b)/g^2` on the
//! curve and sum to `(64x^2 + 2a^2)/g`, so each signed divisor `d1 | M`
//! yields the candidate `64x^2 = d1*g + (a^4-1024b)/(d1*g) - 2a^2`; `y` then
//! comes from the quadratic `4y^2 - a x y - (x^4 + b) = 0`.

use super::{exact_sqrt, CurveError, CurveParams, CurveSolutions, IntegerPoint, SolveOptions};
use crate::arith::{int, Integer};
use crate::factor::{factorize, factorize_product, Factorization};
use num_integer::Integer as IntegerOps;
use num_traits::Zero;
use std::collections::BTreeSet;

/// Complete integer-point set of `Q_{a,b}` for `a^4 != 1024 b`.
pub fn quartic_ab_solve(
    a: &Integer,
    b: &Integer,
    opts: &SolveOptions,
) -> Result<CurveSolutions, CurveError> {
    let resolvent = a.pow(4) - int(1024) * b;
    if resolvent.is_zero() {
        return Err(CurveError::Degenerate(
            "a^4 = 1024 b: the quartic factors; for a = 8, b = 4 the curve \
             carries the infinite family y = x ± (x^2 + 2)/2 over even x"
                .into(),
        ));
    }
    let g = int(32).gcd(&(int(8) * a)).gcd(&(a * a));
    let fact = factor_resolvent(a, b, &g, opts)?;
    let m = fact.value();
    debug_assert_eq!(&m * &g * &g, resolvent);

    let params = CurveParams::QuarticAb {
        a: a.clone(),
        b: b.clone(),
    };
    let two_a_sq = int(2) * a * a;
    let mut found = BTreeSet::new();
    for d1 in fact.signed_divisors() {
        let w = &d1 * &g + (&m / &d1) * &g - &two_a_sq;
        let Some(r) = exact_sqrt(&w) else { continue };
        if !(&r % 8u8).is_zero() {
            continue;
        }
        let x0 = r / int(8);
        for x in [x0.clone(), -x0.clone()] {
            // 4y^2 - a x y - (x^4 + b) = 0
            let disc = (a * &x).pow(2) + int(16) * (x.pow(4) + b);
            let Some(rd) = exact_sqrt(&disc) else { continue };
            for ynum in [a * &x + &rd, a * &x - &rd] {
                let (y, rem) = ynum.div_rem(&int(8));
                if !rem.is_zero() {
                    continue;
                }
                let p = IntegerPoint { x: x.clone(), y };
                if params.is_on_curve(&p) {
                    found.insert(p);
                }
            }
            if x0.is_zero() {
                break;
            }
        }
    }
    Ok(CurveSolutions::collect(params, found))
}

/// Factor `M = (a^4 - 1024b)/g^2`. For `b = 4` the numerator splits as
/// `(a^2 - 64)(a^2 + 64)` and `g` is a power of two, so the pieces factor
/// separately and `g^2` is removed from the 2-exponent.
fn factor_resolvent(
    a: &Integer,
    b: &Integer,
    g: &Integer,
    opts: &SolveOptions,
) -> Result<Factorization, CurveError> {
    if *b == int(4) {
        let parts = [a * a - 64, a * a + 64];
        let mut fact = factorize_product(&parts, &opts.factor)?;
        let two_exp = (g * g).trailing_zeros().unwrap_or(0) as u32;
        if two_exp > 0 {
            fact.remove_prime_power(&int(2), two_exp)
                .map_err(CurveError::Factor)?;
        }
        Ok(fact)
    } else {
        let m = (a.pow(4) - int(1024) * b) / (g * g);
        Ok(factorize(&m, &opts.factor)?)
    }
}
