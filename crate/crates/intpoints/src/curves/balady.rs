//! All integer points on `X_T: (x+y)^4 - 4x^2y^2 + T*x*y*(x+y) + 4 = 0` for
//! even `T != ±8`.
//!
//! On the curve, two quadratic factors multiply to the resolvent
//! `N = (T^2+64)(T-8)(T+8)/16` and sum to `(4x+4y)^2 + T^2/2`, so each
//! signed divisor `d1 | N` gives the candidate `(4x+4y)^2 = d1 + N/d1 - T^2/2`.
//! From `s = x+y`, the product `p = xy` solves `4p^2 - T s p - (s^4+4) = 0`
//! and `(x, y)` are the integer roots of `z^2 - s z + p`.

use super::{exact_sqrt, CurveError, CurveParams, CurveSolutions, IntegerPoint, SolveOptions};
use crate::arith::{int, Integer};
use crate::factor::factorize_product;
use num_integer::Integer as IntegerOps;
use num_traits::{Signed, Zero};
use std::collections::BTreeSet;

/// Complete integer-point set of `X_T`; `T` must be even and not `±8`.
pub fn balady_solve(t: &Integer, opts: &SolveOptions) -> Result<CurveSolutions, CurveError> {
    if !(t % 2u8).is_zero() {
        return Err(CurveError::OddParameter(t.clone()));
    }
    if t.abs() == int(8) {
        return Err(CurveError::Singular(t.clone()));
    }
    let u: Integer = t / 2;
    // N = (T^2+64)(T-8)(T+8)/16 = (u-4)(u+4)(u^2+16) for T = 2u
    let parts = [&u - 4, &u + 4, &u * &u + 16];
    let fact = factorize_product(&parts, &opts.factor)?;
    let n = fact.value();
    let half_t_sq = (t * t) / 2;

    let params = CurveParams::Balady { t: t.clone() };
    let mut found = BTreeSet::new();
    for d1 in fact.signed_divisors() {
        let v = &d1 + &n / &d1 - &half_t_sq;
        let Some(r) = exact_sqrt(&v) else { continue };
        if !(&r % 4u8).is_zero() {
            continue;
        }
        let s0 = r / int(4);
        for s in [s0.clone(), -s0.clone()] {
            // 4p^2 - T s p - (s^4 + 4) = 0
            let disc = (t * &s).pow(2) + int(16) * (s.pow(4) + 4);
            let Some(rd) = exact_sqrt(&disc) else { continue };
            for pnum in [t * &s + &rd, t * &s - &rd] {
                let (p, rem) = pnum.div_rem(&int(8));
                if !rem.is_zero() {
                    continue;
                }
                // (x, y) are roots of z^2 - s z + p
                let zdisc = &s * &s - int(4) * &p;
                let Some(rz) = exact_sqrt(&zdisc) else { continue };
                let xnum = &s + &rz;
                if !(&xnum % 2u8).is_zero() {
                    continue;
                }
                let x = xnum / int(2);
                let y = &s - &x;
                for (px, py) in [(x.clone(), y.clone()), (y, x)] {
                    let pt = IntegerPoint { x: px, y: py };
                    if params.is_on_curve(&pt) {
                        found.insert(pt);
                    }
                }
            }
            if s0.is_zero() {
                break;
            }
        }
    }
    Ok(CurveSolutions::collect(params, found))
}
