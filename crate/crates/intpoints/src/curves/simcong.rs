//! Search for the simultaneous congruences
//! `y | x^4 + 4`, `x | y^4 + 4`, `(x + y) | 4 - 4x^2y^2`,
//! which every integer point of every `X_T` satisfies (but not conversely:
//! the attached `T(x, y)` need not be an integer).
//!
//! Representatives are normalized to `0 < |x| <= y` with `x + y != 0`, the
//! bound applying to `|x|`; `y` runs over all divisors of `x^4 + 4`. The
//! companions `(y, x)` (same `T`, same-sign pairs) and `(-y, -x)` (negated
//! `T`, mixed-sign pairs) are implied.

use super::{t_of_xy, CurveError, IntegerPoint};
use crate::arith::Rational;
use crate::factor::factor_u64;
use num_traits::One;
use std::collections::HashMap;

/// One search hit with its exact curve parameter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimcongRow {
    pub point: IntegerPoint,
    pub t: Rational,
    pub integral: bool,
}

/// All representatives with `0 < |x| <= bound` and `y >= |x|`; per `x`,
/// candidate `y` values are pruned to the divisors of
/// `x^4 + 4 = (x^2-2x+2)(x^2+2x+2)`.
pub fn simcong_search(bound: u64) -> Result<Vec<SimcongRow>, CurveError> {
    // x^4 + 4 must stay within u64 for the divisor arithmetic
    if bound > 50_000 {
        return Err(CurveError::OutOfRange(
            "simultaneous congruence search supports bounds up to 5*10^4".into(),
        ));
    }
    let b = bound as i64;
    let mut rows = Vec::new();
    for x in -b..=b {
        if x == 0 {
            continue;
        }
        let xi = x as i128;
        for y in divisors_of_x4_plus_4(x) {
            let y = y as i64;
            if y < x.abs() || x as i128 + y as i128 == 0 {
                continue;
            }
            let yi = y as i128;
            // (y^4 + 4) mod x, with y reduced first
            let ym = yi % xi;
            if (ym * ym % xi * ym % xi * ym + 4) % xi != 0 {
                continue;
            }
            // (4 - 4 x^2 y^2) mod (x + y), reducing after every product
            let m = xi + yi;
            let xr = xi.rem_euclid(m);
            let yr = yi.rem_euclid(m);
            let sq = (xr * xr % m) * (yr * yr % m) % m;
            if (4 - 4 * sq).rem_euclid(m) != 0 {
                continue;
            }
            let point = IntegerPoint::new(x, y);
            let t = t_of_xy(&point).expect("x*y*(x+y) != 0 by construction");
            let integral = t.denom().is_one();
            rows.push(SimcongRow { point, t, integral });
        }
    }
    rows.sort_by(|a, b| a.point.cmp(&b.point));
    Ok(rows)
}

/// Unsorted positive divisors of `x^4 + 4`, factored via the algebraic
/// split into two quadratic pieces.
fn divisors_of_x4_plus_4(x: i64) -> Vec<u64> {
    let xi = x as i128;
    let parts = [
        (xi * xi - 2 * xi + 2) as u64,
        (xi * xi + 2 * xi + 2) as u64,
    ];
    let mut merged: HashMap<u64, u32> = HashMap::new();
    for part in parts {
        if part > 1 {
            for (p, e) in factor_u64(part) {
                *merged.entry(p).or_insert(0) += e;
            }
        }
    }
    let mut divisors = vec![1u64];
    for (p, e) in merged {
        let snapshot = divisors.clone();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            for d in &snapshot {
                divisors.push(d * pk);
            }
        }
    }
    divisors
}
