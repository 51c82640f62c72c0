//! All integer points on `H_d: x^3 + y^3 + d*x*y + 1 = 0`.
//!
//! On the curve, `(3x + 3y - d) * Q = -(d^3 + 27)` for a quadratic form `Q`
//! in `x, y`, so `d1 = 3x + 3y - d` runs over the signed divisors of
//! `d^3 + 27` and for each divisor `x` solves a quadratic with discriminant
//! `Δ = -27 d^2 d1^2 - 18 d d1^3 - 3 d1^4 - 12 (d^3+27) d1`.

use super::{exact_sqrt, CurveError, CurveParams, CurveSolutions, IntegerPoint, SolveOptions};
use crate::arith::{int, isqrt, Integer};
use crate::factor::{factor_u64, factorize_product};
use num_traits::{Signed, ToPrimitive, Zero};
use std::collections::{BTreeSet, HashMap};

/// Complete integer-point set of `H_d` for `d != -3`.
pub fn hessian_solve(d: &Integer, opts: &SolveOptions) -> Result<CurveSolutions, CurveError> {
    if *d == int(-3) {
        return Err(CurveError::Degenerate(
            "d = -3: x^3 + y^3 - 3xy + 1 factors; the line x + y + 1 = 0 \
             carries infinitely many integer points"
                .into(),
        ));
    }
    // d^3 + 27 = (d + 3)(d^2 - 3d + 9), factored piecewise
    let parts = [d + 3, d * d - int(3) * d + 9];
    let fact = factorize_product(&parts, &opts.factor)?;
    let n = fact.value();
    debug_assert_eq!(n, d.pow(3) + 27);

    let mut found = BTreeSet::new();
    for d1 in fact.signed_divisors() {
        // Δ = -3 d1 (d1 (d1 + 3d)^2 + 4 (d^3 + 27))
        let inner = &d1 * (&d1 + int(3) * d).pow(2) + int(4) * &n;
        let disc = int(-3) * &d1 * inner;
        if disc.is_negative() {
            continue;
        }
        let Some(root) = exact_sqrt(&disc) else {
            continue;
        };
        let den = int(18) * &d1;
        let base = int(3) * d * &d1 + int(3) * &d1 * &d1;
        for sign in [1i64, -1] {
            if sign < 0 && root.is_zero() {
                continue;
            }
            let numer = &base + int(sign) * &root;
            let (x, rem) = num_integer::Integer::div_rem(&numer, &den);
            if !rem.is_zero() {
                continue;
            }
            let ynum = d + &d1 - int(3) * &x;
            let (y, rem) = num_integer::Integer::div_rem(&ynum, &int(3));
            if !rem.is_zero() {
                continue;
            }
            let p = IntegerPoint { x, y };
            let params = CurveParams::Hessian { d: d.clone() };
            if params.is_on_curve(&p) {
                found.insert(p);
            }
        }
    }
    Ok(CurveSolutions::collect(
        CurveParams::Hessian { d: d.clone() },
        found,
    ))
}

/// Divisor-based oracle for `H_d`, independent of the solver above.
///
/// Every on-curve `y` with `x^3 + 1 != 0` is an integer root of the monic
/// cubic `y^3 + (d x) y + (x^3 + 1)`, hence divides `x^3 + 1`; the oracle
/// enumerates those divisors for each `|x| <= xbound`. Factorizations of
/// `x^3 + 1` are cached so a sweep over many `d` values pays for them once.
pub struct HessianOracle {
    factor_cache: HashMap<i64, Vec<(u64, u32)>>,
}

impl HessianOracle {
    pub fn new() -> Self {
        HessianOracle {
            factor_cache: HashMap::new(),
        }
    }

    /// All on-curve points with `|x| <= xbound` (y unbounded).
    pub fn points(&mut self, d: &Integer, xbound: u64) -> Result<Vec<IntegerPoint>, CurveError> {
        let d = d.to_i64().ok_or_else(|| {
            CurveError::OutOfRange("oracle supports |d| up to 2^63".into())
        })?;
        if xbound > 2_000_000 {
            return Err(CurveError::OutOfRange(
                "oracle supports xbound up to 2*10^6".into(),
            ));
        }
        let xb = xbound as i64;
        let mut out = BTreeSet::new();
        for x in -xb..=xb {
            let c = x as i128 * x as i128 * x as i128 + 1;
            if c == 0 {
                // x = -1: y (y^2 - d) = 0
                out.insert(IntegerPoint::new(-1, 0));
                if d >= 0 {
                    if let Ok((s, true)) = isqrt(&int(d)) {
                        let s = s.to_i64().unwrap();
                        out.insert(IntegerPoint::new(-1, s));
                        out.insert(IntegerPoint::new(-1, -s));
                    }
                }
                continue;
            }
            // |y|^3 <= |d x||y| + |c| bounds candidate roots
            let ybound = root_bound((d as i128 * x as i128).unsigned_abs(), c.unsigned_abs());
            let factors = self
                .factor_cache
                .entry(x)
                .or_insert_with(|| merged_factors(x));
            let mut divisors = Vec::new();
            collect_divisors(factors, 0, 1, ybound, &mut divisors);
            for yd in divisors {
                for y in [yd as i128, -(yd as i128)] {
                    if y * y * y + d as i128 * x as i128 * y + c == 0 {
                        out.insert(IntegerPoint::new(x, y as i64));
                    }
                }
            }
        }
        Ok(out.into_iter().collect())
    }
}

impl Default for HessianOracle {
    fn default() -> Self {
        Self::new()
    }
}

/// One-shot oracle call (no cache reuse).
pub fn hessian_oracle(d: &Integer, xbound: u64) -> Result<Vec<IntegerPoint>, CurveError> {
    HessianOracle::new().points(d, xbound)
}

/// Factorization of `|x^3 + 1|` through the split `(x + 1)(x^2 - x + 1)`.
fn merged_factors(x: i64) -> Vec<(u64, u32)> {
    let mut merged: HashMap<u64, u32> = HashMap::new();
    let parts = [
        (x as i128 + 1).unsigned_abs() as u64,
        (x as i128 * x as i128 - x as i128 + 1).unsigned_abs() as u64,
    ];
    for part in parts {
        if part <= 1 {
            continue;
        }
        for (p, e) in factor_u64(part) {
            *merged.entry(p).or_insert(0) += e;
        }
    }
    let mut out: Vec<(u64, u32)> = merged.into_iter().collect();
    out.sort_unstable();
    out
}

/// Positive divisors up to `bound`, depth-first over the exponent vectors.
fn collect_divisors(factors: &[(u64, u32)], idx: usize, acc: u64, bound: u64, out: &mut Vec<u64>) {
    if idx == factors.len() {
        out.push(acc);
        return;
    }
    let (p, e) = factors[idx];
    let mut v = acc;
    for k in 0..=e {
        if v > bound {
            return;
        }
        collect_divisors(factors, idx + 1, v, bound, out);
        if k < e {
            match v.checked_mul(p) {
                Some(next) if next <= bound => v = next,
                _ => return,
            }
        }
    }
}

/// Smallest `Y` with `Y^3 - a*Y - c > 0` for all `|y| >= Y`, from
/// `Y >= max(sqrt(2a), cbrt(2c))`.
fn root_bound(a: u128, c: u128) -> u64 {
    let mut y = 1u128;
    while y * y < 2 * a || y * y * y < 2 * c {
        y *= 2;
    }
    // tighten by halving steps
    let mut lo = y / 2;
    while lo + 1 < y {
        let mid = (lo + y) / 2;
        if mid * mid >= 2 * a && mid * mid * mid >= 2 * c {
            y = mid;
        } else {
            lo = mid;
        }
    }
    (y + 1) as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(raw: &[(i64, i64)]) -> Vec<IntegerPoint> {
        let mut v: Vec<IntegerPoint> = raw.iter().map(|&(x, y)| IntegerPoint::new(x, y)).collect();
        v.sort();
        v
    }

    fn solve(d: i64) -> CurveSolutions {
        hessian_solve(&int(d), &SolveOptions::default()).unwrap()
    }

    #[test]
    fn d_25_reproduces_known_row() {
        let sols = solve(25);
        let expected = pts(&[
            (27, -19),
            (-19, 27),
            (5, -1),
            (-1, 5),
            (0, -1),
            (-1, 0),
            (-1, -5),
            (-5, -1),
            (-2, -7),
            (-7, -2),
            (-9, -13),
            (-13, -9),
        ]);
        assert_eq!(sols.points().cloned().collect::<Vec<_>>(), expected);
        assert_eq!(sols.len(), 12);
        // classification: trivial pair, square family for d = 5^2
        use super::super::PointClass::*;
        let class_of = |x: i64, y: i64| {
            sols.classified()
                .iter()
                .find(|(p, _)| *p == IntegerPoint::new(x, y))
                .unwrap()
                .1
        };
        assert_eq!(class_of(0, -1), Trivial);
        assert_eq!(class_of(-1, 0), Trivial);
        assert_eq!(class_of(5, -1), SquareFamily);
        assert_eq!(class_of(-5, -1), SquareFamily);
        assert_eq!(class_of(-1, 5), SquareFamily);
        assert_eq!(class_of(-1, -5), SquareFamily);
        assert_eq!(class_of(27, -19), Nontrivial);
    }

    #[test]
    fn d_1609_has_fourteen_points() {
        let sols = solve(1609);
        assert_eq!(sols.len(), 14);
        assert!(sols.contains(&IntegerPoint::new(1267, -772)));
    }

    #[test]
    fn d_zero_has_only_trivial_points() {
        let sols = solve(0);
        assert_eq!(
            sols.points().cloned().collect::<Vec<_>>(),
            pts(&[(-1, 0), (0, -1)])
        );
    }

    #[test]
    fn degenerate_parameter_is_an_error() {
        assert!(matches!(
            hessian_solve(&int(-3), &SolveOptions::default()),
            Err(CurveError::Degenerate(_))
        ));
    }

    #[test]
    fn oracle_examples() {
        // all twelve d = 25 points fall inside |x| <= 30
        let got = hessian_oracle(&int(25), 30).unwrap();
        assert_eq!(got.len(), 12);
        // |x| <= 7 keeps eight of them
        let got = hessian_oracle(&int(25), 7).unwrap();
        assert_eq!(got.len(), 8);

        let got = hessian_oracle(&int(0), 5).unwrap();
        assert_eq!(got, pts(&[(-1, 0), (0, -1)]));

        let got = hessian_oracle(&int(-1056), 250).unwrap();
        let expected = pts(&[
            (38, -201),
            (-201, 38),
            (7, -86),
            (-86, 7),
            (4, -65),
            (-65, 4),
            (0, -1),
            (-1, 0),
        ]);
        assert_eq!(got, expected);
    }

    #[test]
    fn solver_matches_oracle_on_small_parameters() {
        let mut oracle = HessianOracle::new();
        for d in [-50i64, -10, -4, -2, 0, 1, 4, 9, 16, 30, 49] {
            let sols = solve(d);
            let got = oracle.points(&int(d), 2000).unwrap();
            let solver_in_range: Vec<IntegerPoint> = sols
                .points()
                .filter(|p| p.x.abs() <= int(2000))
                .cloned()
                .collect();
            assert_eq!(solver_in_range, got, "d = {d}");
        }
    }

    #[test]
    fn square_family_always_present() {
        for s in 1i64..=12 {
            let d = s * s;
            let sols = solve(d);
            for (x, y) in [(s, -1), (-s, -1), (-1, s), (-1, -s)] {
                assert!(sols.contains(&IntegerPoint::new(x, y)), "d = {d} ({x},{y})");
            }
        }
    }
}
