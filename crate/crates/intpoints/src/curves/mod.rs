//! Complete integer-point solvers for the three curve families
//!
//! * `H_d:     x^3 + y^3 + d*x*y + 1 = 0`                  (genus 1, d != -3)
//! * `X_T:     (x+y)^4 - 4x^2y^2 + T*x*y*(x+y) + 4 = 0`    (genus 3, T even, T != ±8)
//! * `Q_{a,b}: x^4 - 4y^2 + a*x*y + b = 0`                 (a^4 != 1024 b)
//!
//! Each solver enumerates the signed divisors of a resolvent integer; a
//! candidate divisor pins down one coordinate up to sign through a
//! perfect-square condition and the rest follows from integer roots of a
//! quadratic. Independent brute-force oracles cross-validate completeness.

mod balady;
mod hessian;
mod quartic_ab;
mod simcong;

pub use balady::balady_solve;
pub use hessian::{hessian_oracle, hessian_solve, HessianOracle};
pub use quartic_ab::quartic_ab_solve;
pub use simcong::{simcong_search, SimcongRow};

use crate::arith::{int, Integer, Rational};
use crate::factor::{FactorError, FactorOptions};
use num_traits::{Signed, Zero};
use std::collections::BTreeSet;
use std::fmt;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum CurveError {
    #[error("degenerate curve: {0}")]
    Degenerate(String),
    #[error("X_{0} is a singular curve")]
    Singular(Integer),
    #[error("X_T requires an even T, got {0}")]
    OddParameter(Integer),
    #[error("T(x, y) requires x*y*(x+y) != 0")]
    ZeroDenominator,
    #[error("argument out of the supported range: {0}")]
    OutOfRange(String),
    #[error(transparent)]
    Factor(#[from] FactorError),
}

/// A candidate or confirmed integer point.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntegerPoint {
    pub x: Integer,
    pub y: Integer,
}

impl IntegerPoint {
    pub fn new(x: impl Into<Integer>, y: impl Into<Integer>) -> Self {
        IntegerPoint {
            x: x.into(),
            y: y.into(),
        }
    }
}

impl fmt::Display for IntegerPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PointClass {
    Trivial,
    SquareFamily,
    Nontrivial,
}

impl fmt::Display for PointClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PointClass::Trivial => write!(f, "trivial"),
            PointClass::SquareFamily => write!(f, "square_family"),
            PointClass::Nontrivial => write!(f, "nontrivial"),
        }
    }
}

/// Curve family plus its parameter values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CurveParams {
    Hessian { d: Integer },
    Balady { t: Integer },
    QuarticAb { a: Integer, b: Integer },
}

impl CurveParams {
    pub fn family_name(&self) -> &'static str {
        match self {
            CurveParams::Hessian { .. } => "hessian",
            CurveParams::Balady { .. } => "balady",
            CurveParams::QuarticAb { .. } => "quartic_ab",
        }
    }

    /// Left-hand side of the curve equation at `(x, y)`; zero iff on-curve.
    pub fn equation_value(&self, x: &Integer, y: &Integer) -> Integer {
        match self {
            CurveParams::Hessian { d } => x.pow(3) + y.pow(3) + d * x * y + 1,
            CurveParams::Balady { t } => {
                let s = x + y;
                s.pow(4) - int(4) * x.pow(2) * y.pow(2) + t * x * y * s + 4
            }
            CurveParams::QuarticAb { a, b } => x.pow(4) - int(4) * y.pow(2) + a * x * y + b,
        }
    }

    pub fn is_on_curve(&self, p: &IntegerPoint) -> bool {
        self.equation_value(&p.x, &p.y).is_zero()
    }

    /// Classification of a point known to lie on the curve.
    pub fn classify(&self, p: &IntegerPoint) -> PointClass {
        let one = int(1);
        match self {
            CurveParams::Hessian { d } => {
                if (p.x == -&one && p.y.is_zero()) || (p.x.is_zero() && p.y == -&one) {
                    return PointClass::Trivial;
                }
                if !d.is_negative() {
                    if let Ok((s, true)) = crate::arith::isqrt(d) {
                        let ms = -&s;
                        let mo = -&one;
                        if (p.x == s || p.x == ms) && p.y == mo || p.x == mo && (p.y == s || p.y == ms)
                        {
                            return PointClass::SquareFamily;
                        }
                    }
                }
                PointClass::Nontrivial
            }
            CurveParams::Balady { .. } => {
                if (p.x == one && p.y == -&one) || (p.x == -&one && p.y == one) {
                    PointClass::Trivial
                } else {
                    PointClass::Nontrivial
                }
            }
            CurveParams::QuarticAb { .. } => {
                if p.x.is_zero() && (p.y == one || p.y == -&one) {
                    PointClass::Trivial
                } else {
                    PointClass::Nontrivial
                }
            }
        }
    }
}

/// The complete, sorted, classified solution set for one parameter value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveSolutions {
    params: CurveParams,
    points: Vec<(IntegerPoint, PointClass)>,
}

impl CurveSolutions {
    /// Verify, classify, sort and deduplicate a raw candidate set. Panics if
    /// a point fails re-substitution into the exact curve equation; solvers
    /// only insert verified points.
    fn collect(params: CurveParams, raw: BTreeSet<IntegerPoint>) -> Self {
        let points = raw
            .into_iter()
            .map(|p| {
                assert!(params.is_on_curve(&p), "{p} not on {}", params.family_name());
                let class = params.classify(&p);
                (p, class)
            })
            .collect();
        CurveSolutions { params, points }
    }

    pub fn params(&self) -> &CurveParams {
        &self.params
    }

    /// Points in lexicographic (x, y) order.
    pub fn points(&self) -> impl Iterator<Item = &IntegerPoint> {
        self.points.iter().map(|(p, _)| p)
    }

    pub fn classified(&self) -> &[(IntegerPoint, PointClass)] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: &IntegerPoint) -> bool {
        self.points.binary_search_by(|(q, _)| q.cmp(p)).is_ok()
    }

    pub fn nontrivial_count(&self) -> usize {
        self.points
            .iter()
            .filter(|(_, c)| *c != PointClass::Trivial)
            .count()
    }
}

/// Options shared by the solvers; currently just the factorization controls.
#[derive(Debug, Clone, Copy, Default)]
pub struct SolveOptions {
    pub factor: FactorOptions,
}

/// The degree-2 projection `(x, y) -> (x + y, x*y)`; maps `X_T` onto `Q_{T,4}`.
pub fn phi_project(p: &IntegerPoint) -> IntegerPoint {
    IntegerPoint {
        x: &p.x + &p.y,
        y: &p.x * &p.y,
    }
}

/// `T(x, y) = ((x+y)^4 - 4x^2y^2 + 4) / (x*y*(x+y))`, exact.
pub fn t_of_xy(p: &IntegerPoint) -> Result<Rational, CurveError> {
    let s = &p.x + &p.y;
    let den = &p.x * &p.y * &s;
    if den.is_zero() {
        return Err(CurveError::ZeroDenominator);
    }
    let num = s.pow(4) - int(4) * p.x.pow(2) * p.y.pow(2) + 4;
    Ok(Rational::new(num, den))
}

/// Exhaustive on-curve points with `|x| <= bound` and `|y| <= bound`, found
/// by solving the curve equation in `y` for each `x` (cubic, quartic or
/// quadratic, depending on the family). Independent of the divisor solvers.
pub fn box_oracle(params: &CurveParams, bound: u64) -> Result<Vec<IntegerPoint>, CurveError> {
    let bound_i = Integer::from(bound);
    let mut out = BTreeSet::new();
    let mut x = -bound_i.clone();
    while x <= bound_i {
        match params {
            // y^3 + (d x) y + (x^3 + 1) = 0: integer roots divide x^3 + 1
            CurveParams::Hessian { d } => {
                let c = x.pow(3) + int(1);
                if c.is_zero() {
                    // x = -1: y (y^2 - d) = 0
                    out.insert(IntegerPoint::new(x.clone(), 0));
                    if let Ok((s, true)) = crate::arith::isqrt(d) {
                        if s <= bound_i {
                            out.insert(IntegerPoint::new(x.clone(), s.clone()));
                            out.insert(IntegerPoint::new(x.clone(), -s));
                        }
                    }
                } else {
                    for y in small_divisors_within(&c, &bound_i)? {
                        if params.equation_value(&x, &y).is_zero() {
                            out.insert(IntegerPoint::new(x.clone(), y));
                        }
                    }
                }
            }
            // monic quartic in y with constant term x^4 + 4
            CurveParams::Balady { .. } => {
                let c = x.pow(4) + int(4);
                for y in small_divisors_within(&c, &bound_i)? {
                    if params.equation_value(&x, &y).is_zero() {
                        out.insert(IntegerPoint::new(x.clone(), y));
                    }
                }
            }
            // quadratic in y: 4y^2 - a x y - (x^4 + b) = 0
            CurveParams::QuarticAb { a, b } => {
                let disc = (a * &x).pow(2) + int(16) * (x.pow(4) + b.clone());
                if let Ok((r, true)) = crate::arith::isqrt(&disc) {
                    for root in [a * &x + &r, a * &x - &r] {
                        if (&root % 8u8).is_zero() {
                            let y = root / int(8);
                            if y.abs() <= bound_i && params.equation_value(&x, &y).is_zero() {
                                out.insert(IntegerPoint::new(x.clone(), y));
                            }
                        }
                    }
                }
            }
        }
        x += 1;
    }
    Ok(out.into_iter().collect())
}

/// Signed divisors of `n != 0` with absolute value at most `bound`.
fn small_divisors_within(n: &Integer, bound: &Integer) -> Result<Vec<Integer>, CurveError> {
    let f = crate::factor::factorize(n, &FactorOptions::default())?;
    Ok(f.signed_divisors()
        .filter(|d| d.abs() <= *bound)
        .collect())
}

/// Low-bits filter rejecting most non-squares before an exact isqrt;
/// squares mod 64 fall in a 12-element set.
pub(crate) fn maybe_square(n: &Integer) -> bool {
    if n.is_negative() {
        return false;
    }
    const SQUARES_MOD_64: u64 = {
        let mut mask = 0u64;
        let mut i = 0u64;
        while i < 64 {
            mask |= 1 << ((i * i) % 64);
            i += 1;
        }
        mask
    };
    let low = n.iter_u64_digits().next().unwrap_or(0) % 64;
    SQUARES_MOD_64 & (1 << low) != 0
}

/// Exact square root if `n` is a perfect square.
pub(crate) fn exact_sqrt(n: &Integer) -> Option<Integer> {
    if !maybe_square(n) {
        return None;
    }
    match crate::arith::isqrt(n) {
        Ok((r, true)) => Some(r),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: i64, y: i64) -> IntegerPoint {
        IntegerPoint::new(x, y)
    }

    #[test]
    fn phi_projection_examples() {
        assert_eq!(phi_project(&pt(-1, -5)), pt(-6, 5));
        assert_eq!(phi_project(&pt(1, -1)), pt(0, -1));
        // (-5, 37) on X_154 maps onto Q_154
        let image = phi_project(&pt(-5, 37));
        assert_eq!(image, pt(32, -185));
        let q = CurveParams::QuarticAb {
            a: int(154),
            b: int(4),
        };
        assert!(q.is_on_curve(&image));
    }

    #[test]
    fn t_of_xy_examples() {
        assert_eq!(t_of_xy(&pt(2, 2)).unwrap(), Rational::new(int(49), int(4)));
        assert_eq!(t_of_xy(&pt(-2, 4)).unwrap(), Rational::new(int(59), int(4)));
        assert_eq!(
            t_of_xy(&pt(148, 4322)).unwrap(),
            Rational::new(int(556227), int(4))
        );
        assert_eq!(t_of_xy(&pt(1, 1)).unwrap(), Rational::from_integer(int(8)));
        assert_eq!(t_of_xy(&pt(1, -1)), Err(CurveError::ZeroDenominator));
        assert_eq!(t_of_xy(&pt(0, 5)), Err(CurveError::ZeroDenominator));
    }

    #[test]
    fn box_oracle_examples() {
        let got = box_oracle(&CurveParams::Balady { t: int(40) }, 10).unwrap();
        assert_eq!(got, vec![pt(-5, -1), pt(-1, -5), pt(-1, 1), pt(1, -1)]);

        let got = box_oracle(
            &CurveParams::QuarticAb {
                a: int(1000),
                b: int(4),
            },
            20,
        )
        .unwrap();
        assert_eq!(got, vec![pt(-10, 1), pt(0, -1), pt(0, 1), pt(10, -1)]);

        // the complete solution set for d = 49, filtered to the box
        let got = box_oracle(&CurveParams::Hessian { d: int(49) }, 20).unwrap();
        let row = [
            (19, -7),
            (-7, 19),
            (7, -1),
            (-1, 7),
            (0, -1),
            (-1, 0),
            (-1, -7),
            (-7, -1),
            (-7, -18),
            (-18, -7),
        ];
        let mut expected: Vec<IntegerPoint> = row.iter().map(|&(x, y)| pt(x, y)).collect();
        expected.sort();
        assert_eq!(got, expected);
    }

    #[test]
    fn square_filter_agrees_with_isqrt() {
        for v in 0..4096i64 {
            let n = int(v);
            let exact = matches!(crate::arith::isqrt(&n), Ok((_, true)));
            if exact {
                assert!(maybe_square(&n), "{v}");
                assert!(exact_sqrt(&n).is_some());
            }
            assert_eq!(exact_sqrt(&n).is_some(), exact, "{v}");
        }
        assert!(!maybe_square(&int(-4)));
    }
}
