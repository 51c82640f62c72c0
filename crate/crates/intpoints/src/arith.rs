//! Exact scalar arithmetic: arbitrary-precision integers and rationals,
//! integer square roots, perfect-square detection and p-adic valuations.
//!
//! All values are immutable and all operations are pure, so everything here
//! is safe for unrestricted concurrent use.

use num_integer::Integer as IntegerOps;

use num_traits::{One, Signed, Zero};
use std::str::FromStr;

/// Signed arbitrary-precision integer.
pub type Integer = num_bigint::BigInt;
/// Exact rational number; always reduced, denominator always positive.
pub type Rational = num_rational::BigRational;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ArithError {
    #[error("integer square root of negative value")]
    NegativeSquareRoot,
    #[error("p-adic valuation requires a nonzero argument")]
    ZeroValuation,
    #[error("{0} is not prime")]
    NotPrime(Integer),
    #[error("cannot parse {kind} from {input:?}")]
    Parse { kind: &'static str, input: String },
}

/// Convenience constructor for small integers.
pub fn int(n: i64) -> Integer {
    Integer::from(n)
}

/// Convenience constructor for small rationals; panics on `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(Integer::from(num), Integer::from(den))
}

/// Floor of the square root of `n`, plus whether `n` is a perfect square.
///
/// Errors on negative input; exactness is decided by re-squaring, never by
/// rounding.
pub fn isqrt(n: &Integer) -> Result<(Integer, bool), ArithError> {
    if n.is_negative() {
        return Err(ArithError::NegativeSquareRoot);
    }
    let root = n.sqrt();
    let exact = &root * &root == *n;
    Ok((root, exact))
}

/// True iff `n` is the square of an integer.
pub fn is_perfect_square(n: &Integer) -> bool {
    !n.is_negative() && matches!(isqrt(n), Ok((_, true)))
}

/// ν_p of a nonzero integer: the exponent of `p` in `n`.
pub(crate) fn int_valuation(n: &Integer, p: &Integer) -> i64 {
    debug_assert!(!n.is_zero());
    let mut v = 0i64;
    let mut m = n.abs();
    loop {
        let (q, r) = m.div_rem(p);
        if !r.is_zero() {
            return v;
        }
        v += 1;
        m = q;
    }
}

/// p-adic valuation of a nonzero rational: ν_p(numerator) − ν_p(denominator).
///
/// `prime` must actually be prime; composite moduli are rejected.
pub fn p_adic_valuation(q: &Rational, prime: &Integer) -> Result<i64, ArithError> {
    if q.is_zero() {
        return Err(ArithError::ZeroValuation);
    }
    if !crate::factor::is_prime(prime) {
        return Err(ArithError::NotPrime(prime.clone()));
    }
    Ok(int_valuation(q.numer(), prime) - int_valuation(q.denom(), prime))
}

/// Parse a decimal integer (no exponent notation).
pub fn parse_integer(s: &str) -> Result<Integer, ArithError> {
    Integer::from_str(s.trim()).map_err(|_| ArithError::Parse {
        kind: "integer",
        input: s.to_string(),
    })
}

/// Parse a rational written as `p/q` or as a plain integer.
pub fn parse_rational(s: &str) -> Result<Rational, ArithError> {
    let t = s.trim();
    let err = || ArithError::Parse {
        kind: "rational",
        input: s.to_string(),
    };
    match t.split_once('/') {
        None => Ok(Rational::from_integer(parse_integer(t)?)),
        Some((num, den)) => {
            let num = Integer::from_str(num.trim()).map_err(|_| err())?;
            let den = Integer::from_str(den.trim()).map_err(|_| err())?;
            if den.is_zero() {
                return Err(err());
            }
            Ok(Rational::new(num, den))
        }
    }
}

/// Format a rational as `p/q`, or as a bare integer when the denominator is 1.
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn isqrt_examples() {
        assert_eq!(isqrt(&int(0)).unwrap(), (int(0), true));
        assert_eq!(isqrt(&int(492804)).unwrap(), (int(702), true));
        assert_eq!(isqrt(&int(10)).unwrap(), (int(3), false));
        assert_eq!(isqrt(&int(-1)), Err(ArithError::NegativeSquareRoot));
    }

    #[test]
    fn p_adic_examples() {
        assert_eq!(p_adic_valuation(&rat(8, 1), &int(2)).unwrap(), 3);
        assert_eq!(p_adic_valuation(&rat(3, 4), &int(2)).unwrap(), -2);
        assert_eq!(p_adic_valuation(&rat(5, 1), &int(3)).unwrap(), 0);
        assert_eq!(
            p_adic_valuation(&rat(0, 1), &int(2)),
            Err(ArithError::ZeroValuation)
        );
        assert_eq!(
            p_adic_valuation(&rat(1, 2), &int(6)),
            Err(ArithError::NotPrime(int(6)))
        );
    }

    #[test]
    fn rational_io_round_trips() {
        let q = parse_rational("-77/2").unwrap();
        assert_eq!(format_rational(&q), "-77/2");
        assert_eq!(format_rational(&rat(4, 2)), "2");
        assert_eq!(parse_rational("10").unwrap(), rat(10, 1));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_integer("1e5").is_err());
    }

    /// Schoolbook fractions without reduction, as an independent oracle for
    /// the reduced arithmetic.
    #[derive(Clone, Debug)]
    struct Naive {
        num: Integer,
        den: Integer,
    }

    impl Naive {
        fn add(&self, o: &Naive) -> Naive {
            Naive {
                num: &self.num * &o.den + &o.num * &self.den,
                den: &self.den * &o.den,
            }
        }
        fn mul(&self, o: &Naive) -> Naive {
            Naive {
                num: &self.num * &o.num,
                den: &self.den * &o.den,
            }
        }
        fn to_rational(&self) -> Rational {
            Rational::new(self.num.clone(), self.den.clone())
        }
    }

    proptest! {
        #[test]
        fn reduced_arithmetic_matches_naive(an in -50i64..50, ad in 1i64..30,
                                            bn in -50i64..50, bd in 1i64..30) {
            let a = rat(an, ad);
            let b = rat(bn, bd);
            let na = Naive { num: int(an), den: int(ad) };
            let nb = Naive { num: int(bn), den: int(bd) };
            prop_assert_eq!(&a + &b, na.add(&nb).to_rational());
            prop_assert_eq!(&a * &b, na.mul(&nb).to_rational());
        }

        #[test]
        fn isqrt_brackets(n in 0u64..1_000_000_000_000) {
            let n = Integer::from(n);
            let (r, exact) = isqrt(&n).unwrap();
            prop_assert!(&r * &r <= n);
            prop_assert!((&r + 1) * (&r + 1) > n);
            prop_assert_eq!(exact, &r * &r == n);
        }

        #[test]
        fn valuation_is_additive(qn in 1i64..200, qd in 1i64..200,
                                 rn in 1i64..200, rd in 1i64..200,
                                 p in prop::sample::select(vec![2i64, 3, 5, 7])) {
            let q = rat(qn, qd);
            let r = rat(rn, rd);
            let p = int(p);
            let lhs = p_adic_valuation(&(&q * &r), &p).unwrap();
            prop_assert_eq!(lhs,
                p_adic_valuation(&q, &p).unwrap() + p_adic_valuation(&r, &p).unwrap());
        }
    }
}
