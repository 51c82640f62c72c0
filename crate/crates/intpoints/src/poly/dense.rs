//! Dense univariate polynomials over the rationals.
//!
//! Coefficients are held as an integer vector over a single positive
//! denominator, so ring operations run on integers and reduce once per
//! result instead of once per coefficient operation.

use super::PolyError;
use crate::arith::{Integer, Rational};
use num_integer::Integer as IntegerOps;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Polynomial in `t` with rational coefficients.
///
/// Canonical form: no trailing zero coefficients, denominator positive and
/// coprime to the coefficient content, the zero polynomial is the empty
/// vector over denominator 1. Equality is structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalPoly {
    nums: Vec<Integer>,
    den: Integer,
}

fn content(nums: &[Integer]) -> Integer {
    let mut g = Integer::zero();
    for c in nums {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

impl RationalPoly {
    fn normalized(mut nums: Vec<Integer>, mut den: Integer) -> Self {
        assert!(!den.is_zero(), "polynomial denominator must be nonzero");
        while nums.last().is_some_and(Zero::is_zero) {
            nums.pop();
        }
        if nums.is_empty() {
            return RationalPoly {
                nums,
                den: Integer::one(),
            };
        }
        if den.is_negative() {
            den = -den;
            for c in &mut nums {
                *c = -&*c;
            }
        }
        let g = content(&nums).gcd(&den);
        if !g.is_one() {
            den /= &g;
            for c in &mut nums {
                *c /= &g;
            }
        }
        RationalPoly { nums, den }
    }

    pub fn zero() -> Self {
        RationalPoly {
            nums: Vec::new(),
            den: Integer::one(),
        }
    }

    pub fn one() -> Self {
        RationalPoly {
            nums: vec![Integer::one()],
            den: Integer::one(),
        }
    }

    /// The identity polynomial `t`.
    pub fn t() -> Self {
        RationalPoly {
            nums: vec![Integer::zero(), Integer::one()],
            den: Integer::one(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        let (num, den) = c.into();
        Self::normalized(vec![num], den)
    }

    pub fn monomial(coeff: Rational, degree: usize) -> Self {
        let (num, den) = coeff.into();
        let mut nums = vec![Integer::zero(); degree + 1];
        nums[degree] = num;
        Self::normalized(nums, den)
    }

    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        let mut den = Integer::one();
        for c in &coeffs {
            den = den.lcm(c.denom());
        }
        let nums = coeffs
            .into_iter()
            .map(|c| {
                let (n, d) = c.into();
                n * (&den / d)
            })
            .collect();
        Self::normalized(nums, den)
    }

    /// Test helper: integer coefficients, index = degree.
    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::normalized(
            coeffs.iter().map(|&c| Integer::from(c)).collect(),
            Integer::one(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.nums.is_empty()
    }

    /// Degree, with `None` as the sentinel for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.nums.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Rational {
        match self.nums.get(i) {
            Some(n) => Rational::new(n.clone(), self.den.clone()),
            None => Rational::zero(),
        }
    }

    pub fn coeffs(&self) -> Vec<Rational> {
        (0..self.nums.len()).map(|i| self.coeff(i)).collect()
    }

    pub fn leading_coeff(&self) -> Rational {
        match self.nums.last() {
            Some(n) => Rational::new(n.clone(), self.den.clone()),
            None => Rational::zero(),
        }
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.nums.iter().rev() {
            acc = acc * x + Rational::from_integer(c.clone());
        }
        acc / Rational::from_integer(self.den.clone())
    }

    pub fn eval_integer(&self, x: &Integer) -> Rational {
        let mut acc = Integer::zero();
        for c in self.nums.iter().rev() {
            acc = acc * x + c;
        }
        Rational::new(acc, self.den.clone())
    }

    pub fn scale(&self, k: &Rational) -> Self {
        if k.is_zero() || self.is_zero() {
            return Self::zero();
        }
        Self::normalized(
            self.nums.iter().map(|c| c * k.numer()).collect(),
            &self.den * k.denom(),
        )
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Quotient and remainder with `self = q * divisor + r`,
    /// `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self), PolyError> {
        if divisor.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        let dd = divisor.nums.len() - 1;
        if self.nums.len() < divisor.nums.len() {
            return Ok((Self::zero(), self.clone()));
        }
        // primitive part of the divisor; the rational scale is restored at
        // the end
        let cb = content(&divisor.nums);
        let bp: Vec<Integer> = divisor.nums.iter().map(|c| c / &cb).collect();
        let lead = bp.last().unwrap().clone();

        // invariant: remainder value = r / (den_a * lead^e)
        let mut r = self.nums.clone();
        let mut e: u32 = 0;
        let mut qterms: Vec<(usize, Rational)> = Vec::new();
        while r.len() > dd {
            let top = r.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let shift = r.len() - dd;
            qterms.push((
                shift,
                Rational::new(&top * &divisor.den, &self.den * lead.pow(e + 1) * &cb),
            ));
            for c in r.iter_mut() {
                *c *= &lead;
            }
            for (i, b) in bp.iter().take(dd).enumerate() {
                r[shift + i] -= &top * b;
            }
            // keep coefficients small: drop the lead factor when it divides
            // the whole row (always the case for exact divisions)
            if r.iter().all(|c| (c % &lead).is_zero()) {
                for c in &mut r {
                    *c /= &lead;
                }
            } else {
                e += 1;
            }
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        let mut qnums = vec![Rational::zero(); qterms.iter().map(|(s, _)| s + 1).max().unwrap_or(0)];
        for (s, c) in qterms {
            qnums[s] = c;
        }
        let q = Self::from_coeffs(qnums);
        let rem = Self::normalized(r, &self.den * lead.pow(e));
        Ok((q, rem))
    }

    /// Exact division in `Q[t]`; reports the nonzero remainder on failure.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self, PolyError> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(PolyError::NotDivisible {
                remainder: Box::new(r),
            })
        }
    }

    /// Exact composition `self(h(t))`, expanded.
    pub fn compose(&self, h: &Self) -> Self {
        let mut acc = Self::zero();
        for c in self.nums.iter().rev() {
            acc = &(&acc * h) + &Self::constant(Rational::new(c.clone(), self.den.clone()));
        }
        acc
    }

    pub fn parse(s: &str) -> Result<Self, PolyError> {
        super::parse::parse_rational_poly(s)
    }
}

impl Add for &RationalPoly {
    type Output = RationalPoly;
    fn add(self, rhs: &RationalPoly) -> RationalPoly {
        let den = self.den.lcm(&rhs.den);
        let sa = &den / &self.den;
        let sb = &den / &rhs.den;
        let len = self.nums.len().max(rhs.nums.len());
        let mut nums = vec![Integer::zero(); len];
        for (i, c) in self.nums.iter().enumerate() {
            nums[i] += c * &sa;
        }
        for (i, c) in rhs.nums.iter().enumerate() {
            nums[i] += c * &sb;
        }
        RationalPoly::normalized(nums, den)
    }
}

impl Sub for &RationalPoly {
    type Output = RationalPoly;
    fn sub(self, rhs: &RationalPoly) -> RationalPoly {
        self + &-rhs
    }
}

impl Mul for &RationalPoly {
    type Output = RationalPoly;
    fn mul(self, rhs: &RationalPoly) -> RationalPoly {
        if self.is_zero() || rhs.is_zero() {
            return RationalPoly::zero();
        }
        let mut nums = vec![Integer::zero(); self.nums.len() + rhs.nums.len() - 1];
        for (i, a) in self.nums.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.nums.iter().enumerate() {
                nums[i + j] += a * b;
            }
        }
        RationalPoly::normalized(nums, &self.den * &rhs.den)
    }
}

impl Neg for &RationalPoly {
    type Output = RationalPoly;
    fn neg(self) -> RationalPoly {
        RationalPoly {
            nums: self.nums.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for RationalPoly {
            type Output = RationalPoly;
            fn $method(self, rhs: RationalPoly) -> RationalPoly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&RationalPoly> for RationalPoly {
            type Output = RationalPoly;
            fn $method(self, rhs: &RationalPoly) -> RationalPoly {
                (&self).$method(rhs)
            }
        }
        impl $trait<RationalPoly> for &RationalPoly {
            type Output = RationalPoly;
            fn $method(self, rhs: RationalPoly) -> RationalPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for RationalPoly {
    type Output = RationalPoly;
    fn neg(self) -> RationalPoly {
        -&self
    }
}

impl fmt::Display for RationalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for i in (0..self.nums.len()).rev() {
            if self.nums[i].is_zero() {
                continue;
            }
            let c = self.coeff(i);
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let coeff_part = if mag.is_one() && i > 0 {
                None
            } else {
                Some(crate::arith::format_rational(&mag))
            };
            match (coeff_part, i) {
                (Some(c), 0) => write!(f, "{c}")?,
                (Some(c), 1) => write!(f, "{c}*t")?,
                (Some(c), _) => write!(f, "{c}*t^{i}")?,
                (None, 1) => write!(f, "t")?,
                (None, _) => write!(f, "t^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for RationalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalPoly({self})")
    }
}
