//! Polynomial-pair solutions of the two divisibility congruences
//! `fg | f^3 + g^3 + 1` (cubic) and `fg | f^4 - 4g^2 + 4` (quartic), the
//! orbit construction extending any cubic solution to an infinite chain, the
//! catalog of known non-trivial solutions, and the cyclic cubic/quartic
//! field polynomials attached to them.
//!
//! Two sign conventions for the quartic quotient coexist in the literature:
//! [`verify_quartic`] returns `L = (f^4-4g^2+4)/(4fg)`, the orientation under
//! which the cataloged pairs reproduce their quoted `L` values, while
//! [`quartic_field_poly`] uses `L = -(s^4-4p^2+4)/(4sp)` in the elementary
//! symmetric variables `s = x+y`, `p = xy`.

use crate::arith::{int, rat, Integer, Rational};
use crate::factor::{factorize_default, FactorError};
use crate::poly::{PolyError, RationalPoly, Var};
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Degrees triple along an orbit; bound the output size.
pub const DEFAULT_ORBIT_DEGREE_CAP: usize = 2000;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum CongruenceError {
    #[error("f and g must be nonzero")]
    ZeroInput,
    #[error("f*g does not divide the defining combination; remainder {remainder}")]
    NotDivisible { remainder: Box<RationalPoly> },
    #[error("orbit seeds must be cubic solutions")]
    NotCubicSeed,
    #[error("orbit degree cap {cap} exceeded (next degree {next})")]
    DegreeCapExceeded { cap: usize, next: usize },
    #[error("leading-coefficient check requires degree >= 1")]
    ConstantPolynomial,
    #[error("x + y and x*y must both be nonzero")]
    ZeroSymmetricFunction,
    #[error(transparent)]
    Factor(#[from] FactorError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Cubic,
    Quartic,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Cubic => write!(f, "cubic"),
            Family::Quartic => write!(f, "quartic"),
        }
    }
}

/// A verified polynomial pair together with its exact quotient
/// (λ for cubic pairs, L for quartic ones).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceSolution {
    f: RationalPoly,
    g: RationalPoly,
    family: Family,
    quotient: RationalPoly,
    label: String,
}

impl CongruenceSolution {
    pub fn new_cubic(
        f: RationalPoly,
        g: RationalPoly,
        label: impl Into<String>,
    ) -> Result<Self, CongruenceError> {
        let quotient = verify_cubic(&f, &g)?;
        Ok(CongruenceSolution {
            f,
            g,
            family: Family::Cubic,
            quotient,
            label: label.into(),
        })
    }

    pub fn new_quartic(
        f: RationalPoly,
        g: RationalPoly,
        label: impl Into<String>,
    ) -> Result<Self, CongruenceError> {
        let quotient = verify_quartic(&f, &g)?;
        Ok(CongruenceSolution {
            f,
            g,
            family: Family::Quartic,
            quotient,
            label: label.into(),
        })
    }

    pub fn f(&self) -> &RationalPoly {
        &self.f
    }

    pub fn g(&self) -> &RationalPoly {
        &self.g
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// λ for cubic solutions, L for quartic ones.
    pub fn quotient(&self) -> &RationalPoly {
        &self.quotient
    }

    pub fn label(&self) -> &str {
        &self.label
    }
}

/// Check `fg | f^3 + g^3 + 1` in `Q[t]` and return the exact quotient λ.
pub fn verify_cubic(f: &RationalPoly, g: &RationalPoly) -> Result<RationalPoly, CongruenceError> {
    if f.is_zero() || g.is_zero() {
        return Err(CongruenceError::ZeroInput);
    }
    let num = &(&f.pow(3) + &g.pow(3)) + &RationalPoly::one();
    num.exact_div(&(f * g)).map_err(|e| match e {
        PolyError::NotDivisible { remainder } => CongruenceError::NotDivisible { remainder },
        other => CongruenceError::Poly(other),
    })
}

/// Check `fg | f^4 - 4g^2 + 4` in `Q[t]` and return `L = (f^4-4g^2+4)/(4fg)`.
pub fn verify_quartic(f: &RationalPoly, g: &RationalPoly) -> Result<RationalPoly, CongruenceError> {
    if f.is_zero() || g.is_zero() {
        return Err(CongruenceError::ZeroInput);
    }
    let four = RationalPoly::constant(rat(4, 1));
    let num = &(&f.pow(4) - &g.pow(2).scale(&rat(4, 1))) + &four;
    let den = (f * g).scale(&rat(4, 1));
    num.exact_div(&den).map_err(|e| match e {
        PolyError::NotDivisible { remainder } => CongruenceError::NotDivisible { remainder },
        other => CongruenceError::Poly(other),
    })
}

/// Extend a cubic solution along `f_n = g_{n-1}`, `g_n = (g_{n-1}^3+1)/f_{n-1}`.
///
/// Returns the chain starting at the seed, `steps + 1` entries in total; each
/// entry is re-verified from scratch.
pub fn orbit(
    seed: &CongruenceSolution,
    steps: usize,
) -> Result<Vec<CongruenceSolution>, CongruenceError> {
    orbit_with_cap(seed, steps, DEFAULT_ORBIT_DEGREE_CAP)
}

pub fn orbit_with_cap(
    seed: &CongruenceSolution,
    steps: usize,
    degree_cap: usize,
) -> Result<Vec<CongruenceSolution>, CongruenceError> {
    if seed.family != Family::Cubic {
        return Err(CongruenceError::NotCubicSeed);
    }
    let mut chain = Vec::with_capacity(steps + 1);
    chain.push(seed.clone());
    let mut f = seed.f.clone();
    let mut g = seed.g.clone();
    for k in 1..=steps {
        let next_deg = match (f.degree(), g.degree()) {
            (Some(df), Some(dg)) => 3 * dg - df,
            _ => return Err(CongruenceError::ZeroInput),
        };
        if next_deg > degree_cap {
            return Err(CongruenceError::DegreeCapExceeded {
                cap: degree_cap,
                next: next_deg,
            });
        }
        let num = &g.pow(3) + &RationalPoly::one();
        // valid seeds always divide exactly; a remainder here is an internal
        // invariant violation worth surfacing loudly
        let g_next = num.exact_div(&f).map_err(|e| match e {
            PolyError::NotDivisible { remainder } => CongruenceError::NotDivisible { remainder },
            other => CongruenceError::Poly(other),
        })?;
        let f_next = g;
        let sol = CongruenceSolution::new_cubic(
            f_next.clone(),
            g_next.clone(),
            format!("{}+{}", seed.label, k),
        )?;
        chain.push(sol);
        f = f_next;
        g = g_next;
    }
    Ok(chain)
}

fn entry(family: Family, f: &str, g: &str, label: &str) -> CongruenceSolution {
    let f = RationalPoly::parse(f).expect("catalog polynomial");
    let g = RationalPoly::parse(g).expect("catalog polynomial");
    match family {
        Family::Cubic => CongruenceSolution::new_cubic(f, g, label),
        Family::Quartic => CongruenceSolution::new_quartic(f, g, label),
    }
    .expect("catalog entry verifies")
}

/// The known non-trivial solutions (plus one composed trivial pair kept for
/// tests): eight cubic entries and three quartic ones, each re-verified on
/// construction.
pub fn catalog() -> Vec<CongruenceSolution> {
    vec![
        entry(Family::Cubic, "t", "-t - 1", "m1.1"),
        entry(Family::Cubic, "t", "-t^2 + t - 1", "m1.2"),
        entry(Family::Cubic, "t", "-t^3 - 1", "m1.3"),
        entry(Family::Cubic, "1/2*(t^2 - t + 1)", "1/2*(t^2 + t + 1)", "sol22"),
        entry(Family::Cubic, "-t^2", "t^3 - 1", "sol23"),
        entry(
            Family::Cubic,
            "1/2*(t^2 - t + 1)",
            "1/4*(t^2 + t + 1)*(t^2 - t + 3)",
            "sol24",
        ),
        entry(
            Family::Cubic,
            "-t^2 + t - 1",
            "t*(t^4 - 2*t^3 + 4*t^2 - 3*t + 3)",
            "sol25",
        ),
        entry(Family::Cubic, "t^2", "-t^6 - 1", "triv26"),
        entry(Family::Quartic, "t", "1/2*(t^2 + 2*t + 2)", "m1Q.1"),
        entry(
            Family::Quartic,
            "t",
            "1/4*(t^2 + 2*t + 2)*(t^2 - 2*t + 2)",
            "m1Q.2",
        ),
        entry(Family::Quartic, "4*t*(t^2 - t + 1)", "2*t^2 - 2*t + 1", "thm31"),
    ]
}

/// Look up a catalog entry by label.
pub fn catalog_entry(label: &str) -> Option<CongruenceSolution> {
    catalog().into_iter().find(|s| s.label() == label)
}

/// Human-auditable text rendering of the catalog.
pub fn catalog_text() -> String {
    let mut out = String::new();
    for sol in catalog() {
        let quotient_name = match sol.family() {
            Family::Cubic => "lambda",
            Family::Quartic => "L",
        };
        out.push_str(&format!(
            "[{}] family: {}\n  f = {}\n  g = {}\n  {} = {}\n",
            sol.label(),
            sol.family(),
            sol.f(),
            sol.g(),
            quotient_name,
            sol.quotient()
        ));
    }
    out
}

/// Raw coefficient assignments solving the systems `S(m,n)` / `R(m,n)`
/// before any reparametrization, used to exercise the symbolic systems.
pub mod raw {
    use super::*;

    pub type Assignment = BTreeMap<Var, Rational>;

    fn assign(pairs: Vec<(Var, Rational)>) -> Assignment {
        pairs.into_iter().collect()
    }

    /// Degree-(2,2) cubic family: `a0=3/8, b0=7/8, a2=b2=b1^2/2`.
    pub fn sol22(b1: &Rational) -> Assignment {
        let half_sq = b1 * b1 / rat(2, 1);
        assign(vec![
            (Var::A(0), rat(3, 8)),
            (Var::A(2), half_sq.clone()),
            (Var::B(0), rat(7, 8)),
            (Var::B(1), b1.clone()),
            (Var::B(2), half_sq),
        ])
    }

    /// Degree-(2,3) cubic family: `b0=-1, b3=u^3, a2=-u^2, a0=0`.
    pub fn sol23(u: &Rational) -> Assignment {
        assign(vec![
            (Var::A(0), Rational::zero()),
            (Var::A(2), -(u * u)),
            (Var::B(0), rat(-1, 1)),
            (Var::B(1), Rational::zero()),
            (Var::B(2), Rational::zero()),
            (Var::B(3), u * u * u),
        ])
    }

    /// Degree-(2,4) cubic family:
    /// `b0=77/64, b1=11u/4, b2=9u^2/2, b3=4u^3, b4=4u^4, a2=2u^2, a0=3/8`.
    pub fn sol24(u: &Rational) -> Assignment {
        let u2 = u * u;
        assign(vec![
            (Var::A(0), rat(3, 8)),
            (Var::A(2), rat(2, 1) * &u2),
            (Var::B(0), rat(77, 64)),
            (Var::B(1), rat(11, 4) * u),
            (Var::B(2), rat(9, 2) * &u2),
            (Var::B(3), rat(4, 1) * &u2 * u),
            (Var::B(4), rat(4, 1) * &u2 * &u2),
        ])
    }

    /// Degree-(2,5) cubic solution at the parameter value `u = -1` (the only
    /// one solving the full system): `a0=-3/4, a2=u^5, b4=-u^31/2, b5=u^2`
    /// with `b0..b3` from the triangular subsystem.
    pub fn sol25() -> Assignment {
        assign(vec![
            (Var::A(0), rat(-3, 4)),
            (Var::A(2), rat(-1, 1)),
            (Var::B(0), rat(37, 32)),
            (Var::B(1), rat(37, 16)),
            (Var::B(2), rat(5, 4)),
            (Var::B(3), rat(5, 2)),
            (Var::B(4), rat(1, 2)),
            (Var::B(5), rat(1, 1)),
        ])
    }

    /// The two solution branches of the quartic `(3,2)` system. Branch 1
    /// closes with `b2 = -9b1^2/2`, branch 2 with `b2 = +9b1^2/2`; in both,
    /// `a3 = ±27b1^3/2`.
    pub fn thm31(branch: u8, u: &Rational, a3_positive: bool) -> Assignment {
        let b1 = u.clone();
        let b1sq = &b1 * &b1;
        let sign = if a3_positive { rat(1, 1) } else { rat(-1, 1) };
        let a3 = sign * rat(27, 2) * &b1sq * &b1;
        let (b2, b0, a0, a1);
        match branch {
            1 => {
                b2 = rat(-9, 2) * &b1sq;
                b0 = (-rat(2, 1) * &b1sq - &b2) / &b2;
                a0 = rat(2, 1) * &a3 * &b1 * (&b1sq + &b2) / (&b2 * &b2 * &b2);
                a1 = (-rat(3, 1) * &a3 * &b1sq - rat(2, 1) * &a3 * &b2) / (&b2 * &b2);
            }
            2 => {
                b2 = rat(9, 2) * &b1sq;
                b0 = (&b2 - rat(2, 1) * &b1sq) / &b2;
                a0 = -rat(2, 1) * &a3 * &b1 * (&b2 - &b1sq) / (&b2 * &b2 * &b2);
                a1 = (rat(2, 1) * &a3 * &b2 - rat(3, 1) * &a3 * &b1sq) / (&b2 * &b2);
            }
            other => panic!("branch must be 1 or 2, got {other}"),
        }
        assign(vec![
            (Var::A(0), a0),
            (Var::A(1), a1),
            (Var::A(3), a3),
            (Var::B(0), b0),
            (Var::B(1), b1),
            (Var::B(2), b2),
        ])
    }

    /// Build the polynomial pair named by an assignment, for direct
    /// divisibility checks. `f` omits the `a_{m-1}` coefficient.
    pub fn to_pair(assignment: &Assignment, m: u32, n: u32) -> (RationalPoly, RationalPoly) {
        let coeff = |v: Var| assignment.get(&v).cloned().unwrap_or_else(Rational::zero);
        let mut f = vec![Rational::zero(); m as usize + 1];
        for i in 0..=m {
            if m >= 2 && i == m - 1 {
                continue;
            }
            f[i as usize] = coeff(Var::A(i));
        }
        let g = (0..=n).map(|j| coeff(Var::B(j))).collect();
        (RationalPoly::from_coeffs(f), RationalPoly::from_coeffs(g))
    }
}

/// Condition on the leading coefficient `a_m` of a degree-`m` polynomial:
/// true iff `|ν_p(a_m)| < m` for every prime `p`, i.e. the coefficient is
/// free of m-th powers of integers.
pub fn leading_coeff_normalized(f: &RationalPoly) -> Result<bool, CongruenceError> {
    let m = match f.degree() {
        Some(m) if m >= 1 => m as i64,
        _ => return Err(CongruenceError::ConstantPolynomial),
    };
    let lead = f.leading_coeff();
    for part in [lead.numer(), lead.denom()] {
        if part.is_one() || *part == -Integer::one() {
            continue;
        }
        let fact = factorize_default(part)?;
        for (_, e) in fact.prime_powers() {
            if i64::from(*e) >= m {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Monic field polynomial of degree 3 (constant term −1) or 4 (constant
/// term +1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldPolynomial {
    degree: u8,
    poly: RationalPoly,
}

impl FieldPolynomial {
    fn checked(degree: u8, poly: RationalPoly) -> Self {
        assert_eq!(poly.degree(), Some(degree as usize));
        assert!(poly.leading_coeff().is_one(), "field polynomial is monic");
        let expected_const = if degree == 3 { rat(-1, 1) } else { rat(1, 1) };
        assert_eq!(poly.coeff(0), expected_const);
        FieldPolynomial { degree, poly }
    }

    pub fn degree(&self) -> u8 {
        self.degree
    }

    pub fn poly(&self) -> &RationalPoly {
        &self.poly
    }

    pub fn coeffs(&self) -> Vec<Rational> {
        self.poly.coeffs()
    }
}

impl fmt::Display for FieldPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.fmt(f)
    }
}

/// `X^3 + a(n) X^2 + λ(n) X - 1` with
/// `a(n) = 3(f(n)^2 + g(n)^2 - f(n)g(n)) - λ(n)(f(n) + g(n))`.
pub fn cubic_field_poly(sol: &CongruenceSolution, n: &Rational) -> FieldPolynomial {
    let fv = sol.f().eval(n);
    let gv = sol.g().eval(n);
    let lam = sol.quotient().eval(n);
    let a = rat(3, 1) * (&fv * &fv + &gv * &gv - &fv * &gv) - &lam * (&fv + &gv);
    FieldPolynomial::checked(
        3,
        RationalPoly::from_coeffs(vec![rat(-1, 1), lam, a, Rational::one()]),
    )
}

/// The quartic field data attached to an integer point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuarticFieldPoly {
    pub l: Rational,
    pub poly: FieldPolynomial,
    /// Whether `L` itself is an integer.
    pub l_integral: bool,
    /// Whether `2L` is an integer (the roots are then still units).
    pub twice_l_integral: bool,
}

/// `X^4 + (2s^3+Ls^2-4ps+2Lp) X^3 - (3s^2+3Ls-6p) X^2 + 2L X + 1` with
/// `s = x+y`, `p = xy` and `L = -(s^4-4p^2+4)/(4sp)`; symmetric in `x, y`.
pub fn quartic_field_poly(x: &Integer, y: &Integer) -> Result<QuarticFieldPoly, CongruenceError> {
    let s = x + y;
    let p = x * y;
    if s.is_zero() || p.is_zero() {
        return Err(CongruenceError::ZeroSymmetricFunction);
    }
    let s4 = s.pow(4);
    let p2 = &p * &p;
    let l = -Rational::new(s4 - int(4) * p2 + int(4), int(4) * &s * &p);
    let sr = Rational::from_integer(s);
    let pr = Rational::from_integer(p);
    let c3 =
        rat(2, 1) * &sr * &sr * &sr + &l * &sr * &sr - rat(4, 1) * &pr * &sr + rat(2, 1) * &l * &pr;
    let c2 = -(rat(3, 1) * &sr * &sr + rat(3, 1) * &l * &sr - rat(6, 1) * &pr);
    let c1 = rat(2, 1) * &l;
    let poly = FieldPolynomial::checked(
        4,
        RationalPoly::from_coeffs(vec![Rational::one(), c1, c2, c3, Rational::one()]),
    );
    let l_integral = l.denom().is_one();
    let twice_l_integral = (rat(2, 1) * &l).denom().is_one();
    Ok(QuarticFieldPoly {
        l,
        poly,
        l_integral,
        twice_l_integral,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> RationalPoly {
        RationalPoly::parse(s).unwrap()
    }

    #[test]
    fn verify_cubic_examples() {
        assert_eq!(verify_cubic(&p("t"), &p("-t - 1")).unwrap(), p("3"));
        assert_eq!(
            verify_cubic(&p("1/2*(t^2-t+1)"), &p("1/2*(t^2+t+1)")).unwrap(),
            p("t^2 + 5")
        );
        assert_eq!(
            verify_cubic(&p("-t^2"), &p("t^3 - 1")).unwrap(),
            p("-t*(t^3 - 3)")
        );
        assert_eq!(
            verify_cubic(&RationalPoly::zero(), &p("t")),
            Err(CongruenceError::ZeroInput)
        );
        assert!(matches!(
            verify_cubic(&p("t"), &p("t + 1")),
            Err(CongruenceError::NotDivisible { .. })
        ));
    }

    #[test]
    fn verify_quartic_examples() {
        assert_eq!(
            verify_quartic(&p("t"), &p("1/2*(t^2+2*t+2)")).unwrap(),
            p("-2")
        );
        assert_eq!(
            verify_quartic(&p("t"), &p("1/4*(t^4+4)")).unwrap(),
            p("-1/4*t^3")
        );
        let l = verify_quartic(&p("4*t*(t^2-t+1)"), &p("2*t^2-2*t+1")).unwrap();
        assert_eq!(l, p("8*t^7 - 16*t^6 + 28*t^5 - 20*t^4 + 14*t^3 + t + 1"));
        assert_eq!(l.eval(&rat(1, 1)), rat(16, 1));
    }

    #[test]
    fn catalog_verifies_with_quoted_quotients() {
        let cat = catalog();
        assert_eq!(cat.len(), 11);
        let quoted = [
            ("m1.1", "3"),
            ("m1.2", "t^3 - 2*t^2 + 3*t - 3"),
            ("m1.3", "t^2*(t^3 + 2)"),
            ("sol22", "t^2 + 5"),
            ("sol23", "-t*(t^3 - 3)"),
            (
                "sol24",
                "1/8*(t^6 + t^5 + 6*t^4 + 9*t^3 + 18*t^2 + 21*t + 33)",
            ),
            (
                "sol25",
                "-t^8 + 3*t^7 - 8*t^6 + 11*t^5 - 15*t^4 + 10*t^3 - 8*t^2 - 1",
            ),
            ("triv26", "t^10 + 2*t^4"),
            ("m1Q.1", "-2"),
            ("m1Q.2", "-1/4*t^3"),
            ("thm31", "8*t^7 - 16*t^6 + 28*t^5 - 20*t^4 + 14*t^3 + t + 1"),
        ];
        for (label, quotient) in quoted {
            let sol = catalog_entry(label).unwrap_or_else(|| panic!("missing {label}"));
            assert_eq!(sol.quotient(), &p(quotient), "quotient of {label}");
        }
        // entries #4 and #6 of the cubic catalog, in the stored orientation
        assert_eq!(cat[3].f(), &p("1/2*(t^2 - t + 1)"));
        assert_eq!(cat[5].g(), &p("1/4*(t^2 + t + 1)*(t^2 - t + 3)"));
    }

    #[test]
    fn orbit_examples() {
        let seed = catalog_entry("m1.1").unwrap();
        let chain = orbit(&seed, 1).unwrap();
        assert_eq!(chain.len(), 2);
        assert_eq!(chain[1].f(), &p("-t - 1"));
        assert_eq!(chain[1].g(), &p("-t^2 - 3*t - 3"));

        assert_eq!(orbit(&seed, 0).unwrap().len(), 1);

        let seed = catalog_entry("sol23").unwrap();
        let chain = orbit(&seed, 2).unwrap();
        let degrees: Vec<_> = chain
            .iter()
            .map(|s| (s.f().degree().unwrap(), s.g().degree().unwrap()))
            .collect();
        assert_eq!(degrees, vec![(2, 3), (3, 7), (7, 18)]);
        assert_eq!(chain[1].g(), &p("-t^7 + 3*t^4 - 3*t"));
        // independent of the division path: evaluate both sides of
        // lambda * f * g = f^3 + g^3 + 1 at sample rational points
        for sol in &chain {
            for t in [rat(2, 1), rat(-1, 1), rat(1, 2), rat(3, 1), rat(-2, 3)] {
                let (fv, gv) = (sol.f().eval(&t), sol.g().eval(&t));
                let lhs = sol.quotient().eval(&t) * &fv * &gv;
                let rhs = &fv * &fv * &fv + &gv * &gv * &gv + rat(1, 1);
                assert_eq!(lhs, rhs);
            }
        }

        let quartic = catalog_entry("thm31").unwrap();
        assert_eq!(orbit(&quartic, 1), Err(CongruenceError::NotCubicSeed));

        assert!(matches!(
            orbit_with_cap(&catalog_entry("m1.3").unwrap(), 3, 20),
            Err(CongruenceError::DegreeCapExceeded { .. })
        ));
    }

    #[test]
    fn leading_coeff_condition() {
        assert!(leading_coeff_normalized(&p("1/2*t^2 + 1")).unwrap());
        assert!(!leading_coeff_normalized(&p("4*t^2 + t")).unwrap());
        assert!(!leading_coeff_normalized(&p("8*t^3 + 1")).unwrap());
        assert!(leading_coeff_normalized(&p("4*t^3")).unwrap());
        assert_eq!(
            leading_coeff_normalized(&p("5")),
            Err(CongruenceError::ConstantPolynomial)
        );
    }

    #[test]
    fn cubic_field_poly_examples() {
        let m11 = catalog_entry("m1.1").unwrap();
        let fp = cubic_field_poly(&m11, &rat(0, 1));
        assert_eq!(fp.poly(), &p("t^3 + 6*t^2 + 3*t - 1"));
        let fp = cubic_field_poly(&m11, &rat(-1, 1));
        assert_eq!(fp.poly(), &p("t^3 + 6*t^2 + 3*t - 1"));

        let sol22 = catalog_entry("sol22").unwrap();
        let fp = cubic_field_poly(&sol22, &rat(0, 1));
        assert_eq!(fp.poly(), &p("t^3 - 17/4*t^2 + 5*t - 1"));
    }

    #[test]
    fn quartic_field_poly_rows() {
        let q = quartic_field_poly(&int(-1), &int(-5)).unwrap();
        assert_eq!(q.l, rat(10, 1));
        assert!(q.l_integral && q.twice_l_integral);
        assert_eq!(q.poly.poly(), &p("t^4 + 148*t^3 + 102*t^2 + 20*t + 1"));

        let q = quartic_field_poly(&int(-5), &int(37)).unwrap();
        assert_eq!(q.l, rat(77, 2));
        assert!(!q.l_integral && q.twice_l_integral);
        assert_eq!(q.poly.poly(), &p("t^4 + 114395*t^3 - 7878*t^2 + 77*t + 1"));

        let q = quartic_field_poly(&int(-5), &int(629)).unwrap();
        assert_eq!(q.l, rat(19309, 1));
        assert_eq!(
            q.poly.poly(),
            &p("t^4 + 7890798742*t^3 - 37333446*t^2 + 38618*t + 1")
        );

        // symmetric in x and y
        assert_eq!(
            quartic_field_poly(&int(37), &int(-5)).unwrap(),
            quartic_field_poly(&int(-5), &int(37)).unwrap()
        );
        assert_eq!(
            quartic_field_poly(&int(1), &int(-1)),
            Err(CongruenceError::ZeroSymmetricFunction)
        );
    }

    #[test]
    fn raw_assignments_solve_their_congruences() {
        let (f, g) = raw::to_pair(&raw::sol22(&rat(5, 1)), 2, 2);
        assert!(verify_cubic(&f, &g).is_ok());
        let (f, g) = raw::to_pair(&raw::sol23(&rat(2, 1)), 2, 3);
        assert!(verify_cubic(&f, &g).is_ok());
        let (f, g) = raw::to_pair(&raw::sol24(&rat(3, 1)), 2, 4);
        assert!(verify_cubic(&f, &g).is_ok());
        let (f, g) = raw::to_pair(&raw::sol25(), 2, 5);
        assert!(verify_cubic(&f, &g).is_ok());
        for branch in [1, 2] {
            for positive in [true, false] {
                let (f, g) = raw::to_pair(&raw::thm31(branch, &rat(1, 1), positive), 3, 2);
                assert!(
                    verify_quartic(&f, &g).is_ok(),
                    "branch {branch} positive {positive}"
                );
            }
        }
    }

    fn arb_subst() -> impl Strategy<Value = RationalPoly> {
        proptest::collection::vec((-4i64..5, 1i64..3), 1..=4).prop_map(|cs| {
            let coeffs = cs.into_iter().map(|(n, d)| rat(n, d)).collect();
            RationalPoly::from_coeffs(coeffs)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(12))]
        /// Substitution closure: (f∘h, g∘h) solves with quotient λ∘h.
        #[test]
        fn cubic_catalog_closed_under_substitution(h in arb_subst(), idx in 0usize..8) {
            let sol = &catalog()[idx];
            prop_assume!(sol.family() == Family::Cubic);
            let fh = sol.f().compose(&h);
            let gh = sol.g().compose(&h);
            prop_assume!(!fh.is_zero() && !gh.is_zero());
            let lam = verify_cubic(&fh, &gh).unwrap();
            prop_assert_eq!(lam, sol.quotient().compose(&h));
        }

        /// Sign closure for quartic pairs: L(εf, δg) = εδ L(f, g).
        #[test]
        fn quartic_sign_closure(idx in 8usize..11, flip_f: bool, flip_g: bool) {
            let sol = &catalog()[idx];
            let f = if flip_f { -sol.f() } else { sol.f().clone() };
            let g = if flip_g { -sol.g() } else { sol.g().clone() };
            let l = verify_quartic(&f, &g).unwrap();
            let expected = if flip_f != flip_g {
                -sol.quotient()
            } else {
                sol.quotient().clone()
            };
            prop_assert_eq!(l, expected);
        }
    }
}
