//! Symbolic generation of the coefficient systems `S(m,n)` (cubic) and
//! `R(m,n)` (quartic).
//!
//! For `f(t) = a_0 + a_1 t + ... + a_{m-2} t^{m-2} + a_m t^m` (the `a_{m-1}`
//! coefficient is omitted) and `g(t) = b_0 + ... + b_n t^n`, the system's
//! polynomials are the normalized numerators of the remainder coefficients:
//!
//! * cubic:   `F_i` from `(f^3+1) mod g`,  `G_j` from `(g^3+1) mod f`;
//! * quartic: `F_i` from `(f^4+4) mod g`,  `G_j` from `(4-4g^2) mod f`.
//!
//! Reference renderings of these systems ship as text files; computed
//! output is compared against them per polynomial, up to a rational scalar
//! and stray powers of the leading coefficients (the published tables are
//! not uniform about clearing those).

use crate::arith::Rational;
use crate::congruence::Family;
use crate::poly::{parse_multi_poly, symbolic_remainder, MultiPoly, PolyError, Var};
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum SystemsError {
    #[error("degree bounds violated for {family} systems: {reason}")]
    DegreeBounds { family: Family, reason: String },
    #[error("assignment does not cover {0}")]
    MissingVariable(Var),
    #[error("leading coefficients must be nonzero ({0} = 0)")]
    ZeroLeadingCoefficient(Var),
    #[error("no reference data for {family} ({m},{n})")]
    NoReference { family: Family, m: u32, n: u32 },
    #[error("malformed reference line {0:?}")]
    MalformedReference(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// The polynomial system `S(m,n)` or `R(m,n)` in the coefficient variables.
#[derive(Debug, Clone)]
pub struct SymbolicSystem {
    pub family: Family,
    pub m: u32,
    pub n: u32,
    f_polys: Vec<MultiPoly>,
    g_polys: Vec<MultiPoly>,
}

/// Variable indices of `f`'s coefficient block: `a_0..a_{m-2}` and `a_m`.
fn a_indices(m: u32) -> impl Iterator<Item = u32> {
    (0..=m).filter(move |&i| i == m || i + 2 <= m)
}

/// Symbolic `f` with the `a_{m-1}` term omitted.
pub fn generic_f(m: u32) -> MultiPoly {
    let mut f = MultiPoly::zero();
    for i in a_indices(m) {
        let term = &MultiPoly::var(Var::A(i)) * &MultiPoly::var(Var::T).pow(i);
        f = &f + &term;
    }
    f
}

/// Symbolic `g` with all coefficients `b_0..b_n`.
pub fn generic_g(n: u32) -> MultiPoly {
    let mut g = MultiPoly::zero();
    for j in 0..=n {
        let term = &MultiPoly::var(Var::B(j)) * &MultiPoly::var(Var::T).pow(j);
        g = &g + &term;
    }
    g
}

/// Build `S(m,n)` (cubic) or `R(m,n)` (quartic).
///
/// Degree bounds: `n <= 3m` for the cubic family, `m <= 2n` and `n <= 4m`
/// for the quartic one.
pub fn build_system(family: Family, m: u32, n: u32) -> Result<SymbolicSystem, SystemsError> {
    if m < 1 || n < 1 {
        return Err(SystemsError::DegreeBounds {
            family,
            reason: "m and n must be positive".into(),
        });
    }
    match family {
        Family::Cubic if n > 3 * m => {
            return Err(SystemsError::DegreeBounds {
                family,
                reason: format!("n = {n} exceeds 3m = {}", 3 * m),
            })
        }
        Family::Quartic if m > 2 * n || n > 4 * m => {
            return Err(SystemsError::DegreeBounds {
                family,
                reason: format!("need m <= 2n and n <= 4m, got ({m},{n})"),
            })
        }
        _ => {}
    }
    let f = generic_f(m);
    let g = generic_g(n);
    let one = MultiPoly::one();
    let four = MultiPoly::constant(Rational::from_integer(4.into()));
    let (div_g, div_f) = match family {
        Family::Cubic => (&f.pow(3) + &one, &g.pow(3) + &one),
        Family::Quartic => (&f.pow(4) + &four, &four - &g.pow(2).scale(&Rational::from_integer(4.into()))),
    };
    let f_coeffs = symbolic_remainder(&div_g, &g)?;
    let g_coeffs = symbolic_remainder(&div_f, &f)?;
    Ok(SymbolicSystem {
        family,
        m,
        n,
        f_polys: f_coeffs.into_iter().map(|c| c.numerator).collect(),
        g_polys: g_coeffs.into_iter().map(|c| c.numerator).collect(),
    })
}

impl SymbolicSystem {
    /// `F_0, ..., F_{n-1}`.
    pub fn f_polys(&self) -> &[MultiPoly] {
        &self.f_polys
    }

    /// `G_0, ..., G_{m-1}`.
    pub fn g_polys(&self) -> &[MultiPoly] {
        &self.g_polys
    }

    /// The system's variables, `a`-block then `b`-block.
    pub fn variables(&self) -> Vec<Var> {
        let mut vars: Vec<Var> = a_indices(self.m).map(Var::A).collect();
        for j in 0..=self.n {
            vars.push(Var::B(j));
        }
        vars
    }

    /// Exact evaluation of every `F_i`, `G_j` at a full assignment with
    /// nonzero leading coefficients.
    pub fn evaluate(
        &self,
        assignment: &BTreeMap<Var, Rational>,
    ) -> Result<(bool, Vec<Rational>), SystemsError> {
        for v in self.variables() {
            match assignment.get(&v) {
                None => return Err(SystemsError::MissingVariable(v)),
                Some(x) if x.is_zero() && (v == Var::A(self.m) || v == Var::B(self.n)) => {
                    return Err(SystemsError::ZeroLeadingCoefficient(v))
                }
                _ => {}
            }
        }
        let mut residuals = Vec::with_capacity(self.f_polys.len() + self.g_polys.len());
        for p in self.f_polys.iter().chain(&self.g_polys) {
            residuals.push(p.eval(assignment)?);
        }
        let all_zero = residuals.iter().all(Zero::is_zero);
        Ok((all_zero, residuals))
    }

    /// Text dump in the tabular `F_i = ...` / `G_j = ...` style.
    pub fn dump(&self) -> String {
        let name = match self.family {
            Family::Cubic => "S",
            Family::Quartic => "R",
        };
        let mut out = format!("{}({},{}):\n", name, self.m, self.n);
        for (i, p) in self.f_polys.iter().enumerate() {
            out.push_str(&format!("F{i} = {p}\n"));
        }
        for (j, p) in self.g_polys.iter().enumerate() {
            out.push_str(&format!("G{j} = {p}\n"));
        }
        out
    }

    /// Compare against the bundled reference table, if one exists.
    pub fn check_reference(&self) -> Result<Vec<ReferenceComparison>, SystemsError> {
        let text = reference_text(self.family, self.m, self.n).ok_or(SystemsError::NoReference {
            family: self.family,
            m: self.m,
            n: self.n,
        })?;
        let mut out = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (name, expr) = line
                .split_once('=')
                .ok_or_else(|| SystemsError::MalformedReference(line.to_string()))?;
            let name = name.trim();
            let reference = parse_multi_poly(expr)?;
            let (kind, idx) = name.split_at(1);
            let idx: usize = idx
                .parse()
                .map_err(|_| SystemsError::MalformedReference(line.to_string()))?;
            let ours = match kind {
                "F" => self.f_polys.get(idx),
                "G" => self.g_polys.get(idx),
                _ => None,
            }
            .ok_or_else(|| SystemsError::MalformedReference(line.to_string()))?;
            out.push(ReferenceComparison {
                name: name.to_string(),
                matches: reference_equivalent(ours, &reference, self.m, self.n),
                computed: ours.clone(),
                reference,
            });
        }
        Ok(out)
    }
}

/// Outcome of comparing one computed polynomial with its reference line.
#[derive(Debug, Clone)]
pub struct ReferenceComparison {
    pub name: String,
    pub matches: bool,
    pub computed: MultiPoly,
    pub reference: MultiPoly,
}

/// Equality up to a rational scalar and powers of `a_m` / `b_n`.
fn reference_equivalent(ours: &MultiPoly, reference: &MultiPoly, m: u32, n: u32) -> bool {
    normalize_for_reference(ours, m, n) == normalize_for_reference(reference, m, n)
}

fn normalize_for_reference(p: &MultiPoly, m: u32, n: u32) -> MultiPoly {
    let (p, _) = p.strip_var(Var::A(m));
    let (p, _) = p.strip_var(Var::B(n));
    p.normalized().0
}

/// Bundled reference rendering of a system, when available.
pub fn reference_text(family: Family, m: u32, n: u32) -> Option<&'static str> {
    Some(match (family, m, n) {
        (Family::Cubic, 2, 2) => include_str!("reference/cubic_2_2.txt"),
        (Family::Cubic, 2, 3) => include_str!("reference/cubic_2_3.txt"),
        (Family::Cubic, 2, 4) => include_str!("reference/cubic_2_4.txt"),
        (Family::Cubic, 2, 5) => include_str!("reference/cubic_2_5.txt"),
        (Family::Quartic, 2, 2) => include_str!("reference/quartic_2_2.txt"),
        (Family::Quartic, 2, 3) => include_str!("reference/quartic_2_3.txt"),
        (Family::Quartic, 2, 4) => include_str!("reference/quartic_2_4.txt"),
        (Family::Quartic, 2, 5) => include_str!("reference/quartic_2_5.txt"),
        (Family::Quartic, 2, 6) => include_str!("reference/quartic_2_6.txt"),
        (Family::Quartic, 3, 2) => include_str!("reference/quartic_3_2.txt"),
        _ => return None,
    })
}

/// All `(family, m, n)` triples with bundled reference data.
pub fn reference_cases() -> Vec<(Family, u32, u32)> {
    vec![
        (Family::Cubic, 2, 2),
        (Family::Cubic, 2, 3),
        (Family::Cubic, 2, 4),
        (Family::Cubic, 2, 5),
        (Family::Quartic, 2, 2),
        (Family::Quartic, 2, 3),
        (Family::Quartic, 2, 4),
        (Family::Quartic, 2, 5),
        (Family::Quartic, 2, 6),
        (Family::Quartic, 3, 2),
    ]
}

impl fmt::Display for SymbolicSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.dump())
    }
}
