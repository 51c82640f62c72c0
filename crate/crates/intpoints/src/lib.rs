//! Exact-arithmetic solvers for three families of Diophantine problems that
//! arise when constructing cyclic cubic and quartic number fields:
//!
//! * complete integer-point sets on the Hessian cubics `H_d: x^3+y^3+dxy+1=0`,
//!   the genus-3 quartics `X_T: (x+y)^4-4x^2y^2+Txy(x+y)+4=0` and the family
//!   `Q_{a,b}: x^4-4y^2+axy+b=0`, found by enumerating signed divisors of a
//!   resolvent integer ([`curves`]);
//! * verification and generation of rational-polynomial solutions of the
//!   congruences `fg | f^3+g^3+1` and `fg | f^4-4g^2+4`, together with the
//!   cyclic field polynomials they induce ([`congruence`]);
//! * the symbolic coefficient systems `S(m,n)` / `R(m,n)` whose rational
//!   zeros are exactly those congruence solutions ([`systems`]).
//!
//! Everything is exact: arbitrary-precision integers and rationals only, no
//! floating point anywhere. [`scan`] adds parallel, resumable parameter
//! sweeps over the three curve families with JSONL output.

pub mod arith;
pub mod cli;
pub mod congruence;
pub mod curves;
pub mod factor;
pub mod poly;
pub mod scan;
pub mod systems;

pub use arith::{Integer, Rational};
