//! Parser for the textual polynomial syntax used by the printers, the
//! reference system files and the CLI: rational coefficients (`-3/8`),
//! variables `t`, `a0..`, `b0..`, `*`, `^`, and parentheses.

use super::multi::{MultiPoly, Var};
use super::{PolyError, RationalPoly};
use crate::arith::{Integer, Rational};
use num_traits::{ToPrimitive, Zero};

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Num(Integer),
    Var(Var),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Open,
    Close,
}

fn lex(s: &str) -> Result<Vec<(Token, usize)>, PolyError> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                out.push((Token::Plus, i));
                i += 1;
            }
            '-' => {
                out.push((Token::Minus, i));
                i += 1;
            }
            '*' => {
                out.push((Token::Star, i));
                i += 1;
            }
            '/' => {
                out.push((Token::Slash, i));
                i += 1;
            }
            '^' => {
                out.push((Token::Caret, i));
                i += 1;
            }
            '(' => {
                out.push((Token::Open, i));
                i += 1;
            }
            ')' => {
                out.push((Token::Close, i));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: Integer = s[start..i].parse().expect("digits");
                out.push((Token::Num(n), start));
            }
            't' => {
                out.push((Token::Var(Var::T), i));
                i += 1;
            }
            'a' | 'b' => {
                let start = i;
                i += 1;
                let ds = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if ds == i {
                    return Err(PolyError::Parse {
                        msg: format!("variable '{c}' needs an index"),
                        at: start,
                    });
                }
                let idx: u32 = s[ds..i].parse().map_err(|_| PolyError::Parse {
                    msg: "variable index too large".into(),
                    at: ds,
                })?;
                out.push((
                    Token::Var(if c == 'a' { Var::A(idx) } else { Var::B(idx) }),
                    start,
                ));
            }
            other => {
                return Err(PolyError::Parse {
                    msg: format!("unexpected character {other:?}"),
                    at: i,
                })
            }
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(Token, usize)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(t, _)| t)
    }

    fn at(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map(|(_, at)| *at)
            .unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(t, _)| t.clone());
        self.pos += 1;
        t
    }

    fn err(&self, msg: impl Into<String>) -> PolyError {
        PolyError::Parse {
            msg: msg.into(),
            at: self.at(),
        }
    }

    fn expr(&mut self) -> Result<MultiPoly, PolyError> {
        let mut negate = false;
        while matches!(self.peek(), Some(Token::Plus) | Some(Token::Minus)) {
            if matches!(self.bump(), Some(Token::Minus)) {
                negate = !negate;
            }
        }
        let mut acc = self.term()?;
        if negate {
            acc = -&acc;
        }
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.bump();
                    let t = self.term()?;
                    acc = &acc + &t;
                }
                Some(Token::Minus) => {
                    self.bump();
                    let t = self.term()?;
                    acc = &acc - &t;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly, PolyError> {
        let mut acc = self.factor()?;
        while matches!(self.peek(), Some(Token::Star)) {
            self.bump();
            let f = self.factor()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<MultiPoly, PolyError> {
        let mut negate = false;
        while matches!(self.peek(), Some(Token::Minus)) {
            self.bump();
            negate = !negate;
        }
        let base = self.atom()?;
        let base = if matches!(self.peek(), Some(Token::Caret)) {
            self.bump();
            match self.bump() {
                Some(Token::Num(e)) => {
                    let e = e
                        .to_u32()
                        .ok_or_else(|| self.err("exponent out of range"))?;
                    base.pow(e)
                }
                _ => return Err(self.err("expected an integer exponent after '^'")),
            }
        } else {
            base
        };
        Ok(if negate { -&base } else { base })
    }

    fn atom(&mut self) -> Result<MultiPoly, PolyError> {
        match self.bump() {
            Some(Token::Num(n)) => {
                // allow "p/q" rationals at the atom level
                if matches!(self.peek(), Some(Token::Slash)) {
                    self.bump();
                    match self.bump() {
                        Some(Token::Num(d)) if !d.is_zero() => {
                            Ok(MultiPoly::constant(Rational::new(n, d)))
                        }
                        _ => Err(self.err("expected a nonzero integer denominator")),
                    }
                } else {
                    Ok(MultiPoly::constant(Rational::from_integer(n)))
                }
            }
            Some(Token::Var(v)) => Ok(MultiPoly::var(v)),
            Some(Token::Open) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Token::Close) => Ok(inner),
                    _ => Err(self.err("expected ')'")),
                }
            }
            _ => Err(self.err("expected a number, variable or '('")),
        }
    }
}

pub fn parse_multi_poly(s: &str) -> Result<MultiPoly, PolyError> {
    let tokens = lex(s)?;
    if tokens.is_empty() {
        return Err(PolyError::Parse {
            msg: "empty input".into(),
            at: 0,
        });
    }
    let mut p = Parser {
        tokens,
        pos: 0,
        end: s.len(),
    };
    let out = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(p.err("trailing input"));
    }
    Ok(out)
}

pub fn parse_rational_poly(s: &str) -> Result<RationalPoly, PolyError> {
    let mp = parse_multi_poly(s)?;
    let mut coeffs: Vec<Rational> = Vec::new();
    for (m, c) in mp.terms() {
        let mut deg = 0usize;
        for (v, e) in m.exponents() {
            match v {
                Var::T => deg = *e as usize,
                other => return Err(PolyError::NotUnivariate(*other)),
            }
        }
        if coeffs.len() <= deg {
            coeffs.resize(deg + 1, Rational::zero());
        }
        coeffs[deg] = c.clone();
    }
    Ok(RationalPoly::from_coeffs(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn parses_printer_output() {
        let p = parse_rational_poly("1/2*t^2 - 1/2*t + 1/2").unwrap();
        assert_eq!(p.coeff(2), rat(1, 2));
        assert_eq!(p.coeff(1), rat(-1, 2));
        assert_eq!(p.coeff(0), rat(1, 2));
        assert_eq!(parse_rational_poly("-t-1").unwrap(), RationalPoly::parse("-1 - t").unwrap());
    }

    #[test]
    fn parses_factored_products() {
        let p = parse_multi_poly("b1*(a2*b0 - a0*b2)").unwrap();
        assert_eq!(p, parse_multi_poly("a2*b0*b1 - a0*b1*b2").unwrap());
        let q = parse_multi_poly("-(t+1)^2").unwrap();
        assert_eq!(q, parse_multi_poly("-t^2 - 2*t - 1").unwrap());
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_multi_poly("").is_err());
        assert!(parse_multi_poly("t +").is_err());
        assert!(parse_multi_poly("x1").is_err());
        assert!(parse_multi_poly("a").is_err());
        assert!(parse_multi_poly("1/0").is_err());
        assert!(parse_multi_poly("(t").is_err());
        assert!(parse_rational_poly("a0 + t").is_err());
    }
}
