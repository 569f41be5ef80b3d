//! Recursive-descent parser for polynomial text.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' '-'? INT)?
//! atom   := INT ('/' INT)? | IDENT | '(' expr ')'
//! ```
//!
//! Juxtaposition is not multiplication: `2x` and `x y` are syntax errors.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{MPoly, Poly, RatFn, Vars};
use crate::error::{Error, Result};
use crate::scalar::{Rational, Scalar};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let start = i;
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            out.push((Tok::Int(text[start..i].parse().unwrap()), start));
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((Tok::Ident(text[start..i].to_string()), start));
            continue;
        }
        let t = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            _ => {
                let ch = text[start..].chars().next().unwrap();
                return Err(Error::Syntax { pos: start, msg: format!("unexpected character `{ch}`") });
            }
        };
        out.push((t, start));
        i += 1;
    }
    Ok(out)
}

#[derive(Debug, Clone)]
enum Expr {
    Num(Rational),
    Var(String, usize),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Pow(Box<Expr>, i64, usize),
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |&(_, o)| o)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { pos: self.offset(), msg: msg.into() })
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        while self.peek() == Some(&Tok::Star) {
            self.pos += 1;
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                Ok(Expr::Neg(Box::new(self.unary()?)))
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        let at = self.offset();
        self.pos += 1;
        let neg = if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            true
        } else {
            false
        };
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                let e: i64 = i64::try_from(&n).map_err(|_| Error::Syntax { pos: at, msg: "exponent too large".into() })?;
                Ok(Expr::Pow(Box::new(base), if neg { -e } else { e }, at))
            }
            _ => self.err("expected integer exponent"),
        }
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                if self.peek() == Some(&Tok::Slash) {
                    self.pos += 1;
                    match self.peek().cloned() {
                        Some(Tok::Int(d)) if !d.is_zero() => {
                            self.pos += 1;
                            Ok(Expr::Num(Rational::new(n, d)))
                        }
                        Some(Tok::Int(_)) => self.err("zero denominator in rational literal"),
                        _ => self.err("expected integer denominator after `/`"),
                    }
                } else {
                    Ok(Expr::Num(Rational::from_integer(n)))
                }
            }
            Some(Tok::Ident(name)) => {
                let at = self.offset();
                self.pos += 1;
                Ok(Expr::Var(name, at))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return self.err("expected `)`");
                }
                self.pos += 1;
                Ok(e)
            }
            Some(_) => self.err("expected a number, identifier, or `(`"),
            None => self.err("unexpected end of input"),
        }
    }
}

fn parse_expr(text: &str) -> Result<Expr> {
    let toks = lex(text)?;
    let mut p = Parser { toks, pos: 0, end: text.len() };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("unexpected token (implicit multiplication is not allowed)");
    }
    Ok(e)
}

fn eval<C: Scalar>(
    e: &Expr,
    vars: &Arc<Vars>,
    var: &dyn Fn(&str, usize) -> Result<Poly<C>>,
    invert: &dyn Fn(&Poly<C>) -> Option<Poly<C>>,
) -> Result<Poly<C>> {
    Ok(match e {
        Expr::Num(r) => Poly::constant(vars, C::from_rational(r.clone())),
        Expr::Var(name, at) => var(name, *at)?,
        Expr::Add(a, b) => &eval(a, vars, var, invert)? + &eval(b, vars, var, invert)?,
        Expr::Sub(a, b) => &eval(a, vars, var, invert)? - &eval(b, vars, var, invert)?,
        Expr::Mul(a, b) => &eval(a, vars, var, invert)? * &eval(b, vars, var, invert)?,
        Expr::Neg(a) => -&eval(a, vars, var, invert)?,
        Expr::Pow(a, k, at) => {
            let base = eval(a, vars, var, invert)?;
            if *k >= 0 {
                base.pow(*k as u32)
            } else {
                let inv = invert(&base)
                    .ok_or_else(|| Error::Syntax { pos: *at, msg: "negative exponent of a non-invertible base".into() })?;
                inv.pow(k.unsigned_abs() as u32)
            }
        }
    })
}

/// Parses `text` as a polynomial over `Q` in the declared variables.
pub fn parse_poly(text: &str, vars: &Arc<Vars>) -> Result<MPoly> {
    let e = parse_expr(text)?;
    let var = |name: &str, at: usize| -> Result<MPoly> {
        MPoly::var(vars, name).map_err(|_| Error::UndeclaredIdentifier { name: name.to_string(), pos: at })
    };
    eval(&e, vars, &var, &|_| None)
}

/// Parses `text` as a polynomial in the declared variables with coefficients
/// in `Q(q)`; the identifier `q` is the coefficient generator and may carry
/// negative exponents.
pub fn parse_laurent(text: &str, vars: &Arc<Vars>) -> Result<Poly<RatFn>> {
    let e = parse_expr(text)?;
    let var = |name: &str, at: usize| -> Result<Poly<RatFn>> {
        if name == "q" {
            return Ok(Poly::constant(vars, RatFn::q()));
        }
        Poly::var(vars, name).map_err(|_| Error::UndeclaredIdentifier { name: name.to_string(), pos: at })
    };
    let invert = |p: &Poly<RatFn>| -> Option<Poly<RatFn>> {
        let c = p.as_constant()?;
        Some(Poly::constant(vars, c.inv()?))
    };
    let out = eval(&e, vars, &var, &invert)?;
    debug_assert!(out.terms().values().all(|c| !c.is_zero() || c.is_one()));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};

    #[test]
    fn four_term_polynomial() {
        let v = Vars::new(["x1", "x2", "q"]);
        let p = parse_poly("x1^4 - 3*x1^2*x2 + x2^2 + q", &v).unwrap();
        assert_eq!(p.terms().len(), 4);
        assert_eq!(p.coeff(&[2, 1, 0]), int(-3));
        assert_eq!(p.coeff(&[0, 0, 1]), int(1));
    }

    #[test]
    fn square_of_binomial() {
        let v = Vars::new(["x1", "x2"]);
        let p = parse_poly("(x1 - x2)^2", &v).unwrap();
        assert_eq!(p, parse_poly("x1^2 - 2*x1*x2 + x2^2", &v).unwrap());
    }

    #[test]
    fn undeclared_identifier() {
        let v = Vars::new(["x1", "x2"]);
        assert_eq!(parse_poly("x3", &v), Err(Error::UndeclaredIdentifier { name: "x3".into(), pos: 0 }));
        assert!(matches!(parse_poly("x1 + 2*zz", &v), Err(Error::UndeclaredIdentifier { pos: 7, .. })));
    }

    #[test]
    fn syntax_errors_report_position() {
        let v = Vars::new(["x", "y"]);
        assert!(matches!(parse_poly("2x", &v), Err(Error::Syntax { pos: 1, .. })));
        assert!(matches!(parse_poly("x y", &v), Err(Error::Syntax { pos: 2, .. })));
        assert!(matches!(parse_poly("(x + 1", &v), Err(Error::Syntax { pos: 6, .. })));
        assert!(matches!(parse_poly("x ^ y", &v), Err(Error::Syntax { .. })));
        assert!(matches!(parse_poly("x $ 1", &v), Err(Error::Syntax { pos: 2, .. })));
        assert!(matches!(parse_poly("x^-1", &v), Err(Error::Syntax { .. })));
        assert!(matches!(parse_poly("1/0", &v), Err(Error::Syntax { .. })));
    }

    #[test]
    fn rational_literals() {
        let v = Vars::new(["x"]);
        let p = parse_poly("-1/5*x^5 + 3/6", &v).unwrap();
        assert_eq!(p.coeff(&[5]), rat(-1, 5));
        assert_eq!(p.coeff(&[0]), rat(1, 2));
    }

    #[test]
    fn laurent_q_powers() {
        let v = Vars::new(["x"]);
        let p = parse_laurent("3*x*q^-1 + q^2", &v).unwrap();
        assert_eq!(p.coeff(&[1]), RatFn::laurent_monomial(int(3), -1));
        assert_eq!(p.coeff(&[0]), RatFn::laurent_monomial(int(1), 2));
        assert_eq!(parse_laurent(&p.to_string(), &v).unwrap(), p);
        assert!(matches!(parse_laurent("x^-1", &v), Err(Error::Syntax { .. })));
    }
}
