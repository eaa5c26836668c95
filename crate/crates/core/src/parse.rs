//! One small recursive-descent parser shared by the scalar, polynomial,
//! Poisson-polynomial and algebra-word grammars.
//!
//! ```text
//! expr   := ['+' | '-'] term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := atom ['^' integer]
//! atom   := integer | 'i' | variable | '(' expr ')' | '-' factor
//! ```
//!
//! Products keep their written order, so the same tree evaluates in
//! noncommutative algebras. Division is only by non-zero scalars.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Int(BigInt),
    ImagUnit,
    Var(char),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Pow(Box<Expr>, u32),
}

/// Operations a target ring supplies to evaluate an [`Expr`].
pub trait Evaluator {
    type Value: Clone;
    fn scalar(&self, c: Scalar) -> Self::Value;
    /// `None` if `name` is not a variable of this ring.
    fn var(&self, name: char) -> Option<Self::Value>;
    fn add(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn mul(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn scale(&self, a: &Self::Value, c: &Scalar) -> Self::Value;
    /// The value as a scalar, if it is one.
    fn as_scalar(&self, a: &Self::Value) -> Option<Scalar>;
}

struct Parser<'a> {
    src: &'a str,
    chars: Vec<char>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser { src, chars: src.chars().filter(|c| !c.is_whitespace()).collect(), pos: 0 }
    }

    fn err(&self, message: impl Into<String>) -> Error {
        Error::Parse { input: self.src.to_string(), message: message.into() }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = if self.eat('-') {
            Expr::Neg(Box::new(self.term()?))
        } else {
            self.eat('+');
            self.term()?
        };
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.factor()?;
        loop {
            if self.eat('*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
            } else if self.eat('/') {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.factor()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn factor(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.eat('^') {
            let digits = self.digits().ok_or_else(|| self.err("expected exponent after `^`"))?;
            let e: u32 = digits.parse().map_err(|_| self.err("exponent out of range"))?;
            return Ok(Expr::Pow(Box::new(base), e));
        }
        Ok(base)
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().collect())
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.peek() {
            None => Err(self.err("unexpected end of input")),
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(self.err("missing `)`"));
                }
                Ok(e)
            }
            Some('-') => {
                self.pos += 1;
                Ok(Expr::Neg(Box::new(self.factor()?)))
            }
            Some(c) if c.is_ascii_digit() => {
                let d = self.digits().expect("digit present");
                Ok(Expr::Int(d.parse().expect("decimal digits")))
            }
            Some('i') => {
                self.pos += 1;
                Ok(Expr::ImagUnit)
            }
            Some(c) if c.is_ascii_alphabetic() => {
                self.pos += 1;
                Ok(Expr::Var(c))
            }
            Some(c) => Err(self.err(format!("unexpected character `{c}`"))),
        }
    }
}

pub fn parse_expr(src: &str) -> Result<Expr> {
    let mut p = Parser::new(src);
    if p.chars.is_empty() {
        return Err(p.err("empty input"));
    }
    let e = p.expr()?;
    if p.pos != p.chars.len() {
        return Err(p.err(format!("trailing input at position {}", p.pos)));
    }
    Ok(e)
}

pub fn evaluate<E: Evaluator>(ev: &E, expr: &Expr, src: &str) -> Result<E::Value> {
    let err = |m: String| Error::Parse { input: src.to_string(), message: m };
    Ok(match expr {
        Expr::Int(n) => ev.scalar(Scalar::from_rational(BigRational::from_integer(n.clone()))),
        Expr::ImagUnit => ev.scalar(Scalar::i()),
        Expr::Var(c) => ev.var(*c).ok_or_else(|| err(format!("unknown variable `{c}`")))?,
        Expr::Add(a, b) => ev.add(&evaluate(ev, a, src)?, &evaluate(ev, b, src)?),
        Expr::Sub(a, b) => {
            let b = ev.scale(&evaluate(ev, b, src)?, &-Scalar::one());
            ev.add(&evaluate(ev, a, src)?, &b)
        }
        Expr::Mul(a, b) => ev.mul(&evaluate(ev, a, src)?, &evaluate(ev, b, src)?),
        Expr::Div(a, b) => {
            let d = evaluate(ev, b, src)?;
            let d = ev.as_scalar(&d).ok_or_else(|| err("division by a non-scalar".into()))?;
            let inv = d.inv().map_err(|_| err("division by zero".into()))?;
            ev.scale(&evaluate(ev, a, src)?, &inv)
        }
        Expr::Neg(a) => ev.scale(&evaluate(ev, a, src)?, &-Scalar::one()),
        Expr::Pow(a, e) => {
            let base = evaluate(ev, a, src)?;
            let mut acc = ev.scalar(Scalar::one());
            for _ in 0..*e {
                acc = ev.mul(&acc, &base);
            }
            acc
        }
    })
}

/// Parses and evaluates in one step.
pub fn parse_with<E: Evaluator>(ev: &E, src: &str) -> Result<E::Value> {
    evaluate(ev, &parse_expr(src)?, src)
}

struct ScalarEval;

impl Evaluator for ScalarEval {
    type Value = Scalar;
    fn scalar(&self, c: Scalar) -> Scalar {
        c
    }
    fn var(&self, _: char) -> Option<Scalar> {
        None
    }
    fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        a + b
    }
    fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        a * b
    }
    fn scale(&self, a: &Scalar, c: &Scalar) -> Scalar {
        a * c
    }
    fn as_scalar(&self, a: &Scalar) -> Option<Scalar> {
        Some(a.clone())
    }
}

struct PolyEval;

impl Evaluator for PolyEval {
    type Value = Poly;
    fn scalar(&self, c: Scalar) -> Poly {
        Poly::constant(c)
    }
    fn var(&self, name: char) -> Option<Poly> {
        match name {
            't' => Some(Poly::x()),
            's' => Some(Poly::x().with_var(crate::poly::Var::S)),
            _ => None,
        }
    }
    fn add(&self, a: &Poly, b: &Poly) -> Poly {
        a + b
    }
    fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        a * b
    }
    fn scale(&self, a: &Poly, c: &Scalar) -> Poly {
        a.scale(c)
    }
    fn as_scalar(&self, a: &Poly) -> Option<Scalar> {
        (a.degree().unwrap_or(0) == 0).then(|| a.coeff(0))
    }
}

pub fn parse_scalar(src: &str) -> Result<Scalar> {
    parse_with(&ScalarEval, src)
}

/// Polynomial in `t` (or `s`).
pub fn parse_poly(src: &str) -> Result<Poly> {
    parse_with(&PolyEval, src)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalar_grammar() {
        assert_eq!(parse_scalar("1/2+3/4*i").unwrap(), Scalar::gauss((1, 2), (3, 4)));
        assert_eq!(parse_scalar("i").unwrap(), Scalar::i());
        assert_eq!(parse_scalar("-7").unwrap(), Scalar::from_int(-7));
        assert_eq!(parse_scalar("2/6*i").unwrap(), Scalar::gauss((0, 1), (1, 3)));
        assert_eq!(parse_scalar(" 1 / 2 - i ").unwrap(), Scalar::gauss((1, 2), (-1, 1)));
    }

    #[test]
    fn rejects_malformed_input() {
        for bad in ["", "1/", "1/0", "(1+i", "t", "1 $ 2", "2^", "1)"] {
            assert!(parse_scalar(bad).is_err(), "{bad}");
        }
        assert!(parse_poly("t/t").is_err());
        assert!(parse_poly("u+1").is_err());
    }

    #[test]
    fn poly_grammar() {
        let p = parse_poly("t^3+2*t^2-1").unwrap();
        assert_eq!(p, Poly::from_ints(&[-1, 0, 2, 1]));
        assert_eq!(parse_poly("(t+1)^2").unwrap(), Poly::from_ints(&[1, 2, 1]));
        assert_eq!(parse_poly("-t").unwrap(), Poly::from_ints(&[0, -1]));
        assert_eq!(parse_poly("t*-2").unwrap(), Poly::from_ints(&[0, -2]));
    }
}
