//! Parsing and printing of rational-function expressions in the variable
//! `t`.
//!
//! The grammar accepts integer literals, `t`, `+ - * / ^` and parentheses,
//! with `^` binding tightest (right-associative, nonnegative integer
//! exponents on atoms), then unary minus, then `* /`, then `+ -`.
//! Evaluation is structural over exact rational functions, so `a/b`
//! literals and nested quotients need no special cases; a vanishing
//! denominator anywhere is a semantic error.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use crate::exactpoly::rat::{rat_int, Rat};
use crate::exactpoly::Poly;

/// A reduced rational function `num/den` in `t`.
///
/// Canonical form: `gcd(num, den) = 1` and `den` monic (hence with
/// positive leading coefficient); any constant factor lives in `num`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("zero denominator in division at byte {pos}")]
    ZeroDenominator { pos: usize },
}

impl RationalFunction {
    /// Builds the reduced canonical form; panics if `den` is zero (callers
    /// validate first).
    pub fn new(num: Poly, den: Poly) -> RationalFunction {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RationalFunction {
                num: Poly::zero(),
                den: Poly::one(),
            };
        }
        let g = num.gcd(&den);
        let num = num.exact_div(&g);
        let den = den.exact_div(&g);
        // fold the denominator's leading coefficient into the numerator
        let lc = den.leading_coeff().unwrap().clone();
        let inv = Rat::new(lc.denom().clone(), lc.numer().clone());
        RationalFunction {
            num: num.scale(&inv),
            den: den.scale(&inv),
        }
    }

    pub fn from_poly(p: Poly) -> RationalFunction {
        RationalFunction {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn constant(c: Rat) -> RationalFunction {
        RationalFunction::from_poly(Poly::constant(c))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    /// `max(deg num, deg den)`; zero for the zero function.
    pub fn degree(&self) -> usize {
        self.num
            .degree()
            .unwrap_or(0)
            .max(self.den.degree().unwrap_or(0))
    }

    pub fn neg(&self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn add(&self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }

    pub fn sub(&self, rhs: &RationalFunction) -> RationalFunction {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }

    /// `None` when dividing by the zero function.
    pub fn div(&self, rhs: &RationalFunction) -> Option<RationalFunction> {
        if rhs.is_zero() {
            return None;
        }
        Some(RationalFunction::new(
            &self.num * &rhs.den,
            &self.den * &rhs.num,
        ))
    }

    pub fn pow(&self, n: u32) -> RationalFunction {
        RationalFunction {
            num: self.num.pow(n),
            den: self.den.pow(n),
        }
    }

    /// Exact evaluation; `None` at poles of the reduced form.
    pub fn eval(&self, t0: &Rat) -> Option<Rat> {
        let d = self.den.eval(t0);
        if d == rat_int(0) {
            return None;
        }
        Some(self.num.eval(t0) / d)
    }
}

pub fn parse_ratfunc(text: &str) -> Result<RationalFunction, ParseError> {
    let tokens = lex(text)?;
    let mut parser = Parser { tokens, pos: 0 };
    let value = parser.expr()?;
    if parser.pos < parser.tokens.len() {
        let tok = &parser.tokens[parser.pos];
        return Err(ParseError::Syntax {
            pos: tok.pos,
            msg: format!("unexpected {}", tok.kind.describe()),
        });
    }
    Ok(value)
}

/// Canonical text: descending powers, explicit `*`, parenthesized
/// denominator (elided when it is 1). Reparsing yields an equal value.
pub fn format_ratfunc(rf: &RationalFunction) -> String {
    if rf.den.is_one() {
        return rf.num.to_string();
    }
    let num = if rf.num.coeffs().iter().filter(|c| !num_traits::Zero::is_zero(*c)).count() > 1 {
        format!("({})", rf.num)
    } else {
        rf.num.to_string()
    };
    format!("{num}/({})", rf.den)
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_ratfunc(self))
    }
}

trait PolyIsOne {
    fn is_one(&self) -> bool;
}

impl PolyIsOne for Poly {
    fn is_one(&self) -> bool {
        self.degree() == Some(0) && self.coeffs()[0].is_one()
    }
}

#[derive(Debug, Clone, PartialEq)]
enum TokenKind {
    Int(BigInt),
    Var,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

impl TokenKind {
    fn describe(&self) -> String {
        match self {
            TokenKind::Int(v) => format!("literal {v}"),
            TokenKind::Var => "variable t".to_string(),
            TokenKind::Plus => "'+'".to_string(),
            TokenKind::Minus => "'-'".to_string(),
            TokenKind::Star => "'*'".to_string(),
            TokenKind::Slash => "'/'".to_string(),
            TokenKind::Caret => "'^'".to_string(),
            TokenKind::LParen => "'('".to_string(),
            TokenKind::RParen => "')'".to_string(),
        }
    }
}

#[derive(Debug, Clone)]
struct Token {
    kind: TokenKind,
    pos: usize,
}

fn lex(text: &str) -> Result<Vec<Token>, ParseError> {
    let bytes = text.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let pos = i;
        match bytes[i] {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let digits = &text[start..i];
                tokens.push(Token {
                    kind: TokenKind::Int(digits.parse().unwrap()),
                    pos,
                });
            }
            b't' => {
                tokens.push(Token {
                    kind: TokenKind::Var,
                    pos,
                });
                i += 1;
            }
            b'+' => {
                tokens.push(Token { kind: TokenKind::Plus, pos });
                i += 1;
            }
            b'-' => {
                tokens.push(Token { kind: TokenKind::Minus, pos });
                i += 1;
            }
            b'*' => {
                tokens.push(Token { kind: TokenKind::Star, pos });
                i += 1;
            }
            b'/' => {
                tokens.push(Token { kind: TokenKind::Slash, pos });
                i += 1;
            }
            b'^' => {
                tokens.push(Token { kind: TokenKind::Caret, pos });
                i += 1;
            }
            b'(' => {
                tokens.push(Token { kind: TokenKind::LParen, pos });
                i += 1;
            }
            b')' => {
                tokens.push(Token { kind: TokenKind::RParen, pos });
                i += 1;
            }
            c if c.is_ascii_alphabetic() => {
                return Err(ParseError::Syntax {
                    pos,
                    msg: format!("unknown variable '{}' (only t is allowed)", c as char),
                });
            }
            c => {
                return Err(ParseError::Syntax {
                    pos,
                    msg: format!("unexpected character '{}'", c as char),
                });
            }
        }
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&TokenKind> {
        self.tokens.get(self.pos).map(|t| &t.kind)
    }

    fn here(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map(|t| t.pos)
            .or_else(|| self.tokens.last().map(|t| t.pos + 1))
            .unwrap_or(0)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<RationalFunction, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(TokenKind::Plus) => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                Some(TokenKind::Minus) => {
                    self.bump();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RationalFunction, ParseError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(TokenKind::Star) => {
                    self.bump();
                    acc = acc.mul(&self.unary()?);
                }
                Some(TokenKind::Slash) => {
                    let pos = self.here();
                    self.bump();
                    let rhs = self.unary()?;
                    acc = acc
                        .div(&rhs)
                        .ok_or(ParseError::ZeroDenominator { pos })?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<RationalFunction, ParseError> {
        if matches!(self.peek(), Some(TokenKind::Minus)) {
            self.bump();
            return Ok(self.unary()?.neg());
        }
        self.power()
    }

    fn power(&mut self) -> Result<RationalFunction, ParseError> {
        let base = self.atom()?;
        if matches!(self.peek(), Some(TokenKind::Caret)) {
            self.bump();
            let e = self.exponent()?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    /// Exponents are nonnegative integer literals; a chain like `2^3`
    /// folds right-associatively into a single integer.
    fn exponent(&mut self) -> Result<u32, ParseError> {
        let pos = self.here();
        match self.bump().map(|t| t.kind) {
            Some(TokenKind::Int(v)) => {
                let base: u32 = v.try_into().map_err(|_| ParseError::Syntax {
                    pos,
                    msg: "exponent too large".to_string(),
                })?;
                if matches!(self.peek(), Some(TokenKind::Caret)) {
                    self.bump();
                    let upper = self.exponent()?;
                    return base.checked_pow(upper).ok_or(ParseError::Syntax {
                        pos,
                        msg: "exponent too large".to_string(),
                    });
                }
                Ok(base)
            }
            _ => Err(ParseError::Syntax {
                pos,
                msg: "exponent must be a nonnegative integer literal".to_string(),
            }),
        }
    }

    fn atom(&mut self) -> Result<RationalFunction, ParseError> {
        let pos = self.here();
        match self.bump().map(|t| t.kind) {
            Some(TokenKind::Int(v)) => Ok(RationalFunction::constant(Rat::from_integer(v))),
            Some(TokenKind::Var) => Ok(RationalFunction::from_poly(Poly::var())),
            Some(TokenKind::LParen) => {
                let inner = self.expr()?;
                match self.bump().map(|t| t.kind) {
                    Some(TokenKind::RParen) => Ok(inner),
                    _ => Err(ParseError::Syntax {
                        pos,
                        msg: "unclosed parenthesis".to_string(),
                    }),
                }
            }
            Some(other) => Err(ParseError::Syntax {
                pos,
                msg: format!("expected a value, found {}", other.describe()),
            }),
            None => Err(ParseError::Syntax {
                pos,
                msg: "unexpected end of expression".to_string(),
            }),
        }
    }
}
