//! A small expression parser for rational maps.
//!
//! Grammar, loosest to tightest binding:
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' exponent)?        exponent := integer ('^' integer)*
//! atom   := integer | variable | '(' expr ')'
//! ```
//!
//! Exponents are nonnegative integer literals and chain right to left, so
//! `x^2^3` is `x^8`.  All arithmetic is exact in the chosen field: over
//! `F_2` the input `1/2*x^2` fails with a division-by-zero error because
//! `2` is already zero there.  Every error carries the byte offset it was
//! detected at.

use num_bigint::BigInt;
use thiserror::Error;

use crate::field::Field;
use crate::poly::Poly;
use crate::ramification::{MapError, RationalMap};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    #[error("unexpected character {0:?}")]
    UnexpectedChar(char),
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("unexpected {0}")]
    UnexpectedToken(String),
    #[error("unknown name {found:?}; the variable here is {expected:?}")]
    UnknownName { found: String, expected: String },
    #[error("expected a nonnegative integer exponent after '^'")]
    ExpectedExponent,
    #[error("exponent is too large")]
    ExponentTooLarge,
    #[error("division by zero")]
    DivisionByZero,
    #[error("input continues past a complete expression")]
    TrailingInput,
    #[error("the expression is constant; a map must involve the variable")]
    ConstantExpression,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("at offset {position}: {kind}")]
pub struct ParseError {
    /// Byte offset into the source where the problem was detected.
    pub position: usize,
    pub kind: ParseErrorKind,
}

fn err<T>(position: usize, kind: ParseErrorKind) -> Result<T, ParseError> {
    Err(ParseError { position, kind })
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Int(String),
    Name(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

impl Token {
    fn describe(&self) -> String {
        match self {
            Token::Int(s) => format!("number {s:?}"),
            Token::Name(s) => format!("name {s:?}"),
            Token::Plus => "'+'".into(),
            Token::Minus => "'-'".into(),
            Token::Star => "'*'".into(),
            Token::Slash => "'/'".into(),
            Token::Caret => "'^'".into(),
            Token::LParen => "'('".into(),
            Token::RParen => "')'".into(),
        }
    }
}

fn tokenize(src: &str) -> Result<Vec<(usize, Token)>, ParseError> {
    let mut tokens = Vec::new();
    let bytes = src.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = src[i..].chars().next().expect("index lies on a char boundary");
        if c.is_whitespace() {
            i += c.len_utf8();
            continue;
        }
        let simple = match c {
            '+' => Some(Token::Plus),
            '-' => Some(Token::Minus),
            '*' => Some(Token::Star),
            '/' => Some(Token::Slash),
            '^' => Some(Token::Caret),
            '(' => Some(Token::LParen),
            ')' => Some(Token::RParen),
            _ => None,
        };
        if let Some(token) = simple {
            tokens.push((i, token));
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            tokens.push((start, Token::Int(src[start..i].to_string())));
            continue;
        }
        if c.is_alphabetic() || c == '_' {
            let start = i;
            i += c.len_utf8();
            while let Some(c) = src[i..].chars().next() {
                if c.is_alphanumeric() || c == '_' {
                    i += c.len_utf8();
                } else {
                    break;
                }
            }
            tokens.push((start, Token::Name(src[start..i].to_string())));
            continue;
        }
        return err(i, ParseErrorKind::UnexpectedChar(c));
    }
    Ok(tokens)
}

/// A rational function kept as an exact numerator/denominator pair while
/// the expression is folded.  The denominator is never zero: every
/// division checks its right-hand side first.
struct Rat {
    n: Poly,
    d: Poly,
}

struct Parser<'a> {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    src_len: usize,
    var: &'a str,
    field: &'a Field,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&(usize, Token)> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<(usize, Token)> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn here(&self) -> usize {
        self.peek().map_or(self.src_len, |(p, _)| *p)
    }

    fn eat(&mut self, want: &Token) -> bool {
        if self.peek().map(|(_, t)| t) == Some(want) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Rat, ParseError> {
        let mut acc = self.term()?;
        loop {
            if self.eat(&Token::Plus) {
                let rhs = self.term()?;
                acc = Rat {
                    n: &(&acc.n * &rhs.d) + &(&rhs.n * &acc.d),
                    d: &acc.d * &rhs.d,
                };
            } else if self.eat(&Token::Minus) {
                let rhs = self.term()?;
                acc = Rat {
                    n: &(&acc.n * &rhs.d) - &(&rhs.n * &acc.d),
                    d: &acc.d * &rhs.d,
                };
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Rat, ParseError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(&Token::Star) {
                let rhs = self.unary()?;
                acc = Rat { n: &acc.n * &rhs.n, d: &acc.d * &rhs.d };
            } else if let Some((op_pos, Token::Slash)) = self.peek().cloned() {
                self.pos += 1;
                let rhs = self.unary()?;
                if rhs.n.is_zero() {
                    return err(op_pos, ParseErrorKind::DivisionByZero);
                }
                acc = Rat { n: &acc.n * &rhs.d, d: &acc.d * &rhs.n };
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Rat, ParseError> {
        if self.eat(&Token::Minus) {
            let inner = self.unary()?;
            let minus_one = self.field.from_i64(-1);
            return Ok(Rat { n: inner.n.mul_elem(&minus_one), d: inner.d });
        }
        self.power()
    }

    fn power(&mut self) -> Result<Rat, ParseError> {
        let base = self.atom()?;
        if self.eat(&Token::Caret) {
            let e = self.exponent()?;
            return Ok(Rat { n: base.n.pow(e), d: base.d.pow(e) });
        }
        Ok(base)
    }

    /// A right-associative chain of nonnegative integer literals.
    fn exponent(&mut self) -> Result<u32, ParseError> {
        let at = self.here();
        let digits = match self.next() {
            Some((_, Token::Int(digits))) => digits,
            Some((p, t)) => return err(p, ParseErrorKind::ExpectedExponent.or_token(t)),
            None => return err(at, ParseErrorKind::ExpectedExponent),
        };
        let base: u32 = digits
            .parse()
            .map_err(|_| ParseError { position: at, kind: ParseErrorKind::ExponentTooLarge })?;
        if self.eat(&Token::Caret) {
            let rest = self.exponent()?;
            return base.checked_pow(rest).map_or_else(
                || err(at, ParseErrorKind::ExponentTooLarge),
                Ok,
            );
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Rat, ParseError> {
        let at = self.here();
        match self.next() {
            Some((_, Token::Int(digits))) => {
                let value: BigInt = digits.parse().expect("digits form an integer");
                Ok(self.constant(self.field.from_bigint(&value)))
            }
            Some((p, Token::Name(name))) => {
                if name == self.var {
                    Ok(Rat { n: Poly::var(self.field), d: Poly::one(self.field) })
                } else {
                    err(
                        p,
                        ParseErrorKind::UnknownName {
                            found: name,
                            expected: self.var.to_string(),
                        },
                    )
                }
            }
            Some((_, Token::LParen)) => {
                let inner = self.expr()?;
                let close = self.here();
                match self.next() {
                    Some((_, Token::RParen)) => Ok(inner),
                    Some((p, t)) => err(p, ParseErrorKind::UnexpectedToken(t.describe())),
                    None => err(close, ParseErrorKind::UnexpectedEnd),
                }
            }
            Some((p, t)) => err(p, ParseErrorKind::UnexpectedToken(t.describe())),
            None => err(at, ParseErrorKind::UnexpectedEnd),
        }
    }

    fn constant(&self, value: crate::field::Elem) -> Rat {
        Rat {
            n: Poly::constant(value),
            d: Poly::one(self.field),
        }
    }
}

impl ParseErrorKind {
    /// `ExpectedExponent`, except that a stray token report reads better
    /// for things that could never start an exponent.
    fn or_token(self, t: Token) -> ParseErrorKind {
        match t {
            Token::Int(_) => self,
            other => ParseErrorKind::UnexpectedToken(other.describe()),
        }
    }
}

/// Parses `src` as a rational expression in the variable `var` over
/// `field`, returning an exact numerator/denominator pair (not reduced;
/// the denominator is nonzero).
pub fn parse_rational_expr(
    src: &str,
    var: &str,
    field: &Field,
) -> Result<(Poly, Poly), ParseError> {
    let tokens = tokenize(src)?;
    let mut parser = Parser { tokens, pos: 0, src_len: src.len(), var, field };
    let value = parser.expr()?;
    if let Some((p, _)) = parser.peek() {
        return err(*p, ParseErrorKind::TrailingInput);
    }
    Ok((value.n, value.d))
}

/// Parses `src` and builds the rational map it denotes.  Beyond expression
/// errors this rejects constant expressions, which do not define a map of
/// the line.
pub fn parse_map(src: &str, var: &str, field: &Field) -> Result<RationalMap, ParseError> {
    let (n, d) = parse_rational_expr(src, var, field)?;
    RationalMap::new(n, d).map_err(|e| match e {
        MapError::ConstantMap => ParseError {
            position: 0,
            kind: ParseErrorKind::ConstantExpression,
        },
        MapError::ZeroDenominator => {
            unreachable!("division checks keep the denominator nonzero")
        }
    })
}
