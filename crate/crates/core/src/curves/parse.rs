//! Parser for curve descriptions and integer polynomials.
//!
//! ```text
//! curve ::= eq (';' eq)? 'over' 'GF(' int ')'
//! eq    ::= var '^2' '=' poly(x)
//! poly  ::= ['-'] term (('+' | '-') term)*
//! term  ::= int ['*' x ['^' int]] | x ['^' int]
//! ```
//!
//! Implicit multiplication (`3x`) is rejected.

use num_bigint::BigInt;
use thiserror::Error;

use crate::exactalg::IntPolynomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Int(u64),
    Ident(String),
    Sym(char),
    End,
}

struct Lexer {
    tokens: Vec<(Token, usize)>,
    ends: Vec<usize>,
    pos: usize,
}

fn err<T>(position: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        position,
        message: message.into(),
    })
}

impl Lexer {
    fn new(text: &str) -> Result<Self, ParseError> {
        let bytes = text.as_bytes();
        let mut tokens = Vec::new();
        let mut ends = Vec::new();
        let mut i = 0;
        while i < bytes.len() {
            let c = bytes[i] as char;
            if c.is_ascii_whitespace() {
                i += 1;
            } else if c.is_ascii_digit() {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let Ok(v) = text[start..i].parse::<u64>() else {
                    return err(start, "integer literal too large");
                };
                tokens.push((Token::Int(v), start));
                ends.push(i);
            } else if c.is_ascii_alphabetic() {
                let start = i;
                while i < bytes.len() && (bytes[i] as char).is_ascii_alphanumeric() {
                    i += 1;
                }
                tokens.push((Token::Ident(text[start..i].to_string()), start));
                ends.push(i);
            } else if "+-*^=;()".contains(c) {
                tokens.push((Token::Sym(c), i));
                i += 1;
                ends.push(i);
            } else {
                return err(i, format!("unexpected character {c:?}"));
            }
        }
        tokens.push((Token::End, text.len()));
        ends.push(text.len());
        Ok(Self { tokens, ends, pos: 0 })
    }

    fn peek(&self) -> &Token {
        &self.tokens[self.pos].0
    }

    fn offset(&self) -> usize {
        self.tokens[self.pos].1
    }

    fn next(&mut self) -> (Token, usize) {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn expect_sym(&mut self, c: char) -> Result<(), ParseError> {
        match self.next() {
            (Token::Sym(s), _) if s == c => Ok(()),
            (_, at) => err(at, format!("expected '{c}'")),
        }
    }

    fn expect_int(&mut self) -> Result<u64, ParseError> {
        match self.next() {
            (Token::Int(v), _) => Ok(v),
            (_, at) => err(at, "expected an integer"),
        }
    }

    fn expect_ident(&mut self, word: &str) -> Result<(), ParseError> {
        match self.next() {
            (Token::Ident(s), _) if s == word => Ok(()),
            (_, at) => err(at, format!("expected '{word}'")),
        }
    }

    /// A term followed directly by another factor (`3x`, `x(`, `x 2`, `x x`).
    fn reject_implicit_product(&self, var: &str) -> Result<(), ParseError> {
        let adjacent = self.pos > 0 && self.ends[self.pos - 1] == self.offset();
        let implicit = match self.peek() {
            Token::Ident(name) => adjacent || name == var,
            Token::Sym('(') | Token::Int(_) => true,
            _ => false,
        };
        if implicit {
            err(self.offset(), "implicit multiplication is not allowed; use '*'")
        } else {
            Ok(())
        }
    }

    /// Parses a polynomial in `var`, stopping at the first token that cannot
    /// continue it.
    fn polynomial(&mut self, var: &str) -> Result<IntPolynomial, ParseError> {
        let mut terms: Vec<(i64, usize)> = Vec::new();
        let mut sign = 1i64;
        if *self.peek() == Token::Sym('-') {
            self.next();
            sign = -1;
        } else if *self.peek() == Token::Sym('+') {
            self.next();
        }
        loop {
            let (coeff, power) = self.term(var)?;
            let Ok(coeff) = i64::try_from(coeff) else {
                return err(self.offset(), "coefficient too large");
            };
            let Ok(power) = usize::try_from(power) else {
                return err(self.offset(), "exponent too large");
            };
            if power > 64 {
                return err(self.offset(), "exponent too large");
            }
            terms.push((sign * coeff, power));
            match self.peek() {
                Token::Sym('+') => {
                    self.next();
                    sign = 1;
                }
                Token::Sym('-') => {
                    self.next();
                    sign = -1;
                }
                _ => break,
            }
        }
        let degree = terms.iter().map(|t| t.1).max().unwrap_or(0);
        let mut coeffs = vec![BigInt::from(0); degree + 1];
        for (c, e) in terms {
            coeffs[e] += c;
        }
        Ok(IntPolynomial::new(coeffs))
    }

    fn term(&mut self, var: &str) -> Result<(u64, u64), ParseError> {
        match self.next() {
            (Token::Int(c), _) => {
                if *self.peek() == Token::Sym('*') {
                    self.next();
                    let power = self.variable_power(var)?;
                    Ok((c, power))
                } else {
                    self.reject_implicit_product(var)?;
                    Ok((c, 0))
                }
            }
            (Token::Ident(name), at) => {
                if name != var {
                    return err(at, format!("unknown variable '{name}', expected '{var}'"));
                }
                self.self_power(var).map(|p| (1, p))
            }
            (_, at) => err(at, "expected a term"),
        }
    }

    fn variable_power(&mut self, var: &str) -> Result<u64, ParseError> {
        match self.next() {
            (Token::Ident(name), _) if name == var => self.self_power(var),
            (_, at) => err(at, format!("expected '{var}' after '*'")),
        }
    }

    fn self_power(&mut self, var: &str) -> Result<u64, ParseError> {
        let power = if *self.peek() == Token::Sym('^') {
            self.next();
            self.expect_int()?
        } else {
            1
        };
        self.reject_implicit_product(var)?;
        Ok(power)
    }
}

/// One `var^2 = f(x)` equation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Equation {
    pub var: String,
    pub rhs: IntPolynomial,
    /// Byte offset of the right-hand side, for error reporting.
    pub rhs_offset: usize,
}

/// Syntactic content of a curve description before validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawCurve {
    pub equations: Vec<Equation>,
    pub p: u64,
}

pub fn parse_raw_curve(text: &str) -> Result<RawCurve, ParseError> {
    let mut lx = Lexer::new(text)?;
    let mut equations: Vec<Equation> = Vec::new();
    loop {
        let (tok, at) = lx.next();
        let Token::Ident(var) = tok else {
            return err(at, "expected a variable name");
        };
        if var == "x" || var == "over" {
            return err(at, format!("'{var}' cannot appear on the left-hand side"));
        }
        if equations.iter().any(|e| e.var == var) {
            return err(at, format!("variable '{var}' is used in two equations"));
        }
        lx.expect_sym('^')?;
        let at_exp = lx.offset();
        if lx.expect_int()? != 2 {
            return err(at_exp, "left-hand side must be a square");
        }
        lx.expect_sym('=')?;
        let rhs_offset = lx.offset();
        let rhs = lx.polynomial("x")?;
        equations.push(Equation {
            var,
            rhs,
            rhs_offset,
        });
        match lx.peek() {
            Token::Sym(';') => {
                lx.next();
                if equations.len() == 2 {
                    return err(lx.offset(), "at most two equations are supported");
                }
            }
            Token::Ident(w) if w == "over" => break,
            _ => return err(lx.offset(), "expected ';' or 'over'"),
        }
    }
    lx.expect_ident("over")?;
    lx.expect_ident("GF")?;
    lx.expect_sym('(')?;
    let p = lx.expect_int()?;
    lx.expect_sym(')')?;
    if *lx.peek() != Token::End {
        return err(lx.offset(), "trailing input");
    }
    Ok(RawCurve { equations, p })
}

/// Parses a factored polynomial such as `(t+3)^3*(t+4)^7` into its factors
/// with multiplicities. A bare factor like `t` or `t+2` is also accepted.
pub fn parse_factored(text: &str, var: &str) -> Result<Vec<(IntPolynomial, u32)>, ParseError> {
    let mut lx = Lexer::new(text)?;
    let mut out = Vec::new();
    loop {
        let factor = if *lx.peek() == Token::Sym('(') {
            lx.next();
            let f = lx.polynomial(var)?;
            lx.expect_sym(')')?;
            f
        } else {
            lx.polynomial(var)?
        };
        let mult = if *lx.peek() == Token::Sym('^') {
            lx.next();
            let at = lx.offset();
            let m = lx.expect_int()?;
            match u32::try_from(m) {
                Ok(m) if m > 0 => m,
                _ => return err(at, "multiplicity must be a positive integer"),
            }
        } else {
            1
        };
        out.push((factor, mult));
        match lx.peek() {
            Token::Sym('*') => {
                lx.next();
            }
            Token::End => break,
            _ => return err(lx.offset(), "expected '*' between factors"),
        }
    }
    Ok(out)
}

/// Parses a single polynomial in `var`.
pub fn parse_polynomial(text: &str, var: &str) -> Result<IntPolynomial, ParseError> {
    let mut lx = Lexer::new(text)?;
    let f = lx.polynomial(var)?;
    if *lx.peek() != Token::End {
        return err(lx.offset(), "trailing input");
    }
    Ok(f)
}
