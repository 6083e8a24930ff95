//! Recursive-descent parser for the polynomial grammar:
//! variables `[A-Za-z][A-Za-z0-9_]*`, integer and rational literals (`3`,
//! `3/4`), operators `+ - * ^` with `^` binding tightest, parentheses.
//! Implicit multiplication is not allowed; whitespace is insignificant.

use super::{Polynomial, Rational, Ring};
use crate::error::{Error, Result};
use num::BigInt;
use std::str::FromStr;
use std::sync::Arc;

pub fn parse(text: &str, ring: &Arc<Ring>) -> Result<Polynomial> {
    let mut p = Parser { bytes: text.as_bytes(), pos: 0, ring };
    p.skip_ws();
    let poly = p.expr()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(poly)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    ring: &'a Arc<Ring>,
}

impl<'a> Parser<'a> {
    fn err(&self, message: &str) -> Error {
        Error::Parse { position: self.pos, message: message.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        self.skip_ws();
        let mut acc = self.term()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        self.skip_ws();
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            if self.eat(b'*') {
                acc = acc.mul(&self.factor()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial> {
        self.skip_ws();
        if self.eat(b'-') {
            return Ok(self.factor()?.neg());
        }
        if self.eat(b'+') {
            return self.factor();
        }
        let base = self.atom()?;
        self.skip_ws();
        if self.eat(b'^') {
            self.skip_ws();
            let e = self.natural()?;
            Ok(base.pow(e))
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Polynomial> {
        self.skip_ws();
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.skip_ws();
                if !self.eat(b')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(inner)
            }
            Some(b) if b.is_ascii_digit() => {
                let n = self.integer()?;
                self.skip_ws();
                if self.eat(b'/') {
                    self.skip_ws();
                    let d = self.integer()?;
                    if d == BigInt::from(0) {
                        return Err(self.err("zero denominator"));
                    }
                    Ok(Polynomial::constant(self.ring, Rational::new(n, d)))
                } else {
                    Ok(Polynomial::constant(self.ring, Rational::from(n)))
                }
            }
            Some(b) if b.is_ascii_alphabetic() => {
                let start = self.pos;
                self.pos += 1;
                while self
                    .peek()
                    .map(|c| c.is_ascii_alphanumeric() || c == b'_')
                    .unwrap_or(false)
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
                match self.ring.var_index(name) {
                    Some(i) => Ok(Polynomial::var(self.ring, i)),
                    None => Err(Error::Parse {
                        position: start,
                        message: format!("unknown variable `{name}`"),
                    }),
                }
            }
            _ => Err(self.err("expected a literal, variable, or '('")),
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.peek().map(|c| c.is_ascii_digit()).unwrap_or(false) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        let s = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        BigInt::from_str(s).map_err(|e| Error::Parse {
            position: start,
            message: format!("bad integer: {e}"),
        })
    }

    fn natural(&mut self) -> Result<u32> {
        let n = self.integer()?;
        u32::try_from(n).map_err(|_| self.err("exponent out of range"))
    }
}

/// Parse or panic; for internal construction of known-good polynomials.
pub fn poly(text: &str, ring: &Arc<Ring>) -> Polynomial {
    parse(text, ring).expect("polynomial literal must parse")
}
