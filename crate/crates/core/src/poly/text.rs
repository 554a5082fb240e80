//! Canonical text form: terms in descending monomial order, e.g. `3*x^2 + x`.

use std::fmt;
use std::str::FromStr;

use super::monomial::Monomial;
use super::polynomial::Poly;
use super::var::VarId;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

impl<C: Scalar + fmt::Display> fmt::Display for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms().rev().enumerate() {
            let neg = c.is_negative();
            let mag = if neg { -c.clone() } else { c.clone() };
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at byte {} in {:?}", self.pos, self.src))
    }

    fn take_while(&mut self, pred: impl Fn(char) -> bool) -> &'a str {
        let start = self.pos;
        while let Some(c) = self.src[self.pos..].chars().next() {
            if pred(c) {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
        &self.src[start..self.pos]
    }

    fn integer(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let digits = self.take_while(|c| c.is_ascii_digit());
        if digits.is_empty() {
            Err(self.err("expected digits"))
        } else {
            Ok(digits)
        }
    }

    fn factor<C: Scalar + FromStr>(&mut self) -> Result<(C, Monomial)> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                let lit = if self.peek() == Some('/') {
                    self.bump();
                    let den = self.integer()?;
                    format!("{num}/{den}")
                } else {
                    num.to_owned()
                };
                let value = lit
                    .parse::<C>()
                    .map_err(|_| self.err("coefficient not representable"))?;
                Ok((value, Monomial::one()))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                self.take_while(|c| c.is_ascii_alphanumeric() || c == '_');
                self.take_while(|c| c == '\'');
                if self.src[self.pos..].starts_with('[') {
                    self.take_while(|c| c != ']');
                    if self.bump() != Some(']') {
                        return Err(self.err("unterminated index"));
                    }
                }
                let var: VarId = self.src[start..self.pos].parse()?;
                let exp = if self.peek() == Some('^') {
                    self.bump();
                    self.integer()?
                        .parse::<u32>()
                        .map_err(|_| self.err("bad exponent"))?
                } else {
                    1
                };
                Ok((C::one(), Monomial::power(var, exp)))
            }
            _ => Err(self.err("expected number or variable")),
        }
    }

    fn term<C: Scalar + FromStr>(&mut self) -> Result<(C, Monomial)> {
        let (mut c, mut m) = self.factor::<C>()?;
        while self.peek() == Some('*') {
            self.bump();
            let (c2, m2) = self.factor::<C>()?;
            c = c.mul_ref(&c2);
            m = m.mul(&m2);
        }
        Ok((c, m))
    }

    fn poly<C: Scalar + FromStr>(&mut self) -> Result<Poly<C>> {
        let mut out = Poly::zero();
        let mut first = true;
        loop {
            let neg = match self.peek() {
                None if !first => break,
                Some('+') if !first => {
                    self.bump();
                    false
                }
                Some('-') => {
                    self.bump();
                    true
                }
                _ if first => false,
                _ => return Err(self.err("expected + or -")),
            };
            let (c, m) = self.term::<C>()?;
            out.add_term(m, &if neg { -c } else { c });
            first = false;
        }
        Ok(out)
    }
}

impl<C: Scalar + FromStr> FromStr for Poly<C> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser { src: s, pos: 0 };
        if p.peek().is_none() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        p.poly()
    }
}
