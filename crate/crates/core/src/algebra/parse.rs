//! Reader for element expressions.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' exponent)?
//! atom   := integer | 'q' | 'mu' | generator | '(' expr ')'
//! ```
//!
//! Generators are `x1, x2, x3` for a single factor and `x{i}{j}` in a tensor
//! product. Products are evaluated with the algebra multiplication, so any
//! word is accepted and brought to normal form. Division is only by nonzero
//! scalars; negative powers need a scalar or, in the localization, a
//! monomial unit.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{generator_name, GradedElement, Mode};
use crate::error::{Error, Result};
use crate::presentation::AlgebraParams;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    alg: &'a AlgebraParams,
    mode: Mode,
}

fn perr(pos: usize, msg: impl Into<String>) -> Error {
    Error::Parse { pos, msg: msg.into() }
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<GradedElement> {
        let mut acc = self.term()?;
        while let Some(c) = self.peek() {
            match c {
                b'+' => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                b'-' => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<GradedElement> {
        let mut acc = self.unary()?;
        while let Some(c) = self.peek() {
            match c {
                b'*' => {
                    self.pos += 1;
                    acc = &acc * &self.unary()?;
                }
                b'/' => {
                    self.pos += 1;
                    let at = self.pos;
                    let d = self.unary()?;
                    let s = d.as_scalar().ok_or_else(|| perr(at, "division is only by scalars"))?;
                    acc = acc.scale(&s.inv()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<GradedElement> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(-self.unary()?);
        }
        if self.peek() == Some(b'+') {
            self.pos += 1;
            return self.unary();
        }
        self.power()
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(perr(start, "expected an integer"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("digits form an integer"))
    }

    fn exponent(&mut self) -> Result<i64> {
        let at = self.pos;
        let paren = self.peek() == Some(b'(');
        if paren {
            self.pos += 1;
        }
        let neg = self.peek() == Some(b'-');
        if neg {
            self.pos += 1;
        }
        let v = self.integer()?;
        if paren {
            if self.peek() != Some(b')') {
                return Err(perr(self.pos, "expected `)`"));
            }
            self.pos += 1;
        }
        let v: i64 = v.try_into().map_err(|_| perr(at, "exponent too large"))?;
        Ok(if neg { -v } else { v })
    }

    fn power(&mut self) -> Result<GradedElement> {
        let start = self.peek().map(|_| self.pos).unwrap_or(self.pos);
        let (base, name) = self.atom()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        let e = self.exponent()?;
        if e >= 0 {
            return Ok(base.pow(e as u32));
        }
        if let Some(s) = base.as_scalar() {
            let v = s.pow(e)?;
            return Ok(GradedElement::scalar(self.alg, self.mode, v));
        }
        if self.mode == Mode::Polynomial {
            return Err(Error::NegativeExponent(name.unwrap_or_else(|| {
                String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
            })));
        }
        let inv = base.try_inverse().map_err(|_| perr(start, "negative power of a non-unit"))?;
        Ok(inv.pow(e.unsigned_abs() as u32))
    }

    fn atom(&mut self) -> Result<(GradedElement, Option<String>)> {
        let c = self.peek().ok_or_else(|| perr(self.pos, "unexpected end of input"))?;
        let field = self.alg.field();
        if c == b'(' {
            self.pos += 1;
            let e = self.expr()?;
            if self.peek() != Some(b')') {
                return Err(perr(self.pos, "expected `)`"));
            }
            self.pos += 1;
            return Ok((e, None));
        }
        if c.is_ascii_digit() {
            let v = self.integer()?;
            let s = field.big_rational(&BigRational::from_integer(v))?;
            return Ok((GradedElement::scalar(self.alg, self.mode, s), None));
        }
        if c.is_ascii_alphabetic() {
            let start = self.pos;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
                self.pos += 1;
            }
            let id = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii identifier");
            let elem = match id {
                "q" => GradedElement::scalar(self.alg, self.mode, field.q()),
                "mu" => GradedElement::scalar(self.alg, self.mode, field.mu()),
                _ => self.generator(id).ok_or_else(|| perr(start, format!("unknown symbol `{id}`")))?,
            };
            return Ok((elem, Some(id.to_string())));
        }
        Err(perr(self.pos, format!("unexpected character `{}`", c as char)))
    }

    fn generator(&self, id: &str) -> Option<GradedElement> {
        let n = self.alg.arity();
        for slot in 0..n {
            for k in 1..=3 {
                if generator_name(n, slot, k) == id {
                    return Some(GradedElement::generator(self.alg, self.mode, slot, k));
                }
            }
        }
        None
    }
}

/// Parses `text` into normal form in the given algebra and mode.
pub fn parse_element(text: &str, alg: &AlgebraParams, mode: Mode) -> Result<GradedElement> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, alg, mode };
    if p.peek().is_none() {
        return Err(perr(0, "empty expression"));
    }
    let e = p.expr()?;
    if let Some(c) = p.peek() {
        return Err(perr(p.pos, format!("unexpected `{}`", c as char)));
    }
    Ok(e)
}
