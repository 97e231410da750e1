//! Parser for the textual form of rational functions.
//!
//! Grammar: sums and differences of products and quotients of powers of
//! integers, parameters (`q`, `t`, `a`/`alpha`/`α`, `u`) and parenthesized
//! expressions. Exponents are integers and may be negative.

use super::poly::Var;
use super::ratfunc::RatFunc;
use super::CoeffError;

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    src: &'a str,
}

pub fn parse(s: &str) -> Result<RatFunc, CoeffError> {
    let mut p = Parser {
        chars: s.chars().filter(|c| !c.is_whitespace()).collect(),
        pos: 0,
        src: s,
    };
    let v = p.expr()?;
    if p.pos != p.chars.len() {
        return Err(p.error("trailing input"));
    }
    Ok(v)
}

impl<'a> Parser<'a> {
    fn error(&self, what: &str) -> CoeffError {
        CoeffError::Parse(format!("{} at offset {} in {:?}", what, self.pos, self.src))
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<RatFunc, CoeffError> {
        let mut acc = self.term()?;
        while let Some(c) = self.peek() {
            match c {
                '+' => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                '-' => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<RatFunc, CoeffError> {
        let mut acc = self.unary()?;
        while let Some(c) = self.peek() {
            match c {
                '*' => {
                    self.pos += 1;
                    acc = acc.mul(&self.unary()?);
                }
                '/' => {
                    self.pos += 1;
                    let d = self.unary()?;
                    acc = acc.div(&d)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<RatFunc, CoeffError> {
        if self.peek() == Some('-') {
            self.pos += 1;
            return Ok(self.unary()?.neg());
        }
        if self.peek() == Some('+') {
            self.pos += 1;
        }
        self.power()
    }

    fn power(&mut self) -> Result<RatFunc, CoeffError> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            let neg = if self.peek() == Some('-') {
                self.pos += 1;
                true
            } else {
                false
            };
            let e = self.integer()?;
            let e: i64 = e.parse().map_err(|_| self.error("bad exponent"))?;
            if neg && base.is_zero() {
                return Err(CoeffError::DivisionByZero);
            }
            return Ok(base.powi(if neg { -e } else { e }));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<String, CoeffError> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected integer"));
        }
        Ok(self.chars[start..self.pos].iter().collect())
    }

    fn atom(&mut self) -> Result<RatFunc, CoeffError> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let digits = self.integer()?;
                let n: num_bigint::BigInt = digits.parse().map_err(|_| self.error("bad integer"))?;
                Ok(RatFunc::from_bigint(n))
            }
            Some(c) if c.is_alphabetic() => {
                let start = self.pos;
                while matches!(self.peek(), Some(c) if c.is_alphabetic()) {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                let v = match name.as_str() {
                    "q" => Var::Q,
                    "t" => Var::T,
                    "a" | "alpha" | "α" => Var::Alpha,
                    "u" => Var::U,
                    _ => {
                        self.pos = start;
                        return Err(self.error("unknown parameter"));
                    }
                };
                Ok(RatFunc::var(v))
            }
            _ => Err(self.error("unexpected input")),
        }
    }
}
