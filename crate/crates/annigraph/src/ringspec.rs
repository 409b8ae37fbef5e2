//! The ring-specification grammar and its parser.
//!
//! ```text
//! spec := atom ( "x" atom )* ;
//! atom := "Z" INT | "Z" PRIME "[x]/(" poly ")" | "N(" PRIME "," INT ")" ;
//! poly := term ( "+" term )* ;  term := [INT] ["x" ["^" INT]] ;
//! ```
//!
//! Products associate left, `INT` is decimal, and whitespace is ignored
//! between tokens. Every specification renders back to a string that parses
//! to an equal value.

use std::fmt;

use thiserror::Error;

use crate::ring::{is_prime, render_poly, FiniteRing, RingError};

/// Abstract syntax of a ring specification. `PolyQuot` stores modulus
/// coefficients ascending (index = exponent); `Product` is flat, length >= 2,
/// with non-product members.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingSpec {
    Cyclic(u64),
    PolyQuot(u64, Vec<u64>),
    NullSquare(u64, u32),
    Product(Vec<RingSpec>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at byte {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

impl RingSpec {
    pub fn parse(text: &str) -> Result<RingSpec, ParseError> {
        Parser { src: text.as_bytes(), pos: 0 }.parse_spec()
    }

    /// Canonical rendering; parses back to an equal value.
    pub fn render(&self) -> String {
        match self {
            RingSpec::Cyclic(n) => format!("Z{n}"),
            RingSpec::PolyQuot(p, coeffs) => format!("Z{p}[x]/({})", render_poly(coeffs)),
            RingSpec::NullSquare(p, d) => format!("N({p},{d})"),
            RingSpec::Product(parts) => parts
                .iter()
                .map(RingSpec::render)
                .collect::<Vec<_>>()
                .join(" x "),
        }
    }

    /// Order of the ring this specification denotes.
    pub fn order(&self) -> u64 {
        match self {
            RingSpec::Cyclic(n) => *n,
            RingSpec::PolyQuot(p, coeffs) => p.pow(coeffs.len() as u32 - 1),
            RingSpec::NullSquare(p, d) => p.pow(d + 1),
            RingSpec::Product(parts) => parts.iter().map(RingSpec::order).product(),
        }
    }

    /// Builds the ring; its label equals `self.render()`.
    pub fn build(&self) -> Result<FiniteRing, RingError> {
        match self {
            RingSpec::Cyclic(n) => FiniteRing::cyclic(*n as usize),
            RingSpec::PolyQuot(p, coeffs) => FiniteRing::poly_quotient(*p, coeffs),
            RingSpec::NullSquare(p, d) => FiniteRing::null_square(*p, *d),
            RingSpec::Product(parts) => {
                let mut acc = parts[0].build()?;
                for part in &parts[1..] {
                    acc = acc.product(&part.build()?)?;
                }
                Ok(acc)
            }
        }
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, pos: usize, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(self.pos, format!("expected '{}'", c as char))
        }
    }

    fn int(&mut self) -> Result<u64, ParseError> {
        let start = self.pos;
        let mut val: u64 = 0;
        while let Some(c) = self.peek() {
            if !c.is_ascii_digit() {
                break;
            }
            val = val
                .checked_mul(10)
                .and_then(|v| v.checked_add((c - b'0') as u64))
                .ok_or(ParseError { pos: start, msg: "integer overflow".into() })?;
            self.pos += 1;
        }
        if self.pos == start {
            return self.err(start, "expected an integer");
        }
        Ok(val)
    }

    fn parse_spec(&mut self) -> Result<RingSpec, ParseError> {
        let mut parts = vec![self.atom()?];
        loop {
            self.skip_ws();
            match self.peek() {
                None => break,
                Some(b'x') => {
                    self.pos += 1;
                    self.skip_ws();
                    parts.push(self.atom()?);
                }
                Some(c) => {
                    return self.err(self.pos, format!("unexpected '{}'", c as char));
                }
            }
        }
        if parts.len() == 1 {
            Ok(parts.pop().unwrap())
        } else {
            Ok(RingSpec::Product(parts))
        }
    }

    fn atom(&mut self) -> Result<RingSpec, ParseError> {
        self.skip_ws();
        match self.peek() {
            Some(b'Z') => {
                self.pos += 1;
                let npos = self.pos;
                let n = self.int()?;
                if self.peek() == Some(b'[') {
                    if !is_prime(n) {
                        return self.err(npos, format!("characteristic {n} is not prime"));
                    }
                    self.expect(b'[')?;
                    self.expect(b'x')?;
                    self.expect(b']')?;
                    self.expect(b'/')?;
                    self.expect(b'(')?;
                    let ppos = self.pos;
                    let coeffs = self.poly(n)?;
                    self.expect(b')')?;
                    if coeffs.len() < 2 || coeffs.last() != Some(&1) {
                        return self.err(
                            ppos,
                            "polynomial must be monic of degree at least 1",
                        );
                    }
                    Ok(RingSpec::PolyQuot(n, coeffs))
                } else {
                    Ok(RingSpec::Cyclic(n))
                }
            }
            Some(b'N') => {
                self.pos += 1;
                self.expect(b'(')?;
                self.skip_ws();
                let ppos = self.pos;
                let p = self.int()?;
                if !is_prime(p) {
                    return self.err(ppos, format!("characteristic {p} is not prime"));
                }
                self.skip_ws();
                self.expect(b',')?;
                self.skip_ws();
                let dpos = self.pos;
                let d = self.int()?;
                if d == 0 || d > 30 {
                    return self.err(dpos, "dimension must be between 1 and 30");
                }
                self.skip_ws();
                self.expect(b')')?;
                Ok(RingSpec::NullSquare(p, d as u32))
            }
            Some(c) => self.err(self.pos, format!("unexpected '{}'", c as char)),
            None => self.err(self.pos, "expected a ring atom"),
        }
    }

    /// Terms are summed into a coefficient vector mod p; duplicates allowed.
    fn poly(&mut self, p: u64) -> Result<Vec<u64>, ParseError> {
        let mut coeffs: Vec<u64> = Vec::new();
        loop {
            self.skip_ws();
            let (coeff, exp) = self.term()?;
            if coeffs.len() <= exp {
                coeffs.resize(exp + 1, 0);
            }
            coeffs[exp] = (coeffs[exp] + coeff) % p;
            self.skip_ws();
            if !self.eat(b'+') {
                break;
            }
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Ok(coeffs)
    }

    fn term(&mut self) -> Result<(u64, usize), ParseError> {
        let start = self.pos;
        let coeff = if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.int()?
        } else {
            1
        };
        if self.eat(b'x') {
            let exp = if self.eat(b'^') { self.int()? as usize } else { 1 };
            if exp > 30 {
                return self.err(start, "exponent too large");
            }
            Ok((coeff, exp))
        } else if self.pos > start {
            Ok((coeff, 0))
        } else {
            self.err(start, "expected a polynomial term")
        }
    }
}
