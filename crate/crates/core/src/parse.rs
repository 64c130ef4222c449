//! Recursive-descent parser for the polynomial grammar
//!
//! ```text
//! poly   := ['-'] term (('+' | '-') term)*
//! term   := coeff ['*' factor ('*' factor)*] | factor ('*' factor)*
//! factor := var ['^' nat]
//! coeff  := nat
//! ```
//!
//! Whitespace is ignored everywhere. Variable names are identifiers that must
//! belong to the ring.

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::poly::Polynomial;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    names: &'a [String],
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

    fn error(&self, offset: usize, message: impl Into<String>) -> Error {
        Error::Parse {
            offset,
            message: message.into(),
        }
    }

    fn nat(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error(start, "expected a number"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| self.error(start, "number too large"))
    }

    fn ident(&mut self) -> Result<(usize, &'a str)> {
        self.skip_ws();
        let start = self.pos;
        match self.src.get(self.pos) {
            Some(c) if c.is_ascii_alphabetic() || *c == b'_' => {}
            Some(_) => return Err(self.error(start, "expected a variable")),
            None => return Err(self.error(start, "unexpected end of input")),
        }
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        Ok((start, std::str::from_utf8(&self.src[start..self.pos]).unwrap()))
    }

    fn factor(&mut self, exps: &mut [u32]) -> Result<()> {
        let (start, name) = self.ident()?;
        let idx = self
            .names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        let mut e: u64 = 1;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            e = self.nat()?;
        }
        let e = u32::try_from(e).map_err(|_| self.error(start, "exponent too large"))?;
        exps[idx] = exps[idx]
            .checked_add(e)
            .ok_or(Error::Overflow("exponent"))?;
        Ok(())
    }

    fn term(&mut self) -> Result<(Monomial, i64)> {
        let mut exps = vec![0u32; self.names.len()];
        let mut coeff: i64 = 1;
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                coeff = i64::try_from(self.nat()?)
                    .map_err(|_| self.error(start, "coefficient too large"))?;
                if self.peek() != Some(b'*') {
                    return Ok((Monomial::new(exps), coeff));
                }
                self.pos += 1;
                self.factor(&mut exps)?;
            }
            Some(_) => self.factor(&mut exps)?,
            None => {
                return Err(self.error(self.pos, "expected a term"));
            }
        }
        while self.peek() == Some(b'*') {
            self.pos += 1;
            self.factor(&mut exps)?;
        }
        Ok((Monomial::new(exps), coeff))
    }

    fn poly(&mut self) -> Result<Vec<(Monomial, i64)>> {
        let mut terms = vec![];
        let mut sign = 1;
        if self.peek() == Some(b'-') {
            self.pos += 1;
            sign = -1;
        }
        loop {
            let (m, c) = self.term()?;
            terms.push((m, sign * c));
            match self.peek() {
                Some(b'+') => sign = 1,
                Some(b'-') => sign = -1,
                Some(_) => return Err(self.error(self.pos, "expected '+', '-' or '*'")),
                None => return Ok(terms),
            }
            self.pos += 1;
        }
    }
}

/// Parses `src` over the variables `names`.
pub fn parse_polynomial(src: &str, names: &[String]) -> Result<Polynomial> {
    let mut p = Parser {
        src: src.as_bytes(),
        pos: 0,
        names,
    };
    let terms = p.poly()?;
    let poly = Polynomial::from_terms(names.len(), terms)?;
    if poly.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(poly)
}
