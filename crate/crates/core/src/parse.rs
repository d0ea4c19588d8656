//! Parser for the polynomial text format:
//!
//! ```text
//! rational := '-'? digits ('/' digits)?
//! variable := 'x' digits                 (1-based)
//! power    := variable ('^' digits)?
//! monomial := power ('*' power)*
//! term     := rational ('*' monomial)? | monomial
//! poly     := term (('+'|'-') term)* | '0'
//! ```
//!
//! Spaces between tokens are ignored. A leading `-` directly before a
//! monomial (`-x1`) is accepted as shorthand for `-1*x1`. In free mode the
//! factor order of a monomial is kept; in commutative mode it is normalized.
//! Error offsets are 1-based byte positions.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::endomorphism::{Elementary, Endomorphism};
use crate::error::ParseError;
use crate::monomial::Monomial;
use crate::polynomial::{AlgebraMode, Polynomial};
use crate::scalar::{parse_scalar, Scalar};

pub fn parse_polynomial(text: &str, mode: AlgebraMode, n: usize) -> Result<Polynomial, ParseError> {
    let mut parser = Parser {
        src: text.as_bytes(),
        pos: 0,
        mode,
        n,
    };
    let p = parser.poly()?;
    parser.skip_ws();
    if parser.pos < parser.src.len() {
        return Err(parser.error("expected '+', '-' or end of input"));
    }
    Ok(p)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    mode: AlgebraMode,
    n: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> ParseError {
        ParseError::new(self.pos + 1, message)
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn poly(&mut self) -> Result<Polynomial, ParseError> {
        let mut out = Polynomial::zero(self.mode, self.n);
        self.skip_ws();
        if self.peek().is_none() {
            return Err(self.error("empty polynomial"));
        }
        let (m, c) = self.term()?;
        out.add_term(m, c);
        loop {
            self.skip_ws();
            let negate = match self.peek() {
                Some(b'+') => false,
                Some(b'-') => true,
                _ => break,
            };
            self.pos += 1;
            self.skip_ws();
            let (m, c) = self.term()?;
            out.add_term(m, if negate { -c } else { c });
        }
        Ok(out)
    }

    fn term(&mut self) -> Result<(Monomial, Scalar), ParseError> {
        match self.peek() {
            Some(b'x') => Ok((self.monomial()?, Scalar::one())),
            Some(b'-') if self.src.get(self.pos + 1) == Some(&b'x') => {
                self.pos += 1;
                Ok((self.monomial()?, -Scalar::one()))
            }
            Some(b'-') | Some(b'0'..=b'9') => {
                let c = self.rational()?;
                let save = self.pos;
                self.skip_ws();
                if self.peek() == Some(b'*') {
                    self.pos += 1;
                    self.skip_ws();
                    if self.peek() != Some(b'x') {
                        return Err(self.error("expected a variable after '*'"));
                    }
                    Ok((self.monomial()?, c))
                } else {
                    self.pos = save;
                    Ok((Polynomial::unit_monomial(self.mode, self.n), c))
                }
            }
            Some(_) => Err(self.error("expected a number or a variable")),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn digits(&mut self) -> Result<BigInt, ParseError> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("digits parse as an integer"))
    }

    fn small_number(&mut self, what: &str) -> Result<u32, ParseError> {
        let start = self.pos;
        let value = self.digits()?;
        u32::try_from(value).map_err(|_| ParseError::new(start + 1, format!("{what} is too large")))
    }

    fn rational(&mut self) -> Result<Scalar, ParseError> {
        let negative = self.peek() == Some(b'-');
        if negative {
            self.pos += 1;
        }
        let num = self.digits()?;
        let den = if self.peek() == Some(b'/') {
            self.pos += 1;
            let at = self.pos;
            let d = self.digits()?;
            if d.is_zero() {
                return Err(ParseError::new(at + 1, "zero denominator"));
            }
            d
        } else {
            BigInt::one()
        };
        let value = Scalar::new(num, den);
        Ok(if negative { -value } else { value })
    }

    fn monomial(&mut self) -> Result<Monomial, ParseError> {
        let mut letters: Vec<u32> = Vec::new();
        loop {
            let (var, exp) = self.power()?;
            letters.extend(std::iter::repeat_n(var, exp as usize));
            let save = self.pos;
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.pos += 1;
                self.skip_ws();
                if self.peek() != Some(b'x') {
                    return Err(self.error("expected a variable after '*'"));
                }
            } else {
                self.pos = save;
                break;
            }
        }
        Ok(match self.mode {
            AlgebraMode::Free => Monomial::Free(letters),
            AlgebraMode::Commutative => {
                let mut e = vec![0; self.n];
                for l in letters {
                    e[l as usize] += 1;
                }
                Monomial::Commutative(e)
            }
        })
    }

    fn power(&mut self) -> Result<(u32, u32), ParseError> {
        if self.peek() != Some(b'x') {
            return Err(self.error("expected a variable"));
        }
        let at = self.pos + 1;
        self.pos += 1;
        let index = self.small_number("variable index")? as usize;
        if index == 0 || index > self.n {
            return Err(ParseError::new(at, format!("variable x{index} out of range x1..x{}", self.n)));
        }
        let exp = if self.peek() == Some(b'^') {
            self.pos += 1;
            self.small_number("exponent")?
        } else {
            1
        };
        Ok((index as u32 - 1, exp))
    }
}

/// Parses `sigma(i, alpha; poly)`.
pub fn parse_elementary(text: &str, mode: AlgebraMode, n: usize) -> crate::Result<Elementary> {
    let lead = text.len() - text.trim_start().len();
    let body = text.trim();
    if !body.starts_with("sigma(") {
        return Err(ParseError::new(lead + 1, "expected 'sigma('").into());
    }
    if !body.ends_with(')') {
        return Err(ParseError::new(lead + body.len() + 1, "expected ')'").into());
    }
    let start = lead + "sigma(".len();
    let inner = &text[start..lead + body.len() - 1];
    let comma = inner
        .find(',')
        .ok_or_else(|| ParseError::new(start + 1, "expected 'i, alpha; poly'"))?;
    let semi = inner
        .find(';')
        .filter(|&s| s > comma)
        .ok_or_else(|| ParseError::new(start + comma + 2, "expected ';' after alpha"))?;
    let index: usize = inner[..comma]
        .trim()
        .parse()
        .map_err(|_| ParseError::new(start + 1, "expected an index"))?;
    let alpha = parse_scalar(inner[comma + 1..semi].trim())
        .ok_or_else(|| ParseError::new(start + comma + 2, "invalid scalar"))?;
    let poly_start = start + semi + 1;
    let f = parse_polynomial(&inner[semi + 1..], mode, n)
        .map_err(|e| ParseError::new(poly_start + e.offset, e.message))?;
    Elementary::new(index, alpha, f)
}

/// Parses the image list `(img1, ..., imgn)`; `n` is the number of images.
pub fn parse_endomorphism(text: &str, mode: AlgebraMode) -> crate::Result<Endomorphism> {
    let lead = text.len() - text.trim_start().len();
    let body = text.trim();
    if !body.starts_with('(') {
        return Err(ParseError::new(lead + 1, "expected '('").into());
    }
    if !body.ends_with(')') || body.len() < 2 {
        return Err(ParseError::new(lead + body.len() + 1, "expected ')'").into());
    }
    let inner = &body[1..body.len() - 1];
    let n = inner.split(',').count();
    let mut offset = lead + 1;
    let mut images = Vec::with_capacity(n);
    for piece in inner.split(',') {
        let p = parse_polynomial(piece, mode, n).map_err(|e| ParseError::new(offset + e.offset, e.message))?;
        images.push(p);
        offset += piece.len() + 1;
    }
    Endomorphism::new(images)
}
