//! Textual form: `c*T^k` terms joined by `+`, highest degree first. Coefficients are
//! integers in `[0, p)` over prime fields and coordinate vectors `[a0,a1,...]` over
//! extension fields; a coefficient of 1 is omitted and whitespace is ignored.

use std::fmt;

use thiserror::Error;

use super::raw;
use super::{Poly, PolyError};
use crate::ffield::Field;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid polynomial literal at offset {offset}: {message}")]
pub struct LiteralError {
    pub offset: usize,
    pub message: String,
}

impl fmt::Display for Poly {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.coeffs();
        if c.is_empty() {
            return out.write_str("0");
        }
        let field = self.field();
        let mut first = true;
        for k in (0..c.len()).rev() {
            if c[k] == 0 {
                continue;
            }
            if !first {
                out.write_str("+")?;
            }
            first = false;
            if k == 0 {
                out.write_str(&field.display_elem(c[k]))?;
                continue;
            }
            if c[k] != 1 {
                write!(out, "{}*", field.display_elem(c[k]))?;
            }
            if k == 1 {
                out.write_str("T")?;
            } else {
                write!(out, "T^{k}")?;
            }
        }
        Ok(())
    }
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
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

    fn fail<T>(&self, message: impl Into<String>) -> Result<T, LiteralError> {
        Err(LiteralError {
            offset: self.pos,
            message: message.into(),
        })
    }

    fn number(&mut self) -> Result<u64, LiteralError> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.fail("expected a number");
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .expect("ascii digits")
            .parse()
            .map_err(|_| LiteralError {
                offset: start,
                message: "number too large".into(),
            })
    }
}

fn coefficient(field: &Field, cur: &mut Cursor<'_>) -> Result<Option<u32>, LiteralError> {
    let p = field.p() as u64;
    match cur.peek() {
        Some(b'0'..=b'9') => {
            let at = cur.pos;
            let n = cur.number()?;
            if n >= p {
                cur.pos = at;
                return cur.fail(format!("coefficient {n} not in [0,{p})"));
            }
            Ok(Some(n as u32))
        }
        Some(b'[') => {
            cur.pos += 1;
            let mut coords = Vec::new();
            loop {
                let at = cur.pos;
                let n = cur.number()?;
                if n >= p {
                    cur.pos = at;
                    return cur.fail(format!("coordinate {n} not in [0,{p})"));
                }
                coords.push(n as u32);
                if cur.eat(b']') {
                    break;
                }
                if !cur.eat(b',') {
                    return cur.fail("expected ',' or ']'");
                }
            }
            if coords.len() > field.e() as usize {
                return cur.fail(format!("more than {} coordinates", field.e()));
            }
            Ok(Some(
                field.from_coords(&coords).expect("validated coordinates"),
            ))
        }
        _ => Ok(None),
    }
}

fn term(field: &Field, cur: &mut Cursor<'_>) -> Result<(u32, usize), LiteralError> {
    let c = coefficient(field, cur)?;
    let has_t = if c.is_some() {
        if cur.eat(b'*') {
            if cur.peek() != Some(b'T') {
                return cur.fail("expected 'T' after '*'");
            }
            cur.pos += 1;
            true
        } else {
            false
        }
    } else if cur.eat(b'T') {
        true
    } else {
        return cur.fail("expected a coefficient or 'T'");
    };
    let k = if has_t {
        if cur.eat(b'^') {
            cur.number()? as usize
        } else {
            1
        }
    } else {
        0
    };
    Ok((c.unwrap_or(1), k))
}

/// Largest exponent accepted from text.
const MAX_LITERAL_DEGREE: usize = 1 << 16;

impl Poly {
    pub fn parse(field: &Field, text: &str) -> Result<Self, PolyError> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut cur = Cursor {
            bytes: compact.as_bytes(),
            pos: 0,
        };
        if compact.is_empty() {
            return Err(cur.fail::<()>("empty literal").unwrap_err().into());
        }
        let mut coeffs: Vec<u32> = Vec::new();
        loop {
            let (c, k) = term(field, &mut cur)?;
            if k > MAX_LITERAL_DEGREE {
                return Err(cur.fail::<()>("exponent too large").unwrap_err().into());
            }
            if coeffs.len() <= k {
                coeffs.resize(k + 1, 0);
            }
            coeffs[k] = field.add(coeffs[k], c);
            if cur.peek().is_none() {
                break;
            }
            if !cur.eat(b'+') {
                return Err(cur.fail::<()>("expected '+'").unwrap_err().into());
            }
        }
        raw::trim(&mut coeffs);
        Ok(Poly::from_raw(field, coeffs))
    }
}
