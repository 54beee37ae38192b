//! Recursive-descent parsers for ring specifications and ideal generators.

use super::lexer::{tokenize, Tok, Token};
use super::{RingSpecAst, SpecError};
use crate::ring::{Element, FiniteRing, RingDescriptor};

struct Cursor {
    tokens: Vec<Token>,
    pos: usize,
}

impl Cursor {
    fn new(text: &str) -> Result<Cursor, SpecError> {
        Ok(Cursor {
            tokens: tokenize(text)?,
            pos: 0,
        })
    }

    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn advance(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &[&str]) -> SpecError {
        let t = self.peek();
        SpecError::Syntax {
            offset: t.offset,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: t.tok.describe(),
        }
    }

    fn expect(&mut self, tok: Tok, name: &str) -> Result<Token, SpecError> {
        if self.peek().tok == tok {
            Ok(self.advance())
        } else {
            Err(self.error(&[name]))
        }
    }

    fn expect_number(&mut self, what: &str) -> Result<(u64, usize), SpecError> {
        match self.peek().tok {
            Tok::Number(n) => {
                let t = self.advance();
                Ok((n, t.offset))
            }
            _ => Err(self.error(&[what])),
        }
    }
}

/// Splits `Z<digits>` identifiers such as `Z8`.
fn modular_ident(name: &str) -> Option<u64> {
    let digits = name.strip_prefix('Z')?;
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    digits.parse().ok()
}

pub(super) struct RingParser {
    cursor: Cursor,
}

impl RingParser {
    pub(super) fn new(text: &str) -> Result<RingParser, SpecError> {
        Ok(RingParser {
            cursor: Cursor::new(text)?,
        })
    }

    pub(super) fn parse(mut self) -> Result<RingSpecAst, SpecError> {
        let ast = self.product()?;
        if self.cursor.peek().tok != Tok::Eof {
            return Err(self.cursor.error(&["x", "end of input"]));
        }
        Ok(ast)
    }

    fn product(&mut self) -> Result<RingSpecAst, SpecError> {
        let mut factors = vec![self.atom()?];
        while matches!(&self.cursor.peek().tok, Tok::Ident(s) if s == "x") {
            self.cursor.advance();
            factors.push(self.atom()?);
        }
        if factors.len() == 1 {
            Ok(factors.pop().expect("one factor"))
        } else {
            Ok(RingSpecAst::Product(factors))
        }
    }

    fn atom(&mut self) -> Result<RingSpecAst, SpecError> {
        match self.cursor.peek().tok.clone() {
            Tok::LParen => {
                self.cursor.advance();
                let inner = self.product()?;
                self.cursor.expect(Tok::RParen, ")")?;
                Ok(inner)
            }
            Tok::Ident(name) => {
                let offset = self.cursor.peek().offset;
                match modular_ident(&name) {
                    Some(n) => {
                        self.cursor.advance();
                        if n < 2 {
                            return Err(SpecError::ModulusTooSmall { offset, n });
                        }
                        if self.cursor.peek().tok == Tok::LBracket {
                            self.quotient(n)
                        } else {
                            Ok(RingSpecAst::Modular { modulus: n })
                        }
                    }
                    None => Err(self.cursor.error(&["Z<n>", "("])),
                }
            }
            _ => Err(self.cursor.error(&["Z<n>", "("])),
        }
    }

    fn quotient(&mut self, modulus: u64) -> Result<RingSpecAst, SpecError> {
        self.cursor.expect(Tok::LBracket, "[")?;
        let mut variables: Vec<String> = Vec::new();
        loop {
            match self.cursor.peek().tok.clone() {
                Tok::Ident(v) => {
                    let offset = self.cursor.peek().offset;
                    if variables.contains(&v) {
                        return Err(SpecError::DuplicateVariable { offset, name: v });
                    }
                    self.cursor.advance();
                    variables.push(v);
                }
                _ => return Err(self.cursor.error(&["variable name"])),
            }
            match self.cursor.peek().tok {
                Tok::Comma => {
                    self.cursor.advance();
                }
                Tok::RBracket => break,
                _ => return Err(self.cursor.error(&[",", "]"])),
            }
        }
        self.cursor.expect(Tok::RBracket, "]")?;
        self.cursor.expect(Tok::Slash, "/")?;
        self.cursor.expect(Tok::LParen, "(")?;
        let mut generators = Vec::new();
        loop {
            generators.push(self.monomial(&variables)?);
            match self.cursor.peek().tok {
                Tok::Comma => {
                    self.cursor.advance();
                }
                Tok::RParen => break,
                _ => return Err(self.cursor.error(&[",", ")", "*"])),
            }
        }
        self.cursor.expect(Tok::RParen, ")")?;
        Ok(RingSpecAst::Quotient {
            modulus,
            variables,
            generators,
        })
    }

    fn monomial(&mut self, variables: &[String]) -> Result<Vec<u32>, SpecError> {
        let start = self.cursor.peek().offset;
        let mut exponents = vec![0u32; variables.len()];
        loop {
            match self.cursor.peek().tok.clone() {
                Tok::Ident(v) => {
                    let offset = self.cursor.peek().offset;
                    let Some(index) = variables.iter().position(|w| *w == v) else {
                        return Err(SpecError::UnknownVariable { offset, name: v });
                    };
                    self.cursor.advance();
                    let exponent = if self.cursor.peek().tok == Tok::Caret {
                        self.cursor.advance();
                        let (e, eoff) = self.cursor.expect_number("exponent")?;
                        u32::try_from(e)
                            .map_err(|_| SpecError::NumberOverflow { offset: eoff })?
                    } else {
                        1
                    };
                    exponents[index] += exponent;
                }
                _ => return Err(self.cursor.error(&["variable name"])),
            }
            if self.cursor.peek().tok == Tok::Star {
                self.cursor.advance();
            } else {
                break;
            }
        }
        if exponents.iter().all(|e| *e == 0) {
            return Err(SpecError::ConstantGenerator { offset: start });
        }
        Ok(exponents)
    }
}

pub(super) struct IdealParser {
    cursor: Cursor,
}

impl IdealParser {
    pub(super) fn new(text: &str) -> Result<IdealParser, SpecError> {
        Ok(IdealParser {
            cursor: Cursor::new(text)?,
        })
    }

    pub(super) fn parse(mut self, ring: &RingDescriptor) -> Result<Vec<Element>, SpecError> {
        let mut generators = Vec::new();
        loop {
            generators.push(self.expr(ring)?);
            match self.cursor.peek().tok {
                Tok::Comma => {
                    self.cursor.advance();
                }
                Tok::Eof => break,
                _ => return Err(self.cursor.error(&[",", "end of input"])),
            }
        }
        Ok(generators)
    }

    fn expr(&mut self, ring: &RingDescriptor) -> Result<Element, SpecError> {
        if self.cursor.peek().tok == Tok::LParen {
            let offset = self.cursor.peek().offset;
            let Some(factors) = ring.product_factors() else {
                return Err(SpecError::ShapeMismatch {
                    offset,
                    detail: format!("tuple expression, but `{}` is not a product ring", ring.spec_text()),
                });
            };
            self.cursor.advance();
            let mut parts = Vec::new();
            loop {
                let part_offset = self.cursor.peek().offset;
                if parts.len() == factors.len() {
                    return Err(SpecError::ArityMismatch {
                        offset: part_offset,
                        expected: factors.len(),
                        got: factors.len() + 1,
                    });
                }
                parts.push(self.expr(&factors[parts.len()])?);
                match self.cursor.peek().tok {
                    Tok::Comma => {
                        self.cursor.advance();
                    }
                    Tok::RParen => break,
                    _ => return Err(self.cursor.error(&[",", ")"])),
                }
            }
            self.cursor.expect(Tok::RParen, ")")?;
            if parts.len() != factors.len() {
                return Err(SpecError::ArityMismatch {
                    offset,
                    expected: factors.len(),
                    got: parts.len(),
                });
            }
            return Ok(ring.encode_tuple(&parts));
        }
        self.polynomial(ring)
    }

    fn polynomial(&mut self, ring: &RingDescriptor) -> Result<Element, SpecError> {
        let mut negative = if self.cursor.peek().tok == Tok::Minus {
            self.cursor.advance();
            true
        } else {
            false
        };
        let mut value = {
            let term = self.term(ring)?;
            if negative {
                ring.neg(term)
            } else {
                term
            }
        };
        loop {
            match self.cursor.peek().tok {
                Tok::Plus => negative = false,
                Tok::Minus => negative = true,
                _ => break,
            }
            self.cursor.advance();
            let term = self.term(ring)?;
            let term = if negative { ring.neg(term) } else { term };
            value = ring.add(value, term);
        }
        Ok(value)
    }

    /// `NUMBER ("*" factor)*` or `factor ("*" factor)*`.
    fn term(&mut self, ring: &RingDescriptor) -> Result<Element, SpecError> {
        let offset = self.cursor.peek().offset;
        let mut coefficient: u64 = 1;
        let mut saw_coefficient = false;
        if let Tok::Number(n) = self.cursor.peek().tok {
            self.cursor.advance();
            coefficient = n;
            saw_coefficient = true;
        }
        let mut exponents: Option<Vec<u32>> = None;
        loop {
            match self.cursor.peek().tok.clone() {
                Tok::Ident(v) => {
                    let v_offset = self.cursor.peek().offset;
                    let Some(q) = ring.quotient_ring() else {
                        return Err(SpecError::ShapeMismatch {
                            offset: v_offset,
                            detail: format!(
                                "variable `{v}`, but `{}` is not a quotient ring",
                                ring.spec_text()
                            ),
                        });
                    };
                    let Some(index) = q.variables().iter().position(|w| *w == v) else {
                        return Err(SpecError::UnknownVariable {
                            offset: v_offset,
                            name: v,
                        });
                    };
                    self.cursor.advance();
                    let exponent = if self.cursor.peek().tok == Tok::Caret {
                        self.cursor.advance();
                        let (e, eoff) = self.cursor.expect_number("exponent")?;
                        u32::try_from(e)
                            .map_err(|_| SpecError::NumberOverflow { offset: eoff })?
                    } else {
                        1
                    };
                    let slots = exponents
                        .get_or_insert_with(|| vec![0u32; q.variables().len()]);
                    slots[index] += exponent;
                }
                _ if saw_coefficient || exponents.is_some() => break,
                _ => {
                    return Err(self.cursor.error(&["integer", "variable name"]));
                }
            }
            if self.cursor.peek().tok == Tok::Star {
                self.cursor.advance();
                // after `*` a bare number is not a monomial factor
                if !matches!(self.cursor.peek().tok, Tok::Ident(_)) {
                    return Err(self.cursor.error(&["variable name"]));
                }
            } else {
                break;
            }
        }
        let _ = offset;
        match exponents {
            None => Ok(ring.from_integer(coefficient as i64)),
            Some(exps) => {
                let q = ring.quotient_ring().expect("exponents imply quotient");
                let monomial = q.monomial_element(&exps);
                Ok(q.scale(coefficient as i64, monomial))
            }
        }
    }
}
