//! Recursive-descent parser for the polynomial text grammar.
//!
//! Grammar: `+ - * ^` and parentheses over variables and integer or rational
//! literals (`3`, `3/4`). `/` is only admitted between integer literals;
//! general division is a parse error, as are negative exponents.

use super::{PolyRing, Polynomial};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("{msg} at position {pos}")]
pub struct ParseError {
    pub msg: String,
    pub pos: usize,
}

fn err<T>(msg: impl Into<String>, pos: usize) -> Result<T, ParseError> {
    Err(ParseError { msg: msg.into(), pos })
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(i64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                toks.push((Tok::Plus, i));
                i += 1;
            }
            '-' => {
                toks.push((Tok::Minus, i));
                i += 1;
            }
            '*' => {
                toks.push((Tok::Star, i));
                i += 1;
            }
            '/' => {
                toks.push((Tok::Slash, i));
                i += 1;
            }
            '^' => {
                toks.push((Tok::Caret, i));
                i += 1;
            }
            '(' => {
                toks.push((Tok::LParen, i));
                i += 1;
            }
            ')' => {
                toks.push((Tok::RParen, i));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let lit = &text[start..i];
                match lit.parse::<i64>() {
                    Ok(n) => toks.push((Tok::Int(n), start)),
                    Err(_) => return err(format!("integer literal {lit} too large"), start),
                }
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len()
                    && ((bytes[i] as char).is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                toks.push((Tok::Ident(text[start..i].to_string()), start));
            }
            other => return err(format!("unexpected character '{other}'"), i),
        }
    }
    Ok(toks)
}

struct Parser<'a> {
    ring: &'a PolyRing,
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|(_, p)| *p).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut negate = false;
        loop {
            match self.peek() {
                Some(Tok::Minus) => {
                    negate = !negate;
                    self.bump();
                }
                Some(Tok::Plus) => {
                    self.bump();
                }
                _ => break,
            }
        }
        let mut acc = self.term()?;
        if negate {
            acc = self.ring.neg(&acc);
        }
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    let t = self.term()?;
                    acc = self.ring.add(&acc, &t);
                }
                Some(Tok::Minus) => {
                    self.bump();
                    let t = self.term()?;
                    acc = self.ring.sub(&acc, &t);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.factor()?;
        while let Some(Tok::Star) = self.peek() {
            self.bump();
            let f = self.factor()?;
            acc = self.ring.mul(&acc, &f);
        }
        if let Some(Tok::Slash) = self.peek() {
            return err("division is only allowed between integer literals", self.here());
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.bump();
            let pos = self.here();
            match self.bump() {
                Some(Tok::Int(n)) => return Ok(self.ring.pow(&base, n as u32)),
                Some(Tok::Minus) => return err("negative exponent", pos),
                _ => return err("expected integer exponent after '^'", pos),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial, ParseError> {
        let pos = self.here();
        match self.bump() {
            Some(Tok::Int(n)) => {
                // rational literal: int '/' int
                if let Some(Tok::Slash) = self.peek() {
                    self.bump();
                    let dpos = self.here();
                    match self.bump() {
                        Some(Tok::Int(d)) => {
                            if d == 0 || self.ring.field().from_i64(d).is_zero() {
                                return err("denominator vanishes in the field", dpos);
                            }
                            Ok(self.ring.constant(self.ring.field().fraction(n, d)))
                        }
                        _ => err("expected integer denominator", dpos),
                    }
                } else {
                    Ok(self.ring.int(n))
                }
            }
            Some(Tok::Ident(name)) => match self.ring.var_index(&name) {
                Some(i) => Ok(self.ring.var(i)),
                None => err(format!("unknown variable '{name}'"), pos),
            },
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => err("expected ')'", pos),
                }
            }
            Some(Tok::Minus) => {
                let inner = self.atom()?;
                Ok(self.ring.neg(&inner))
            }
            Some(other) => err(format!("unexpected token {other:?}"), pos),
            None => err("unexpected end of input", pos),
        }
    }
}

impl PolyRing {
    /// Parses a polynomial in this ring's variables.
    pub fn parse(&self, text: &str) -> Result<Polynomial, ParseError> {
        let toks = lex(text)?;
        if toks.is_empty() {
            return err("empty input", 0);
        }
        let mut p = Parser { ring: self, toks, pos: 0, end: text.len() };
        let poly = p.expr()?;
        if p.pos != p.toks.len() {
            return err("trailing input", p.here());
        }
        Ok(poly)
    }

    /// Parses each string in turn; index of the offender on failure.
    pub fn parse_all(&self, texts: &[String]) -> Result<Vec<Polynomial>, ParseError> {
        texts.iter().map(|t| self.parse(t)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::FieldSpec;
    use crate::polycore::MonomialOrder;

    #[test]
    fn direct_reading() {
        let r = PolyRing::rationals(&["x", "y", "z"]);
        let p = r.parse("x^2 - y*z").unwrap();
        assert_eq!(r.render(&p), "x^2 - y*z");
    }

    #[test]
    fn zero_polynomial() {
        let r = PolyRing::rationals(&["x"]);
        assert!(r.parse("0").unwrap().is_zero());
        assert!(r.parse("x - x").unwrap().is_zero());
    }

    #[test]
    fn paper_generator_mod_three() {
        let r = PolyRing::new(FieldSpec::prime(3), &["x", "y", "z", "t"], MonomialOrder::GrevLex);
        let p = r.parse("x*t - y*z").unwrap();
        assert_eq!(p.num_terms(), 2);
        // grevlex puts y*z first (smaller power of the last variable)
        assert_eq!(r.render(&p), "2*y*z + x*t");
    }

    #[test]
    fn rational_literals() {
        let r = PolyRing::rationals(&["x"]);
        let p = r.parse("1/2*x + 3/4").unwrap();
        assert_eq!(r.render(&p), "1/2*x + 3/4");
    }

    #[test]
    fn rejects_unknown_variable_and_division() {
        let r = PolyRing::rationals(&["x"]);
        assert!(r.parse("w + 1").is_err());
        assert!(r.parse("x/2").is_err());
        assert!(r.parse("x^-2").is_err());
        assert!(r.parse("x +").is_err());
    }

    #[test]
    fn roundtrip_is_fixed_point() {
        let r = PolyRing::rationals(&["x", "y"]);
        for src in ["x^2*y - 3*x + 1/3", "-x + y", "0", "7", "x*y*x"] {
            let p = r.parse(src).unwrap();
            let printed = r.render(&p);
            let again = r.parse(&printed).unwrap();
            assert_eq!(p, again, "{src} -> {printed}");
        }
    }
}
