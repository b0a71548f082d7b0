//! Text form of polynomials.
//!
//! ```text
//! expr     := term (('+'|'-') term)*
//! term     := factor (('*'|'/') factor)*
//! factor   := '-' factor | base ('^' uint)?
//! base     := var | rational | generator | '(' expr ')'
//! rational := int ('/' uint)?
//! ```
//! `/` between factors is only allowed with a nonzero constant divisor.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{MonomialOrder, MultiPoly, PolyRing};
use crate::arith::{fmt_rat, NFElem, NumberField, Rat};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
    End,
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let mut out = Vec::new();
    let b = text.as_bytes();
    let mut i = 0;
    while i < b.len() {
        let c = b[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let s = i;
            while i < b.len() && b[i].is_ascii_digit() {
                i += 1;
            }
            out.push((s, Tok::Int(text[s..i].parse().unwrap())));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let s = i;
            while i < b.len() && (b[i].is_ascii_alphanumeric() || b[i] == b'_') {
                i += 1;
            }
            out.push((s, Tok::Ident(text[s..i].to_string())));
        } else if "+-*/^()".contains(c) {
            out.push((i, Tok::Sym(c)));
            i += 1;
        } else {
            return Err(Error::Syntax { offset: i, message: format!("unexpected character `{c}`") });
        }
    }
    out.push((text.len(), Tok::End));
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    ring: &'a Arc<PolyRing>,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].0
    }

    fn err<T>(&self, message: &str) -> Result<T> {
        Err(Error::Syntax { offset: self.offset(), message: message.to_string() })
    }

    fn expr(&mut self) -> Result<MultiPoly> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Sym('+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Tok::Sym('-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Tok::Sym('*') => {
                    self.pos += 1;
                    acc = &acc * &self.factor()?;
                }
                Tok::Sym('/') => {
                    self.pos += 1;
                    let at = self.offset();
                    let d = self.factor()?;
                    match d.constant_value() {
                        Some(c) if !c.is_zero() => acc = acc.scale(&c.inv()?),
                        Some(_) => return Err(Error::Syntax { offset: at, message: "division by zero".into() }),
                        None => {
                            return Err(Error::Syntax {
                                offset: at,
                                message: "divisor must be a constant".into(),
                            })
                        }
                    }
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<MultiPoly> {
        if *self.peek() == Tok::Sym('-') {
            self.pos += 1;
            return Ok(-self.factor()?);
        }
        let b = self.base()?;
        if *self.peek() == Tok::Sym('^') {
            self.pos += 1;
            match self.peek().clone() {
                Tok::Int(n) => {
                    let e: u32 = match u32::try_from(&n) {
                        Ok(e) if e <= 10_000 => e,
                        _ => return self.err("exponent too large"),
                    };
                    self.pos += 1;
                    return Ok(b.pow(e));
                }
                _ => return self.err("expected exponent"),
            }
        }
        Ok(b)
    }

    fn base(&mut self) -> Result<MultiPoly> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.pos += 1;
                let mut r = Rat::from_integer(n);
                if *self.peek() == Tok::Sym('/') {
                    if let Tok::Int(d) = &self.toks[self.pos + 1].1 {
                        if d.is_zero() {
                            self.pos += 1;
                            return self.err("zero denominator");
                        }
                        r /= Rat::from_integer(d.clone());
                        self.pos += 2;
                    }
                }
                Ok(self.ring.constant(self.ring.field().from_rat(r)))
            }
            Tok::Ident(name) => {
                if let Ok(i) = self.ring.var_index(&name) {
                    self.pos += 1;
                    Ok(self.ring.var(i))
                } else if name == self.ring.field().generator() && !self.ring.field().is_rationals() {
                    self.pos += 1;
                    Ok(self.ring.constant(self.ring.field().gen()))
                } else {
                    Err(Error::UnknownSymbol(name))
                }
            }
            Tok::Sym('(') => {
                self.pos += 1;
                let e = self.expr()?;
                if *self.peek() != Tok::Sym(')') {
                    return self.err("expected `)`");
                }
                self.pos += 1;
                Ok(e)
            }
            Tok::End => self.err("unexpected end of input"),
            Tok::Sym(c) => self.err(&format!("unexpected `{c}`")),
        }
    }
}

pub fn parse_poly(text: &str, ring: &Arc<PolyRing>) -> Result<MultiPoly> {
    let toks = lex(text)?;
    let mut p = Parser { toks, pos: 0, ring };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return p.err("trailing input");
    }
    Ok(e)
}

/// Parses a field element such as `(1+2*t)/3`.
pub fn parse_element(text: &str, field: &Arc<NumberField>) -> Result<NFElem> {
    let ring = PolyRing::new(field, &[], MonomialOrder::Lex);
    Ok(parse_poly(text, &ring)?.constant_value().expect("no variables"))
}

fn coeff_text(c: &NFElem) -> (bool, String) {
    if let Some(r) = c.as_rat() {
        return (r.is_negative(), fmt_rat(&r.abs()));
    }
    if c.weight() == 1 {
        let t = c.to_text();
        return match t.strip_prefix('-') {
            Some(s) => (true, s.to_string()),
            None => (false, t),
        };
    }
    (false, format!("({})", c.to_text()))
}

pub(super) fn print_poly(f: &MultiPoly) -> String {
    if f.is_zero() {
        return "0".into();
    }
    let vars = f.ring().vars();
    let mut s = String::new();
    for (k, (m, c)) in f.terms().iter().enumerate() {
        let (neg, ct) = coeff_text(c);
        if k == 0 {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        let mut parts = Vec::new();
        let unit = c.as_rat().is_some_and(|r| r.abs().is_one());
        if !unit || m.is_one() {
            parts.push(ct);
        }
        for (i, &e) in m.exps().iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(vars[i].clone()),
                _ => parts.push(format!("{}^{}", vars[i], e)),
            }
        }
        s.push_str(&parts.join("*"));
    }
    s
}
