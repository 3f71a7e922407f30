//! Reader for the canonical text form (`3/2*x^2*xi1 - hbar^-1`), also used by
//! scenario files. Products are read left to right with Koszul signs.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::One;

use super::{AlgebraError, Poly, Universe};
use crate::Q;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn lex(s: &str) -> Result<Vec<Tok>, AlgebraError> {
    let mut out = Vec::new();
    let cs: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < cs.len() {
        let ch = cs[i];
        if ch.is_whitespace() {
            i += 1;
        } else if ch.is_ascii_digit() {
            let st = i;
            while i < cs.len() && cs[i].is_ascii_digit() {
                i += 1;
            }
            let txt: String = cs[st..i].iter().collect();
            out.push(Tok::Num(txt.parse().unwrap()));
        } else if ch.is_alphabetic() || ch == '_' {
            let st = i;
            while i < cs.len() && (cs[i].is_alphanumeric() || cs[i] == '_' || cs[i] == '\'') {
                i += 1;
            }
            out.push(Tok::Ident(cs[st..i].iter().collect()));
        } else if "+-*/^()".contains(ch) {
            out.push(Tok::Op(ch));
            i += 1;
        } else {
            return Err(AlgebraError::Parse(format!("unexpected character `{ch}`")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    u: &'a Arc<Universe>,
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Poly, AlgebraError> {
        let mut acc = if self.eat('-') { -self.term()? } else { self.term()? };
        loop {
            if self.eat('+') {
                acc += self.term()?;
            } else if self.eat('-') {
                acc -= self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Poly, AlgebraError> {
        let mut acc = self.factor()?;
        loop {
            if self.eat('*') {
                let f = self.factor()?;
                acc = &acc * &f;
            } else if self.eat('/') {
                let d = match self.toks.get(self.pos).cloned() {
                    Some(Tok::Num(n)) => n,
                    _ => return Err(AlgebraError::Parse("division only by integer literals".into())),
                };
                self.pos += 1;
                acc = acc.scale(&Q::new(BigInt::one(), d));
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<Poly, AlgebraError> {
        let base = self.atom()?;
        if self.eat('^') {
            let neg = self.eat('-');
            let n = match self.toks.get(self.pos).cloned() {
                Some(Tok::Num(n)) => n,
                _ => return Err(AlgebraError::Parse("exponent must be an integer".into())),
            };
            self.pos += 1;
            let n: u32 = n.try_into().map_err(|_| AlgebraError::Parse("exponent too large".into()))?;
            return if neg {
                Ok(base.try_inverse()?.pow(n))
            } else {
                Ok(base.pow(n))
            };
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Poly, AlgebraError> {
        match self.toks.get(self.pos).cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(Poly::constant(self.u, Q::from_integer(n)))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                let i = self
                    .u
                    .lookup(&name)
                    .ok_or_else(|| AlgebraError::UnknownGenerator(name.clone()))?;
                Ok(Poly::gen(self.u, i))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(AlgebraError::Parse("missing `)`".into()));
                }
                Ok(e)
            }
            other => Err(AlgebraError::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

pub fn parse_poly(u: &Arc<Universe>, s: &str) -> Result<Poly, AlgebraError> {
    let toks = lex(s)?;
    let mut p = Parser { u, toks, pos: 0 };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(AlgebraError::Parse(format!("trailing input in `{s}`")));
    }
    Ok(out)
}
