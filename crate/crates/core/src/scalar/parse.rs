//! Small recursive-descent parser for scalar expressions such as
//! `-24*hW/(p^2-1)` or `(12*hW+39)/(16*hW^2)`.

use num_bigint::BigInt;

use super::{Scalar, Space};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn lex(text: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push(Tok::Num(s.parse().map_err(|_| Error::Parse(format!("bad number `{s}`")))?));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(chars[start..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character `{c}` in `{text}`")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    space: &'a Space,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Scalar> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc.try_add(&self.term()?)?;
            } else if self.eat('-') {
                acc = acc.try_sub(&self.term()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Scalar> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = acc.try_mul(&self.unary()?)?;
            } else if self.eat('/') {
                acc = acc.try_div(&self.unary()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Scalar> {
        if self.eat('-') {
            Ok(-self.unary()?)
        } else if self.eat('+') {
            self.unary()
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<Scalar> {
        let base = self.atom()?;
        if self.eat('^') {
            let neg = self.eat('-');
            let paren = !neg && self.eat('(');
            let neg = neg || (paren && self.eat('-'));
            let n = match self.toks.get(self.pos) {
                Some(Tok::Num(n)) => n.clone(),
                _ => return Err(Error::Parse("exponent must be an integer".into())),
            };
            self.pos += 1;
            if paren && !self.eat(')') {
                return Err(Error::Parse("unbalanced parenthesis in exponent".into()));
            }
            let k: i32 = n.try_into().map_err(|_| Error::Parse("exponent too large".into()))?;
            return base.pow(if neg { -k } else { k });
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Scalar> {
        match self.toks.get(self.pos).cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(Scalar::from_bigint(n))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                Scalar::param(self.space, &name)
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(')') {
                    return Err(Error::Parse("missing `)`".into()));
                }
                Ok(v)
            }
            Some(t) => Err(Error::Parse(format!("unexpected token {t:?}"))),
            None => Err(Error::Parse("unexpected end of expression".into())),
        }
    }
}

pub fn parse(space: &Space, text: &str) -> Result<Scalar> {
    let toks = lex(text)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut p = Parser { toks, pos: 0, space };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!("trailing input in `{text}`")));
    }
    v.in_space(space)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions() {
        let sp = Space::new(&["hW"]).unwrap();
        let s = parse(&sp, "(12*hW+39)/(16*hW^2)").unwrap();
        assert_eq!(s.to_string(), "(12*hW + 39)/(16*hW^2)");
        assert_eq!(parse(&sp, "-3/(4*hW)").unwrap().to_string(), "-3/(4*hW)");
        assert_eq!(parse(&sp, "hW^-1").unwrap(), parse(&sp, "1/hW").unwrap());
        assert_eq!(parse(&sp, "2^(-2)").unwrap(), Scalar::from_ratio(1, 4));
    }

    #[test]
    fn rejects_unknown_names() {
        let sp = Space::new(&["hW"]).unwrap();
        assert_eq!(parse(&sp, "c + 1"), Err(Error::UnknownParam("c".into())));
        assert!(matches!(parse(&sp, "1 +"), Err(Error::Parse(_))));
    }
}
