//! Relation grammar:
//!
//! ```text
//! relation := expr [ "=" expr ]
//! expr     := [ "+" | "-" ] term { ( "+" | "-" ) term }
//! term     := power { [ "*" | "/" ] power }
//! power    := atom [ "^" integer ]
//! atom     := number | names | "(" expr ")"
//! ```
//!
//! Numbers are integers or decimals (exact rationals); `i` is the imaginary
//! unit unless it is a generator name. A run of letters such as `xy` is split
//! into generator names, longest match first, and a trailing `^k` applies to
//! the last name only, so `xy^2` is `x·y·y`. Division is by constants only.

use super::RewriteError;
use crate::freealg::{FreePoly, Word};
use crate::scalars::{FieldContext, Scalar};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(String),
    Ident(String),
    Op(char),
}

fn tokenize(text: &str) -> Result<Vec<Tok>, String> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() || (c == '.' && chars.get(i + 1).is_some_and(char::is_ascii_digit)) {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '.') {
                i += 1;
            }
            out.push(Tok::Num(chars[start..i].iter().collect()));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(chars[start..i].iter().collect()));
        } else if "+-*/^()=".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(format!("unexpected character `{c}`"));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    names: &'a [String],
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

    fn relation(&mut self) -> Result<FreePoly, String> {
        let lhs = self.expr()?;
        let p = if self.eat('=') { lhs.sub(&self.expr()?) } else { lhs };
        match self.peek() {
            None => Ok(p),
            Some(t) => Err(format!("unexpected token {t:?}")),
        }
    }

    fn expr(&mut self) -> Result<FreePoly, String> {
        let neg = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        let first = self.term()?;
        let mut acc = if neg { first.neg() } else { first };
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?);
            } else if self.eat('-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn starts_atom(&self) -> bool {
        matches!(self.peek(), Some(Tok::Num(_) | Tok::Ident(_) | Tok::Op('(')))
    }

    fn term(&mut self) -> Result<FreePoly, String> {
        let mut acc = self.power()?;
        loop {
            if self.eat('*') {
                acc = acc.mul(&self.power()?);
            } else if self.eat('/') {
                let d = self.power()?;
                let c = match d.terms().next() {
                    Some((w, c)) if d.len() == 1 && w.is_empty() => c.clone(),
                    _ => return Err("division is only by nonzero constants".into()),
                };
                let inv = c.inv(&FieldContext::exact()).map_err(|e| e.to_string())?;
                acc = acc.scale(&inv);
            } else if self.starts_atom() {
                acc = acc.mul(&self.power()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn exponent(&mut self) -> Result<Option<u32>, String> {
        if !self.eat('^') {
            return Ok(None);
        }
        match self.toks.get(self.pos).cloned() {
            Some(Tok::Num(s)) => {
                self.pos += 1;
                s.parse::<u32>().map(Some).map_err(|_| format!("exponent `{s}` is not a nonnegative integer"))
            }
            _ => Err("expected an integer exponent after `^`".into()),
        }
    }

    fn power(&mut self) -> Result<FreePoly, String> {
        let tok = self.toks.get(self.pos).cloned().ok_or("unexpected end of input")?;
        self.pos += 1;
        let (prefix, base) = match tok {
            Tok::Num(s) => {
                let c: Scalar = s.parse().map_err(|_| format!("bad number `{s}`"))?;
                (FreePoly::one(), FreePoly::term(Word::empty(), c))
            }
            Tok::Ident(s) => {
                let mut factors = self.split_names(&s)?;
                let last = factors.pop().expect("nonempty identifier");
                let prefix = factors.iter().fold(FreePoly::one(), |acc, f| acc.mul(f));
                (prefix, last)
            }
            Tok::Op('(') => {
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err("missing `)`".into());
                }
                (FreePoly::one(), e)
            }
            Tok::Op(c) => return Err(format!("unexpected `{c}`")),
        };
        let powered = match self.exponent()? {
            None => base,
            Some(k) => (0..k).fold(FreePoly::one(), |acc, _| acc.mul(&base)),
        };
        Ok(prefix.mul(&powered))
    }

    fn split_names(&self, s: &str) -> Result<Vec<FreePoly>, String> {
        let mut out = Vec::new();
        let mut rest = s;
        while !rest.is_empty() {
            let best = self
                .names
                .iter()
                .enumerate()
                .filter(|(_, n)| rest.starts_with(n.as_str()))
                .max_by_key(|(_, n)| n.len());
            if let Some((g, n)) = best {
                out.push(FreePoly::word(Word::letter(g)));
                rest = &rest[n.len()..];
            } else if let Some(r) = rest.strip_prefix('i') {
                out.push(FreePoly::term(Word::empty(), Scalar::i()));
                rest = r;
            } else {
                return Err(format!("`{rest}` does not start with a generator name"));
            }
        }
        Ok(out)
    }
}

/// Parses one relation over the generator `names`.
pub fn parse_relation(text: &str, names: &[String]) -> Result<FreePoly, RewriteError> {
    let err = |reason: String| RewriteError::Parse { text: text.to_string(), reason };
    let toks = tokenize(text).map_err(err)?;
    if toks.is_empty() {
        return Err(RewriteError::Parse { text: text.into(), reason: "empty relation".into() });
    }
    Parser { toks, pos: 0, names }.relation().map_err(|reason| RewriteError::Parse { text: text.into(), reason })
}

pub fn parse_relations<S: AsRef<str>>(texts: &[S], names: &[String]) -> Result<Vec<FreePoly>, RewriteError> {
    texts.iter().map(|t| parse_relation(t.as_ref(), names)).collect()
}
