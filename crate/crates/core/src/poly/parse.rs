//! Polynomial text grammar.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := power (('*'|'/') power)*
//! power  := atom ['^' integer]
//! atom   := integer | variable | '(' expr ')'
//! variable := 'x' digits | 'x[' label ']' | identifier
//! ```
//!
//! Division is only allowed by nonzero constants, so `3/2*x1` is fine.

use std::collections::BTreeSet;

use num_bigint::BigInt;

use super::polynomial::Polynomial;
use super::rational::Rational;
use super::ring::Ring;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Num(BigInt),
    Var(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(s: &str) -> Result<Vec<(usize, Token)>> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    let err = |pos: usize, msg: &str| Error::Parse {
        pos,
        msg: msg.to_string(),
    };
    while i < bytes.len() {
        let c = bytes[i] as char;
        let start = i;
        match c {
            _ if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '+' => out.push((start, Token::Plus)),
            '-' => out.push((start, Token::Minus)),
            '*' => out.push((start, Token::Star)),
            '/' => out.push((start, Token::Slash)),
            '^' => out.push((start, Token::Caret)),
            '(' => out.push((start, Token::LParen)),
            ')' => out.push((start, Token::RParen)),
            '0'..='9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = s[start..i].parse().map_err(|_| err(start, "bad integer"))?;
                out.push((start, Token::Num(n)));
                continue;
            }
            _ if c.is_ascii_alphabetic() || c == '_' => {
                if c == 'x' && bytes.get(i + 1) == Some(&b'[') {
                    let close = s[i..]
                        .find(']')
                        .map(|k| i + k)
                        .ok_or_else(|| err(start, "unterminated bracketed label"))?;
                    let label: String = s[i + 2..close].chars().filter(|c| !c.is_whitespace()).collect();
                    if label.is_empty() {
                        return Err(err(start, "empty bracketed label"));
                    }
                    out.push((start, Token::Var(label)));
                    i = close + 1;
                    continue;
                }
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                let ident = &s[start..i];
                let label = match ident.strip_prefix('x') {
                    Some(rest) if !rest.is_empty() && rest.bytes().all(|b| b.is_ascii_digit()) => {
                        rest.to_string()
                    }
                    _ => ident.to_string(),
                };
                out.push((start, Token::Var(label)));
                continue;
            }
            _ => return Err(err(start, &format!("unexpected character {c:?}"))),
        }
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    ring: &'a Ring,
    end: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse {
            pos: self.here(),
            msg: msg.to_string(),
        })
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let n = self.ring.nvars();
        let mut acc = Polynomial::zero(n);
        let mut sign_neg = match self.peek() {
            Some(Token::Minus) => {
                self.pos += 1;
                true
            }
            Some(Token::Plus) => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        loop {
            let t = self.term()?;
            acc = if sign_neg { &acc - &t } else { &acc + &t };
            match self.peek() {
                Some(Token::Plus) => sign_neg = false,
                Some(Token::Minus) => sign_neg = true,
                _ => return Ok(acc),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.pos += 1;
                    let f = self.power()?;
                    acc = &acc * &f;
                }
                Some(Token::Slash) => {
                    self.pos += 1;
                    let f = self.power()?;
                    if !f.is_unit() {
                        return self.err("division is only allowed by nonzero constants");
                    }
                    acc = acc.scale(&f.terms()[0].1.recip());
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.peek() == Some(&Token::Caret) {
            self.pos += 1;
            match self.peek().cloned() {
                Some(Token::Num(k)) => {
                    self.pos += 1;
                    let k: u32 = k.try_into().map_err(|_| Error::Parse {
                        pos: self.here(),
                        msg: "exponent too large".into(),
                    })?;
                    Ok(base.pow(k))
                }
                _ => self.err("expected integer exponent"),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Polynomial> {
        let n = self.ring.nvars();
        match self.peek().cloned() {
            Some(Token::Num(v)) => {
                self.pos += 1;
                Ok(Polynomial::constant(n, Rational::from_integer(v)))
            }
            Some(Token::Var(label)) => match self.ring.index_of(&label) {
                Some(i) => {
                    self.pos += 1;
                    Ok(Polynomial::var(n, i))
                }
                None => self.err(&format!("unknown variable {label:?}")),
            },
            Some(Token::LParen) => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(&Token::RParen) {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                Ok(e)
            }
            Some(Token::Minus) => {
                self.pos += 1;
                let a = self.power()?;
                Ok(-&a)
            }
            _ => self.err("expected a number, variable or '('"),
        }
    }
}

/// Parses one polynomial over `ring`.
pub fn parse_polynomial(s: &str, ring: &Ring) -> Result<Polynomial> {
    let tokens = tokenize(s)?;
    let mut p = Parser {
        tokens,
        pos: 0,
        ring,
        end: s.len(),
    };
    if p.peek().is_none() {
        return p.err("empty polynomial");
    }
    let out = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(out)
}

fn label_sort_key(label: &str) -> (u8, Vec<u64>, String) {
    let nums: Option<Vec<u64>> = label.split(',').map(|s| s.trim().parse().ok()).collect();
    match nums {
        Some(v) if !label.contains(',') => (0, v, String::new()),
        Some(v) => (1, v, String::new()),
        None => (2, Vec::new(), label.to_string()),
    }
}

/// Parses an ideal file: one polynomial per line (or separated by `;`),
/// `#` comments, and an optional `ring: x1, x2, ...` line fixing the
/// variable order. Without it the ring is `x1..xN` with `N` the largest
/// index used, followed by any bracketed or named variables in sorted order.
pub fn parse_ideal_text(text: &str) -> Result<(Ring, Vec<Polynomial>)> {
    let mut ring_decl: Option<Vec<String>> = None;
    let mut exprs: Vec<String> = Vec::new();
    for line in text.lines() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("ring:") {
            let mut labels = Vec::new();
            for tok in tokenize(&split_top_level(rest).join(" "))? {
                match tok.1 {
                    Token::Var(l) => labels.push(l),
                    _ => {
                        return Err(Error::Parse {
                            pos: tok.0,
                            msg: "ring declaration lists variables only".into(),
                        })
                    }
                }
            }
            ring_decl = Some(labels);
            continue;
        }
        exprs.extend(line.split(';').map(str::trim).filter(|s| !s.is_empty()).map(String::from));
    }
    let ring = match ring_decl {
        Some(labels) => Ring::new(labels),
        None => {
            let mut numeric: u64 = 0;
            let mut other: BTreeSet<(u8, Vec<u64>, String)> = BTreeSet::new();
            let mut other_labels = std::collections::HashMap::new();
            for e in &exprs {
                for (_, t) in tokenize(e)? {
                    if let Token::Var(l) = t {
                        let key = label_sort_key(&l);
                        if key.0 == 0 {
                            numeric = numeric.max(key.1[0]);
                        } else {
                            other_labels.insert(key.clone(), l);
                            other.insert(key);
                        }
                    }
                }
            }
            let mut labels: Vec<String> = (1..=numeric).map(|i| i.to_string()).collect();
            labels.extend(other.iter().map(|k| other_labels[k].clone()));
            Ring::new(labels)
        }
    };
    let polys = exprs
        .iter()
        .map(|e| parse_polynomial(e, &ring))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter(|p| !p.is_zero())
        .collect();
    Ok((ring, polys))
}

/// Splits at commas and whitespace outside brackets.
fn split_top_level(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut depth = 0usize;
    for c in s.chars() {
        match c {
            '[' => {
                depth += 1;
                cur.push(c);
            }
            ']' => {
                depth = depth.saturating_sub(1);
                cur.push(c);
            }
            ',' | ' ' | '\t' if depth == 0 => {
                if !cur.is_empty() {
                    out.push(std::mem::take(&mut cur));
                }
            }
            _ => cur.push(c),
        }
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    out
}
