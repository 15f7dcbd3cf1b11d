use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::SparsePolynomial;
use crate::error::{Error, Result};
use crate::lattice::Rational;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

fn err<T>(position: usize, message: impl Into<String>) -> Result<T> {
    Err(Error::Parse { position, message: message.into() })
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let start = i;
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                i += 1;
                continue;
            }
            '+' => out.push((Tok::Plus, start)),
            '-' => out.push((Tok::Minus, start)),
            '*' => out.push((Tok::Star, start)),
            '/' => out.push((Tok::Slash, start)),
            '^' => out.push((Tok::Caret, start)),
            '(' => out.push((Tok::LParen, start)),
            ')' => out.push((Tok::RParen, start)),
            '0'..='9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if i < bytes.len() && (bytes[i] == b'.' || bytes[i].is_ascii_alphabetic()) {
                    return err(i, "malformed number");
                }
                let n: BigInt = text[start..i].parse().expect("digits");
                out.push((Tok::Num(n), start));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((Tok::Ident(text[start..i].to_string()), start));
                continue;
            }
            _ => {
                let ch = text[start..].chars().next().expect("in bounds");
                return err(start, format!("unexpected character `{ch}`"));
            }
        }
        i += 1;
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    vars: &'a [String],
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn at(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<SparsePolynomial> {
        let mut acc = SparsePolynomial::zero(self.vars);
        let mut first = true;
        loop {
            let negate = match self.peek() {
                Tok::Plus => {
                    self.bump();
                    false
                }
                Tok::Minus => {
                    self.bump();
                    true
                }
                _ if first => false,
                _ => break,
            };
            first = false;
            let t = self.term()?;
            acc = if negate { &acc - &t } else { &acc + &t };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<SparsePolynomial> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    let f = self.unary()?;
                    acc = &acc * &f;
                }
                Tok::Slash => {
                    self.bump();
                    let at = self.at();
                    let f = self.unary()?;
                    if f.is_zero() {
                        return err(at, "division by zero");
                    }
                    if f.len() != 1 || f.total_degree() != Some(0) {
                        return err(at, "divisor must be a nonzero constant");
                    }
                    let c = f.coefficient(&vec![0; self.vars.len()]);
                    acc = acc.scale(&(Rational::from_integer(1.into()) / c));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<SparsePolynomial> {
        if *self.peek() == Tok::Minus {
            self.bump();
            let p = self.unary()?;
            return Ok(-&p);
        }
        self.power()
    }

    fn power(&mut self) -> Result<SparsePolynomial> {
        let base = self.primary()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let at = self.at();
        match self.bump() {
            Tok::Num(n) => match n.to_u32() {
                Some(k) => Ok(base.pow(k)),
                None => err(at, "exponent too large"),
            },
            _ => err(at, "malformed exponent: expected a non-negative integer"),
        }
    }

    fn primary(&mut self) -> Result<SparsePolynomial> {
        let at = self.at();
        match self.bump() {
            Tok::Num(n) => Ok(SparsePolynomial::constant(self.vars, Rational::from_integer(n))),
            Tok::Ident(name) => match self.vars.iter().position(|v| *v == name) {
                Some(i) => Ok(SparsePolynomial::var(self.vars, i)),
                None => err(at, format!("unknown variable `{name}` (expected one of {})", self.vars.join(", "))),
            },
            Tok::LParen => {
                let e = self.expr()?;
                let close = self.at();
                match self.bump() {
                    Tok::RParen => Ok(e),
                    _ => err(close, "expected `)`"),
                }
            }
            Tok::End => err(at, "unexpected end of input"),
            t => err(at, format!("unexpected token {t:?}")),
        }
    }
}

/// Parses `+ - * / ^` expressions with integer literals over `variables`.
/// Division is only by nonzero constants.
pub fn parse<S: AsRef<str>>(text: &str, variables: &[S]) -> Result<SparsePolynomial> {
    let vars: Vec<String> = variables.iter().map(|v| v.as_ref().to_string()).collect();
    let toks = tokenize(text)?;
    let mut p = Parser { toks, pos: 0, vars: &vars };
    if *p.peek() == Tok::End {
        return err(0, "empty expression");
    }
    let out = p.expr()?;
    if *p.peek() != Tok::End {
        return err(p.at(), format!("unexpected token {:?}", p.peek()));
    }
    Ok(out)
}
