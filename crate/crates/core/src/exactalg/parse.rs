use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{GaussianRational, Polynomial};
use crate::error::{Error, Result};

/// Parse a human-readable polynomial expression over the given variables.
///
/// Accepts `+ - * ^`, parentheses, rational literals `3` / `3/2`, and `i`
/// for the imaginary unit, e.g. `x^2*y + u^2 + v^2` or `(1+2*i)*x - y/2`.
/// Round-trips with the `Display` printer.
pub fn parse_polynomial(input: &str, vars: &Arc<Vec<String>>) -> Result<Polynomial> {
    let tokens = tokenize(input)?;
    let mut p = Parser { tokens, pos: 0, vars: vars.clone() };
    let poly = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(Error::Parse(format!(
            "trailing input at token {} in `{input}`",
            p.pos
        )));
    }
    Ok(poly)
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

fn tokenize(input: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let chars: Vec<char> = input.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' => i += 1,
            '+' => {
                out.push(Tok::Plus);
                i += 1;
            }
            '-' => {
                out.push(Tok::Minus);
                i += 1;
            }
            '*' => {
                out.push(Tok::Star);
                i += 1;
            }
            '^' => {
                out.push(Tok::Caret);
                i += 1;
            }
            '/' => {
                out.push(Tok::Slash);
                i += 1;
            }
            '(' => {
                out.push(Tok::LParen);
                i += 1;
            }
            ')' => {
                out.push(Tok::RParen);
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                out.push(Tok::Int(s.parse().unwrap()));
            }
            c if c.is_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push(Tok::Ident(chars[start..i].iter().collect()));
            }
            other => return Err(Error::Parse(format!("unexpected character `{other}`"))),
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Tok>,
    pos: usize,
    vars: Arc<Vec<String>>,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut negate = false;
        if self.peek() == Some(&Tok::Minus) {
            self.bump();
            negate = true;
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    let t = self.term()?;
                    acc = acc.checked_add(&t)?;
                }
                Some(Tok::Minus) => {
                    self.bump();
                    let t = self.term()?;
                    acc = acc.checked_sub(&t)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while self.peek() == Some(&Tok::Star) {
            self.bump();
            let f = self.factor()?;
            acc = acc.checked_mul(&f)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.bump();
            match self.bump() {
                Some(Tok::Int(n)) => {
                    let exp: u32 = n
                        .try_into()
                        .map_err(|_| Error::Parse("exponent out of range".into()))?;
                    Ok(base.pow(exp))
                }
                _ => Err(Error::Parse("expected integer exponent after `^`".into())),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.bump() {
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(Error::Parse("missing closing parenthesis".into())),
                }
            }
            Some(Tok::Int(n)) => {
                // optional rational literal `a/b`
                if self.peek() == Some(&Tok::Slash) {
                    self.bump();
                    match self.bump() {
                        Some(Tok::Int(d)) if !d.is_zero() => Ok(Polynomial::constant(
                            &self.vars,
                            GaussianRational::new(BigRational::new(n, d), BigRational::zero()),
                        )),
                        _ => Err(Error::Parse("expected nonzero denominator".into())),
                    }
                } else {
                    Ok(Polynomial::constant(
                        &self.vars,
                        GaussianRational::new(BigRational::from_integer(n), BigRational::zero()),
                    ))
                }
            }
            Some(Tok::Ident(name)) if name == "i" => {
                Ok(Polynomial::constant(&self.vars, GaussianRational::i()))
            }
            Some(Tok::Ident(name)) => Polynomial::var(&self.vars, &name),
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_rationals_and_i() {
        let vars = Arc::new(vec!["x".into()]);
        let p = parse_polynomial("3/2*x + i - 1", &vars).unwrap();
        assert_eq!(p.num_terms(), 2); // x term and the constant i-1
    }

    #[test]
    fn rejects_unknown_variable() {
        let vars = Arc::new(vec!["x".into()]);
        assert!(parse_polynomial("q + 1", &vars).is_err());
    }

    #[test]
    fn rejects_trailing_garbage() {
        let vars = Arc::new(vec!["x".into()]);
        assert!(parse_polynomial("x )", &vars).is_err());
    }
}
