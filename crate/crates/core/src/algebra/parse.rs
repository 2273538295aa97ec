//! A small expression parser for polynomials and rational functions.
//!
//! Grammar: `+ - * / ^` with the usual precedence, parentheses, integer and
//! `p/q` rational literals, and variable names as produced by [`Variable`]'s
//! `Display` (`t1`, `q3`, `a0`, `tau`). Division is general
//! rational-function division.

use num::BigRational;

use crate::algebra::{AlgebraError, Poly, RatFun, Variable};

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Num(BigRational),
    Var(Variable),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Open,
    Close,
}

fn tokenize(input: &str) -> Result<Vec<Token>, AlgebraError> {
    let mut tokens = Vec::new();
    let chars: Vec<char> = input.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' => i += 1,
            '+' => {
                tokens.push(Token::Plus);
                i += 1;
            }
            '-' => {
                tokens.push(Token::Minus);
                i += 1;
            }
            '*' => {
                tokens.push(Token::Star);
                i += 1;
            }
            '/' => {
                tokens.push(Token::Slash);
                i += 1;
            }
            '^' => {
                tokens.push(Token::Caret);
                i += 1;
            }
            '(' => {
                tokens.push(Token::Open);
                i += 1;
            }
            ')' => {
                tokens.push(Token::Close);
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let text: String = chars[start..i].iter().collect();
                let n: BigRational = text
                    .parse()
                    .map_err(|_| AlgebraError::Parse(format!("bad number `{text}`")))?;
                tokens.push(Token::Num(n));
            }
            'a'..='z' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_lowercase() {
                    i += 1;
                }
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let text: String = chars[start..i].iter().collect();
                tokens.push(Token::Var(text.parse()?));
            }
            other => {
                return Err(AlgebraError::Parse(format!("unexpected character `{other}`")))
            }
        }
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<RatFun, AlgebraError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.next();
                    acc = &acc + &self.term()?;
                }
                Some(Token::Minus) => {
                    self.next();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RatFun, AlgebraError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.next();
                    acc = &acc * &self.factor()?;
                }
                Some(Token::Slash) => {
                    self.next();
                    acc = acc.div(&self.factor()?)?;
                }
                // Juxtaposition: `(1-t1)(1-t2)` multiplies.
                Some(Token::Open) => {
                    acc = &acc * &self.factor()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<RatFun, AlgebraError> {
        match self.next() {
            Some(Token::Minus) => Ok(-&self.factor()?),
            Some(Token::Num(n)) => self.maybe_pow(RatFun::constant(n)),
            Some(Token::Var(v)) => self.maybe_pow(RatFun::var(v)),
            Some(Token::Open) => {
                let inner = self.expr()?;
                match self.next() {
                    Some(Token::Close) => self.maybe_pow(inner),
                    _ => Err(AlgebraError::Parse("missing `)`".into())),
                }
            }
            other => Err(AlgebraError::Parse(format!("unexpected token {other:?}"))),
        }
    }

    fn maybe_pow(&mut self, base: RatFun) -> Result<RatFun, AlgebraError> {
        if self.peek() == Some(&Token::Caret) {
            self.next();
            match self.next() {
                Some(Token::Num(n)) if n.is_integer() && !num::Signed::is_negative(&n) => {
                    let e: u32 = n.numer().try_into().map_err(|_| {
                        AlgebraError::Parse("exponent out of range".into())
                    })?;
                    Ok(base.pow(e))
                }
                other => Err(AlgebraError::Parse(format!("bad exponent {other:?}"))),
            }
        } else {
            Ok(base)
        }
    }
}

pub fn parse_ratfun(input: &str) -> Result<RatFun, AlgebraError> {
    let mut parser = Parser { tokens: tokenize(input)?, pos: 0 };
    let out = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(AlgebraError::Parse(format!("trailing input in `{input}`")));
    }
    Ok(out)
}

pub fn parse_poly(input: &str) -> Result<Poly, AlgebraError> {
    let rf = parse_ratfun(input)?;
    if !rf.is_polynomial() {
        return Err(AlgebraError::Parse(format!("`{input}` is not a polynomial")));
    }
    Ok(rf.num().clone())
}

/// Panicking convenience for tests and fixtures.
pub fn poly(input: &str) -> Poly {
    parse_poly(input).unwrap_or_else(|e| panic!("parse `{input}`: {e}"))
}

/// Panicking convenience for tests and fixtures.
pub fn ratfun(input: &str) -> RatFun {
    parse_ratfun(input).unwrap_or_else(|e| panic!("parse `{input}`: {e}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_polynomials() {
        let p = poly("1 - t1*t2 + 3/2*q1^2");
        assert_eq!(p.to_string(), "1 + 3/2*q1^2 - t1*t2");
    }

    #[test]
    fn parses_fractions() {
        let f = ratfun("t1/((1 - t1)(1 - t2))");
        assert_eq!(f.den_poly(), poly("(1 - t1)*(1 - t2)"));
    }

    #[test]
    fn rejects_trailing_garbage() {
        assert!(parse_ratfun("t1 )").is_err());
        assert!(parse_poly("1/(1-t1)").is_err());
    }
}
