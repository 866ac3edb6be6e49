//! Text syntax for fields, polynomials and points.
//!
//! Polynomials: `3/2*x^2*y - y + 1`, with `*` optional between factors, parentheses,
//! nonnegative integer powers, and division by nonzero constants. Over an extension
//! field the identifier `s` denotes the generator.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{AlgebraError, Result};
use crate::field::{FieldElement, FieldSpec, Rational, GENERATOR};
use crate::poly::{Polynomial, Ring, RingRef};

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
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
            let digits: String = chars[start..i].iter().collect();
            out.push(Token::Num(digits.parse().expect("digits")));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Token::Ident(chars[start..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Token::Op(c));
            i += 1;
        } else {
            return Err(AlgebraError::Parse(format!("unexpected character `{c}` in `{text}`")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    ring: &'a RingRef,
    text: &'a str,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn err(&self, msg: &str) -> AlgebraError {
        AlgebraError::Parse(format!("{msg} in `{}`", self.text))
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        while let Some(Token::Op(c @ ('+' | '-'))) = self.peek().cloned() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if c == '+' { &acc + &rhs } else { &acc - &rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Token::Op('*')) => {
                    self.pos += 1;
                    let rhs = self.unary()?;
                    acc = &acc * &rhs;
                }
                Some(Token::Op('/')) => {
                    self.pos += 1;
                    let rhs = self.unary()?;
                    let c = rhs
                        .constant_value()
                        .ok_or_else(|| self.err("division by a non-constant"))?;
                    if c.is_zero() {
                        return Err(AlgebraError::ZeroDenominator);
                    }
                    acc = acc.scale(&self.ring.field().invert(&c)?);
                }
                // implicit multiplication: `3x`, `2(x+1)`, `x y`
                Some(Token::Ident(_)) | Some(Token::Op('(')) | Some(Token::Num(_)) => {
                    let rhs = self.power()?;
                    acc = &acc * &rhs;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(Token::Op('-')) => {
                self.pos += 1;
                Ok(-&self.unary()?)
            }
            Some(Token::Op('+')) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if let Some(Token::Op('^')) = self.peek() {
            self.pos += 1;
            match self.next() {
                Some(Token::Num(n)) => {
                    let e: u32 = n
                        .try_into()
                        .map_err(|_| self.err("exponent too large"))?;
                    Ok(base.pow(e))
                }
                _ => Err(self.err("expected a nonnegative integer exponent")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Polynomial> {
        let field = self.ring.field();
        match self.next() {
            Some(Token::Num(n)) => Ok(Polynomial::constant(
                self.ring,
                field.from_rational(Rational::from_integer(n)),
            )),
            Some(Token::Ident(name)) => {
                if let Some(i) = self.ring.var_index(&name) {
                    Ok(Polynomial::var(self.ring, i))
                } else if name == GENERATOR {
                    field
                        .generator()
                        .map(|g| Polynomial::constant(self.ring, g))
                        .ok_or(AlgebraError::UndefinedName(name))
                } else {
                    Err(AlgebraError::UndefinedName(name))
                }
            }
            Some(Token::Op('(')) => {
                let inner = self.expr()?;
                match self.next() {
                    Some(Token::Op(')')) => Ok(inner),
                    _ => Err(self.err("missing `)`")),
                }
            }
            Some(t) => Err(self.err(&format!("unexpected token {t:?}"))),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

/// Parses a polynomial in `ring`.
pub fn parse_poly(text: &str, ring: &RingRef) -> Result<Polynomial> {
    let tokens = tokenize(text)?;
    if tokens.is_empty() {
        return Err(AlgebraError::Parse("empty polynomial".into()));
    }
    let mut parser = Parser {
        tokens,
        pos: 0,
        ring,
        text,
    };
    let p = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(parser.err("trailing input"));
    }
    Ok(p)
}

/// Splits on commas that are not nested inside parentheses.
pub fn split_top_level(text: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(text[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    let last = text[start..].trim();
    if !last.is_empty() || !out.is_empty() {
        out.push(last);
    }
    out
}

/// Parses a comma-separated polynomial list; an empty string gives an empty list.
pub fn parse_poly_list(text: &str, ring: &RingRef) -> Result<Vec<Polynomial>> {
    split_top_level(text)
        .into_iter()
        .map(|s| parse_poly(s, ring))
        .collect()
}

/// Variable names in order of first appearance, skipping the field generator.
pub fn collect_identifiers(texts: &[&str], field: &FieldSpec) -> Result<Vec<String>> {
    let mut names: Vec<String> = Vec::new();
    for text in texts {
        for t in tokenize(text)? {
            if let Token::Ident(name) = t {
                let is_gen = name == GENERATOR && !matches!(field, FieldSpec::Rationals);
                if !is_gen && !names.contains(&name) {
                    names.push(name);
                }
            }
        }
    }
    Ok(names)
}

/// Parses polynomials whose ring is inferred from the identifiers they use (grevlex).
pub fn parse_polys_auto(texts: &[&str], field: &FieldSpec) -> Result<(RingRef, Vec<Polynomial>)> {
    let names = collect_identifiers(texts, field)?;
    let ring = Ring::grevlex(&names, field.clone())?;
    let polys = texts
        .iter()
        .map(|t| parse_poly(t, &ring))
        .collect::<Result<Vec<_>>>()?;
    Ok((ring, polys))
}

/// `Q`, or `Q[s]/(<monic polynomial in s>)`.
pub fn parse_field(text: &str) -> Result<FieldSpec> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact == "Q" || compact == "QQ" {
        return Ok(FieldSpec::rationals());
    }
    let prefix = format!("Q[{GENERATOR}]/");
    let Some(rest) = compact.strip_prefix(&prefix) else {
        return Err(AlgebraError::Parse(format!("unknown field `{text}`")));
    };
    let ring = Ring::grevlex(&[GENERATOR], FieldSpec::rationals())?;
    let m = parse_poly(rest, &ring)?;
    let degree = m.total_degree().unwrap_or(0) as usize;
    let mut coeffs = vec![Rational::zero(); degree + 1];
    for (mono, c) in m.terms() {
        coeffs[mono.total_degree() as usize] = c.coeffs()[0].clone();
    }
    FieldSpec::extension(coeffs)
}

/// A field element written as a constant expression, e.g. `-1/2`, `1 + s`, `s^2`.
pub fn parse_element(text: &str, field: &FieldSpec) -> Result<FieldElement> {
    let ring = Ring::grevlex::<&str>(&[], field.clone())?;
    parse_poly(text, &ring)?
        .constant_value()
        .ok_or_else(|| AlgebraError::Parse(format!("`{text}` is not a constant")))
}

/// A point: `(a, b, c)` or a bare scalar for one-variable rings.
pub fn parse_point(text: &str, field: &FieldSpec) -> Result<Vec<FieldElement>> {
    let t = text.trim();
    let inner = match t.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
        Some(inner) if balanced(inner) => inner,
        _ => return Ok(vec![parse_element(t, field)?]),
    };
    split_top_level(inner)
        .into_iter()
        .map(|s| parse_element(s, field))
        .collect()
}

fn balanced(s: &str) -> bool {
    let mut depth = 0i32;
    for c in s.chars() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return false;
                }
            }
            _ => {}
        }
    }
    depth == 0
}
