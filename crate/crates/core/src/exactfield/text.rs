//! Text form of scalars: rationals as `p/q`, radicals as `sqrt(d)`, complex
//! numbers as `a+b*i`. Printing is canonical, so `format(parse(s)) == s` for
//! every printed string.

use super::{adjoin_sqrt, ComplexScalar, Field, FieldError, FieldScalar, Rational};
use num_bigint::BigInt;
use num_traits::One;

pub fn format_real(x: &FieldScalar) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    join_terms(x.terms().iter().map(|(k, q)| radical_term(*k, q, "")))
}

pub fn format_complex(z: &ComplexScalar) -> String {
    if z.im.is_zero() {
        return format_real(&z.re);
    }
    let re = z.re.terms().iter().map(|(k, q)| radical_term(*k, q, ""));
    let im = z.im.terms().iter().map(|(k, q)| radical_term(*k, q, "i"));
    join_terms(re.chain(im))
}

fn join_terms<I: Iterator<Item = String>>(terms: I) -> String {
    let mut out = String::new();
    for (n, t) in terms.enumerate() {
        if n > 0 && !t.starts_with('-') {
            out.push('+');
        }
        out.push_str(&t);
    }
    out
}

/// `q·√k·unit` with unit coefficients elided.
fn radical_term(k: u64, q: &Rational, unit: &str) -> String {
    let mut factors: Vec<String> = Vec::new();
    if k != 1 {
        factors.push(format!("sqrt({k})"));
    }
    if !unit.is_empty() {
        factors.push(unit.to_string());
    }
    if factors.is_empty() {
        return q.to_string();
    }
    let body = factors.join("*");
    if q.is_one() {
        body
    } else if (-q).is_one() {
        format!("-{body}")
    } else {
        format!("{q}*{body}")
    }
}

#[derive(Debug, Clone, PartialEq)]
pub(crate) enum Token {
    Num(BigInt),
    Ident(String),
    Sym(char),
}

pub(crate) fn tokenize(input: &str) -> Result<Vec<Token>, String> {
    let mut out = Vec::new();
    let chars: Vec<char> = input.chars().collect();
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
            out.push(Token::Num(s.parse().map_err(|e| format!("{e}"))?));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Token::Ident(chars[start..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Token::Sym(c));
            i += 1;
        } else {
            return Err(format!("unexpected character `{c}`"));
        }
    }
    Ok(out)
}

struct ScalarParser {
    tokens: Vec<Token>,
    pos: usize,
}

impl ScalarParser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Token::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<ComplexScalar, String> {
        let mut acc = ComplexScalar::zero();
        let mut sign = if self.eat('-') {
            -1
        } else {
            self.eat('+');
            1
        };
        loop {
            let t = self.term()?;
            if sign < 0 {
                acc -= &t;
            } else {
                acc += &t;
            }
            if self.eat('+') {
                sign = 1;
            } else if self.eat('-') {
                sign = -1;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<ComplexScalar, String> {
        let mut acc = self.factor()?;
        loop {
            if self.eat('*') {
                acc *= &self.factor()?;
            } else if self.eat('/') {
                let d = self.factor()?;
                acc = acc.div_ref(&d).ok_or("division by zero")?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<ComplexScalar, String> {
        let tok = self.peek().cloned().ok_or("unexpected end of input")?;
        self.pos += 1;
        match tok {
            Token::Num(n) => Ok(ComplexScalar::from_rational(Rational::from_integer(n))),
            Token::Ident(id) if id == "i" => Ok(ComplexScalar::imag_unit()),
            Token::Ident(id) if id == "sqrt" => {
                if !self.eat('(') {
                    return Err("expected `(` after sqrt".into());
                }
                let arg = self.expr()?;
                if !self.eat(')') {
                    return Err("expected `)`".into());
                }
                if !arg.im.is_zero() {
                    return Err("sqrt of a non-real value".into());
                }
                adjoin_sqrt(&arg.re).map(ComplexScalar::real).map_err(|e| e.to_string())
            }
            Token::Sym('(') => {
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err("expected `)`".into());
                }
                Ok(e)
            }
            Token::Sym('-') => Ok(-self.factor()?),
            other => Err(format!("unexpected token {other:?}")),
        }
    }
}

pub fn parse_complex(input: &str) -> Result<ComplexScalar, FieldError> {
    let err = |reason: String| FieldError::Parse { input: input.to_string(), reason };
    let tokens = tokenize(input).map_err(err)?;
    if tokens.is_empty() {
        return Err(err("empty input".into()));
    }
    let mut p = ScalarParser { tokens, pos: 0 };
    let v = p.expr().map_err(err)?;
    if p.pos != p.tokens.len() {
        return Err(err(format!("trailing input at token {}", p.pos)));
    }
    Ok(v)
}

pub fn parse_real(input: &str) -> Result<FieldScalar, FieldError> {
    let z = parse_complex(input)?;
    if !z.im.is_zero() {
        return Err(FieldError::NotReal(input.to_string()));
    }
    Ok(z.re)
}
