use super::poly::Poly;
use super::PolyError;
use crate::exactfield::text::{tokenize, Token};
use crate::exactfield::{adjoin_sqrt, ComplexScalar, Field, FieldScalar, Rational};

/// Prints `p` with terms in decreasing order, e.g. `x3^2 + y3^2 - 1`.
pub fn format_poly<C: Field>(p: &Poly<C>, vars: &[String]) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (m, c)) in p.terms().enumerate() {
        let mono: Vec<String> = m
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| if e == 1 { vars[i].clone() } else { format!("{}^{e}", vars[i]) })
            .collect();
        let mono = mono.join("*");
        let cs = c.to_string();
        let body = cs.strip_prefix('-').unwrap_or(&cs);
        let compound = body.contains(['+', '-']);
        let (neg, coeff) = if compound { (false, format!("({cs})")) } else { (cs.starts_with('-'), body.to_string()) };
        let term = if mono.is_empty() {
            coeff
        } else if coeff == "1" {
            mono
        } else {
            format!("{coeff}*{mono}")
        };
        match (k, neg) {
            (0, false) => out.push_str(&term),
            (0, true) => {
                out.push('-');
                out.push_str(&term);
            }
            (_, false) => {
                out.push_str(" + ");
                out.push_str(&term);
            }
            (_, true) => {
                out.push_str(" - ");
                out.push_str(&term);
            }
        }
    }
    out
}

struct PolyParser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    vars: &'a [String],
}

impl PolyParser<'_> {
    fn n(&self) -> usize {
        self.vars.len()
    }

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

    fn expr(&mut self) -> Result<Poly<ComplexScalar>, String> {
        let mut acc = Poly::zero(self.n());
        let mut neg = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        loop {
            let t = self.term()?;
            acc = if neg { acc.sub(&t) } else { acc.add(&t) };
            if self.eat('+') {
                neg = false;
            } else if self.eat('-') {
                neg = true;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Poly<ComplexScalar>, String> {
        let mut acc = self.power()?;
        loop {
            if self.eat('*') {
                acc = acc.mul(&self.power()?);
            } else if self.eat('/') {
                let d = self.power()?;
                let d = d.as_constant().ok_or("division by a non-constant")?;
                acc = acc.scale(&d.inv().ok_or("division by zero")?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<Poly<ComplexScalar>, String> {
        let base = self.atom()?;
        if self.eat('^') {
            match self.peek().cloned() {
                Some(Token::Num(e)) => {
                    self.pos += 1;
                    let e: u32 = e.try_into().map_err(|_| "exponent out of range")?;
                    Ok(base.pow(e))
                }
                _ => Err("expected an integer exponent".into()),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Poly<ComplexScalar>, String> {
        let n = self.n();
        let tok = self.peek().cloned().ok_or("unexpected end of input")?;
        self.pos += 1;
        match tok {
            Token::Num(v) => Ok(Poly::constant(n, ComplexScalar::from_rational(Rational::from_integer(v)))),
            Token::Ident(id) if id == "sqrt" => {
                if !self.eat('(') {
                    return Err("expected `(` after sqrt".into());
                }
                let arg = self.expr()?;
                if !self.eat(')') {
                    return Err("expected `)`".into());
                }
                let c = arg.as_constant().ok_or("sqrt of a non-constant")?;
                if !c.im.is_zero() {
                    return Err("sqrt of a non-real value".into());
                }
                let r = adjoin_sqrt(&c.re).map_err(|e| e.to_string())?;
                Ok(Poly::constant(n, ComplexScalar::real(r)))
            }
            Token::Ident(id) => match self.vars.iter().position(|v| *v == id) {
                Some(k) => Ok(Poly::var(n, k)),
                None if id == "i" => Ok(Poly::constant(n, ComplexScalar::imag_unit())),
                None => Err(format!("unknown variable `{id}`")),
            },
            Token::Sym('(') => {
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err("expected `)`".into());
                }
                Ok(e)
            }
            Token::Sym('-') => Ok(self.power()?.neg()),
            other => Err(format!("unexpected token {other:?}")),
        }
    }
}

/// Parses a polynomial with complex coefficients over the named variables.
pub fn parse_complex_poly(input: &str, vars: &[String]) -> Result<Poly<ComplexScalar>, PolyError> {
    let err = |reason: String| PolyError::Parse { input: input.to_string(), reason };
    let tokens = tokenize(input).map_err(err)?;
    if tokens.is_empty() {
        return Err(err("empty input".into()));
    }
    let mut p = PolyParser { tokens, pos: 0, vars };
    let v = p.expr().map_err(err)?;
    if p.pos != p.tokens.len() {
        return Err(err(format!("trailing input at token {}", p.pos)));
    }
    Ok(v)
}

/// Parses a polynomial with real coefficients.
pub fn parse_poly(input: &str, vars: &[String]) -> Result<Poly<FieldScalar>, PolyError> {
    let p = parse_complex_poly(input, vars)?;
    to_real_poly(&p).ok_or_else(|| PolyError::Parse {
        input: input.to_string(),
        reason: "non-real coefficient".into(),
    })
}

pub fn to_real_poly(p: &Poly<ComplexScalar>) -> Option<Poly<FieldScalar>> {
    p.terms().all(|(_, c)| c.im.is_zero()).then(|| p.map_coeffs(|c| c.re.clone()))
}

pub fn to_complex_poly(p: &Poly<FieldScalar>) -> Poly<ComplexScalar> {
    p.map_coeffs(|c| ComplexScalar::real(c.clone()))
}
