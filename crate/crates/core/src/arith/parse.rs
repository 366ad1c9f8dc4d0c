//! Text syntax for rational functions: `+ - * / ^ ( )`, integers and
//! identifiers, with integer (possibly negative) exponents.

use super::{FieldElem, Rational, Ring};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(String),
    Ident(String),
    Sym(char),
    End,
}

struct Lexer {
    toks: Vec<(Tok, usize, usize)>,
    pos: usize,
}

fn lex(text: &str) -> Result<Lexer> {
    let mut toks = Vec::new();
    let mut chars = text.chars().peekable();
    let (mut line, mut col) = (1usize, 1usize);
    while let Some(&c) = chars.peek() {
        let (l0, c0) = (line, col);
        if c == '\n' {
            chars.next();
            line += 1;
            col = 1;
        } else if c.is_whitespace() {
            chars.next();
            col += 1;
        } else if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                s.push(d);
                chars.next();
                col += 1;
            }
            toks.push((Tok::Int(s), l0, c0));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_alphanumeric() || **d == '_') {
                s.push(d);
                chars.next();
                col += 1;
            }
            toks.push((Tok::Ident(s), l0, c0));
        } else if "+-*/^()".contains(c) {
            chars.next();
            col += 1;
            toks.push((Tok::Sym(c), l0, c0));
        } else {
            return Err(Error::Parse {
                line,
                column: col,
                message: format!("unexpected character `{c}`"),
            });
        }
    }
    toks.push((Tok::End, line, col));
    Ok(Lexer { toks, pos: 0 })
}

impl Lexer {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn next(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn err(&self, message: impl Into<String>) -> Error {
        let (_, line, column) = self.toks[self.pos];
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == &Tok::Sym(c) {
            self.next();
            true
        } else {
            false
        }
    }
}

struct Parser<'a> {
    lx: Lexer,
    ring: &'a Ring,
}

impl Parser<'_> {
    fn expr(&mut self) -> Result<FieldElem> {
        let mut acc = self.term()?;
        loop {
            if self.lx.eat('+') {
                acc = acc.checked_add(&self.term()?)?;
            } else if self.lx.eat('-') {
                acc = acc.checked_sub(&self.term()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<FieldElem> {
        let mut acc = self.unary()?;
        loop {
            if self.lx.eat('*') {
                acc = acc.checked_mul(&self.unary()?)?;
            } else if self.lx.peek() == &Tok::Sym('/') {
                let at = self.lx.err("division by zero");
                self.lx.next();
                let d = self.unary()?;
                if d.is_zero() {
                    return Err(at);
                }
                acc = acc.checked_div(&d)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<FieldElem> {
        if self.lx.eat('-') {
            return Ok(-&self.unary()?);
        }
        if self.lx.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<FieldElem> {
        let base = self.atom()?;
        if !self.lx.eat('^') {
            return Ok(base);
        }
        let paren = self.lx.eat('(');
        let neg = self.lx.eat('-');
        let e = match self.lx.peek().clone() {
            Tok::Int(s) => {
                let v: i32 = s.parse().map_err(|_| self.lx.err("exponent too large"))?;
                self.lx.next();
                if neg {
                    -v
                } else {
                    v
                }
            }
            _ => return Err(self.lx.err("expected an integer exponent")),
        };
        if paren && !self.lx.eat(')') {
            return Err(self.lx.err("expected `)`"));
        }
        if e < 0 && base.is_zero() {
            return Err(self.lx.err("negative power of zero"));
        }
        base.pow(e)
    }

    fn atom(&mut self) -> Result<FieldElem> {
        match self.lx.peek().clone() {
            Tok::Int(s) => {
                let r: Rational = s.parse().map_err(|_| self.lx.err("bad integer"))?;
                self.lx.next();
                Ok(FieldElem::from_rational(self.ring, r))
            }
            Tok::Ident(name) => {
                let v = FieldElem::var(self.ring, &name).map_err(|_| self.lx.err(format!("unknown variable `{name}`")))?;
                self.lx.next();
                Ok(v)
            }
            Tok::Sym('(') => {
                self.lx.next();
                let e = self.expr()?;
                if !self.lx.eat(')') {
                    return Err(self.lx.err("expected `)`"));
                }
                Ok(e)
            }
            Tok::End => Err(self.lx.err("unexpected end of input")),
            t => Err(self.lx.err(format!("unexpected token {t:?}"))),
        }
    }
}

/// Parses a rational function over the variables of `ring`.
pub fn parse_field_elem(text: &str, ring: &Ring) -> Result<FieldElem> {
    let mut p = Parser { lx: lex(text)?, ring };
    let e = p.expr()?;
    if p.lx.peek() != &Tok::End {
        return Err(p.lx.err("trailing input"));
    }
    Ok(e)
}

/// Identifiers occurring in `text`, in order of first appearance.
pub fn identifiers(text: &str) -> Result<Vec<String>> {
    let lx = lex(text)?;
    let mut out: Vec<String> = Vec::new();
    for (t, _, _) in &lx.toks {
        if let Tok::Ident(s) = t {
            if !out.contains(s) {
                out.push(s.clone());
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ParamSystem;

    #[test]
    fn printed_form_parses_back() {
        let r = ParamSystem::from_names(&["x", "y"]).unwrap();
        for s in ["(x + y)^3 / (x - 2*y)", "x^-2*y + 1/3", "-(x*y - 1)^2", "0"] {
            let e = parse_field_elem(s, &r).unwrap();
            let again = parse_field_elem(&e.to_string(), &r).unwrap();
            assert_eq!(e, again, "{s}");
        }
    }

    #[test]
    fn errors_carry_position() {
        let r = ParamSystem::from_names(&["x"]).unwrap();
        match parse_field_elem("x +\n  w", &r) {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (2, 3)),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_field_elem("x / (x - x)", &r), Err(Error::Parse { .. })));
        assert!(matches!(parse_field_elem("x $", &r), Err(Error::Parse { .. })));
    }
}
