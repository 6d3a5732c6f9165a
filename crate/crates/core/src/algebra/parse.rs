//! Infix polynomial syntax: `+ - * ^`, parentheses, integer literals and
//! division by nonzero constants (so `3/2*x` is a rational coefficient).
//! Identifiers must be declared variables.

use num::{BigInt, BigRational, Zero};

use super::poly::{Poly, Vars};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Op(char),
    End,
}

struct Lexer<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    src: &'a str,
}

pub(crate) fn is_ident_start(c: char) -> bool {
    c.is_alphabetic() || c == '_'
}

pub(crate) fn is_ident_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '\''
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer {
            chars: src.chars().enumerate().collect(),
            pos: 0,
            src,
        }
    }

    /// Next token with its 1-based column.
    fn next(&mut self) -> Result<(Tok, usize)> {
        while self.pos < self.chars.len() && self.chars[self.pos].1.is_whitespace() {
            self.pos += 1;
        }
        let Some(&(col, c)) = self.chars.get(self.pos) else {
            return Ok((Tok::End, self.chars.len() + 1));
        };
        let col = col + 1;
        if c.is_ascii_digit() {
            let start = self.pos;
            while self.pos < self.chars.len() && self.chars[self.pos].1.is_ascii_digit() {
                self.pos += 1;
            }
            let digits: String = self.chars[start..self.pos].iter().map(|p| p.1).collect();
            return Ok((Tok::Int(digits.parse().expect("digits")), col));
        }
        if is_ident_start(c) {
            let start = self.pos;
            while self.pos < self.chars.len() && is_ident_char(self.chars[self.pos].1) {
                self.pos += 1;
            }
            let name: String = self.chars[start..self.pos].iter().map(|p| p.1).collect();
            return Ok((Tok::Ident(name), col));
        }
        if "+-*/^()".contains(c) {
            self.pos += 1;
            return Ok((Tok::Op(c), col));
        }
        Err(Error::parse(
            1,
            col,
            format!("unexpected character `{c}` in `{}`", self.src),
        ))
    }
}

struct Parser<'a> {
    lexer: Lexer<'a>,
    tok: Tok,
    col: usize,
    vars: &'a Vars,
}

impl<'a> Parser<'a> {
    fn bump(&mut self) -> Result<()> {
        let (tok, col) = self.lexer.next()?;
        self.tok = tok;
        self.col = col;
        Ok(())
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = self.term()?;
        while let Tok::Op(op @ ('+' | '-')) = self.tok {
            self.bump()?;
            let rhs = self.term()?;
            acc = if op == '+' { &acc + &rhs } else { &acc - &rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.unary()?;
        while let Tok::Op(op @ ('*' | '/')) = self.tok {
            let col = self.col;
            self.bump()?;
            let rhs = self.unary()?;
            if op == '*' {
                acc = &acc * &rhs;
            } else {
                match rhs.constant_value() {
                    Some(d) if !d.is_zero() => acc = acc.scale(&d.recip()),
                    Some(_) => return Err(Error::parse(1, col, "division by zero")),
                    None => {
                        return Err(Error::parse(
                            1,
                            col,
                            "division by a non-constant expression",
                        ))
                    }
                }
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Poly> {
        match self.tok {
            Tok::Op('-') => {
                self.bump()?;
                Ok(-self.unary()?)
            }
            Tok::Op('+') => {
                self.bump()?;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if self.tok == Tok::Op('^') {
            self.bump()?;
            let col = self.col;
            let Tok::Int(e) = &self.tok else {
                return Err(Error::parse(
                    1,
                    col,
                    "exponent must be a non-negative integer",
                ));
            };
            let e: u32 = e
                .try_into()
                .map_err(|_| Error::parse(1, col, "exponent too large"))?;
            self.bump()?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Poly> {
        let col = self.col;
        match std::mem::replace(&mut self.tok, Tok::End) {
            Tok::Int(n) => {
                self.bump()?;
                Ok(Poly::constant(self.vars, BigRational::from_integer(n)))
            }
            Tok::Ident(name) => {
                let p = Poly::var(self.vars, &name)
                    .map_err(|_| Error::parse(1, col, format!("unknown coordinate `{name}`")))?;
                self.bump()?;
                Ok(p)
            }
            Tok::Op('(') => {
                self.bump()?;
                let inner = self.expr()?;
                if self.tok != Tok::Op(')') {
                    return Err(Error::parse(1, self.col, "expected `)`"));
                }
                self.bump()?;
                Ok(inner)
            }
            Tok::End => Err(Error::parse(1, col, "unexpected end of expression")),
            Tok::Op(c) => Err(Error::parse(1, col, format!("unexpected `{c}`"))),
        }
    }
}

impl Poly {
    /// Parses an infix expression over `vars`. Error positions are
    /// reported as line 1 and a 1-based column within `text`.
    pub fn parse(text: &str, vars: &Vars) -> Result<Poly> {
        let mut parser = Parser {
            lexer: Lexer::new(text),
            tok: Tok::End,
            col: 1,
            vars,
        };
        parser.bump()?;
        let p = parser.expr()?;
        if parser.tok != Tok::End {
            return Err(Error::parse(1, parser.col, "trailing input"));
        }
        Ok(p)
    }
}
