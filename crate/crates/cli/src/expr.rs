//! Expressions for rational functions: integer literals, identifiers, the four
//! arithmetic operators, unary minus and integer powers (`l^-3` included).

use exact_algebra::BigInt;
use std::fmt;
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(BigInt),
    Var(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("syntax error at offset {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Op(char),
    End,
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n: BigInt = text[start..i].parse().expect("digits");
            out.push((Tok::Int(n), start));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((Tok::Ident(text[start..i].to_string()), start));
        } else if "+-*/^()".contains(c) {
            out.push((Tok::Op(c), i));
            i += 1;
        } else {
            let ch = text[i..].chars().next().expect("in bounds");
            return Err(ParseError {
                offset: i,
                message: format!("unexpected character '{}'", ch),
            });
        }
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

// binding powers: + - < * / < unary minus < ^
const UNARY_BP: u8 = 5;

impl Parser {
    fn peek(&self) -> &(Tok, usize) {
        &self.toks[self.pos]
    }

    fn next(&mut self) -> (Tok, usize) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error<T>(&self, offset: usize, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            offset,
            message: message.into(),
        })
    }

    fn expr(&mut self, min_bp: u8) -> Result<Expr, ParseError> {
        let (tok, at) = self.next();
        let mut lhs = match tok {
            Tok::Int(n) => Expr::Int(n),
            Tok::Ident(s) => Expr::Var(s),
            Tok::Op('(') => {
                let inner = self.expr(0)?;
                match self.next() {
                    (Tok::Op(')'), _) => inner,
                    (_, off) => return self.error(off, "expected ')'"),
                }
            }
            Tok::Op('-') => Expr::Neg(Box::new(self.expr(UNARY_BP)?)),
            Tok::End => return self.error(at, "expected an operand"),
            Tok::Op(c) => return self.error(at, format!("expected an operand, found '{}'", c)),
        };
        loop {
            let (op, at) = match self.peek() {
                (Tok::Op(c), at) if "+-*/^".contains(*c) => (*c, *at),
                (Tok::Op(')'), _) | (Tok::End, _) => break,
                (_, at) => return self.error(*at, "expected an operator"),
            };
            let (lbp, rbp) = match op {
                '+' | '-' => (1, 2),
                '*' | '/' => (3, 4),
                _ => (7, 8),
            };
            if lbp < min_bp {
                break;
            }
            self.next();
            if op == '^' {
                lhs = Expr::Pow(Box::new(lhs), self.exponent(at)?);
                continue;
            }
            let rhs = Box::new(self.expr(rbp)?);
            let l = Box::new(lhs);
            lhs = match op {
                '+' => Expr::Add(l, rhs),
                '-' => Expr::Sub(l, rhs),
                '*' => Expr::Mul(l, rhs),
                _ => Expr::Div(l, rhs),
            };
        }
        Ok(lhs)
    }

    fn exponent(&mut self, caret: usize) -> Result<i64, ParseError> {
        let negative = matches!(self.peek().0, Tok::Op('-'));
        if negative {
            self.next();
        }
        match self.next() {
            (Tok::Int(n), off) => {
                let v: i64 = match i64::try_from(&n) {
                    Ok(v) => v,
                    Err(_) => return self.error(off, "exponent too large"),
                };
                Ok(if negative { -v } else { v })
            }
            (_, off) => self.error(off.max(caret + 1), "exponent must be an integer literal"),
        }
    }
}

pub fn parse_expression(text: &str) -> Result<Expr, ParseError> {
    let mut p = Parser { toks: lex(text)?, pos: 0 };
    let e = p.expr(0)?;
    match p.peek() {
        (Tok::End, _) => Ok(e),
        (_, at) => p.error(*at, "unmatched ')'"),
    }
}

impl Expr {
    /// Identifiers in order of first appearance.
    pub fn variables(&self) -> Vec<String> {
        fn walk(e: &Expr, out: &mut Vec<String>) {
            match e {
                Expr::Int(_) => {}
                Expr::Var(v) => {
                    if !out.contains(v) {
                        out.push(v.clone());
                    }
                }
                Expr::Neg(a) | Expr::Pow(a, _) => walk(a, out),
                Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                    walk(a, out);
                    walk(b, out);
                }
            }
        }
        let mut out = Vec::new();
        walk(self, &mut out);
        out
    }

    fn precedence(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) | Expr::Div(..) => 2,
            Expr::Neg(_) => 3,
            Expr::Pow(..) => 4,
            Expr::Int(_) | Expr::Var(_) => 5,
        }
    }

    fn write(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        let paren = self.precedence() < min;
        if paren {
            f.write_str("(")?;
        }
        match self {
            Expr::Int(n) => write!(f, "{}", n)?,
            Expr::Var(v) => f.write_str(v)?,
            Expr::Neg(a) => {
                f.write_str("-")?;
                a.write(f, 3)?;
            }
            Expr::Pow(a, k) => {
                a.write(f, 5)?;
                write!(f, "^{}", k)?;
            }
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                let p = self.precedence();
                a.write(f, p)?;
                f.write_str(match self {
                    Expr::Add(..) => "+",
                    Expr::Sub(..) => "-",
                    Expr::Mul(..) => "*",
                    _ => "/",
                })?;
                // operators are left-associative, so an equal-precedence right
                // operand keeps its parentheses
                b.write(f, p + 1)?;
            }
        }
        if paren {
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// Minimal-parenthesis rendering that parses back to the same tree.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(f, 0)
    }
}
