//! Recursive-descent parser for the formula grammar.
//!
//! ```text
//! formula := iff ; iff := imp ("<->" imp)* ; imp := or ("->" or)* ;
//! or := and ("|" and)* ; and := unary ("&" unary)* ;
//! unary := "!" unary | "(" formula ")" | atom ;
//! atom := IDENT [ "(" IDENT {"," IDENT} ")" ]
//! ```
//!
//! `->` and `<->` associate to the right. `true` and `false` are reserved for
//! the constants.

use super::{is_variable, Atom, Formula, Literal};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Not,
    And,
    Or,
    Imp,
    Iff,
    LParen,
    RParen,
    Comma,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn describe(tok: Option<&Tok>) -> String {
    match tok {
        None => "end of input".into(),
        Some(Tok::Ident(s)) => format!("`{}`", s),
        Some(Tok::Not) => "`!`".into(),
        Some(Tok::And) => "`&`".into(),
        Some(Tok::Or) => "`|`".into(),
        Some(Tok::Imp) => "`->`".into(),
        Some(Tok::Iff) => "`<->`".into(),
        Some(Tok::LParen) => "`(`".into(),
        Some(Tok::RParen) => "`)`".into(),
        Some(Tok::Comma) => "`,`".into(),
    }
}

fn tokenize(text: &str) -> Result<(Vec<Token>, (usize, usize))> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut line, mut column) = (1, 1);
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let (l0, c0) = (line, column);
        let push = |out: &mut Vec<Token>, tok| {
            out.push(Token {
                tok,
                line: l0,
                column: c0,
            })
        };
        let mut advance = |n: usize, i: &mut usize| {
            *i += n;
            column += n;
        };
        match c {
            '\n' => {
                i += 1;
                line += 1;
                column = 1;
            }
            c if c.is_whitespace() => advance(1, &mut i),
            '!' => {
                push(&mut out, Tok::Not);
                advance(1, &mut i)
            }
            '&' => {
                push(&mut out, Tok::And);
                advance(1, &mut i)
            }
            '|' => {
                push(&mut out, Tok::Or);
                advance(1, &mut i)
            }
            '(' => {
                push(&mut out, Tok::LParen);
                advance(1, &mut i)
            }
            ')' => {
                push(&mut out, Tok::RParen);
                advance(1, &mut i)
            }
            ',' => {
                push(&mut out, Tok::Comma);
                advance(1, &mut i)
            }
            '-' if chars.get(i + 1) == Some(&'>') => {
                push(&mut out, Tok::Imp);
                advance(2, &mut i)
            }
            '<' if chars.get(i + 1) == Some(&'-') && chars.get(i + 2) == Some(&'>') => {
                push(&mut out, Tok::Iff);
                advance(3, &mut i)
            }
            c if c.is_alphanumeric() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                column += i - start;
                push(&mut out, Tok::Ident(chars[start..i].iter().collect()));
            }
            other => {
                return Err(Error::Syntax {
                    line,
                    column,
                    message: format!("unexpected character `{}`", other),
                })
            }
        }
    }
    Ok((out, (line, column)))
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
    end: (usize, usize),
    allow_vars: bool,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.tok)
    }

    fn here(&self) -> (usize, usize) {
        self.toks.get(self.pos).map(|t| (t.line, t.column)).unwrap_or(self.end)
    }

    fn error<T>(&self, message: String) -> Result<T> {
        let (line, column) = self.here();
        Err(Error::Syntax { line, column, message })
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == Some(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: Tok) -> Result<()> {
        if self.eat(&tok) {
            Ok(())
        } else {
            self.error(format!(
                "expected {}, found {}",
                describe(Some(&tok)),
                describe(self.peek())
            ))
        }
    }

    fn formula(&mut self) -> Result<Formula> {
        self.iff()
    }

    fn iff(&mut self) -> Result<Formula> {
        let lhs = self.imp()?;
        if self.eat(&Tok::Iff) {
            let rhs = self.iff()?;
            return Ok(Formula::iff(lhs, rhs));
        }
        Ok(lhs)
    }

    fn imp(&mut self) -> Result<Formula> {
        let lhs = self.or()?;
        if self.eat(&Tok::Imp) {
            let rhs = self.imp()?;
            return Ok(Formula::implies(lhs, rhs));
        }
        Ok(lhs)
    }

    fn or(&mut self) -> Result<Formula> {
        let mut items = vec![self.and()?];
        while self.eat(&Tok::Or) {
            items.push(self.and()?);
        }
        Ok(Formula::or(items))
    }

    fn and(&mut self) -> Result<Formula> {
        let mut items = vec![self.unary()?];
        while self.eat(&Tok::And) {
            items.push(self.unary()?);
        }
        Ok(Formula::and(items))
    }

    fn unary(&mut self) -> Result<Formula> {
        if self.eat(&Tok::Not) {
            return Ok(Formula::not(self.unary()?));
        }
        if self.eat(&Tok::LParen) {
            let f = self.formula()?;
            self.expect(Tok::RParen)?;
            return Ok(f);
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Formula> {
        let (line, column) = self.here();
        let name = match self.peek() {
            Some(Tok::Ident(s)) => s.clone(),
            other => return self.error(format!("expected a formula, found {}", describe(other))),
        };
        self.pos += 1;
        if self.peek() != Some(&Tok::LParen) {
            match name.as_str() {
                "true" => return Ok(Formula::True),
                "false" => return Ok(Formula::False),
                _ => return Ok(Formula::Atom(Atom::new(name))),
            }
        }
        self.pos += 1;
        let mut args = Vec::new();
        loop {
            match self.peek() {
                Some(Tok::Ident(s)) => {
                    args.push(s.clone());
                    self.pos += 1;
                }
                other => return self.error(format!("expected an argument, found {}", describe(other))),
            }
            if self.eat(&Tok::Comma) {
                continue;
            }
            self.expect(Tok::RParen)?;
            break;
        }
        if !self.allow_vars {
            if let Some(v) = args.iter().find(|a| is_variable(a)) {
                return Err(Error::UnboundVariable {
                    line,
                    column,
                    variable: v.clone(),
                });
            }
        }
        let refs: Vec<&str> = args.iter().map(String::as_str).collect();
        Ok(Formula::Atom(Atom::from_parts(&name, &refs)))
    }
}

fn parse(text: &str, allow_vars: bool) -> Result<Formula> {
    let (toks, end) = tokenize(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end,
        allow_vars,
    };
    let f = p.formula()?;
    if p.pos < p.toks.len() {
        return p.error(format!("unexpected {}", describe(p.peek())));
    }
    Ok(f)
}

/// Parses a ground formula. Schematic variables are rejected.
pub fn parse_formula(text: &str) -> Result<Formula> {
    parse(text, false)
}

/// Parses a formula that may mention schematic variables such as `X`.
pub fn parse_schema(text: &str) -> Result<Formula> {
    parse(text, true)
}

/// Parses `a` or `!a`.
pub fn parse_literal(text: &str) -> Result<Literal> {
    parse_literal_with(text, false)
}

pub(crate) fn parse_literal_with(text: &str, allow_vars: bool) -> Result<Literal> {
    let f = parse(text, allow_vars)?;
    Literal::from_formula(&f).ok_or_else(|| Error::Syntax {
        line: 1,
        column: 1,
        message: format!("expected a literal, found `{}`", f),
    })
}
