//! Recursive-descent parser for the constraint language.
//!
//! ```text
//! constraint := expr '->' expr
//! expr       := term ('|' term)*
//! term       := factor ('&' factor)*
//! factor     := '~' factor | '(' expr ')' | IDENT
//! IDENT      := [A-Za-z_][A-Za-z0-9_^']*
//! ```
//!
//! `&` binds tighter than `|`, `~` tightest; chains associate to the left.

use thiserror::Error;

use super::ast::{Constraint, Formula, Literal};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at {position}: {message}")]
pub struct ParseError {
    /// Byte offset into the input; equals the input length at end of input.
    pub position: usize,
    pub message: String,
}

impl ParseError {
    fn new(position: usize, message: impl Into<String>) -> Self {
        ParseError {
            position,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Not,
    And,
    Or,
    LParen,
    RParen,
    Arrow,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("identifier '{s}'"),
            Tok::Not => "'~'".into(),
            Tok::And => "'&'".into(),
            Tok::Or => "'|'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::Arrow => "'->'".into(),
        }
    }
}

pub fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

pub fn is_ident_continue(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '^' || c == '\''
}

/// Whether `name` is a legal attribute identifier.
pub fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if is_ident_start(c) => chars.all(is_ident_continue),
        _ => false,
    }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(pos, c)) = chars.peek() {
        match c {
            c if c.is_whitespace() => {
                chars.next();
            }
            '~' => {
                chars.next();
                out.push((pos, Tok::Not));
            }
            '&' => {
                chars.next();
                out.push((pos, Tok::And));
            }
            '|' => {
                chars.next();
                out.push((pos, Tok::Or));
            }
            '(' => {
                chars.next();
                out.push((pos, Tok::LParen));
            }
            ')' => {
                chars.next();
                out.push((pos, Tok::RParen));
            }
            '-' => {
                chars.next();
                match chars.peek() {
                    Some(&(_, '>')) => {
                        chars.next();
                        out.push((pos, Tok::Arrow));
                    }
                    _ => return Err(ParseError::new(pos, "expected '->'")),
                }
            }
            c if is_ident_start(c) => {
                let mut end = pos;
                while let Some(&(p, c)) = chars.peek() {
                    if is_ident_continue(c) {
                        end = p + c.len_utf8();
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push((pos, Tok::Ident(text[pos..end].to_string())));
            }
            other => return Err(ParseError::new(pos, format!("unexpected character '{other}'"))),
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn new(text: &str) -> Result<Self, ParseError> {
        Ok(Parser {
            toks: tokenize(text)?,
            at: 0,
            end: text.len(),
        })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn unexpected(&self, wanted: &str) -> ParseError {
        match self.peek() {
            None => ParseError::new(self.end, format!("expected {wanted}, found end of input")),
            Some(Tok::Arrow) => ParseError::new(self.pos(), "nested or repeated '->'"),
            Some(t) => ParseError::new(self.pos(), format!("expected {wanted}, found {}", t.describe())),
        }
    }

    fn expr(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.term()?;
        while self.peek() == Some(&Tok::Or) {
            self.at += 1;
            let rhs = self.term()?;
            lhs = Formula::or(lhs, rhs);
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.factor()?;
        while self.peek() == Some(&Tok::And) {
            self.at += 1;
            let rhs = self.factor()?;
            lhs = Formula::and(lhs, rhs);
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Formula, ParseError> {
        match self.peek().cloned() {
            Some(Tok::Not) => {
                self.at += 1;
                let inner = self.factor()?;
                Ok(Formula::negation(inner))
            }
            Some(Tok::LParen) => {
                self.at += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(self.unexpected("')'"));
                }
                self.at += 1;
                Ok(inner)
            }
            Some(Tok::Ident(name)) => {
                self.at += 1;
                Ok(Formula::Lit(Literal::pos(name)))
            }
            _ => Err(self.unexpected("an attribute, '~' or '('")),
        }
    }
}

/// Parses a single formula (no implication arrow).
pub fn parse_formula(text: &str) -> Result<Formula, ParseError> {
    let mut p = Parser::new(text)?;
    let f = p.expr()?;
    if p.peek().is_some() {
        return Err(p.unexpected("end of input"));
    }
    Ok(f)
}

/// Parses `expr -> expr` with exactly one top-level arrow.
pub fn parse_constraint(text: &str) -> Result<Constraint, ParseError> {
    let mut p = Parser::new(text)?;
    if p.peek().is_none() {
        return Err(ParseError::new(0, "empty constraint"));
    }
    if p.peek() == Some(&Tok::Arrow) {
        return Err(ParseError::new(p.pos(), "empty left-hand side"));
    }
    let lhs = p.expr()?;
    match p.peek() {
        Some(Tok::Arrow) => p.at += 1,
        None => return Err(ParseError::new(p.end, "missing '->'")),
        Some(_) => return Err(p.unexpected("'->'")),
    }
    if p.peek().is_none() {
        return Err(ParseError::new(p.end, "empty right-hand side at end of input"));
    }
    let rhs = p.expr()?;
    if p.peek().is_some() {
        return Err(p.unexpected("end of input"));
    }
    Ok(Constraint { lhs, rhs })
}
