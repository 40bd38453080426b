//! Recursive-descent parser for the formula grammar.
//!
//! Precedence, tightest first: negation; `&` `*` `-`; `|` `+`; `->`
//! (right-associative); `<->`. All other binary levels associate to the
//! left. Unicode glyphs are accepted alongside the ASCII spellings.

use super::formula::{Connective, Formula};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Var(usize),
    Bot,
    Top,
    Not,
    Bin(Connective),
    LParen,
    RParen,
}

/// A token and its character offset.
type Spanned = (Tok, usize);

fn syntax(position: usize, message: impl Into<String>) -> Error {
    Error::Syntax { position, message: message.into() }
}

fn lex(text: &str) -> Result<Vec<Spanned>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let starts = |i: usize, s: &str| {
        let s: Vec<char> = s.chars().collect();
        chars.len() >= i + s.len() && chars[i..i + s.len()] == s[..]
    };
    while i < chars.len() {
        let c = chars[i];
        let pos = i;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let (tok, len) = if starts(i, "<->") {
            (Tok::Bin(Connective::Iff), 3)
        } else if starts(i, "->") {
            (Tok::Bin(Connective::Implies), 2)
        } else if starts(i, "bot") {
            (Tok::Bot, 3)
        } else if starts(i, "top") {
            (Tok::Top, 3)
        } else {
            let single = match c {
                '↔' => Tok::Bin(Connective::Iff),
                '→' => Tok::Bin(Connective::Implies),
                '&' | '∧' => Tok::Bin(Connective::And),
                '*' | '⊙' => Tok::Bin(Connective::StrongAnd),
                '-' | '⊖' => Tok::Bin(Connective::Minus),
                '|' | '∨' => Tok::Bin(Connective::Or),
                '+' | '⊕' => Tok::Bin(Connective::StrongOr),
                '!' | '¬' => Tok::Not,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                '0' | '⊥' => Tok::Bot,
                '1' | '⊤' => Tok::Top,
                'X' => {
                    let mut j = i + 1;
                    while j < chars.len() && chars[j].is_ascii_digit() {
                        j += 1;
                    }
                    if j == i + 1 {
                        return Err(syntax(pos, "expected digits after `X`"));
                    }
                    let digits: String = chars[i + 1..j].iter().collect();
                    let index: usize = digits
                        .parse()
                        .map_err(|_| syntax(pos, format!("variable index `{digits}` is too large")))?;
                    if index == 0 {
                        return Err(syntax(pos, "variable indices start at 1"));
                    }
                    out.push((Tok::Var(index), pos));
                    i = j;
                    continue;
                }
                other => return Err(syntax(pos, format!("unexpected character `{other}`"))),
            };
            (single, 1)
        };
        // Constants 0/1 must not run into further digits (e.g. `10`).
        if matches!(c, '0' | '1') && i + 1 < chars.len() && chars[i + 1].is_ascii_digit() {
            return Err(syntax(pos, "numeric constants are only `0` and `1`"));
        }
        out.push((tok, pos));
        i += len;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(_, p)| *p)
    }

    fn peek_bin(&self, level: u8) -> Option<Connective> {
        match self.peek() {
            Some(Tok::Bin(c)) if c.level() == level => Some(*c),
            _ => None,
        }
    }

    fn iff(&mut self) -> Result<Formula> {
        let mut lhs = self.implication()?;
        while let Some(c) = self.peek_bin(5) {
            self.pos += 1;
            let rhs = self.implication()?;
            lhs = Formula::binary(c, lhs, rhs);
        }
        Ok(lhs)
    }

    fn implication(&mut self) -> Result<Formula> {
        let lhs = self.left_level(3)?;
        if let Some(c) = self.peek_bin(4) {
            self.pos += 1;
            let rhs = self.implication()?;
            return Ok(Formula::binary(c, lhs, rhs));
        }
        Ok(lhs)
    }

    fn left_level(&mut self, level: u8) -> Result<Formula> {
        let operand = |p: &mut Parser| if level == 3 { p.left_level(2) } else { p.unary() };
        let mut lhs = operand(self)?;
        while let Some(c) = self.peek_bin(level) {
            self.pos += 1;
            let rhs = operand(self)?;
            lhs = Formula::binary(c, lhs, rhs);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Formula> {
        let at = self.here();
        match self.peek().cloned() {
            Some(Tok::Not) => {
                self.pos += 1;
                Ok(Formula::not(self.unary()?))
            }
            Some(Tok::Var(i)) => {
                self.pos += 1;
                Ok(Formula::Var(i))
            }
            Some(Tok::Bot) => {
                self.pos += 1;
                Ok(Formula::Bot)
            }
            Some(Tok::Top) => {
                self.pos += 1;
                Ok(Formula::Top)
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.iff()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    _ => Err(syntax(self.here(), "expected `)`")),
                }
            }
            Some(Tok::RParen) => Err(syntax(at, "unexpected `)`")),
            Some(Tok::Bin(c)) => Err(syntax(at, format!("unexpected operator `{}`", c.symbol()))),
            None => Err(syntax(at, "unexpected end of input")),
        }
    }
}

/// Parses a formula; positions in errors are character offsets.
pub fn parse(text: &str) -> Result<Formula> {
    let toks = lex(text)?;
    let mut p = Parser { toks, pos: 0, end: text.chars().count() };
    let f = p.iff()?;
    if p.pos != p.toks.len() {
        return Err(syntax(p.here(), "unexpected trailing input"));
    }
    Ok(f)
}

impl std::str::FromStr for Formula {
    type Err = Error;

    fn from_str(s: &str) -> Result<Formula> {
        parse(s)
    }
}
