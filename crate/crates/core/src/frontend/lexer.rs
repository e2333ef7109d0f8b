// SPDX-License-Identifier: Apache-2.0

use crate::error::{Error, Result};

use super::ast::Span;

#[derive(Clone, PartialEq, Eq, Debug)]
pub(crate) enum Tok {
    /// Identifier with an optional balanced parenthesized suffix.
    Ident(String),
    Int(i64),
    /// `#atoms`, `#sum`, `#count`, ...
    Directive(String),
    Dot,
    Comma,
    Colon,
    If,
    Bar,
    LBrace,
    RBrace,
    LBracket,
    RBracket,
    Ge,
    Le,
    Eq,
    Gt,
    Lt,
    Eof,
}

impl Tok {
    pub fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Int(n) => format!("`{n}`"),
            Tok::Directive(d) => format!("`{d}`"),
            Tok::Eof => "end of input".into(),
            t => format!("`{}`", t.symbol()),
        }
    }

    fn symbol(&self) -> &'static str {
        match self {
            Tok::Dot => ".",
            Tok::Comma => ",",
            Tok::Colon => ":",
            Tok::If => ":-",
            Tok::Bar => "|",
            Tok::LBrace => "{",
            Tok::RBrace => "}",
            Tok::LBracket => "[",
            Tok::RBracket => "]",
            Tok::Ge => ">=",
            Tok::Le => "<=",
            Tok::Eq => "=",
            Tok::Gt => ">",
            Tok::Lt => "<",
            _ => "",
        }
    }
}

pub(crate) fn tokenize(src: &str) -> Result<Vec<(Tok, Span)>> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let (mut k, mut line, mut col) = (0, 1, 1);
    let err = |line, column, message: String| Error::Parse { line, column, message };

    while k < chars.len() {
        let c = chars[k];
        let span = Span { line, column: col };
        let mut adv = 1;
        let tok = match c {
            '\n' => {
                line += 1;
                col = 1;
                k += 1;
                continue;
            }
            c if c.is_whitespace() => None,
            '%' => {
                while k + adv < chars.len() && chars[k + adv] != '\n' {
                    adv += 1;
                }
                None
            }
            '.' => Some(Tok::Dot),
            ',' => Some(Tok::Comma),
            '|' => Some(Tok::Bar),
            '{' => Some(Tok::LBrace),
            '}' => Some(Tok::RBrace),
            '[' => Some(Tok::LBracket),
            ']' => Some(Tok::RBracket),
            '=' => Some(Tok::Eq),
            ':' if chars.get(k + 1) == Some(&'-') => {
                adv = 2;
                Some(Tok::If)
            }
            ':' => Some(Tok::Colon),
            '>' | '<' => {
                let eq = chars.get(k + 1) == Some(&'=');
                if eq {
                    adv = 2;
                }
                Some(match (c, eq) {
                    ('>', true) => Tok::Ge,
                    ('>', false) => Tok::Gt,
                    ('<', true) => Tok::Le,
                    _ => Tok::Lt,
                })
            }
            '#' => {
                while k + adv < chars.len() && chars[k + adv].is_ascii_alphanumeric() {
                    adv += 1;
                }
                Some(Tok::Directive(chars[k..k + adv].iter().collect()))
            }
            c if c.is_ascii_digit() || (c == '-' && chars.get(k + 1).is_some_and(|d| d.is_ascii_digit())) => {
                while k + adv < chars.len() && chars[k + adv].is_ascii_digit() {
                    adv += 1;
                }
                let text: String = chars[k..k + adv].iter().collect();
                let n = text
                    .parse()
                    .map_err(|_| err(line, col, format!("integer `{text}` out of range")))?;
                Some(Tok::Int(n))
            }
            c if c.is_alphabetic() || c == '_' => {
                while k + adv < chars.len()
                    && (chars[k + adv].is_alphanumeric() || matches!(chars[k + adv], '_' | '\''))
                {
                    adv += 1;
                }
                if chars.get(k + adv) == Some(&'(') {
                    let mut depth = 0;
                    loop {
                        match chars.get(k + adv) {
                            Some('(') => depth += 1,
                            Some(')') => depth -= 1,
                            Some(ch) if ch.is_whitespace() => {
                                return Err(err(line, col, "whitespace inside an atom name".into()))
                            }
                            Some(_) => {}
                            None => return Err(err(line, col, "unbalanced parentheses".into())),
                        }
                        adv += 1;
                        if depth == 0 {
                            break;
                        }
                    }
                }
                Some(Tok::Ident(chars[k..k + adv].iter().collect()))
            }
            c => return Err(err(line, col, format!("unexpected character `{c}`"))),
        };
        if let Some(t) = tok {
            out.push((t, span));
        }
        k += adv;
        col += adv;
    }
    out.push((Tok::Eof, Span { line, column: col }));
    Ok(out)
}
