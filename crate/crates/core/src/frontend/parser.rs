// SPDX-License-Identifier: Apache-2.0

use crate::error::{Error, Result};
use crate::program::{Atom, CAtom};

use super::ast::*;
use super::lexer::{tokenize, Tok};

struct Parser {
    toks: Vec<(Tok, Span)>,
    pos: usize,
}

/// Parses program text into a [`SourceProgram`].
pub fn parse(src: &str) -> Result<SourceProgram> {
    let mut p = Parser {
        toks: tokenize(src)?,
        pos: 0,
    };
    let mut statements = Vec::new();
    while *p.peek() != Tok::Eof {
        statements.push(p.statement()?);
        p.expect(Tok::Dot)?;
    }
    Ok(SourceProgram { statements })
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn peek_at(&self, k: usize) -> &Tok {
        &self.toks[(self.pos + k).min(self.toks.len() - 1)].0
    }

    fn span(&self) -> Span {
        self.toks[self.pos].1
    }

    fn next(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        let s = self.span();
        Err(Error::Parse {
            line: s.line,
            column: s.column,
            message: message.into(),
        })
    }

    fn unexpected<T>(&self, wanted: &str) -> Result<T> {
        self.error(format!("expected {wanted}, found {}", self.peek().describe()))
    }

    fn expect(&mut self, t: Tok) -> Result<()> {
        if *self.peek() == t {
            self.next();
            Ok(())
        } else {
            let wanted = match &t {
                Tok::Dot => "`.`".to_string(),
                other => other.describe(),
            };
            self.unexpected(&wanted)
        }
    }

    fn eat(&mut self, t: Tok) -> bool {
        if *self.peek() == t {
            self.next();
            true
        } else {
            false
        }
    }

    fn is_keyword(t: &Tok, kw: &str) -> bool {
        matches!(t, Tok::Ident(s) if s == kw)
    }

    fn atom(&mut self) -> Result<Atom> {
        match self.peek().clone() {
            Tok::Ident(s) if s == "not" || s == "bot" => self.error(format!("`{s}` is a keyword, not an atom")),
            Tok::Ident(s) => match Atom::new(&s) {
                Ok(a) => {
                    self.next();
                    Ok(a)
                }
                Err(e) => self.error(e.to_string()),
            },
            _ => self.unexpected("an atom"),
        }
    }

    fn int(&mut self) -> Result<i64> {
        match self.peek() {
            Tok::Int(n) => {
                let n = *n;
                self.next();
                Ok(n)
            }
            _ => self.unexpected("an integer"),
        }
    }

    /// Comma separated atoms up to (not including) `end`.
    fn atoms_until(&mut self, end: &Tok) -> Result<Vec<Atom>> {
        let mut out = Vec::new();
        if self.peek() == end {
            return Ok(out);
        }
        loop {
            out.push(self.atom()?);
            if !self.eat(Tok::Comma) {
                return Ok(out);
            }
        }
    }

    fn statement(&mut self) -> Result<Statement> {
        let span = self.span();
        match self.peek().clone() {
            Tok::Directive(d) if d == "#atoms" => {
                self.next();
                let atoms = self.atoms_until(&Tok::Dot)?;
                Ok(Statement::Atoms(atoms, span))
            }
            Tok::Directive(d) if d != "#sum" && d != "#count" => self.error(format!("unknown directive `{d}`")),
            _ => {
                let head = if *self.peek() == Tok::If {
                    vec![SourceHead::Bot]
                } else {
                    let mut h = vec![self.head_element()?];
                    while self.eat(Tok::Bar) {
                        h.push(self.head_element()?);
                    }
                    h
                };
                let mut body = Vec::new();
                if self.eat(Tok::If) {
                    body.push(self.literal()?);
                    while self.eat(Tok::Comma) {
                        body.push(self.literal()?);
                    }
                }
                Ok(Statement::Rule(SourceRule { head, body, span }))
            }
        }
    }

    fn head_element(&mut self) -> Result<SourceHead> {
        if Self::is_keyword(self.peek(), "bot") {
            self.next();
            return Ok(SourceHead::Bot);
        }
        if Self::is_keyword(self.peek(), "not") {
            return self.error("negation is not allowed in rule heads");
        }
        Ok(match self.item()? {
            BodyItem::Atom(a) => SourceHead::Atom(a),
            BodyItem::CAtom(c) => SourceHead::CAtom(c),
            BodyItem::Weight(w) => SourceHead::Weight(w),
            BodyItem::Aggregate(g) => SourceHead::Aggregate(g),
        })
    }

    fn literal(&mut self) -> Result<SourceLiteral> {
        let negated = Self::is_keyword(self.peek(), "not") && !matches!(self.peek_at(1), Tok::Dot | Tok::Comma);
        if negated {
            self.next();
        }
        Ok(SourceLiteral {
            negated,
            item: self.item()?,
        })
    }

    fn item(&mut self) -> Result<BodyItem> {
        match self.peek().clone() {
            Tok::LBracket => self.catom().map(BodyItem::CAtom),
            Tok::LBrace | Tok::Int(_) => self.weight().map(BodyItem::Weight),
            Tok::Directive(d) if d == "#sum" || d == "#count" => self.aggregate().map(BodyItem::Aggregate),
            Tok::Directive(d) => self.error(format!("unknown directive `{d}`")),
            Tok::Ident(_) => self.atom().map(BodyItem::Atom),
            _ => self.unexpected("an atom, c-atom, weight constraint or aggregate"),
        }
    }

    fn catom(&mut self) -> Result<CAtom> {
        let span = self.span();
        self.expect(Tok::LBracket)?;
        let domain = self.atoms_until(&Tok::Colon)?;
        self.expect(Tok::Colon)?;
        let mut sols = Vec::new();
        if *self.peek() != Tok::RBracket {
            loop {
                self.expect(Tok::LBrace)?;
                sols.push(self.atoms_until(&Tok::RBrace)?);
                self.expect(Tok::RBrace)?;
                if !self.eat(Tok::Comma) {
                    break;
                }
            }
        }
        self.expect(Tok::RBracket)?;
        CAtom::new(domain, sols).map_err(|e| Error::Parse {
            line: span.line,
            column: span.column,
            message: e.to_string(),
        })
    }

    fn weight(&mut self) -> Result<WeightConstraint> {
        let lower = match self.peek() {
            Tok::Int(_) => Some(self.int()?),
            _ => None,
        };
        self.expect(Tok::LBrace)?;
        let mut entries = Vec::new();
        if *self.peek() != Tok::RBrace {
            loop {
                let negated = Self::is_keyword(self.peek(), "not");
                if negated {
                    self.next();
                }
                let atom = self.atom()?;
                let weight = if self.eat(Tok::Eq) { self.int()? } else { 1 };
                entries.push(WeightEntry { negated, atom, weight });
                if !self.eat(Tok::Comma) {
                    break;
                }
            }
        }
        self.expect(Tok::RBrace)?;
        let upper = match self.peek() {
            Tok::Int(_) => Some(self.int()?),
            _ => None,
        };
        Ok(WeightConstraint { lower, upper, entries })
    }

    fn aggregate(&mut self) -> Result<Aggregate> {
        let kind = match self.next() {
            Tok::Directive(d) if d == "#sum" => AggregateKind::Sum,
            _ => AggregateKind::Count,
        };
        self.expect(Tok::LBrace)?;
        let mut entries = Vec::new();
        if *self.peek() != Tok::RBrace {
            loop {
                let a = self.atom()?;
                let v = if self.eat(Tok::Eq) { self.int()? } else { 1 };
                entries.push((a, v));
                if !self.eat(Tok::Comma) {
                    break;
                }
            }
        }
        self.expect(Tok::RBrace)?;
        let relop = match self.next() {
            Tok::Ge => Relop::Ge,
            Tok::Le => Relop::Le,
            Tok::Eq => Relop::Eq,
            Tok::Gt => Relop::Gt,
            Tok::Lt => Relop::Lt,
            _ => {
                self.pos -= 1;
                return self.unexpected("a comparison");
            }
        };
        let bound = self.int()?;
        Ok(Aggregate {
            kind,
            entries,
            relop,
            bound,
        })
    }
}
