// SPDX-License-Identifier: Apache-2.0

//! Source-level syntax tree. Sugar (weight constraints, aggregates, negated
//! c-atoms) is kept as written; [`super::lower`] removes it.

use std::fmt;

use crate::program::{Atom, CAtom};

/// 1-based source position. Ignored by equality.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct Span {
    pub line: usize,
    pub column: usize,
}

#[derive(Clone, Debug, Default)]
pub struct SourceProgram {
    pub statements: Vec<Statement>,
}

impl PartialEq for SourceProgram {
    fn eq(&self, other: &Self) -> bool {
        self.statements == other.statements
    }
}

#[derive(Clone, Debug)]
pub enum Statement {
    Atoms(Vec<Atom>, Span),
    Rule(SourceRule),
}

impl PartialEq for Statement {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Statement::Atoms(a, _), Statement::Atoms(b, _)) => a == b,
            (Statement::Rule(a), Statement::Rule(b)) => a.head == b.head && a.body == b.body,
            _ => false,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SourceRule {
    pub head: Vec<SourceHead>,
    pub body: Vec<SourceLiteral>,
    pub span: Span,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SourceHead {
    Bot,
    Atom(Atom),
    CAtom(CAtom),
    Weight(WeightConstraint),
    Aggregate(Aggregate),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum BodyItem {
    Atom(Atom),
    CAtom(CAtom),
    Weight(WeightConstraint),
    Aggregate(Aggregate),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SourceLiteral {
    pub negated: bool,
    pub item: BodyItem,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeightEntry {
    pub negated: bool,
    pub atom: Atom,
    pub weight: i64,
}

/// `l {e_1 = w_1, ..., e_n = w_n} u`; a missing bound is infinite.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeightConstraint {
    pub lower: Option<i64>,
    pub upper: Option<i64>,
    pub entries: Vec<WeightEntry>,
}

impl WeightConstraint {
    /// All weights 1, lower bound 0 and upper bound the entry count.
    pub fn is_choice(&self) -> bool {
        self.entries.iter().all(|e| e.weight == 1)
            && self.lower.unwrap_or(0) <= 0
            && self.upper.is_none_or(|u| u >= self.entries.len() as i64)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum AggregateKind {
    Sum,
    Count,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Relop {
    Ge,
    Le,
    Eq,
    Gt,
    Lt,
}

impl Relop {
    pub fn holds(self, x: i64, bound: i64) -> bool {
        match self {
            Relop::Ge => x >= bound,
            Relop::Le => x <= bound,
            Relop::Eq => x == bound,
            Relop::Gt => x > bound,
            Relop::Lt => x < bound,
        }
    }
}

/// `#sum{a_1 = v_1, ...} op k` or `#count{...} op k` over explicit entries.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Aggregate {
    pub kind: AggregateKind,
    pub entries: Vec<(Atom, i64)>,
    pub relop: Relop,
    pub bound: i64,
}

impl fmt::Display for Relop {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relop::Ge => ">=",
            Relop::Le => "<=",
            Relop::Eq => "=",
            Relop::Gt => ">",
            Relop::Lt => "<",
        })
    }
}

impl fmt::Display for WeightConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(l) = self.lower {
            write!(f, "{l} ")?;
        }
        f.write_str("{")?;
        for (k, e) in self.entries.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            if e.negated {
                f.write_str("not ")?;
            }
            write!(f, "{}={}", e.atom, e.weight)?;
        }
        f.write_str("}")?;
        if let Some(u) = self.upper {
            write!(f, " {u}")?;
        }
        Ok(())
    }
}

impl fmt::Display for Aggregate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self.kind {
            AggregateKind::Sum => "#sum{",
            AggregateKind::Count => "#count{",
        })?;
        for (k, (a, v)) in self.entries.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{a}={v}")?;
        }
        write!(f, "}} {} {}", self.relop, self.bound)
    }
}

impl fmt::Display for SourceHead {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SourceHead::Bot => f.write_str("bot"),
            SourceHead::Atom(a) => write!(f, "{a}"),
            SourceHead::CAtom(c) => write!(f, "{c}"),
            SourceHead::Weight(w) => write!(f, "{w}"),
            SourceHead::Aggregate(g) => write!(f, "{g}"),
        }
    }
}

impl fmt::Display for SourceLiteral {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negated {
            f.write_str("not ")?;
        }
        match &self.item {
            BodyItem::Atom(a) => write!(f, "{a}"),
            BodyItem::CAtom(c) => write!(f, "{c}"),
            BodyItem::Weight(w) => write!(f, "{w}"),
            BodyItem::Aggregate(g) => write!(f, "{g}"),
        }
    }
}

impl fmt::Display for SourceRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let head: Vec<String> = self.head.iter().map(ToString::to_string).collect();
        f.write_str(&head.join(" | "))?;
        if !self.body.is_empty() {
            let body: Vec<String> = self.body.iter().map(ToString::to_string).collect();
            write!(f, " :- {}", body.join(", "))?;
        }
        f.write_str(".")
    }
}

impl fmt::Display for SourceProgram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.statements {
            match s {
                Statement::Atoms(atoms, _) => {
                    let names: Vec<&str> = atoms.iter().map(Atom::name).collect();
                    writeln!(f, "#atoms {}.", names.join(", "))?;
                }
                Statement::Rule(r) => writeln!(f, "{r}")?,
            }
        }
        Ok(())
    }
}
