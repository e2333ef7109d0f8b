// SPDX-License-Identifier: Apache-2.0

//! Text format for programs.
//!
//! ```text
//! % comment
//! #atoms p(-1), p(1), p(2).
//! p(1) | p(-1).
//! a :- [a, b, c : {}, {b}, {b, c}], not d.
//! 1 {b, c} 1 | 2 {d, e, f} 2 :- a.
//! p(2) :- #sum{p(-1)=-1, p(1)=1, p(2)=2} >= 1.
//! :- a, b.
//! ```
//!
//! Atoms are opaque: `p(1)` is a single name. A weight constraint with a
//! missing bound is unbounded on that side. `:- body` and `bot :- body` are
//! the same rule.

mod ast;
mod lexer;
mod parser;
mod sugar;

use std::path::Path;

pub use ast::{
    Aggregate, AggregateKind, BodyItem, Relop, SourceHead, SourceLiteral, SourceProgram, SourceRule, Span, Statement,
    WeightConstraint, WeightEntry,
};
pub use parser::parse;
pub use sugar::{desugar, desugar_aggregate, desugar_weight, eliminate_negated_catoms, lower, ENTRY_LIMIT};

use crate::error::{Error, Result};
use crate::program::{CAtom, Literal, Program};

/// Parses and lowers program text.
pub fn parse_program(src: &str) -> Result<Program> {
    lower(&parse(src)?)
}

/// Parses a single body item (atom, `not` literal, c-atom, weight
/// constraint or aggregate) and returns it as a c-atom.
pub fn parse_catom(expr: &str) -> Result<CAtom> {
    let p = parse_program(&format!(":- {expr}."))?;
    match p.rules() {
        [r] => match r.body() {
            [Literal::PositiveAtom(a)] => Ok(CAtom::elementary(a.clone())),
            [Literal::NegativeAtom(a)] => Ok(CAtom::negated_elementary(a.clone())),
            [Literal::Constraint(c)] => Ok(c.clone()),
            _ => Err(Error::MalformedCAtom(format!("`{expr}` is not a single literal"))),
        },
        _ => Err(Error::MalformedCAtom(format!("`{expr}` is not a single literal"))),
    }
}

/// Reads and lowers a program file.
pub fn load(path: &Path) -> std::io::Result<Result<Program>> {
    Ok(parse_program(&std::fs::read_to_string(path)?))
}
