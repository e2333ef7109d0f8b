// SPDX-License-Identifier: Apache-2.0

//! Basic programs: the `⊥` rewrite, the translation to normal programs and
//! dependency graphs.

mod graph;
mod theorem;

pub use graph::{cycle_report, dependency_graph, CycleReport, DependencyGraph, Edge, Sign, Witness};
pub use theorem::{check_dependency_theorem, Implication, TheoremReport};

use crate::abstraction::build_abstract;
use crate::error::{Error, Result};
use crate::program::{Atom, CAtom, HeadElement, Literal, Program, Rule};
use crate::reduct::{CAtomId, SpecialAtom};
use crate::semantics::complement;

/// Every literal as a c-atom: `a` is `({a},{{a}})`, `not a` is `({a},{∅})`
/// and `not A` is the complement of `A`.
pub fn literal_catom(l: &Literal) -> Result<CAtom> {
    Ok(match l {
        Literal::PositiveAtom(a) => CAtom::elementary(a.clone()),
        Literal::NegativeAtom(a) => CAtom::negated_elementary(a.clone()),
        Literal::Constraint(c) => c.clone(),
        Literal::NegatedConstraint(c) => complement(c)?,
    })
}

fn check_basic(p: &Program) -> Result<()> {
    for r in p.rules() {
        match r.head() {
            [h] if h.is_bottom() || h.as_elementary().is_some() => {}
            _ => return Err(Error::not_in_class("basic", format!("head of `{r}`"))),
        }
    }
    Ok(())
}

/// Replaces each `⊥ ← body` by `f ← body, ({f},{∅})` with a fresh atom `f`.
pub fn normalize_basic(p: &Program) -> Result<Program> {
    check_basic(p)?;
    let mut fresh = 0;
    let rules = p
        .rules()
        .iter()
        .map(|r| {
            if !r.head()[0].is_bottom() {
                return r.clone();
            }
            fresh += 1;
            let f = Atom::reserved(format!("__f_{fresh}"));
            let mut body = r.body().to_vec();
            body.push(Literal::Constraint(CAtom::negated_elementary(f.clone())));
            Rule::normal(f, body)
        })
        .collect();
    Ok(Program::new(rules).with_declared(p.declared().iter().cloned()))
}

/// `P_n`: every body c-atom `A` is replaced by an atom `θ_A`, defined by
/// `θ_A ← W, not d_1, …, not d_k` for each `W ⊎ V ∈ A*_c`, where
/// `{d_1, …, d_k} = A_d \ (W ∪ V)`. Plain literals `a` and `not a` stay as
/// they are and `⊥` heads are kept.
pub fn translate_normal(p: &Program) -> Result<Program> {
    check_basic(p)?;
    let mut rules = Vec::new();
    let mut defined: Vec<&CAtom> = Vec::new();
    for r in p.rules() {
        let head = match r.head()[0].as_elementary() {
            Some(a) => HeadElement::HeadAtom(a.clone()),
            None => HeadElement::bottom(),
        };
        let body = r
            .body()
            .iter()
            .map(|l| match l {
                Literal::Constraint(c) => {
                    if !defined.contains(&c) {
                        defined.push(c);
                    }
                    Ok(Literal::PositiveAtom(SpecialAtom::Theta(CAtomId::of(c)).atom()))
                }
                Literal::NegatedConstraint(_) => Err(Error::NegatedConstraint),
                plain => Ok(plain.clone()),
            })
            .collect::<Result<Vec<_>>>()?;
        rules.push(Rule::new(vec![head], body)?);
    }
    for c in defined {
        let theta = SpecialAtom::Theta(CAtomId::of(c)).atom();
        let abs = build_abstract(c)?;
        let domain = c.domain_set();
        for m in abs.lattices() {
            let body = m
                .base()
                .iter()
                .map(|a| Literal::PositiveAtom(a.clone()))
                .chain(domain.difference(&m.top()).map(|d| Literal::NegativeAtom(d.clone())))
                .collect();
            rules.push(Rule::normal(theta.clone(), body));
        }
    }
    Ok(Program::new(rules).with_declared(p.declared().iter().cloned()))
}
